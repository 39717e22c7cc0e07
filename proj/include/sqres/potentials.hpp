#ifndef SQRES_POTENTIALS_HPP
#define SQRES_POTENTIALS_HPP

#include <cmath>
#include <complex>

#include "sqres/errors.hpp"

namespace sqres {

enum class Kind { Well, Barrier };

// Square model: V(x) = -V0 for |x| <= b/2 (well), +V0 (barrier), 0 outside.
// The boundary |x| = b/2 belongs to the interior.
template <typename Real = double>
struct PotentialSpec {
    Kind kind = Kind::Well;
    Real V0 = 1;
    Real b = 1;

    PotentialSpec() = default;
    PotentialSpec(Kind kind_, Real V0_, Real b_) : kind(kind_), V0(V0_), b(b_) {
        if (!(V0 > Real(0)) || !(b > Real(0)))
            throw DomainError("PotentialSpec requires V0 > 0 and b > 0");
    }

    // theta = (b/2) sqrt(V0): dimensionless strength-range product.
    Real theta() const { return (b / 2) * std::sqrt(V0); }

    // +1 for the well (q^2 = k^2 + V0), -1 for the barrier.
    Real sign() const { return kind == Kind::Well ? Real(1) : Real(-1); }
};

template <typename Real>
Real evaluate_potential(const PotentialSpec<Real>& spec, Real x) {
    if (std::abs(x) <= spec.b / 2)
        return spec.kind == Kind::Well ? -spec.V0 : spec.V0;
    return Real(0);
}

// q with q^2 = k^2 +/- V0, principal branch (Re q >= 0; if Re q == 0 the
// branch with Im q >= 0 is taken).
template <typename Real>
std::complex<Real> interaction_parameter(const PotentialSpec<Real>& spec,
                                         std::complex<Real> k) {
    std::complex<Real> q = std::sqrt(k * k + spec.sign() * spec.V0);
    if (q.real() < Real(0) || (q.real() == Real(0) && q.imag() < Real(0)))
        q = -q;
    return q;
}

} // namespace sqres

#endif
