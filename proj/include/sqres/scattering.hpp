#ifndef SQRES_SCATTERING_HPP
#define SQRES_SCATTERING_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "sqres/errors.hpp"
#include "sqres/potentials.hpp"

namespace sqres {

namespace detail {

// The two half-argument factors of Delta: f1 = k c - i q s, f2 = q c - i k s
// with c = cos(qb/2), s = sin(qb/2). Kept separate because the Gamow builder
// and the Newton derivative need them individually.
template <typename Real>
struct DeltaParts {
    std::complex<Real> q, f1, f2;
    std::complex<Real> delta() const { return f1 * f2; }
};

template <typename Real>
DeltaParts<Real> delta_parts(const PotentialSpec<Real>& spec,
                             std::complex<Real> k) {
    const std::complex<Real> q = interaction_parameter(spec, k);
    const std::complex<Real> c = std::cos(q * (spec.b / 2));
    const std::complex<Real> s = std::sin(q * (spec.b / 2));
    const std::complex<Real> I(0, 1);
    return {q, k * c - I * q * s, q * c - I * k * s};
}

} // namespace detail

template <typename Real>
std::complex<Real> delta_fn(const PotentialSpec<Real>& spec,
                            std::complex<Real> k) {
    return detail::delta_parts(spec, k).delta();
}

template <typename Real = double>
struct ScatteringAmplitudes {
    std::complex<Real> k;
    std::complex<Real> L; // reflection amplitude
    std::complex<Real> S; // transmission amplitude
    std::complex<Real> Delta;
};

template <typename Real>
ScatteringAmplitudes<Real> amplitudes(const PotentialSpec<Real>& spec,
                                      std::complex<Real> k) {
    const auto p = detail::delta_parts(spec, k);
    const std::complex<Real> D = p.delta();
    const std::complex<Real> I(0, 1);
    const std::complex<Real> phase = std::exp(-I * k * spec.b);
    const Real guard = Real(1e-13) * std::abs(k) * std::abs(p.q) *
                       std::max(Real(1), std::abs(phase));
    if (std::abs(D) < guard)
        throw PoleError("amplitudes evaluated at a resonance pole of Delta");
    const std::complex<Real> L =
        I * (spec.sign() * spec.V0 * std::sin(p.q * spec.b) / (Real(2) * D)) *
        phase;
    const std::complex<Real> S = (k * p.q / D) * phase;
    return {k, L, S, D};
}

template <typename Real>
Real transmission_coefficient(const PotentialSpec<Real>& spec, Real E) {
    if (!(E > Real(0)))
        throw DomainError("transmission_coefficient requires E > 0");
    const std::complex<Real> k(std::sqrt(E), 0);
    return std::norm(amplitudes(spec, k).S);
}

template <typename Real = double>
struct FbwPeak {
    Real E;     // center
    Real Gamma; // full width, > 0
};

template <typename Real>
Real fbw(Real eps_R, const FbwPeak<Real>& peak) {
    if (!(peak.Gamma > Real(0)))
        throw DomainError("fbw requires Gamma > 0");
    const Real hg = peak.Gamma / 2;
    const Real d = eps_R - peak.E;
    return hg * hg / (d * d + hg * hg);
}

template <typename Real>
Real fbw_sum(Real eps_R, const std::vector<FbwPeak<Real>>& peaks) {
    Real sum = 0;
    for (const auto& p : peaks) sum += fbw(eps_R, p);
    return sum;
}

// A pointwise solution value with its first derivative; the common currency
// between base solutions and their Darboux images.
template <typename Real = double>
struct StateValue {
    std::complex<Real> value;
    std::complex<Real> derivative;
};

// Closed-form scattering solution at real kappa > 0 (incident from the left,
// unit amplitude): value and derivative, continuous at +-b/2.
template <typename Real = double>
class ScatteringState {
  public:
    ScatteringState(const PotentialSpec<Real>& spec, Real kappa)
        : spec_(spec), kappa_(kappa) {
        const auto amp = amplitudes(spec, std::complex<Real>(kappa, 0));
        L_ = amp.L;
        S_ = amp.S;
        const auto p = detail::delta_parts(spec, std::complex<Real>(kappa, 0));
        q_ = p.q;
        const std::complex<Real> I(0, 1);
        // interior coefficients: (kappa/Delta) e^{-i kappa b/2} (i f1, f2)
        const std::complex<Real> pre =
            (kappa / amp.Delta) * std::exp(-I * kappa * (spec.b / 2));
        Bs_ = pre * I * p.f1;
        Bc_ = pre * p.f2;
    }

    Real energy() const { return kappa_ * kappa_; }

    StateValue<Real> operator()(Real x) const {
        const std::complex<Real> I(0, 1);
        const Real hb = spec_.b / 2;
        if (x < -hb) {
            const std::complex<Real> ep = std::exp(I * kappa_ * x);
            const std::complex<Real> em = std::exp(-I * kappa_ * x);
            return {ep + L_ * em, I * kappa_ * (ep - L_ * em)};
        }
        if (x <= hb) {
            const std::complex<Real> s = std::sin(q_ * x);
            const std::complex<Real> c = std::cos(q_ * x);
            return {Bs_ * s + Bc_ * c, q_ * (Bs_ * c - Bc_ * s)};
        }
        const std::complex<Real> ep = std::exp(I * kappa_ * x);
        return {S_ * ep, I * kappa_ * S_ * ep};
    }

  private:
    PotentialSpec<Real> spec_;
    Real kappa_;
    std::complex<Real> L_, S_, q_, Bs_, Bc_;
};

// Delta-cleared interior branch of the scattering solution:
// k e^{-ikb/2} (i f1 sin(qx) + f2 cos(qx)); finite even at poles.
template <typename Real>
std::complex<Real> interior_wave(const PotentialSpec<Real>& spec,
                                 std::complex<Real> k, Real x) {
    const auto p = detail::delta_parts(spec, k);
    const std::complex<Real> I(0, 1);
    return k * std::exp(-I * k * (spec.b / 2)) *
           (I * p.f1 * std::sin(p.q * x) + p.f2 * std::cos(p.q * x));
}

} // namespace sqres

#endif
