#ifndef SQRES_DARBOUX_HPP
#define SQRES_DARBOUX_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "sqres/errors.hpp"
#include "sqres/gamow.hpp"
#include "sqres/potentials.hpp"
#include "sqres/scattering.hpp"

namespace sqres {

// First-order deformation generated by a Gamow-type transformation function:
// Vt = V + 2 beta' = 2 beta^2 + 2 eps - V (Riccati-reduced, exact within
// regions; the jump of Vt at +-b/2 is minus the jump of V).
template <typename Real = double>
class DeformedPotential1 {
  public:
    explicit DeformedPotential1(GamowFunction<Real> g) : g_(std::move(g)) {}

    std::complex<Real> operator()(Real x) const {
        const auto bv = beta(g_, x);
        return Real(2) * bv.beta * bv.beta + Real(2) * g_.eps() -
               evaluate_potential(g_.spec, x);
    }

    const GamowFunction<Real>& transformation() const { return g_; }
    std::complex<Real> eps() const { return g_.eps(); }

  private:
    GamowFunction<Real> g_;
};

template <typename Real>
DeformedPotential1<Real> deform1(const GamowFunction<Real>& g) {
    return DeformedPotential1<Real>(g);
}

// Solution of the deformed problem at energy `energy`; evaluation returns
// value and first derivative.
template <typename Real = double>
struct DeformedState {
    std::complex<Real> energy;
    std::function<StateValue<Real>(Real)> eval;

    StateValue<Real> operator()(Real x) const { return eval(x); }
};

// y = psi' + beta psi, the Darboux image of a base solution psi at real or
// complex energy E (psi must be a base solution so that psi'' = (V - E) psi).
template <typename Real, typename Psi>
DeformedState<Real> deform1_state(const GamowFunction<Real>& g, Psi psi,
                                  std::complex<Real> E) {
    DeformedState<Real> st;
    st.energy = E;
    st.eval = [g, psi, E](Real x) -> StateValue<Real> {
        const auto bv = beta(g, x);
        const StateValue<Real> p = psi(x);
        StateValue<Real> out;
        out.value = p.derivative + bv.beta * p.value;
        // y' = psi'' + beta' psi + beta psi'
        out.derivative = (evaluate_potential(g.spec, x) - E) * p.value +
                         bv.beta_prime * p.value + bv.beta * p.derivative;
        return out;
    };
    return st;
}

// The extra (complex) level of the deformed problem: y_eps = 1/u.
template <typename Real>
DeformedState<Real> new_eigenstate(const GamowFunction<Real>& g) {
    if (g.variant != GamowVariant::Decaying)
        throw DomainError("new_eigenstate needs a Decaying transformation function");
    DeformedState<Real> st;
    st.energy = g.eps();
    st.eval = [g](Real x) -> StateValue<Real> {
        std::complex<Real> u, up;
        Real scale;
        detail::gamow_eval(g, x, u, up, scale);
        if (std::abs(u) < Real(1e-13) * scale)
            throw NodeError("new_eigenstate evaluated at a node of u");
        StateValue<Real> out;
        out.value = Real(1) / u;
        out.derivative = -up / (u * u);
        return out;
    };
    return st;
}

// Asymptotic Darboux factor for a real scattering energy kappa^2: outgoing
// amplitudes pick up t = (beta_> + i kappa)/(beta_< + i kappa) with
// beta_> = -ik, beta_< = +ik, so the transformed coefficients obey
// Rt + Tt = |t|^2 exactly.
template <typename Real = double>
struct TransformedCoefficients {
    std::complex<Real> t;
    Real R_t, T_t;
    Real velocity_ratio; // v_s / v
    Real approx_sum;     // ((1 - r)/(1 + r))^2 at r = v_s/v
};

template <typename Real>
TransformedCoefficients<Real> transformed_coefficients(
    const GamowFunction<Real>& g, Real kappa) {
    const auto amp = amplitudes(g.spec, std::complex<Real>(kappa, 0));
    TransformedCoefficients<Real> out;
    out.t = (kappa - g.k) / (kappa + g.k);
    out.R_t = std::norm(out.t) * std::norm(amp.L);
    out.T_t = std::norm(out.t) * std::norm(amp.S);
    out.velocity_ratio = kappa / std::abs(g.k.real());
    const Real r = out.velocity_ratio;
    out.approx_sum = ((1 - r) / (1 + r)) * ((1 - r) / (1 + r));
    return out;
}

// Second-order deformation: real, short-range, strictly isospectral to the
// base model. Generated by the one-sided Decreasing function at conj(k); the
// conjugate-pair construction is implicit in the real closed form.
template <typename Real = double>
class DeformedPotential2 {
  public:
    DeformedPotential2(const PotentialSpec<Real>& spec, std::complex<Real> k)
        : spec_(spec), k_(k),
          chain_(make_chain(spec, k)) {}

    Real operator()(Real x) const {
        const auto bv = chain_beta(x);
        const Real eI = chain_.eps().imag();
        const Real vp = -2 * (2 * bv.beta.real() * bv.beta.imag() + eI);
        return evaluate_potential(spec_, x) - 4 * eI * vp / (bv.v * bv.v);
    }

    const PotentialSpec<Real>& spec() const { return spec_; }
    std::complex<Real> pole() const { return k_; }
    const GamowFunction<Real>& chain() const { return chain_; }

    BetaValue<Real> chain_beta(Real x) const {
        const auto bv = beta(chain_, x);
        if (std::abs(bv.v) < Real(1e-12) * 2 * std::abs(k_))
            throw ZeroVelocityError("flux velocity vanished in deform2");
        return bv;
    }

  private:
    static GamowFunction<Real> make_chain(const PotentialSpec<Real>& spec,
                                          std::complex<Real> k) {
        if (!(k.real() > Real(0)) || !(k.imag() < Real(0)))
            throw WrongQuadrant("deform2 needs a fourth-quadrant pole");
        const auto p = detail::delta_parts(spec, k);
        if (std::abs(p.delta()) >
            Real(1e-8) * std::abs(k) * std::abs(p.q))
            throw NotAPole("deform2: k is not a refined pole of Delta");
        return build_gamow(spec, std::conj(k), GamowVariant::Decreasing);
    }

    PotentialSpec<Real> spec_;
    std::complex<Real> k_;
    GamowFunction<Real> chain_;
};

template <typename Real>
DeformedPotential2<Real> deform2(const PotentialSpec<Real>& spec,
                                 std::complex<Real> k) {
    return DeformedPotential2<Real>(spec, k);
}

// Psi = (eps - E) psi + 2 (eps_I / v) y with y the first-order image of psi
// along the same chain; solves the V2 problem at the unchanged energy E.
template <typename Real, typename Psi>
DeformedState<Real> deform2_state(const DeformedPotential2<Real>& V2,
                                  Psi psi, std::complex<Real> E) {
    const std::complex<Real> eps = V2.chain().eps();
    if (std::abs(E - eps) <= Real(1e-12) * std::abs(eps) ||
        std::abs(E - std::conj(eps)) <= Real(1e-12) * std::abs(eps))
        throw DomainError("deform2_state: psi at the transformation energy is degenerate");
    DeformedState<Real> st;
    st.energy = E;
    st.eval = [V2, psi, E, eps](Real x) -> StateValue<Real> {
        const auto bv = V2.chain_beta(x);
        const Real eI = eps.imag();
        const Real vp = -2 * (2 * bv.beta.real() * bv.beta.imag() + eI);
        const StateValue<Real> p = psi(x);
        // first-order image along the chain
        const std::complex<Real> y = p.derivative + bv.beta * p.value;
        const std::complex<Real> yp =
            (evaluate_potential(V2.spec(), x) - E) * p.value +
            bv.beta_prime * p.value + bv.beta * p.derivative;
        StateValue<Real> out;
        out.value = (eps - E) * p.value + 2 * (eI / bv.v) * y;
        out.derivative = (eps - E) * p.derivative +
                         2 * eI * (yp / bv.v - vp * y / (bv.v * bv.v));
        return out;
    };
    return st;
}

} // namespace sqres

#endif
