#ifndef SQRES_RESONANCES_HPP
#define SQRES_RESONANCES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "sqres/errors.hpp"
#include "sqres/potentials.hpp"
#include "sqres/scattering.hpp"

namespace sqres {

enum class Method { Analytic, Graphical, Refined };

template <typename Real = double>
struct Resonance {
    Real E = 0;     // center, eps_R
    Real Gamma = 0; // full width, Gamma = 2|eps_I|
    std::optional<std::complex<Real>> k; // fourth quadrant when present
    int index = 0;
    Method method = Method::Analytic;
    // Validity of the long-lifetime approximations: width small against the
    // level spacing, and center above the spacing.
    Real width_to_spacing = 0; // (Gamma/2) / deltaE
    bool narrow = false;       // width_to_spacing < 0.1
    bool above_spacing = false; // E > deltaE

    std::complex<Real> eps() const { return {E, -Gamma / 2}; }
};

namespace detail {

inline constexpr double pi = 3.14159265358979323846;

template <typename Real>
Real analytic_well_E(const PotentialSpec<Real>& spec, int m) {
    const Real th = spec.theta();
    const Real n_inf = std::ceil(2 * th / Real(pi));
    const Real r = (n_inf + m) * Real(pi) / (2 * th);
    return (r * r - 1) * spec.V0;
}

template <typename Real>
Real analytic_barrier_E(const PotentialSpec<Real>& spec, int n) {
    const Real th = spec.theta();
    const Real r = n * Real(detail::pi) / (2 * th);
    return spec.V0 * (1 + r * r);
}

template <typename Real>
void set_validity(Resonance<Real>& res, Real spacing) {
    res.width_to_spacing = (res.Gamma / 2) / spacing;
    res.narrow = res.width_to_spacing < Real(0.1);
    res.above_spacing = res.E > spacing;
}

} // namespace detail

// Seed in the fourth quadrant with k_R^2 - k_I^2 close to E and
// -2 k_R k_I = Gamma/2.
template <typename Real>
std::complex<Real> k_seed(Real E, Real half_gamma) {
    const Real kr = std::sqrt(E);
    return {kr, -half_gamma / (2 * kr)};
}

template <typename Real>
std::vector<Resonance<Real>> analytic_well_resonances(
    const PotentialSpec<Real>& spec, int count) {
    if (spec.kind != Kind::Well)
        throw DomainError("analytic_well_resonances requires a well");
    if (count < 1) throw DomainError("count must be >= 1");
    std::vector<Resonance<Real>> out;
    for (int m = 0; m < count; ++m) {
        Resonance<Real> r;
        r.index = m;
        r.method = Method::Analytic;
        r.E = detail::analytic_well_E(spec, m);
        r.Gamma = 2 * (4 / spec.b) * std::sqrt(r.E);
        detail::set_validity(r, detail::analytic_well_E(spec, m + 1) - r.E);
        out.push_back(r);
    }
    return out;
}

template <typename Real>
std::vector<Resonance<Real>> analytic_barrier_resonances(
    const PotentialSpec<Real>& spec, int count) {
    if (spec.kind != Kind::Barrier)
        throw DomainError("analytic_barrier_resonances requires a barrier");
    if (count < 1) throw DomainError("count must be >= 1");
    const Real th = spec.theta();
    std::vector<Resonance<Real>> out;
    for (int n = 1; n <= count; ++n) {
        Resonance<Real> r;
        r.index = n;
        r.method = Method::Analytic;
        r.E = detail::analytic_barrier_E(spec, n);
        r.Gamma = 2 * (2 / th) * (r.E - spec.V0);
        detail::set_validity(r,
                             detail::analytic_barrier_E(spec, n + 1) - r.E);
        out.push_back(r);
    }
    return out;
}

namespace detail {

// d(Delta)/dk, analytic (dq/dk = k/q). Delta is holomorphic in k away from
// q = 0; the q -> -q ambiguity cancels in the product.
template <typename Real>
std::complex<Real> ddelta_dk(const PotentialSpec<Real>& spec,
                             std::complex<Real> k) {
    const auto p = delta_parts(spec, k);
    const std::complex<Real> I(0, 1);
    const Real hb = spec.b / 2;
    const std::complex<Real> dq = k / p.q;
    const std::complex<Real> c = std::cos(p.q * hb);
    const std::complex<Real> s = std::sin(p.q * hb);
    const std::complex<Real> df1 =
        c - k * s * hb * dq - I * (dq * s + p.q * c * hb * dq);
    const std::complex<Real> df2 =
        dq * c - p.q * s * hb * dq - I * (s + k * c * hb * dq);
    return df1 * p.f2 + p.f1 * df2;
}

} // namespace detail

// Newton iteration on Delta(k) = 0 with the analytic derivative.
template <typename Real>
Resonance<Real> refine_pole(const PotentialSpec<Real>& spec,
                            std::complex<Real> k_guess, Real tol = 1e-12,
                            int max_iter = 100) {
    if (!(tol > Real(0))) throw DomainError("refine_pole requires tol > 0");
    if (!(k_guess.real() > Real(0)) || !(k_guess.imag() < Real(0)))
        throw WrongQuadrant("refine_pole seed must lie in the fourth quadrant");
    const Real band = Real(0.1) * (1 + std::abs(k_guess));
    std::complex<Real> k = k_guess;
    bool done = false;
    for (int it = 0; it < max_iter && !done; ++it) {
        const std::complex<Real> f = delta_fn(spec, k);
        const std::complex<Real> step = f / detail::ddelta_dk(spec, k);
        k -= step;
        if (k.real() < -band || k.imag() > band)
            throw WrongQuadrant("Newton iterate left the fourth quadrant");
        const std::complex<Real> q = interaction_parameter(spec, k);
        done = std::abs(step) < tol * std::max(Real(1), std::abs(k)) &&
               std::abs(delta_fn(spec, k)) <
                   Real(1e-10) * std::abs(k) * std::abs(q);
    }
    if (!done)
        throw NoConvergence("refine_pole did not converge");
    if (!(k.real() > Real(0)) || !(k.imag() < Real(0)))
        throw WrongQuadrant("refined pole is not in the fourth quadrant");
    Resonance<Real> r;
    r.method = Method::Refined;
    r.k = k;
    r.E = k.real() * k.real() - k.imag() * k.imag();
    r.Gamma = -4 * k.real() * k.imag();
    return r;
}

template <typename Real = double>
struct ScanPeak {
    Real center = 0;
    Real width = 0;      // full width between the T = 1/2 crossings
    Real left_half = 0;  // left crossing
    Real right_half = 0; // right crossing
    bool accepted = false;
};

template <typename Real = double>
struct ScanResult {
    std::vector<Real> energies;
    std::vector<Real> T_values;
    std::vector<ScanPeak<Real>> peaks;
};

namespace detail {

template <typename Real, typename F>
Real bisect_half_max(F&& f, Real a, Real b, Real tol = 1e-10) {
    // f changes sign between a and b; a and b need not be ordered.
    Real fa = f(a);
    for (int i = 0; i < 200; ++i) {
        const Real m = (a + b) / 2;
        const Real fm = f(m);
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if (std::abs(b - a) < tol) break;
    }
    return (a + b) / 2;
}

// Peak-top location: golden-section shrink of the bracketing interval
// followed by a parabolic polish. The half-max midpoint is biased by the
// asymmetric background and is not used for the center.
template <typename Real, typename F>
Real refine_peak_top(F&& f, Real a, Real b) {
    const Real gr = (std::sqrt(Real(5)) - 1) / 2;
    Real x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    Real f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 80; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
        if (b - a < Real(1e-13) * std::max(Real(1), std::abs(a))) break;
    }
    const Real m = (a + b) / 2;
    const Real h = std::max((b - a), Real(1e-9) * std::max(Real(1), std::abs(m)));
    const Real fm = f(m), fl = f(m - h), fr = f(m + h);
    const Real denom = fl - 2 * fm + fr;
    if (denom < Real(0)) {
        const Real shift = (fl - fr) / (2 * denom) * h;
        if (std::abs(shift) < h) return m + shift;
    }
    return m;
}

} // namespace detail

template <typename Real>
ScanResult<Real> scan_transmission(const PotentialSpec<Real>& spec, Real E_min,
                                   Real E_max, int samples) {
    if (!(E_min > Real(0)) || !(E_max > E_min))
        throw DomainError("scan_transmission requires 0 < E_min < E_max");
    if (samples < 100)
        throw DomainError("scan_transmission requires samples >= 100");

    ScanResult<Real> res;
    res.energies.resize(samples);
    res.T_values.resize(samples);
    const Real h = (E_max - E_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        res.energies[i] = E_min + h * i;
        res.T_values[i] = transmission_coefficient(spec, res.energies[i]);
    }
    const auto& Ts = res.T_values;
    const auto& Es = res.energies;
    const auto Tof = [&](Real E) { return transmission_coefficient(spec, E); };

    int i = 1;
    bool any_accepted = false;
    while (i < samples - 1) {
        // plateau of equal samples collapses to its midpoint
        int j = i;
        while (j < samples - 1 && Ts[j + 1] == Ts[j]) ++j;
        const bool is_peak =
            Ts[i] > Ts[i - 1] && j < samples - 1 && Ts[j] > Ts[j + 1];
        if (!is_peak) {
            i = j + 1;
            continue;
        }
        const int p = (i + j) / 2;
        int l = i;
        while (l > 0 && Ts[l - 1] <= Ts[l]) --l;
        int r = j;
        while (r < samples - 1 && Ts[r + 1] <= Ts[r]) ++r;

        ScanPeak<Real> peak;
        peak.center = Es[p];
        const bool minima_low = !(Ts[l] > Real(0.5) && Ts[r] > Real(0.5));
        if (minima_low && Ts[p] > Real(0.5)) {
            const auto half = [&](Real E) { return Tof(E) - Real(0.5); };
            peak.left_half = detail::bisect_half_max(half, Es[l], Es[p]);
            peak.right_half = detail::bisect_half_max(half, Es[r], Es[p]);
            peak.width = peak.right_half - peak.left_half;
            peak.center =
                detail::refine_peak_top(Tof, Es[p - 1], Es[p + 1]);
            peak.accepted = true;
            any_accepted = true;
        }
        res.peaks.push_back(peak);
        i = r + 1;
    }
    if (!any_accepted)
        throw NoPeaksError("no accepted transmission peak in range");
    return res;
}

template <typename Real = double>
struct BoundState {
    Real E = 0;   // < 0
    bool even = true;
    Real rho = 0; // qb/2, root of the parity condition in (0, theta)
};

// Roots of  tan(rho) = sqrt(th^2-rho^2)/rho  (even) and
// cot(rho) = -sqrt(th^2-rho^2)/rho  (odd), one per interval
// ((j-1)pi/2, j pi/2) intersected with (0, th), alternating parity.
template <typename Real>
std::vector<BoundState<Real>> bound_states(const PotentialSpec<Real>& spec) {
    if (spec.kind != Kind::Well)
        throw DomainError("bound_states requires a well");
    const Real th = spec.theta();
    const auto tail = [&](Real rho) {
        const Real d = th * th - rho * rho;
        return std::sqrt(std::max(d, Real(0)));
    };
    // cleared, pole-free forms with a guaranteed sign change per bracket
    const auto f_even = [&](Real rho) {
        return rho * std::sin(rho) - tail(rho) * std::cos(rho);
    };
    const auto f_odd = [&](Real rho) {
        return rho * std::cos(rho) + tail(rho) * std::sin(rho);
    };
    std::vector<BoundState<Real>> out;
    for (int j = 1;; ++j) {
        const Real lo = (j - 1) * Real(detail::pi) / 2;
        if (lo >= th) break;
        const Real hi = std::min(j * Real(detail::pi) / 2, th);
        const bool even = (j % 2) == 1;
        const auto f = [&](Real rho) { return even ? f_even(rho) : f_odd(rho); };
        Real a = lo + (hi - lo) * Real(1e-14), b = hi;
        Real fa = f(a), fb = f(b);
        if ((fa > 0) == (fb > 0)) continue; // truncated final interval, no root
        for (int it = 0; it < 200; ++it) {
            const Real m = (a + b) / 2;
            const Real fm = f(m);
            if ((fm > 0) == (fa > 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
            if (b - a < Real(1e-15) * th) break;
        }
        BoundState<Real> st;
        st.rho = (a + b) / 2;
        st.even = even;
        const Real q = 2 * st.rho / spec.b;
        st.E = q * q - spec.V0;
        out.push_back(st);
    }
    std::sort(out.begin(), out.end(),
              [](const BoundState<Real>& x, const BoundState<Real>& y) {
                  return x.E < y.E;
              });
    return out;
}

// Piecewise parity eigenfunction, continuous (and smooth, via the eigenvalue
// condition) at +-b/2; exterior amplitude fixed to e^{-kappa|x|}.
template <typename Real>
Real bound_wavefunction(const BoundState<Real>& state,
                        const PotentialSpec<Real>& spec, Real x) {
    const Real th = spec.theta();
    const Real q = 2 * state.rho / spec.b;
    const Real kappa = (2 / spec.b) * std::sqrt(th * th - state.rho * state.rho);
    const Real edge = std::exp(-kappa * spec.b / 2);
    if (std::abs(x) <= spec.b / 2) {
        if (state.even) return edge / std::cos(state.rho) * std::cos(q * x);
        return edge / std::sin(state.rho) * std::sin(q * x);
    }
    const Real ext = std::exp(-kappa * std::abs(x));
    if (state.even) return ext;
    return x > 0 ? ext : -ext;
}

// bound_wavefunction together with its derivative, as a StateValue (the
// derivative is continuous at +-b/2 via the eigenvalue condition).
template <typename Real>
StateValue<Real> bound_state_value(const BoundState<Real>& state,
                                   const PotentialSpec<Real>& spec, Real x) {
    const Real th = spec.theta();
    const Real q = 2 * state.rho / spec.b;
    const Real kappa = (2 / spec.b) * std::sqrt(th * th - state.rho * state.rho);
    const Real edge = std::exp(-kappa * spec.b / 2);
    Real u, up;
    if (std::abs(x) <= spec.b / 2) {
        if (state.even) {
            const Real A = edge / std::cos(state.rho);
            u = A * std::cos(q * x);
            up = -A * q * std::sin(q * x);
        } else {
            const Real B = edge / std::sin(state.rho);
            u = B * std::sin(q * x);
            up = B * q * std::cos(q * x);
        }
    } else {
        const Real ext = std::exp(-kappa * std::abs(x));
        const Real sgn = x > 0 ? Real(1) : Real(-1);
        u = state.even ? ext : sgn * ext;
        up = state.even ? -sgn * kappa * ext : -kappa * ext;
    }
    return {std::complex<Real>(u, 0), std::complex<Real>(up, 0)};
}

// L2 norm of bound_wavefunction, closed form (interior trig integral plus
// exact exponential tails).
template <typename Real>
Real bound_state_norm(const BoundState<Real>& state,
                      const PotentialSpec<Real>& spec) {
    const Real th = spec.theta();
    const Real q = 2 * state.rho / spec.b;
    const Real kappa = (2 / spec.b) * std::sqrt(th * th - state.rho * state.rho);
    const Real edge = std::exp(-kappa * spec.b / 2);
    const Real tails = std::exp(-kappa * spec.b) / kappa;
    Real interior;
    if (state.even) {
        const Real A = edge / std::cos(state.rho);
        interior = A * A * (spec.b / 2 + std::sin(q * spec.b) / (2 * q));
    } else {
        const Real B = edge / std::sin(state.rho);
        interior = B * B * (spec.b / 2 - std::sin(q * spec.b) / (2 * q));
    }
    return std::sqrt(interior + tails);
}

} // namespace sqres

#endif
