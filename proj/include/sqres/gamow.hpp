#ifndef SQRES_GAMOW_HPP
#define SQRES_GAMOW_HPP

#include <cmath>
#include <complex>
#include <utility>

#include "sqres/errors.hpp"
#include "sqres/potentials.hpp"
#include "sqres/scattering.hpp"

namespace sqres {

// Alias kept because both names describe the same failure.
using QuadrantError = WrongQuadrant;

enum class GamowVariant { Decaying, Capture, Decreasing };

// Piecewise closed-form solution at complex k:
//   x < -b/2 : A_out e^{-ikx} + A_in e^{ikx}
//   |x| <= b/2 : B_sin sin(qx) + B_cos cos(qx)
//   x > +b/2 : C_out e^{ikx} + C_in e^{-ikx}
// "out"/"in" name the outgoing/incoming pieces of each exterior region.
template <typename Real = double>
struct GamowFunction {
    PotentialSpec<Real> spec;
    std::complex<Real> k, q;
    GamowVariant variant = GamowVariant::Decaying;
    std::complex<Real> A_out, A_in, B_sin, B_cos, C_out, C_in;

    std::complex<Real> eps() const { return k * k; }
};

namespace detail {

// value, derivative and an additive magnitude scale (for node detection)
template <typename Real>
void gamow_eval(const GamowFunction<Real>& g, Real x, std::complex<Real>& u,
                std::complex<Real>& up, Real& scale) {
    const std::complex<Real> I(0, 1);
    const Real hb = g.spec.b / 2;
    if (std::abs(x) <= hb) {
        const std::complex<Real> s = std::sin(g.q * x), c = std::cos(g.q * x);
        u = g.B_sin * s + g.B_cos * c;
        up = g.q * (g.B_sin * c - g.B_cos * s);
        scale = (std::abs(g.B_sin) + std::abs(g.B_cos)) *
                (std::abs(s) + std::abs(c));
        return;
    }
    std::complex<Real> ep = std::exp(I * g.k * x), em = std::exp(-I * g.k * x);
    std::complex<Real> co, ci; // coeff of e^{ikx}, e^{-ikx}
    if (x < -hb) {
        co = g.A_in;
        ci = g.A_out;
    } else {
        co = g.C_out;
        ci = g.C_in;
    }
    u = co * ep + ci * em;
    up = I * g.k * (co * ep - ci * em);
    scale = std::abs(co * ep) + std::abs(ci * em);
}

} // namespace detail

template <typename Real>
GamowFunction<Real> build_gamow(const PotentialSpec<Real>& spec,
                                std::complex<Real> k, GamowVariant variant,
                                Real tol_pole = 1e-8) {
    GamowFunction<Real> g;
    g.spec = spec;
    g.k = k;
    g.variant = variant;
    const auto p = detail::delta_parts(spec, k);
    g.q = p.q;
    const std::complex<Real> I(0, 1);

    if (variant == GamowVariant::Decaying) {
        if (!(k.real() > Real(0)) || !(k.imag() < Real(0)))
            throw QuadrantError("Decaying build needs k in the fourth quadrant");
    } else if (variant == GamowVariant::Capture) {
        if (!(k.real() < Real(0)) || !(k.imag() < Real(0)))
            throw QuadrantError("Capture build needs k in the third quadrant");
    } else {
        if (!(k.imag() > Real(0)))
            throw QuadrantError("Decreasing build needs Im k > 0");
    }

    if (variant != GamowVariant::Decreasing) {
        if (std::abs(p.delta()) > tol_pole * std::abs(k) * std::abs(g.q))
            throw NotAPole("build_gamow: Delta(k) is not small; refine the pole first");
        // Delta-cleared interior of the scattering solution
        g.B_sin = I * p.f1;
        g.B_cos = p.f2;
    } else {
        // exact one-sided solution: u = e^{-ikx} for x < -b/2, matched inward
        const Real xm = -spec.b / 2;
        const std::complex<Real> u0 = std::exp(-I * k * xm);
        const std::complex<Real> up0 = -I * k * u0;
        g.B_sin = u0 * std::sin(g.q * xm) + up0 * std::cos(g.q * xm) / g.q;
        g.B_cos = u0 * std::cos(g.q * xm) - up0 * std::sin(g.q * xm) / g.q;
    }

    const auto outer = [&](Real x0, std::complex<Real>& plus,
                           std::complex<Real>& minus) {
        // split the interior value/slope at x0 into e^{ikx} / e^{-ikx} pieces
        const std::complex<Real> s = std::sin(g.q * x0), c = std::cos(g.q * x0);
        const std::complex<Real> u0 = g.B_sin * s + g.B_cos * c;
        const std::complex<Real> up0 = g.q * (g.B_sin * c - g.B_cos * s);
        plus = Real(0.5) * (u0 + up0 / (I * k)) * std::exp(-I * k * x0);
        minus = Real(0.5) * (u0 - up0 / (I * k)) * std::exp(I * k * x0);
    };
    outer(spec.b / 2, g.C_out, g.C_in);
    if (variant == GamowVariant::Decreasing) {
        // the left side is e^{-ikx} by construction; splitting the matched
        // interior back would leave an O(eps) e^{ikx} residue that explodes
        // like e^{2 Im k |x|} far to the left
        g.A_out = 1;
        g.A_in = 0;
    } else {
        outer(-spec.b / 2, g.A_in, g.A_out);
    }
    return g;
}

template <typename Real>
std::pair<std::complex<Real>, std::complex<Real>> evaluate(
    const GamowFunction<Real>& g, Real x) {
    std::complex<Real> u, up;
    Real scale;
    detail::gamow_eval(g, x, u, up, scale);
    return {u, up};
}

template <typename Real = double>
struct BetaValue {
    std::complex<Real> beta;       // -u'/u
    std::complex<Real> beta_prime; // beta^2 + eps - V(x)  (Riccati)
    Real v;                        // flux velocity, -2 Im beta
};

template <typename Real>
BetaValue<Real> beta(const GamowFunction<Real>& g, Real x) {
    std::complex<Real> u, up;
    Real scale;
    detail::gamow_eval(g, x, u, up, scale);
    if (std::abs(u) < Real(1e-13) * scale)
        throw NodeError("beta evaluated at a node of the transformation function");
    BetaValue<Real> out;
    out.beta = -up / u;
    out.beta_prime =
        out.beta * out.beta + g.eps() - evaluate_potential(g.spec, x);
    out.v = -2 * out.beta.imag();
    return out;
}

template <typename Real>
Real density_factor(const GamowFunction<Real>& g, Real x, Real t) {
    if (g.variant == GamowVariant::Decreasing)
        throw DomainError("density_factor needs a Decaying or Capture state");
    const Real Gamma = -2 * g.eps().imag();
    const auto [u, up] = evaluate(g, x);
    (void)up;
    return std::exp(-Gamma * t) * std::norm(u);
}

} // namespace sqres

#endif
