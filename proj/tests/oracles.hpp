// Independent numerical oracles used by the test and acceptance suites:
// interface/transfer matrices, a Numerov node-count eigensolver with
// Richardson extrapolation, and Simpson quadrature. Deliberately written
// against the raw definitions, not against the library closed forms.
#ifndef SQRES_TESTS_ORACLES_HPP
#define SQRES_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

using cdouble = std::complex<double>;

struct Mat2 {
    cdouble a, b, c, d; // [[a, b], [c, d]]
};

inline Mat2 mul(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

inline Mat2 inverse(const Mat2& m) {
    const cdouble det = m.a * m.d - m.b * m.c;
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

// Plane-wave interface matrix: (A2,B2) = M (A1,B1) across x, where each
// region carries A e^{ikx} + B e^{-ikx}.
inline Mat2 interface(cdouble k1, cdouble k2, double x) {
    const cdouble I(0, 1);
    const cdouble e1p = std::exp(I * k1 * x), e1m = std::exp(-I * k1 * x);
    const cdouble e2p = std::exp(I * k2 * x), e2m = std::exp(-I * k2 * x);
    const Mat2 m1{e1p, e1m, I * k1 * e1p, -I * k1 * e1m};
    const Mat2 m2{e2p, e2m, I * k2 * e2p, -I * k2 * e2m};
    return mul(inverse(m2), m1);
}

// Transmission through the square model by 3-region wave matching.
inline double transfer_T(bool well, double V0, double b, double E) {
    const cdouble k = std::sqrt(cdouble(E, 0));
    const cdouble q = std::sqrt(cdouble(E + (well ? V0 : -V0), 0));
    const Mat2 M = mul(interface(q, k, b / 2), interface(k, q, -b / 2));
    // det(M) telescopes to k/k = 1, so t = det/M.d = 1/M.d; the naive
    // t = M.a - M.b M.c / M.d cancels catastrophically under deep tunneling
    return 1.0 / std::norm(M.d);
}

// Transmission through an arbitrary sampled potential: piecewise-constant
// slabs with midpoint sampling on [-L, L], V assumed 0 outside.
inline double multilayer_T(const std::function<double(double)>& V, double L,
                           int slabs, double E) {
    const cdouble k = std::sqrt(cdouble(E, 0));
    const double h = 2 * L / slabs;
    Mat2 M{1, 0, 0, 1};
    cdouble kprev = k;
    for (int i = 0; i < slabs; ++i) {
        const double x0 = -L + i * h;
        const cdouble ki = std::sqrt(cdouble(E - V(x0 + h / 2), 0));
        M = mul(interface(kprev, ki, x0), M);
        kprev = ki;
    }
    M = mul(interface(kprev, k, L), M);
    // same stable form as transfer_T: the interface determinants telescope
    return 1.0 / std::norm(M.d);
}

// Numerov forward sweep from the left with node counting. The number of
// interior nodes of the sweep solution equals the number of eigenvalues
// below E, which makes bisection per level robust.
inline int node_count(const std::vector<double>& V, double h, double E) {
    const std::size_t n = V.size();
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = V[i] - E;
    const auto c = [&](std::size_t i) { return 1.0 - (h * h / 12.0) * g[i]; };
    double w0 = 0.0;
    double prev = 1e-20;
    double w1 = prev * c(1);
    int nodes = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double w2 = 2.0 * w1 - w0 + h * h * g[i] * prev;
        double u2 = w2 / c(i + 1);
        if (u2 == 0.0 || (u2 > 0) != (prev > 0)) ++nodes;
        w0 = w1;
        w1 = w2;
        prev = u2;
        if (std::abs(u2) > 1e250) {
            w0 *= 1e-250;
            w1 *= 1e-250;
            prev *= 1e-250;
        }
    }
    return nodes;
}

// Sample V on [-L, L] with n points; nodes that land exactly on listed jump
// abscissae take the mean of the side limits (keeps Richardson clean).
inline std::vector<double> sample_potential(
    const std::function<double(double)>& V, double L, int n,
    const std::vector<double>& jumps) {
    const double h = 2 * L / (n - 1);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = V(-L + i * h);
    for (double j : jumps) {
        const int i = static_cast<int>(std::lround((j + L) / h));
        if (i >= 0 && i < n && std::abs(-L + i * h - j) < 1e-9)
            out[i] = 0.5 * (V(j - 1e-9) + V(j + 1e-9));
    }
    return out;
}

inline std::vector<double> levels_on_grid(
    const std::function<double(double)>& V, double L, int n, int nlev,
    double Emin, double Emax, const std::vector<double>& jumps) {
    const std::vector<double> Vs = sample_potential(V, L, n, jumps);
    const double h = 2 * L / (n - 1);
    std::vector<double> out;
    for (int j = 0; j < nlev; ++j) {
        double lo = Emin, hi = Emax;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (node_count(Vs, h, mid) > j)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

// Bound levels by node-count bisection on (h, h/2) grids with Richardson
// extrapolation; pick n-1 divisible enough that jumps land on grid nodes.
inline std::vector<double> bound_levels(
    const std::function<double(double)>& V, double L, int nlev, double Emin,
    double Emax, int n, const std::vector<double>& jumps) {
    const auto a = levels_on_grid(V, L, n, nlev, Emin, Emax, jumps);
    const auto b = levels_on_grid(V, L, 2 * n - 1, nlev, Emin, Emax, jumps);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (4 * b[i] - a[i]) / 3;
    return out;
}

// Composite Simpson on [a, b] with n (even) intervals.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3;
}

} // namespace oracles

#endif
