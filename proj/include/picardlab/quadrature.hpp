#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace picardlab {

enum class QuadScheme { TanhSinh, GaussLegendrePanels };

struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::GaussLegendrePanels;
    double abs_tol = 1e-10;
    int max_nodes = 4096;
};

namespace detail {

/// 64-point Gauss-Legendre rule on [-1, 1], built once by Newton iteration
/// on the Legendre polynomial roots.
struct GL64 {
    std::array<double, 64> x{}, w{};
    GL64() {
        constexpr int n = 64;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double p0, p1;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0; p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1; p1 = p0;
                    p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
                }
                double dp = n * (t * p0 - p1) / (t * t - 1.0);
                double dt = p0 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            p1 = 0.0; p0 = 1.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1; p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            double dp = n * (t * p0 - p1) / (t * t - 1.0);
            x[i] = -t; x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

inline const GL64& gl64() {
    static const GL64 rule;
    return rule;
}

}  // namespace detail

/// Fixed-node Gauss-Legendre over [a,b] split into `panels` equal panels.
/// Deterministic: nodes depend only on (a, b, panels).
template <typename F>
auto integrate_gl(F&& f, double a, double b, int panels = 1) {
    const auto& rule = detail::gl64();
    using R = decltype(f(a));
    R tot{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h, half = 0.5 * h;
        R acc{};
        for (int i = 0; i < 64; ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
        tot += half * acc;
    }
    return tot;
}

/// Doubly-adaptive panel count: doubles panels until two refinements agree.
template <typename F>
auto integrate_gl_auto(F&& f, double a, double b, double abs_tol, int start_panels = 1,
                       int max_panels = 512) {
    auto prev = integrate_gl(f, a, b, start_panels);
    for (int p = start_panels * 2; p <= max_panels; p *= 2) {
        auto cur = integrate_gl(f, a, b, p);
        if (std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    return prev;
}

/// Tanh-sinh (double exponential) rule on (a, b); robust for integrable
/// endpoint singularities.  Level k uses step 2^-k, up to max_level.
/// Node abscissae are formed as stable offsets from the nearer endpoint, so
/// singular factors like x^alpha keep full precision.
template <typename F>
auto integrate_tanh_sinh(F&& f, double a, double b, double abs_tol = 1e-12,
                         int max_level = 12) {
    using R = decltype(f(0.5 * (a + b)));
    const double c = 0.5 * (b - a);
    const double tmax = 6.1;  // tanh(pi/2 sinh 6.1) is 1 to machine precision

    // returns the node for parameter t (any sign) and its weight
    auto node = [&](double t, double& xx, double& ww) {
        const double s = std::sinh(t);
        const double ch = std::cosh(t);
        const double dn = std::cosh(0.5 * M_PI * s);
        const double e2 = std::exp(-M_PI * std::abs(s));  // e^{-2|w|}
        const double off = 2.0 * e2 / (1.0 + e2);         // 1 - |tanh(w)|
        xx = (t >= 0) ? b - c * off : a + c * off;
        ww = c * 0.5 * M_PI * ch / (dn * dn);
    };

    double x, w;
    node(0.0, x, w);
    R sum = w * f(x);
    for (double t = 1.0; t <= tmax; t += 1.0) {
        for (double tt : {t, -t}) {
            node(tt, x, w);
            if (x <= a || x >= b || w < 1e-300) continue;
            sum += w * f(x);
        }
    }
    double hstep = 1.0;
    R prev = sum * hstep;
    for (int level = 1; level <= max_level; ++level) {
        hstep *= 0.5;
        R add{};
        for (double t = hstep; t <= tmax; t += 2.0 * hstep) {
            for (double tt : {t, -t}) {
                node(tt, x, w);
                if (x <= a || x >= b || w < 1e-300) continue;
                add += w * f(x);
            }
        }
        sum += add;
        R cur = sum * hstep;
        if (level >= 4 && std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace picardlab
