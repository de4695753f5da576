#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "picardlab/gamma_complex.hpp"
#include "picardlab/gaussian_int.hpp"

namespace picardlab {

namespace detail {

/// Chebyshev weights d_0..d_n for the accelerated alternating series
/// (Borwein's method); shared by zeta and beta below.
inline const std::vector<double>& borwein_d(int n) {
    static thread_local std::vector<double> cache;
    static thread_local int cached_n = -1;
    if (cached_n != n) {
        cache.assign(n + 1, 0.0);
        double s = 1.0;  // s_0
        double d = 1.0;
        cache[0] = 1.0;
        for (int j = 1; j <= n; ++j) {
            s *= 4.0 * (n + j - 1.0) * (n - j + 1.0) / ((2.0 * j) * (2.0 * j - 1.0));
            d += s;
            cache[j] = d;
        }
        for (auto& v : cache) v *= n;  // overall factor n
        cached_n = n;
    }
    return cache;
}

/// sum_{k>=0} (-1)^k a(k) where a(k) is completely monotone in k.
template <typename A>
std::complex<double> alternating_accel(A&& a, int n = 72) {
    const auto& d = borwein_d(n);
    std::complex<double> acc = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        acc += sign * (d[k] - d[n]) * a(k);
        sign = -sign;
    }
    return -acc / d[n];
}

}  // namespace detail

/// Riemann zeta via the eta function with Chebyshev acceleration.  Accurate
/// through the strip needed here (Re s > -2, |Im s| <= ~20).
inline std::complex<double> riemann_zeta(std::complex<double> s) {
    if (std::abs(s - 1.0) < 1e-14) throw std::domain_error("riemann_zeta: pole at s = 1");
    const std::complex<double> eta =
        detail::alternating_accel([&](int k) { return std::exp(-s * std::log(k + 1.0)); });
    return eta / (1.0 - std::exp((1.0 - s) * std::numbers::ln2));
}

/// Dirichlet beta = L(s, chi_{-4}) by the same acceleration.
inline std::complex<double> dirichlet_beta(std::complex<double> s) {
    return detail::alternating_accel([&](int k) { return std::exp(-s * std::log(2.0 * k + 1.0)); });
}

/// Dedekind zeta of Q(i), normalization (1/4) sum |n|^{-2s}: factors as
/// zeta(s) * beta(s).  Simple pole at s = 1 with residue pi/4.
inline std::complex<double> dedekind_zeta(std::complex<double> s) {
    if (std::abs(s - 1.0) < 1e-14) throw std::domain_error("dedekind_zeta: pole at s = 1");
    return riemann_zeta(s) * dirichlet_beta(s);
}

/// Truncated lattice sum (1/4) sum_{0<norm(n)<=Nmax} norm(n)^{-s}; the
/// independent oracle for the continued evaluator at Re(s) >= 1.5.
inline std::complex<double> dedekind_zeta_lattice(std::complex<double> s, long long Nmax) {
    // r2 counts via one pass over the first quadrant
    std::vector<long long> r2(Nmax + 1, 0);
    for (long long a = 1; a * a <= Nmax; ++a)
        for (long long b = 0; a * a + b * b <= Nmax; ++b)
            r2[a * a + b * b] += 4;  // four associates per canonical point
    std::complex<double> tot = 0.0;
    for (long long k = Nmax; k >= 1; --k)
        if (r2[k]) tot += static_cast<double>(r2[k]) * std::exp(-s * std::log(static_cast<double>(k)));
    return 0.25 * tot;
}

/// Residual of the functional equation
///   zeta_k(2u) = pi^{4u-1} zeta_k(1-2u) Gamma(1-2u)/Gamma(2u)
/// at the point u.
inline double dedekind_fe_residual(std::complex<double> u) {
    const std::complex<double> lhs = dedekind_zeta(2.0 * u);
    const std::complex<double> rhs = std::pow(std::complex<double>(std::numbers::pi), 4.0 * u - 1.0) *
                                     dedekind_zeta(1.0 - 2.0 * u) *
                                     gamma_ratio(1.0 - 2.0 * u, 2.0 * u);
    return std::abs(lhs - rhs);
}

}  // namespace picardlab
