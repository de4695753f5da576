#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "picardlab/bessel.hpp"
#include "picardlab/quadrature.hpp"

namespace picardlab {

/// K-function of imaginary order ir, built from the product Bessel kernel.
/// Representation 1: cosine-weighted K-Bessel integral over tau in (0, pi/2).
inline std::complex<double> motohashi_K_rep1(double r, std::complex<double> u) {
    using std::numbers::pi;
    if (std::abs(u) < 1e-300) throw std::domain_error("motohashi_K: u = 0");
    const double au = std::abs(u);
    const double costh = std::cos(std::arg(u));
    const double pref = 8.0 * std::cosh(pi * r) / (pi * pi);
    // tau integral; K_{2ir}(2 au cos tau) oscillates in log(cos tau) near
    // pi/2, which tanh-sinh's endpoint clustering resolves.
    const double val = integrate_tanh_sinh(
        [&](double tau) {
            const double x = 2.0 * au * std::cos(tau);
            if (x < 1e-280) return 0.0;
            return std::cos(2.0 * au * costh * std::sin(tau)) * bessel_K_imag(r, x);
        },
        0.0, 0.5 * pi, 1e-12, 10);
    return {pref * val, 0.0};
}

/// Representation 2: angular Fourier series with J_{2m} K_{2ir} integrals;
/// the m = 0 term enters with weight 1/2.  The m-sum runs inside the tau
/// integral so each node needs one Bessel array.
inline std::complex<double> motohashi_K_rep2(double r, std::complex<double> u, int mmax = 40) {
    using std::numbers::pi;
    if (std::abs(u) < 1e-300) throw std::domain_error("motohashi_K: u = 0");
    const double au = std::abs(u);
    const std::complex<double> phase = u / au;
    const std::complex<double> ph2 = phase * phase;
    const double pref = 8.0 * std::cosh(pi * r) / (pi * pi);

    const std::complex<double> val = integrate_tanh_sinh(
        [&](double tau) -> std::complex<double> {
            const double xk = 2.0 * au * std::cos(tau);
            if (xk < 1e-280) return 0.0;
            const auto J = bessel_j_array(2 * mmax, 2.0 * au * std::sin(tau));
            const double K = bessel_K_imag(r, xk);
            // m = 0: angular factor 2 at half weight
            std::complex<double> acc = J[0];
            std::complex<double> fwd = ph2;
            double sign = -1.0;
            for (int m = 1; m <= mmax; ++m) {
                acc += sign * (fwd + std::conj(fwd)) * J[2 * m];
                fwd *= ph2;
                sign = -sign;
            }
            return acc * K;
        },
        0.0, 0.5 * pi, 1e-13, 9);
    return pref * val;
}

/// Default evaluator (representation 1).
inline std::complex<double> motohashi_K(double r, std::complex<double> u) {
    return motohashi_K_rep1(r, u);
}

/// Spectral-side transform: (1/2) int K_{ir}(u) r^2 h(r) dr over the real
/// line, for an even weight h decaying fast enough that [-R, R] captures it.
inline std::complex<double> h_check_transform(std::complex<double> u,
                                              const std::function<std::complex<double>(double)>& h,
                                              double R, int panels = 48) {
    if (std::abs(u) < 1e-300) throw std::domain_error("h_check_transform: u = 0");
    // integrand is even in r (K is even, h is even by contract)
    return integrate_gl(
        [&](double r) { return motohashi_K_rep1(r, u) * (r * r) * h(r); }, 0.0, R, panels);
}

/// |LHS - RHS| of the product-Bessel addition identity
///   J_0(az)J_0(bz) + 2 sum_m cos(2m theta) J_{2m}(az) J_{2m}(bz)
///     = (J_0(z s_+) + J_0(z s_-))/2,  s_pm = sqrt(a^2+b^2 +- 2ab cos theta),
/// with the left side truncated at mmax.
inline double bessel_addition_check(double a, double b, double z, double theta, int mmax) {
    if (a <= 0 || b <= 0 || z <= 0) throw std::domain_error("bessel_addition_check: need a,b,z > 0");
    const auto ja = bessel_j_array(2 * mmax, a * z);
    const auto jb = bessel_j_array(2 * mmax, b * z);
    double lhs = ja[0] * jb[0];
    for (int m = 1; m <= mmax; ++m)
        lhs += 2.0 * std::cos(2.0 * m * theta) * ja[2 * m] * jb[2 * m];
    const double sp = std::sqrt(a * a + b * b + 2.0 * a * b * std::cos(theta));
    const double sm = std::sqrt(a * a + b * b - 2.0 * a * b * std::cos(theta));
    const double rhs = 0.5 * (bessel_J(0, z * sp) + bessel_J(0, z * sm));
    return std::abs(lhs - rhs);
}

}  // namespace picardlab
