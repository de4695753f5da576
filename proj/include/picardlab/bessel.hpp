#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "picardlab/gamma_complex.hpp"
#include "picardlab/quadrature.hpp"

namespace picardlab {

/// J_0 .. J_nmax at real x >= 0 by Miller's backward recurrence, normalized
/// with J_0 + 2 J_2 + 2 J_4 + ... = 1.  Absolute error near machine eps for
/// nmax <= ~120, x <= ~150.
inline std::vector<double> bessel_j_array(int nmax, double x) {
    if (x < 0) throw std::domain_error("bessel_j_array: x < 0");
    std::vector<double> out(nmax + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x < 0.5) {
        // ascending series per order; the backward recurrence would need
        // untenable rescaling at tiny x
        for (int n = 0; n <= nmax; ++n) {
            double lead = 1.0;
            for (int k = 1; k <= n; ++k) {
                lead *= 0.5 * x / k;
                if (lead < 1e-320) { lead = 0.0; break; }
            }
            if (lead == 0.0) break;  // deeper orders underflow entirely
            double term = lead, sum = lead;
            for (int k = 1; k < 40; ++k) {
                term *= -0.25 * x * x / (static_cast<double>(k) * (n + k));
                sum += term;
                if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            }
            out[n] = sum;
        }
        return out;
    }
    const int big = std::max(nmax, static_cast<int>(std::ceil(x)));
    const int M = big + 20 + static_cast<int>(8.0 * std::sqrt(static_cast<double>(big)));
    double jp = 0.0;          // J_{M+1}
    double jc = 1e-300;       // J_M (arbitrary seed)
    double norm = 0.0;        // accumulates J_0 + 2 sum J_{2k}
    for (int n = M; n >= 1; --n) {
        double jm = (2.0 * n / x) * jc - jp;  // J_{n-1}
        jp = jc;
        jc = jm;
        if (n - 1 <= nmax) out[n - 1] = jc;
        if (((n - 1) & 1) == 0) norm += (n - 1 == 0) ? jc : 2.0 * jc;
        // rescale to avoid overflow of the unnormalized recurrence
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            for (auto& v : out) v *= 1e-250;
        }
    }
    for (auto& v : out) v /= norm;
    return out;
}

inline double bessel_J(int order, double x) {
    if (order < 0) {
        double v = bessel_J(-order, x);
        return (order % 2 == 0) ? v : -v;
    }
    return bessel_j_array(order, x)[order];
}

/// K_{2ir}(x), real for real r, x > 0.
///  - x < 2: ascending series through Im I_{2ir}:
///      K_nu = -pi Im(I_nu) / sinh(2 pi r) for nu = 2ir
///    with the r -> 0 limit handled by the l'Hopital form.
///  - x >= 2: cosh-integral  int_0^inf exp(-x cosh t) cos(2 r t) dt.
inline double bessel_K_imag(double r, double x) {
    if (x <= 0) throw std::domain_error("bessel_K_imag: x <= 0");
    if (r < 0) r = -r;
    if (x < 2.0) {
        const std::complex<double> nu(0.0, 2.0 * r);
        // I_nu(x) = sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1))
        const double lx = std::log(0.5 * x);
        if (r < 1e-8) {
            // K_0 limit: -(log(x/2) + gamma_E) I_0 + correction series
            double term = 1.0, sum0 = 0.0, sumb = 0.0, hk = 0.0;
            for (int k = 0; k < 60; ++k) {
                if (k > 0) {
                    term *= (0.25 * x * x) / (static_cast<double>(k) * k);
                    hk += 1.0 / k;
                }
                sum0 += term;
                sumb += term * hk;
                if (term < 1e-19 * std::abs(sum0) && k > 3) break;
            }
            return -(lx + 0.5772156649015328606) * sum0 + sumb;
        }
        std::complex<double> term = std::exp(nu * lx) / gamma_c(nu + 1.0);
        std::complex<double> sum = term;
        for (int k = 1; k < 80; ++k) {
            term *= (0.25 * x * x) / (static_cast<double>(k) * (nu + static_cast<double>(k)));
            sum += term;
            if (std::abs(term) < 1e-19 * std::abs(sum)) break;
        }
        return -M_PI * sum.imag() / std::sinh(2.0 * M_PI * r);
    }
    // integral representation
    double tmax = std::acosh(745.0 / x);
    // resolve the cos(2 r t) oscillation: >= ~10 panels per unit frequency range
    int panels = std::max(4, static_cast<int>(std::ceil(tmax * (2.0 * r + 4.0) / 12.0)));
    panels = std::min(panels, 256);
    return integrate_gl([&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(2.0 * r * t); },
                        0.0, tmax, panels);
}

}  // namespace picardlab
