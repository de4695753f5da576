#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "picardlab/gamma_complex.hpp"

namespace picardlab {

struct HypRegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

inline std::complex<double> hyp2f1_series(std::complex<double> a, std::complex<double> b,
                                          std::complex<double> c, std::complex<double> z,
                                          int max_terms = 6000) {
    std::complex<double> term = 1.0, sum = 1.0;
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        const double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw HypRegimeError("hyp2f1: series did not converge (regime)");
}

}  // namespace detail

/// Gauss 2F1 with complex parameters.  Dispatch: direct series for small |z|,
/// the z/(z-1) transformation when that argument is smaller, and the 1/z
/// connection (requires a-b away from integers) for large |z|.  Errors with
/// HypRegimeError outside the supported region rather than degrade.
inline std::complex<double> hyp2f1(std::complex<double> a, std::complex<double> b,
                                   std::complex<double> c, std::complex<double> z) {
    if (is_nonpositive_integer(c)) throw HypRegimeError("hyp2f1: c is a nonpositive integer");
    if (z == 0.0) return 1.0;
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw HypRegimeError("hyp2f1: z on the branch cut [1, inf)");

    const std::complex<double> w = z / (z - 1.0);
    const std::complex<double> ab = a - b;
    // integer a-b degenerates the 1/z connection formula
    const bool ab_split_ok =
        std::hypot(ab.imag(), ab.real() - std::round(ab.real())) > 0.05;

    if (std::abs(z) <= 0.7) return detail::hyp2f1_series(a, b, c, z);
    if (std::abs(w) <= 0.7)
        return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
    if (std::abs(z) >= 3.0 && ab_split_ok) {
        // 1/z connection: both series run in a small argument, so the
        // transformation stays cancellation-free for large imaginary a - b
        // (the near-1 Pfaff argument would lose ~exp(2 |Im a| sqrt|w|)).
        const std::complex<double> t1 = std::exp(lgamma_c(c) + lgamma_c(b - a) - lgamma_c(b) -
                                                 lgamma_c(c - a) - a * std::log(-z)) *
                                        detail::hyp2f1_series(a, a - c + 1.0, a - b + 1.0, 1.0 / z);
        const std::complex<double> t2 = std::exp(lgamma_c(c) + lgamma_c(a - b) - lgamma_c(a) -
                                                 lgamma_c(c - b) - b * std::log(-z)) *
                                        detail::hyp2f1_series(b, b - c + 1.0, b - a + 1.0, 1.0 / z);
        return t1 + t2;
    }
    if (std::abs(z) <= 0.98) return detail::hyp2f1_series(a, b, c, z);
    if (std::abs(w) <= 0.985)
        return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
    throw HypRegimeError("hyp2f1: unsupported parameter regime");
}

}  // namespace picardlab
