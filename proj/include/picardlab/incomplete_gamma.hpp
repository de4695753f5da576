#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "picardlab/gamma_complex.hpp"

namespace picardlab {

/// Upper incomplete gamma Gamma(a, x) for complex a and real x > 0.
/// Continued fraction for x dominating |a|, else Gamma(a) minus the lower
/// series.  Not intended for a at nonpositive integers.
inline std::complex<double> upper_gamma(std::complex<double> a, double x) {
    if (x <= 0) throw std::domain_error("upper_gamma: x <= 0");
    const std::complex<double> xa = std::exp(a * std::log(x) - x);
    if (x > std::abs(a) + 2.0) {
        // Lentz continued fraction
        const double tiny = 1e-290;
        std::complex<double> b = x + 1.0 - a, C = 1.0 / tiny, D = 1.0 / b, f = D;
        for (int i = 1; i < 400; ++i) {
            const std::complex<double> an = -static_cast<double>(i) * (static_cast<double>(i) - a);
            b += 2.0;
            D = an * D + b;
            if (std::abs(D) < tiny) D = tiny;
            C = b + an / C;
            if (std::abs(C) < tiny) C = tiny;
            D = 1.0 / D;
            const std::complex<double> delta = C * D;
            f *= delta;
            if (std::abs(delta - 1.0) < 1e-16) break;
        }
        return xa * f;
    }
    // lower series: gamma(a,x) = x^a e^-x sum x^n / (a (a+1) ... (a+n))
    std::complex<double> denom = a, term = 1.0 / a, sum = term;
    for (int n = 1; n < 600; ++n) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return gamma_c(a) - xa * sum;
}

}  // namespace picardlab
