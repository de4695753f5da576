#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace picardlab {

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline std::complex<double> lanczos_sum(std::complex<double> z) {
    std::complex<double> s = lanczos_c[0];
    for (int k = 1; k < 15; ++k) s += lanczos_c[k] / (z + static_cast<double>(k));
    return s;
}

}  // namespace detail

inline bool is_nonpositive_integer(std::complex<double> z, double tol = 1e-12) {
    return std::abs(z.imag()) < tol && z.real() < 0.5 &&
           std::abs(z.real() - std::round(z.real())) < tol;
}

/// log Gamma(z), principal branch off the negative real axis.
inline std::complex<double> lgamma_c(std::complex<double> z) {
    using std::numbers::pi;
    if (is_nonpositive_integer(z)) throw std::domain_error("lgamma_c: pole");
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        std::complex<double> lsin;
        // stable log(sin(pi z)) for large |Im z|
        const std::complex<double> piz = pi * z;
        if (std::abs(z.imag()) > 20.0) {
            const std::complex<double> i(0.0, 1.0);
            // sin w = (e^{iw} - e^{-iw}) / 2i; pick the dominant exponential
            if (z.imag() > 0)
                lsin = -i * piz + std::log((std::exp(2.0 * i * piz) - 1.0) / (2.0 * i));
            else
                lsin = i * piz + std::log((1.0 - std::exp(-2.0 * i * piz)) / (2.0 * i));
        } else {
            lsin = std::log(std::sin(piz));
        }
        return std::log(std::complex<double>(pi)) - lsin - lgamma_c(1.0 - z);
    }
    const std::complex<double> zm1 = z - 1.0;
    const std::complex<double> t = zm1 + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_sum(zm1));
}

/// Complex Gamma; throws on poles.
inline std::complex<double> gamma_c(std::complex<double> z) {
    return std::exp(lgamma_c(z));
}

/// Gamma(a) / Gamma(b) computed in log space.
inline std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b) {
    return std::exp(lgamma_c(a) - lgamma_c(b));
}

}  // namespace picardlab
