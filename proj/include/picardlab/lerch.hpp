#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "picardlab/exp_sums.hpp"
#include "picardlab/gamma_complex.hpp"
#include "picardlab/incomplete_gamma.hpp"

namespace picardlab {

/// Parameters of the angular-character lattice zeta
///   Z(s; m, xi) = sum_{n+xi != 0} ((n+xi)/|n+xi|)^m |n+xi|^{-2s}.
struct LerchSpec {
    std::complex<double> s;
    int m = 0;
    std::complex<double> xi = 0.0;
};

namespace detail {

inline std::complex<double> angular_power(std::complex<double> v, int m) {
    std::complex<double> base = (m >= 0) ? v : std::conj(v);
    std::complex<double> out = 1.0;
    for (int k = 0; k < std::abs(m); ++k) out *= base;
    return out;
}

inline std::complex<double> i_pow(int d) {
    switch (((d % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline bool on_lattice(std::complex<double> xi) {
    return std::abs(xi.real() - std::round(xi.real())) < 1e-12 &&
           std::abs(xi.imag() - std::round(xi.imag())) < 1e-12;
}

/// Shared theta-split evaluator.  Both the shifted-lattice sum and its
/// e[n conj(xi)]-twisted dual split at t = 1 into two incomplete-gamma
/// sums; `dual` swaps which side carries the shift.
inline std::complex<double> lerch_split(std::complex<double> s, int m, std::complex<double> xi,
                                        bool dual, int B = 6) {
    using std::numbers::pi;
    const int d = std::abs(m);
    const std::complex<double> sp = s + 0.5 * d;
    const bool xiL = on_lattice(xi);
    const std::complex<double> minus_i_d = i_pow(-d);

    std::complex<double> S_direct = 0.0;  // incomplete gamma at exponent s'
    std::complex<double> S_transf = 0.0;  // exponent 1 + d - s'
    for (int a = -B; a <= B; ++a) {
        for (int b = -B; b <= B; ++b) {
            const std::complex<double> n(a, b);
            // direct side: shifted lattice for the primal, twisted for the dual
            const std::complex<double> v1 = dual ? n : n + xi;
            if (std::abs(v1) > 1e-14) {
                std::complex<double> coef = angular_power(v1, m);
                if (dual) coef *= e_bracket(n * std::conj(xi));
                const double q = pi * std::norm(v1);
                S_direct += coef * std::exp(-sp * std::log(q)) * upper_gamma(sp, q);
            }
            // transformed side: twisted for the primal, shifted for the dual
            const std::complex<double> v2 = dual ? n - xi : n;
            if (std::abs(v2) > 1e-14) {
                std::complex<double> coef = angular_power(v2, m);
                if (!dual) coef *= e_bracket(n * std::conj(xi));
                const double q = pi * std::norm(v2);
                S_transf += coef * std::exp(-(1.0 + d - sp) * std::log(q)) *
                            upper_gamma(1.0 + d - sp, q);
            }
        }
    }
    std::complex<double> tot = S_direct + minus_i_d * S_transf;
    if (d == 0) {
        if (!dual)
            tot += 1.0 / (sp - 1.0) - (xiL ? 1.0 : 0.0) / sp;
        else
            tot += -1.0 / sp + (xiL ? 1.0 : 0.0) / (sp - 1.0);
    }
    return std::exp(sp * std::log(std::complex<double>(pi))) / gamma_c(sp) * tot;
}

}  // namespace detail

/// Analytic continuation of Z(s; m, xi).  Entire for m != 0; for m = 0 a
/// simple pole at s = 1 (residue pi) which is reported as an error.
inline std::complex<double> lerch_zeta(const LerchSpec& spec) {
    if (spec.m == 0 && std::abs(spec.s - 1.0) < 1e-12)
        throw std::domain_error("lerch_zeta: pole at s = 1 for m = 0");
    return detail::lerch_split(spec.s, spec.m, spec.xi, /*dual=*/false);
}

/// The twisted companion sum_{n != 0} (n/|n|)^m e[n conj(xi)] |n|^{-2s},
/// continued the same way.
inline std::complex<double> lerch_dual(std::complex<double> s, int m, std::complex<double> xi) {
    if (m == 0 && detail::on_lattice(xi) && std::abs(s - 1.0) < 1e-12)
        throw std::domain_error("lerch_dual: pole at s = 1");
    return detail::lerch_split(s, m, xi, /*dual=*/true);
}

/// |LHS - RHS| of the functional equation
///   Z(s;m,xi) = (-i)^{|m|} pi^{2s-1} Gamma(1-s+|m|/2)/Gamma(s+|m|/2)
///               * sum_{n != 0} (n/|n|)^m e[n conj(xi)] |n|^{-2(1-s)}.
inline double lerch_fe_residual(std::complex<double> s, int m, std::complex<double> xi) {
    using std::numbers::pi;
    const int d = std::abs(m);
    const std::complex<double> lhs = lerch_zeta({s, m, xi});
    const std::complex<double> pref =
        detail::i_pow(-d) * std::exp((2.0 * s - 1.0) * std::log(std::complex<double>(pi))) *
        gamma_ratio(1.0 - s + 0.5 * d, s + 0.5 * d);
    const std::complex<double> rhs = pref * lerch_dual(1.0 - s, m, xi);
    return std::abs(lhs - rhs);
}

}  // namespace picardlab
