#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "picardlab/bessel.hpp"
#include "picardlab/gamma_complex.hpp"
#include "picardlab/gaussian_int.hpp"
#include "picardlab/hyp2f1.hpp"
#include "picardlab/quadrature.hpp"

namespace picardlab {

using cplx = std::complex<double>;

/// Parameters (K, N, T, G, X) of the spectral test weight
///   h(r) = X^{ir} q_N(r) exp(-((r-K)/G)^2) + X^{-ir} q_N(r) exp(-((r+K)/G)^2).
struct WeightSpec {
    double K = 5.0;
    int N = 2;
    double T = 10.0;
    double G = 1.0;
    double X = 1.0;
};

/// Smoothed indicator of (T, 2T): (1/(G sqrt(pi))) int_T^2T exp(-((r-K)/G)^2) dK,
/// in closed error-function form.
inline double omega_T(double r, double T, double G) {
    if (T <= 0 || G <= 0) throw std::domain_error("omega_T: need T, G > 0");
    return 0.5 * (std::erf((r - T) / G) - std::erf((r - 2.0 * T) / G));
}

/// Rational mollifier with zeros at +-i/2 ... +-i(N-1/2) and +-i ... +-iN;
/// tends to 1 as |r| grows (error ~ 200 N^3 / r^2).
inline cplx q_N(cplx r, int N) {
    if (N < 1) throw std::domain_error("q_N: N >= 1");
    const cplx r2 = r * r;
    cplx num = 1.0;
    for (int k = 1; k <= N; ++k) {
        const double half = k - 0.5;
        num *= (r2 + half * half) * (r2 + static_cast<double>(k) * k);
    }
    const cplx den = std::pow(r2 + 100.0 * N * N, 2 * N);
    return num / den;
}

inline cplx h_weight(cplx r, const WeightSpec& w) {
    const cplx i(0.0, 1.0);
    const double lx = std::log(w.X);
    const cplx g1 = (r - w.K) / w.G;
    const cplx g2 = (r + w.K) / w.G;
    return q_N(r, w.N) *
           (std::exp(i * r * lx - g1 * g1) + std::exp(-i * r * lx - g2 * g2));
}

namespace detail {

inline void check_weight_box(const WeightSpec& w) {
    if (w.K <= 0 || w.G <= 0 || w.X < 1.0 || w.N < 1)
        throw std::domain_error("weight spec invalid");
    if (w.K > 20.0 || w.G > 4.0)
        throw std::domain_error("weight too wide: cosh(pi r) growth exceeds double range");
}

inline double weight_radius(const WeightSpec& w) { return w.K + 8.5 * w.G; }

}  // namespace detail

/// int x^n exp(-p^2 x^2 + q x) dx over the real line, closed form.
/// n = 0: (sqrt(pi)/p) exp(q^2/4p^2) for Re(p^2) > 0; n >= 1 reduces to the
/// p = 1 case, whose polynomial factor P_n comes from differentiating the
/// n = 0 form in q (Hermite-type recursion P_{k+1} = P_k' + (q/2) P_k).
inline cplx gaussian_integral_oracle(cplx p, cplx q, int n) {
    if ((p * p).real() <= 0.0)
        throw std::domain_error("gaussian_integral_oracle: Re(p^2) <= 0");
    if (n < 0) throw std::domain_error("gaussian_integral_oracle: n < 0");
    const cplx qp = q / p;
    // P_n(q) coefficients, degree n, P_0 = sqrt(pi)
    std::vector<cplx> P = {std::sqrt(std::numbers::pi)};
    for (int k = 0; k < n; ++k) {
        std::vector<cplx> nxt(P.size() + 1, 0.0);
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (j + 1 < P.size()) nxt[j] += (static_cast<double>(j) + 1.0) * P[j + 1];  // P'
            nxt[j + 1] += 0.5 * P[j];                                                   // (q/2) P
        }
        P = std::move(nxt);
    }
    cplx poly = 0.0;
    for (std::size_t j = P.size(); j-- > 0;) poly = poly * qp + P[j];
    return std::pow(p, -(n + 1.0)) * poly * std::exp(qp * qp / 4.0);
}

/// Direct quadrature companion of the closed form above.
inline cplx gaussian_integral_quad(cplx p, cplx q, int n) {
    if ((p * p).real() <= 0.0)
        throw std::domain_error("gaussian_integral_quad: Re(p^2) <= 0");
    const double decay = (p * p).real();
    const double drift = std::abs(q) / decay;
    const double L = drift + std::sqrt(50.0 / decay) + 5.0;
    return integrate_gl(
        [&](double x) {
            return std::pow(cplx(x, 0.0), static_cast<double>(n)) *
                   std::exp(-p * p * x * x + q * x);
        },
        -L, L, std::max(16, static_cast<int>(L * (2.0 + std::abs(q.imag())))));
}

/// psi(m, tau; z) = (1/2) int r^2 h(r) cosh(pi r) J_{2m}(2z sin tau)
///                  K_{2ir}(2z cos tau) dr  (J factor is r-free).
inline double psi_weight(int m, double tau, double z, const WeightSpec& w) {
    detail::check_weight_box(w);
    if (m < 0 || tau <= 0 || tau >= 0.5 * std::numbers::pi || z <= 0)
        throw std::domain_error("psi_weight: bad arguments");
    const double R = detail::weight_radius(w);
    const double xk = 2.0 * z * std::cos(tau);
    const double J = bessel_J(2 * m, 2.0 * z * std::sin(tau));
    // K_{2ir}(x) oscillates in r with rate ~ |log(x/2)| + 1
    const int panels = std::max(24, static_cast<int>(R * (std::abs(std::log(0.5 * xk)) + 2.0) / 2.5));
    const double integral = integrate_gl(
        [&](double r) {
            return r * r * (h_weight(r, w) * std::cosh(std::numbers::pi * r)).real() *
                   bessel_K_imag(r, xk);
        },
        0.0, R, std::min(panels, 320));
    return J * integral;
}

namespace detail {

/// Contour for the h* integrals: the real line, shifted down when the
/// Gamma-factor pole family r = i(k + sigma'), k >= 0, touches or crosses
/// it.  Crossed poles normally need residue corrections; they are residue-
/// free exactly when sigma' is real half-odd (the coth factor vanishes on
/// them), which covers the printed vanishing lines.
inline double hstar_contour_depth(std::complex<double> sigma_prime) {
    const double h0 = sigma_prime.real();
    if (h0 > 0.05) return 0.0;
    const double frac = h0 - std::floor(h0);
    const bool residue_free =
        std::abs(sigma_prime.imag()) < 1e-9 && std::abs(frac - 0.5) < 1e-9;
    if (residue_free) return 0.25;
    if (h0 > -1e-9) return 0.5;
    throw std::domain_error("h_star: s beyond the supported contour region");
}

template <typename F>
cplx integrate_shifted_line(F&& f, double R, double depth, int panels) {
    return integrate_gl([&](double x) { return f(cplx(x, -depth)); }, -R, R, panels);
}

}  // namespace detail

/// h*(s) = int r^2 h(r) coth(pi r) Gamma(s+ir)/Gamma(1-s+ir) dr along the
/// (possibly shifted) contour; vanishes at s = +-i/2 for even h.
inline cplx h_star_simple(cplx s, const WeightSpec& w) {
    detail::check_weight_box(w);
    const double R = detail::weight_radius(w);
    const double depth = detail::hstar_contour_depth(s);
    const int panels = std::max(32, static_cast<int>(R * (2.0 + std::abs(std::log(w.X)))));
    return detail::integrate_shifted_line(
        [&](cplx r) {
            const cplx i(0.0, 1.0);
            if (std::abs(r) < 1e-14) return cplx(0.0);
            const cplx cth = 1.0 / std::tanh(std::numbers::pi * r);
            return r * r * h_weight(r, w) * cth * gamma_ratio(s + i * r, 1.0 - s + i * r);
        },
        R, depth, panels);
}

/// h*(m, tau; s): the hypergeometric-weighted transform behind the Mellin
/// representation of psi.  The angular prefactor is sin^{2m} tau / 2^4: the
/// Bessel-Mellin table entry fixes it (verified against direct quadrature).
inline cplx h_star(int m, double tau, cplx s, const WeightSpec& w) {
    detail::check_weight_box(w);
    if (m < 0 || tau <= 0 || tau >= 0.5 * std::numbers::pi)
        throw std::domain_error("h_star: bad arguments");
    const double depth =
        detail::hstar_contour_depth(static_cast<double>(m) + 0.5 * s);
    const double R = detail::weight_radius(w);
    const double y = std::tan(tau) * std::tan(tau);
    const cplx i(0.0, 1.0);
    const int panels = std::max(32, static_cast<int>(R * (2.0 + std::abs(std::log(w.X)))));
    const cplx integral = detail::integrate_shifted_line(
        [&](cplx r) {
            if (std::abs(r) < 1e-14) return cplx(0.0);
            const cplx a = static_cast<double>(m) + 0.5 * s + i * r;
            const cplx b = static_cast<double>(m) + 0.5 * s - i * r;
            const cplx cth = 1.0 / std::tanh(std::numbers::pi * r);
            return r * r * h_weight(r, w) * cth * gamma_ratio(a, 1.0 - static_cast<double>(m) - 0.5 * s + i * r) *
                   hyp2f1(a, b, 2.0 * m + 1.0, -y);
        },
        R, depth, panels);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double ang = std::pow(std::sin(tau), 2 * m) / std::pow(std::cos(tau), 2 * m);
    return 2.0 * std::numbers::pi * i * sign * ang / 16.0 / gamma_c(2.0 * m + 1.0) * integral;
}

/// Mellin transform of J_{2m}(2z sin tau) K_{2ir}(2z cos tau) in z.
inline cplx g_mellin(int m, double r, double tau, cplx s) {
    const cplx i(0.0, 1.0);
    const cplx a = static_cast<double>(m) + 0.5 * s + i * r;
    const cplx b = static_cast<double>(m) + 0.5 * s - i * r;
    const double y = std::tan(tau) * std::tan(tau);
    const double pref = std::pow(std::sin(tau), 2 * m) / 4.0;
    return pref * std::exp(-(2.0 * m + s) * std::log(std::cos(tau))) *
           std::exp(lgamma_c(a) + lgamma_c(b) - lgamma_c(cplx(2.0 * m + 1.0))) *
           hyp2f1(a, b, 2.0 * m + 1.0, -y);
}

/// Mellin transform of psi(m, tau; .) at w_s via the closed form.
inline cplx psi_mellin_closed(int m, double tau, cplx w_s, const WeightSpec& w) {
    detail::check_weight_box(w);
    const double R = detail::weight_radius(w);
    const int panels = std::max(32, static_cast<int>(R * (2.0 + std::abs(std::log(w.X)))));
    return 0.5 * integrate_gl(
                     [&](double r) {
                         return h_weight(r, w) * std::cosh(std::numbers::pi * r) * (r * r) *
                                g_mellin(m, r, tau, w_s);
                     },
                     -R, R, panels);
}

/// Same transform by direct z-quadrature of psi.
inline cplx psi_mellin_direct(int m, double tau, cplx w_s, const WeightSpec& w) {
    const double zmax = 40.0 / std::cos(tau);
    auto f = [&](double z) {
        return psi_weight(m, tau, z, w) * std::exp((w_s - 1.0) * std::log(z));
    };
    cplx head = integrate_tanh_sinh(f, 0.0, 1.0, 1e-11, 8);
    cplx mid = integrate_gl(f, 1.0, 8.0, 12);
    cplx tail = integrate_gl(f, 8.0, zmax, 24);
    return head + mid + tail;
}

/// Reconstructs psi by Mellin inversion along Re(w) = a.
inline double psi_from_mellin_inversion(int m, double tau, double z, const WeightSpec& w,
                                        double a = -0.5, double tmax = 40.0) {
    const double lzc = std::log(z * std::cos(tau));
    const cplx val = integrate_gl(
        [&](double t) {
            const cplx s(a, t);
            return h_star(m, tau, s, w) / std::cos(0.5 * std::numbers::pi * s) *
                   std::exp(-s * lzc);
        },
        -tmax, tmax, std::max(48, static_cast<int>(tmax * (1.0 + std::abs(lzc)) / 2.0)));
    return (val / (2.0 * std::numbers::pi)).real();
}

/// The quantities c_pm, x_pm entering the shifted-argument hypergeometric
/// representations.
struct XPlusMinus {
    GaussianInt n;
    double tau;
    double c_plus, c_minus;
    double x_plus, x_minus;
};

inline XPlusMinus x_pm(GaussianInt n, double tau) {
    if (n.is_zero() || tau <= 0 || tau >= 0.5 * std::numbers::pi)
        throw std::domain_error("x_pm: need n != 0 and tau in (0, pi/2)");
    const double an = std::abs(n.to_complex());
    const double costh = std::cos(std::arg(n.to_complex()));
    const double st = std::sin(tau), ct = std::cos(tau);
    auto c_of = [&](double sign) {
        return std::sqrt(1.0 + sign * 4.0 * st * costh / an + 4.0 * st * st / (an * an));
    };
    const double cp = c_of(1.0), cm = c_of(-1.0);
    auto x_of = [&](double c) { return (an * c) * (an * c) / (4.0 * ct * ct); };
    return {n, tau, cp, cm, x_of(cp), x_of(cm)};
}

/// I(n, tau, s) by either hypergeometric representation; both must agree
/// wherever their preconditions overlap.
inline cplx I_weight(GaussianInt n, double tau, cplx s, const WeightSpec& w, int rep) {
    detail::check_weight_box(w);
    if (s.real() >= 1.0) throw std::domain_error("I_weight: need Re(s) < 1");
    const XPlusMinus xv = x_pm(n, tau);
    const double R = detail::weight_radius(w);
    const double ct = std::cos(tau);
    const cplx i(0.0, 1.0);

    if (rep == 1) {
        if (xv.x_plus > 50.0 || xv.x_minus > 50.0)
            throw std::domain_error("I_weight rep 1: x_pm > 50 (use rep 2)");
        const cplx pref = 0.25 * std::exp((2.0 * s - 2.0) * std::log(ct)) / 4.0;
        const int panels = std::max(32, static_cast<int>(
                                            R * (4.0 + std::abs(std::log(w.X))) / 2.0));
        return pref * integrate_gl(
                          [&](double r) {
                              const cplx gg = std::exp(lgamma_c(1.0 - s - i * r) +
                                                       lgamma_c(1.0 - s + i * r));
                              return (r * r) * h_weight(r, w) *
                                     std::cosh(std::numbers::pi * r) * gg *
                                     (hyp2f1(1.0 - s + i * r, 1.0 - s - i * r, 1.0, -xv.x_plus) +
                                      hyp2f1(1.0 - s + i * r, 1.0 - s - i * r, 1.0, -xv.x_minus));
                          },
                          -R, R, panels);
    }
    if (rep == 2) {
        if (xv.x_plus < 1e-12 || xv.x_minus < 1e-12)
            throw std::domain_error("I_weight rep 2: x_pm vanishes (n in {0,+-1,+-2})");
        cplx tot = 0.0;
        for (double x : {xv.x_plus, xv.x_minus}) {
            const double lx = std::log(x);
            const int panels =
                std::max(32, static_cast<int>(R * (2.0 + std::abs(lx) + std::abs(std::log(w.X))) / 2.0));
            const cplx integral = integrate_gl(
                [&](double r) {
                    if (std::abs(r) < 1e-13) return cplx(0.0);
                    const cplx a = 1.0 - s + i * r;
                    const cplx gg = std::exp(lgamma_c(a) + lgamma_c(-2.0 * i * r) -
                                             lgamma_c(s - i * r) - i * r * lx);
                    return (r * r) * h_weight(r, w) * std::cosh(std::numbers::pi * r) * gg *
                           hyp2f1(a, a, 1.0 + 2.0 * i * r, -1.0 / x);
                },
                -R, R, panels);
            tot += integral / (8.0 * std::exp((1.0 - s) * std::log(x * ct * ct)));
        }
        return tot;
    }
    throw std::domain_error("I_weight: rep must be 1 or 2");
}

/// I(0, tau, s) through the h* transform.
inline cplx I0_weight(double tau, cplx s, const WeightSpec& w) {
    const double ct = std::cos(tau);
    return -h_star(0, tau, 2.0 - 2.0 * s, w) /
           (2.0 * std::exp((2.0 - 2.0 * s) * std::log(ct)) * std::cos(std::numbers::pi * s));
}

/// I(0, tau, s) by the direct Gamma-pair quadrature; cross-checks I0_weight.
inline cplx I0_direct(double tau, cplx s, const WeightSpec& w) {
    detail::check_weight_box(w);
    const double R = detail::weight_radius(w);
    const double y = std::tan(tau) * std::tan(tau);
    const cplx i(0.0, 1.0);
    const int panels = std::max(32, static_cast<int>(R * (2.0 + std::abs(std::log(w.X)))));
    const cplx integral = integrate_gl(
        [&](double r) {
            const cplx a = 1.0 - s + i * r;
            const cplx b = 1.0 - s - i * r;
            return (r * r) * h_weight(r, w) * std::cosh(std::numbers::pi * r) *
                   std::exp(lgamma_c(a) + lgamma_c(b)) * hyp2f1(a, b, 1.0, -y);
        },
        -R, R, panels);
    return integral / (16.0 * std::exp((2.0 - 2.0 * s) * std::log(std::cos(tau))));
}

}  // namespace picardlab
