#pragma once

#include <complex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "picardlab/congruence.hpp"
#include "picardlab/gaussian_int.hpp"
#include "picardlab/lerch.hpp"
#include "picardlab/zeta.hpp"

namespace picardlab {

namespace detail {

inline GaussianInt pow_mod(GaussianInt b, long long e, GaussianInt m) {
    GaussianInt r{1, 0};
    b = mod_reduce(b, m);
    while (e > 0) {
        if (e & 1) r = mod_reduce(r * b, m);
        b = mod_reduce(b * b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_odd(GaussianInt z) { return !divides(GaussianInt{1, 1}, z); }

/// Quadratic character of D at the even prime 1+i.  For odd D:
/// 0 unless D = 1 (mod 4); then +1 when D is a square modulo (1+i)^5
/// (a local square), -1 otherwise (locally unramified, non-split).
inline int chi_even_prime(GaussianInt D) {
    if (!is_odd(D)) return 0;
    if (!divides(GaussianInt{4, 0}, D - GaussianInt{1, 0})) return 0;
    const GaussianInt p5{-4, -4};  // (1+i)^5
    for (GaussianInt x : residue_system(p5)) {
        if (!is_odd(x)) continue;
        if (divides(p5, x * x - D)) return 1;
    }
    return -1;
}

/// Euler-criterion value of the quadratic residue symbol (D / pi) for an
/// odd Gaussian prime pi not dividing D.
inline int chi_odd_prime(GaussianInt D, GaussianInt pi) {
    const long long Np = pi.norm();
    GaussianInt r = pow_mod(D, (Np - 1) / 2, pi);
    if (divides(pi, r - GaussianInt{1, 0})) return 1;
    if (divides(pi, r + GaussianInt{1, 0})) return -1;
    throw std::logic_error("chi_odd_prime: Euler criterion returned a non-unit");
}

}  // namespace detail

/// Kronecker-type quadratic character chi_D(n), completely multiplicative
/// and associate-invariant (units map to 1).  Vanishes on primes dividing D;
/// at the ramified prime 1+i the local-square rule above applies, which is
/// what makes the T_l L(s,chi_D) factorization close numerically.
inline int chi_D(GaussianInt D, GaussianInt n) {
    if (n.is_zero()) throw std::domain_error("chi_D: n = 0");
    int val = 1;
    for (const auto& [p, e] : factor(n).factors) {
        int c;
        if (p.norm() % 2 == 0) c = detail::chi_even_prime(D);
        else if (divides(p, D)) c = 0;
        else c = detail::chi_odd_prime(D, p);
        if (c == 0) return 0;
        if (c == -1 && (e & 1)) val = -val;
    }
    return val;
}

/// Truncated L(s, chi_D) = (1/4) sum_{n != 0} chi_D(n) |n|^{-2s}.
inline std::complex<double> L_chi(std::complex<double> s, GaussianInt D, long long nmax_norm) {
    std::complex<double> tot = 0.0;
    for (GaussianInt n : enumerate_canonical(nmax_norm)) {
        const int c = chi_D(D, n);
        if (c != 0)
            tot += static_cast<double>(c) *
                   std::exp(-s * std::log(static_cast<double>(n.norm())));
    }
    return tot;
}

/// T_l^{(D)}(s) = (1/4) sum_{d | l} chi_D(d) mu(d) |d|^{-2s} sigma_{1-2s}(l/d).
inline std::complex<double> T_l_D(std::complex<double> s, GaussianInt l, GaussianInt D) {
    if (l.is_zero()) throw std::domain_error("T_l_D: l = 0");
    std::complex<double> tot = 0.0;
    for (GaussianInt d : divisors_canonical(l)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const int chi = chi_D(D, d);
        if (chi == 0) continue;
        const GaussianInt ld = divmod_rounded(l, d).quot;
        tot += static_cast<double>(mu * chi) *
               std::exp(-s * std::log(static_cast<double>(d.norm()))) *
               sigma_alpha(ld, 1.0 - 2.0 * s);
    }
    return tot;  // the 1/4 and the 4 associate classes cancel
}

/// Truncated script-L:  (zeta_k(2s)/zeta_k(s)) sum_{q != 0, norm <= qmax}
/// rho_q(n) |q|^{-2s}.
inline std::complex<double> script_L(std::complex<double> s, GaussianInt n, long long qmax_norm) {
    std::complex<double> series = 0.0;
    for (GaussianInt q : enumerate_canonical(qmax_norm)) {
        const long long r = rho(q, n).count;
        if (r != 0)
            series += static_cast<double>(r) *
                      std::exp(-s * std::log(static_cast<double>(q.norm())));
    }
    return dedekind_zeta(2.0 * s) / dedekind_zeta(s) * 4.0 * series;
}

/// |script_L(s;n) - 4 T_1^{(n)}(s) L(s,chi_n)| for n odd, squarefree,
/// n = 1 (mod 4), where (D, l) = (n, 1) is forced.
inline double decomposition_check(std::complex<double> s, GaussianInt n,
                                  long long qmax_norm = 2000) {
    if (n.is_zero() || !detail::is_odd(n) || mobius(n) == 0 ||
        !divides(GaussianInt{4, 0}, n - GaussianInt{1, 0}))
        throw std::domain_error("decomposition_check: D-extraction not supported");
    const std::complex<double> lhs = script_L(s, n, qmax_norm);
    const std::complex<double> rhs =
        4.0 * T_l_D(s, GaussianInt{1, 0}, n) * L_chi(s, n, qmax_norm);
    return std::abs(lhs - rhs);
}

/// Residual of the divisor-sum identity
///   sum_{n != 0} sigma_{ir}(n)^2 |n|^{-2s-2ir}
///     = 4 zeta_k(s+ir) zeta_k(s)^2 zeta_k(s-ir) / zeta_k(2s)
/// with the left side truncated at lattice norm <= K.
inline double sigma_series_check(std::complex<double> s, double r, long long K) {
    const auto pts = enumerate_canonical(K);
    const long long side = static_cast<long long>(std::sqrt(static_cast<double>(K))) + 2;
    std::vector<int> index(side * side, -1);
    auto key = [side](long long a, long long b) { return a * side + b; };
    for (std::size_t i = 0; i < pts.size(); ++i)
        index[key(pts[i].re, pts[i].im)] = static_cast<int>(i);

    // sigma_{ir}(n) = sum over canonical divisors d of norm(d)^{ir},
    // accumulated by sieving multiples of each canonical d.
    std::vector<std::complex<double>> sig(pts.size(), 0.0);
    for (const GaussianInt& d : pts) {
        const long long nd = d.norm();
        const double lognd = std::log(static_cast<double>(nd));
        const std::complex<double> w{std::cos(r * lognd), std::sin(r * lognd)};
        const long long lim = K / nd;
        for (long long ea = 1; ea * ea <= lim; ++ea)
            for (long long eb = 0; ea * ea + eb * eb <= lim; ++eb) {
                const GaussianInt m = canonical(d * GaussianInt{ea, eb});
                sig[index[key(m.re, m.im)]] += w;
            }
    }
    std::complex<double> lhs = 0.0;
    const std::complex<double> expo = s + std::complex<double>{0.0, r};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::complex<double> sv = sig[i];
        lhs += 4.0 * sv * sv * std::exp(-expo * std::log(static_cast<double>(pts[i].norm())));
    }
    const std::complex<double> ir{0.0, r};
    const std::complex<double> rhs = 4.0 * dedekind_zeta(s + ir) * dedekind_zeta(s) *
                                     dedekind_zeta(s) * dedekind_zeta(s - ir) /
                                     dedekind_zeta(2.0 * s);
    return std::abs(lhs - rhs);
}

}  // namespace picardlab
