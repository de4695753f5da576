#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "picardlab/gaussian_int.hpp"

namespace picardlab {

/// e[x] = exp(2 pi i Re(x)).
inline std::complex<double> e_bracket(std::complex<double> x) {
    const double t = 2.0 * std::numbers::pi * x.real();
    return {std::cos(t), std::sin(t)};
}

/// Re(u * conj(v)) — the bilinear pairing behind every twisted sum here.
inline double pairing(std::complex<double> u, std::complex<double> v) {
    return u.real() * v.real() + u.imag() * v.imag();
}

/// sum_{a mod q} e[a n / q]; equals norm(q) when q | n and 0 otherwise.
inline std::complex<double> linear_sum(GaussianInt n, GaussianInt q) {
    if (q.is_zero()) throw std::domain_error("linear_sum: q = 0");
    std::complex<double> tot = 0.0;
    const std::complex<double> qc = q.to_complex();
    for (GaussianInt a : residue_system(q)) {
        const std::complex<double> arg = (a * n).to_complex() / qc;
        tot += e_bracket(arg);
    }
    return tot;
}

struct KloostermanResult {
    std::complex<double> value;
    long long modulus_norm;
    double weil_bound;  // |c| sigma_0(c) |(m,n,c)|
};

/// Fixed-modulus evaluator: precomputes the coprime residues a mod c and
/// their inverses once, so panels over (m, n) cost one exponential per term.
///
/// Phase orientation is Re(m a/c) + Re(n a*/c).  The alternative reading
/// Re(m conj(a/c)) gives the conjugated sum S(conj m, conj n; conj c); both
/// coincide for rational arguments, but only this orientation telescopes in
/// twisted_csum for conjugation-asymmetric moduli.
class KloostermanEvaluator {
public:
    explicit KloostermanEvaluator(GaussianInt c) : c_(c) {
        if (c.is_zero()) throw std::domain_error("kloosterman: c = 0");
        cc_ = c.to_complex();
        sigma0_c_ = static_cast<double>(sigma0(c));
        for (GaussianInt a : residue_system(c)) {
            if (!gcd_is_unit(a, c)) continue;
            GaussianInt astar = mod_inverse(a, c);
            pairs_.push_back({a.to_complex() / cc_, astar.to_complex() / cc_});
        }
    }

    KloostermanResult operator()(GaussianInt m, GaussianInt n) const {
        const std::complex<double> mc = m.to_complex();
        const std::complex<double> nc = n.to_complex();
        std::complex<double> tot = 0.0;
        for (const auto& [ac, asc] : pairs_) {
            const double t = 2.0 * std::numbers::pi * ((mc * ac).real() + (nc * asc).real());
            tot += std::complex<double>{std::cos(t), std::sin(t)};
        }
        GaussianInt g = gcd(m, n, c_);
        const double bound = std::sqrt(static_cast<double>(c_.norm())) * sigma0_c_ *
                             std::sqrt(static_cast<double>(g.norm()));
        return {tot, c_.norm(), bound};
    }

    std::size_t coprime_count() const { return pairs_.size(); }

private:
    static bool gcd_is_unit(GaussianInt a, GaussianInt c) {
        if (a.is_zero()) return c.is_unit();
        return gcd(a, c).is_unit();
    }

    GaussianInt c_;
    std::complex<double> cc_;
    double sigma0_c_;
    std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs_;
};

/// S(m,n;c) = sum over a mod c, (a,c)=1 of e[Re(m a/c) + Re(n a*/c)] with
/// aa* = 1 (mod c).
inline KloostermanResult kloosterman(GaussianInt m, GaussianInt n, GaussianInt c) {
    return KloostermanEvaluator(c)(m, n);
}

/// sum_{c mod q} S(c,c;q) e[n conj(c/q)]; equals norm(q) rho_q(conj(n)^2-4).
inline std::complex<double> twisted_csum(GaussianInt n, GaussianInt q) {
    if (q.is_zero()) throw std::domain_error("twisted_csum: q = 0");
    // S(c,c;q) = sum_a e[Re(c (a+a*)/q)], so precompute (a+a*)/q per a.
    std::vector<std::complex<double>> wts;
    const std::complex<double> qc = q.to_complex();
    for (GaussianInt a : residue_system(q)) {
        bool coprime = a.is_zero() ? q.is_unit() : gcd(a, q).is_unit();
        if (!coprime) continue;
        GaussianInt astar = mod_inverse(a, q);
        wts.push_back((a + astar).to_complex() / qc);
    }
    const std::complex<double> nc = n.to_complex();
    std::complex<double> tot = 0.0;
    for (GaussianInt c : residue_system(q)) {
        const std::complex<double> cpos = c.to_complex();
        std::complex<double> S = 0.0;
        for (const auto& w : wts) {
            const double t = 2.0 * std::numbers::pi * (cpos * w).real();
            S += std::complex<double>{std::cos(t), std::sin(t)};
        }
        tot += S * e_bracket(nc * std::conj(cpos / qc));
    }
    return tot;
}

}  // namespace picardlab
