#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace picardlab {

/// Exact element of Z[i].  Coordinates are 64-bit; every routine in this
/// library operates at norms <= ~10^7, far below overflow.
struct GaussianInt {
    long long re = 0;
    long long im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(long long r, long long i = 0) : re(r), im(i) {}

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    constexpr GaussianInt operator-() const { return {-re, -im}; }
    friend constexpr bool operator==(GaussianInt a, GaussianInt b) = default;

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_unit() const { return norm() == 1; }

    constexpr GaussianInt conj() const { return {re, -im}; }
    constexpr long long norm() const { return re * re + im * im; }

    /// Multiplication by i (counterclockwise quarter turn).
    constexpr GaussianInt times_i() const { return {-im, re}; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    std::string str() const {
        if (im == 0) return std::to_string(re);
        std::string s;
        if (re != 0) s = std::to_string(re) + (im > 0 ? "+" : "");
        if (im == 1) s += "i";
        else if (im == -1) s += "-i";
        else s += std::to_string(im) + "i";
        return s;
    }
};

/// Ordering used everywhere results are sorted: by (norm, re, im).
inline bool norm_less(GaussianInt a, GaussianInt b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

inline constexpr GaussianInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

/// Canonical associate: rotate by units into {re>0, im>=0}; 0 stays 0.
inline GaussianInt canonical(GaussianInt z) {
    if (z.is_zero()) return z;
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = z.times_i();
    }
    throw std::logic_error("canonical: unreachable");
}

/// Rounded quotient of integers p/q (q > 0), halves toward -infinity.
inline long long round_half_down(long long p, long long q) {
    // ceil(p/q - 1/2) = floor((2p + q - 1)/(2q))
    long long num = 2 * p + q - 1;
    long long den = 2 * q;
    long long f = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --f;
    return f;
}

struct GDivMod {
    GaussianInt quot;
    GaussianInt rem;
};

/// Division with nearest-integer rounding (halves toward -infinity in each
/// coordinate); |rem| <= |b|/sqrt(2) < |b|, which drives the Euclidean gcd.
inline GDivMod divmod_rounded(GaussianInt a, GaussianInt b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
    const long long nb = b.norm();
    const GaussianInt p = a * b.conj();
    GaussianInt q{round_half_down(p.re, nb), round_half_down(p.im, nb)};
    return {q, a - b * q};
}

/// Canonical reduction of z mod q: z - q*round(z/q).
inline GaussianInt mod_reduce(GaussianInt z, GaussianInt q) {
    return divmod_rounded(z, q).rem;
}

inline bool divides(GaussianInt d, GaussianInt z) {
    if (d.is_zero()) return z.is_zero();
    // d | z  iff  norm(d) divides both coordinates of z * conj(d)
    const GaussianInt p = z * d.conj();
    const long long nd = d.norm();
    return p.re % nd == 0 && p.im % nd == 0;
}

/// Canonical-associate gcd via the Euclidean algorithm.
inline GaussianInt gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd undefined for (0, 0)");
    while (!b.is_zero()) {
        GaussianInt r = divmod_rounded(a, b).rem;
        a = b;
        b = r;
    }
    return canonical(a);
}

inline GaussianInt gcd(GaussianInt a, GaussianInt b, GaussianInt c) {
    if (a.is_zero() && b.is_zero()) return gcd(c, GaussianInt{0});
    return gcd(gcd(a, b), c);
}

struct PrimePower {
    GaussianInt prime;  // canonical associate
    int exponent;
};

/// unit * prod(prime^exponent) reconstructs the input exactly.
struct Factorization {
    GaussianInt unit;
    std::vector<PrimePower> factors;

    GaussianInt reconstruct() const {
        GaussianInt v = unit;
        for (const auto& [p, e] : factors)
            for (int k = 0; k < e; ++k) v = v * p;
        return v;
    }
};

namespace detail {

inline std::vector<std::pair<long long, int>> factor_rational(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        if (e) out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// Splits p = 1 (mod 4) as a^2 + b^2 by direct search.
inline GaussianInt split_prime(long long p) {
    for (long long a = 1; a * a <= p; ++a) {
        long long b2 = p - a * a;
        long long b = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(b2))));
        while (b * b > b2) --b;
        if (b * b == b2) return canonical({a, b});
    }
    throw std::logic_error("split_prime: no representation found");
}

}  // namespace detail

/// Complete Gaussian factorization: 2 ramifies through 1+i, p=1 (mod 4)
/// splits, p=3 (mod 4) stays inert.
inline Factorization factor(GaussianInt n) {
    if (n.is_zero()) throw std::domain_error("factor(0) undefined");
    Factorization f;
    GaussianInt m = n;
    const long long N = n.norm();
    for (auto [p, e] : detail::factor_rational(N)) {
        std::vector<GaussianInt> candidates;
        if (p == 2) {
            candidates = {GaussianInt{1, 1}};
        } else if (p % 4 == 3) {
            candidates = {GaussianInt{p, 0}};
        } else {
            GaussianInt pi = detail::split_prime(p);
            candidates = {pi, canonical(pi.conj())};
        }
        for (GaussianInt pi : candidates) {
            int cnt = 0;
            while (divides(pi, m)) {
                m = divmod_rounded(m, pi).quot;
                ++cnt;
            }
            if (cnt) f.factors.push_back({pi, cnt});
        }
    }
    if (!m.is_unit()) throw std::logic_error("factor: leftover non-unit");
    f.unit = m;
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return norm_less(a.prime, b.prime); });
    return f;
}

/// All canonical-associate divisors of n (one per associate class), sorted.
inline std::vector<GaussianInt> divisors_canonical(GaussianInt n) {
    Factorization f = factor(n);
    std::vector<GaussianInt> divs = {GaussianInt{1, 0}};
    for (const auto& [p, e] : f.factors) {
        std::vector<GaussianInt> next;
        next.reserve(divs.size() * (e + 1));
        for (GaussianInt d : divs) {
            GaussianInt cur = d;
            next.push_back(canonical(cur));
            for (int k = 1; k <= e; ++k) {
                cur = cur * p;
                next.push_back(canonical(cur));
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), norm_less);
    return divs;
}

/// Divisor sum (1/4) sum_{d|n} |d|^{2 alpha}, the sum running over all
/// divisors including associates.  Collapses to one term per associate
/// class since |d| is class-invariant.
inline std::complex<double> sigma_alpha(GaussianInt n, std::complex<double> alpha) {
    if (n.is_zero()) throw std::domain_error("sigma_alpha(0) undefined");
    std::complex<double> tot = 0.0;
    for (GaussianInt d : divisors_canonical(n))
        tot += std::exp(alpha * std::log(static_cast<double>(d.norm())));
    return tot;
}

/// sigma_0: number of divisors up to units.
inline long long sigma0(GaussianInt n) {
    if (n.is_zero()) throw std::domain_error("sigma0(0) undefined");
    long long cnt = 1;
    for (const auto& [p, e] : factor(n).factors) cnt *= (e + 1);
    return cnt;
}

/// Moebius function: 0 on square-divisible, else (-1)^{#prime classes}.
inline int mobius(GaussianInt n) {
    if (n.is_zero()) throw std::domain_error("mobius(0) undefined");
    int sign = 1;
    for (const auto& [p, e] : factor(n).factors) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

/// The full residue system mod q: exactly norm(q) canonical residues,
/// sorted by (norm, re, im).
inline std::vector<GaussianInt> residue_system(GaussianInt q) {
    if (q.is_zero()) throw std::domain_error("residue_system(0) undefined");
    const long long n = q.norm();
    // Z[i]/(q) = Z/(n/g) x Z/g with g = gcd(re, im): {x + y i} below is a
    // transversal; reduce each to its canonical representative.
    long long g = std::abs(q.re);
    long long h = std::abs(q.im);
    while (h) { long long t = g % h; g = h; h = t; }
    if (g == 0) g = std::abs(q.im);
    const long long A = n / g;
    std::vector<GaussianInt> out;
    out.reserve(n);
    for (long long x = 0; x < A; ++x)
        for (long long y = 0; y < g; ++y)
            out.push_back(mod_reduce({x, y}, q));
    std::sort(out.begin(), out.end(), norm_less);
    if (static_cast<long long>(out.size()) != n ||
        std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("residue_system: bad transversal");
    return out;
}

/// Inverse of a mod q in the canonical residue system; requires (a,q) unit.
inline GaussianInt mod_inverse(GaussianInt a, GaussianInt q) {
    if (q.is_zero()) throw std::domain_error("mod_inverse: q = 0");
    // extended Euclid: track u with u*a = r (mod q)
    GaussianInt r0 = mod_reduce(a, q), r1 = q;
    GaussianInt u0{1, 0}, u1{0, 0};
    while (!r1.is_zero()) {
        auto [qt, rem] = divmod_rounded(r0, r1);
        GaussianInt u2 = u0 - qt * u1;
        r0 = r1; r1 = rem;
        u0 = u1; u1 = u2;
    }
    if (!r0.is_unit()) throw std::domain_error("mod_inverse: not invertible");
    // r0 = u0 * a (mod q) is a unit; divide it out
    GaussianInt inv_unit = r0.conj();  // unit inverse: conj works for all four units
    return mod_reduce(u0 * inv_unit, q);
}

/// All nonzero z with norm(z) <= Nmax, sorted by (norm, re, im).
inline std::vector<GaussianInt> enumerate_by_norm(long long Nmax) {
    std::vector<GaussianInt> out;
    if (Nmax < 1) return out;
    const long long B = static_cast<long long>(std::sqrt(static_cast<double>(Nmax))) + 1;
    for (long long a = -B; a <= B; ++a)
        for (long long b = -B; b <= B; ++b) {
            if (a == 0 && b == 0) continue;
            if (a * a + b * b <= Nmax) out.push_back({a, b});
        }
    std::sort(out.begin(), out.end(), norm_less);
    return out;
}

/// Canonical (first-quadrant) elements with 0 < norm <= Nmax.
inline std::vector<GaussianInt> enumerate_canonical(long long Nmax) {
    std::vector<GaussianInt> out;
    for (long long a = 1; a * a <= Nmax; ++a)
        for (long long b = 0; a * a + b * b <= Nmax; ++b)
            out.push_back({a, b});
    std::sort(out.begin(), out.end(), norm_less);
    return out;
}

}  // namespace picardlab
