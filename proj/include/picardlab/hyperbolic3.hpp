#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>

#include "picardlab/gaussian_int.hpp"

namespace picardlab {

/// Point (z, r) of the upper half-space, r > 0.
struct Point3 {
    std::complex<double> z;
    double r;
};

/// Element of SL(2, Z[i]) stored modulo +-I via a lexical sign rule:
/// the first nonzero entry of (a, b, c, d) satisfies re > 0, or re = 0 and
/// im > 0.
struct Matrix2 {
    GaussianInt a, b, c, d;

    Matrix2(GaussianInt a_, GaussianInt b_, GaussianInt c_, GaussianInt d_)
        : a(a_), b(b_), c(c_), d(d_) {
        if (!(a * d - b * c == GaussianInt{1, 0}))
            throw std::domain_error("Matrix2: determinant must be 1");
        canonicalize_sign();
    }

    GaussianInt trace() const { return a + d; }
    Matrix2 inverse() const { return {d, -b, -c, a}; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2& x, const Matrix2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    bool is_identity() const {
        return a == GaussianInt{1, 0} && d == GaussianInt{1, 0} && b.is_zero() && c.is_zero();
    }

  private:
    void canonicalize_sign() {
        for (GaussianInt v : {a, b, c, d}) {
            if (v.is_zero()) continue;
            if (v.re < 0 || (v.re == 0 && v.im < 0)) {
                a = -a; b = -b; c = -c; d = -d;
            }
            return;
        }
    }
};

/// Lexical order on canonical matrices (used for class representatives).
inline bool lex_less(const Matrix2& x, const Matrix2& y) {
    auto key = [](const Matrix2& m) {
        return std::array<long long, 8>{m.a.re, m.a.im, m.b.re, m.b.im,
                                        m.c.re, m.c.im, m.d.re, m.d.im};
    };
    return key(x) < key(y);
}

/// The Moebius action on H^3 for a complex 2x2 matrix (det nonzero):
///   z* = ((az+b) conj(cz+d) + a conj(c) r^2) / D,  r* = r |det| / D,
///   D = |cz+d|^2 + |c|^2 r^2.
inline Point3 act(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                  std::complex<double> d, const Point3& P) {
    const std::complex<double> num = a * P.z + b;
    const std::complex<double> den = c * P.z + d;
    const double D = std::norm(den) + std::norm(c) * P.r * P.r;
    const std::complex<double> zs = (num * std::conj(den) + a * std::conj(c) * P.r * P.r) / D;
    const double rs = P.r * std::abs(a * d - b * c) / D;
    return {zs, rs};
}

inline Point3 act(const Matrix2& M, const Point3& P) {
    return act(M.a.to_complex(), M.b.to_complex(), M.c.to_complex(), M.d.to_complex(), P);
}

/// Hyperbolic distance: cosh d = (|z-z'|^2 + r^2 + r'^2) / (2 r r').
inline double dist(const Point3& P, const Point3& Q) {
    const double num = std::norm(P.z - Q.z) + P.r * P.r + Q.r * Q.r;
    const double ch = num / (2.0 * P.r * Q.r);
    return std::acosh(std::max(1.0, ch));
}

enum class ElementKind { Identity, Parabolic, Elliptic, Hyperbolic, Loxodromic };

struct Classification {
    ElementKind kind;
};

/// Trace classification: parabolic |tr| = 2 with tr real, hyperbolic
/// |tr| > 2 with tr real, elliptic |tr| < 2 with tr real, loxodromic
/// otherwise.
inline Classification classify(const Matrix2& M) {
    if (M.is_identity()) return {ElementKind::Identity};
    const GaussianInt t = M.trace();
    if (t.im == 0) {
        const long long at = std::abs(t.re);
        if (at == 2) return {ElementKind::Parabolic};
        if (at > 2) return {ElementKind::Hyperbolic};
        return {ElementKind::Elliptic};
    }
    return {ElementKind::Loxodromic};
}

inline bool is_translation_type(const Classification& c) {
    return c.kind == ElementKind::Hyperbolic || c.kind == ElementKind::Loxodromic;
}

struct Multiplier {
    std::complex<double> a_T;  // eigenvalue with |a| > 1
    std::complex<double> K_T;  // a^2
    double N_T;                // |a|^2 > 1
};

/// Eigenvalue data: a(T) is the root of x^2 - tr x + 1 with |a| > 1.
inline Multiplier multiplier(const Matrix2& M) {
    if (!is_translation_type(classify(M)))
        throw std::domain_error("multiplier: element has no translation length");
    const std::complex<double> t = M.trace().to_complex();
    const std::complex<double> disc = std::sqrt(t * t - 4.0);
    std::complex<double> lam = 0.5 * (t + disc);
    if (std::abs(lam) < 1.0) lam = 0.5 * (t - disc);
    return {lam, lam * lam, std::norm(lam)};
}

/// Boundary fixed points plus a sample point on the connecting geodesic.
struct Axis {
    std::complex<double> fixed1;
    std::complex<double> fixed2;
    bool fixed2_at_infinity;
    Point3 sample;
};

inline Axis axis(const Matrix2& M) {
    if (!is_translation_type(classify(M)))
        throw std::domain_error("axis: element has no axis");
    const std::complex<double> a = M.a.to_complex(), b = M.b.to_complex();
    const std::complex<double> c = M.c.to_complex(), d = M.d.to_complex();
    if (M.c.is_zero()) {
        // fixed points b/(d-a) and infinity; the axis is the vertical line
        const std::complex<double> z0 = b / (d - a);
        return {z0, 0.0, true, Point3{z0, 1.0}};
    }
    const std::complex<double> disc = std::sqrt((d - a) * (d - a) + 4.0 * b * c);
    const std::complex<double> z1 = ((a - d) + disc) / (2.0 * c);
    const std::complex<double> z2 = ((a - d) - disc) / (2.0 * c);
    const Point3 apex{0.5 * (z1 + z2), 0.5 * std::abs(z1 - z2)};
    return {z1, z2, false, apex};
}

/// Hyperbolic distance from P to the geodesic with the given endpoints:
/// send the axis to the vertical line over 0 and use
/// d(P, axis) = acosh sqrt(1 + |z/r|^2).
inline double dist_to_axis(const Axis& ax, const Point3& P) {
    Point3 Q = ax.fixed2_at_infinity
                   ? act(1.0, -ax.fixed1, 0.0, 1.0, P)
                   : act(1.0, -ax.fixed1, 1.0, -ax.fixed2, P);
    const double t = std::abs(Q.z) / Q.r;
    return std::acosh(std::sqrt(1.0 + t * t));
}

struct Displacement {
    double d;
    double logN;
};

/// d(P, MP) together with log N(M); d >= log N always, equality on-axis.
inline Displacement displacement_check(const Matrix2& M, const Point3& P) {
    const double d = dist(P, act(M, P));
    const double logN = std::log(multiplier(M).N_T);
    return {d, logN};
}

}  // namespace picardlab
