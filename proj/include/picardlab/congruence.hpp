#pragma once

#include "picardlab/gaussian_int.hpp"

namespace picardlab {

struct RhoValue {
    GaussianInt q;
    GaussianInt n;
    long long count;
};

/// rho_q(n) = #{x mod 2q : x^2 = n (mod 4q)} by plain exhaustion over a
/// norm(2q)-element residue system (the {x + yi : 0<=x<N/g, 0<=y<g}
/// transversal, g = gcd of the coordinates of 2q).  This module is the
/// oracle for the L-function and Kloosterman identities, so it stays
/// shortcut-free.
inline RhoValue rho(GaussianInt q, GaussianInt n) {
    if (q.is_zero()) throw std::domain_error("rho: q = 0");
    const GaussianInt q2 = GaussianInt{2, 0} * q;
    const GaussianInt q4 = GaussianInt{4, 0} * q;
    long long g = std::abs(q2.re), h = std::abs(q2.im);
    while (h) { long long t = g % h; g = h; h = t; }
    const long long A = q2.norm() / g;
    long long cnt = 0;
    for (long long x = 0; x < A; ++x)
        for (long long y = 0; y < g; ++y) {
            const GaussianInt v{x, y};
            if (divides(q4, v * v - n)) ++cnt;
        }
    return {q, n, cnt};
}

/// #{a mod q : a^2 + a conj(n) + 1 = 0 (mod q)}; in bijection with the
/// solutions counted by rho(q, conj(n)^2 - 4).
inline long long trace_congruence_count(GaussianInt n, GaussianInt q) {
    if (q.is_zero()) throw std::domain_error("trace_congruence_count: q = 0");
    const GaussianInt nbar = n.conj();
    long long cnt = 0;
    for (GaussianInt a : residue_system(q))
        if (divides(q, a * a + a * nbar + GaussianInt{1, 0})) ++cnt;
    return cnt;
}

}  // namespace picardlab
