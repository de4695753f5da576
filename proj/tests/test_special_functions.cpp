#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "picardlab/bessel.hpp"
#include "picardlab/gamma_complex.hpp"
#include "picardlab/hyp2f1.hpp"
#include "picardlab/incomplete_gamma.hpp"
#include "picardlab/quadrature.hpp"

using namespace picardlab;
using std::numbers::pi;
using cplx = std::complex<double>;

namespace {

// ascending-series oracle for J_n at small/moderate x
double bessel_j_series(int n, double x) {
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= 0.5 * x / k;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -0.25 * x * x / (k * (n + k));
        sum += term;
        if (std::abs(term) < 1e-19 * std::abs(sum)) break;
    }
    return sum;
}

// classical K_0 series oracle
double bessel_k0_series(double x) {
    double term = 1.0, i0 = 1.0, corr = 0.0, hk = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= 0.25 * x * x / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += term;
        corr += term * hk;
    }
    return -(std::log(0.5 * x) + 0.5772156649015328606) * i0 + corr;
}

}  // namespace

TEST_CASE("quadrature sanity") {
    auto one = integrate_gl([](double) { return 1.0; }, 0.0, 3.0, 2);
    CHECK(one == Catch::Approx(3.0).epsilon(1e-14));
    auto osc = integrate_gl([](double t) { return std::cos(40.0 * t); }, 0.0, 1.0, 16);
    CHECK(osc == Catch::Approx(std::sin(40.0) / 40.0).margin(1e-13));
    // endpoint singularity via tanh-sinh
    auto sing = integrate_tanh_sinh([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12);
    CHECK(sing == Catch::Approx(2.0).margin(1e-10));
}

TEST_CASE("gamma_c pinned values") {
    CHECK(std::abs(gamma_c({0.5, 0.0}) - std::sqrt(pi)) < 1e-14);
    CHECK(std::abs(gamma_c({5.0, 0.0}) - 24.0) < 1e-12);
    // |Gamma(2+50i)| (frozen from an independent multiprecision evaluation)
    CHECK(std::abs(gamma_c({2.0, 50.0})) ==
          Catch::Approx(6.8900589262646851e-32).epsilon(1e-11));
    CHECK_THROWS_AS(gamma_c({-3.0, 0.0}), std::domain_error);
}

TEST_CASE("gamma reflection pair on r grid") {
    for (int i = 0; i <= 100; ++i) {
        double r = 0.1 * i;
        cplx prod = gamma_c({0.5, r}) * gamma_c({0.5, -r});
        double expect = pi / std::cosh(pi * r);
        CAPTURE(r);
        CHECK(std::abs(prod - expect) < 1e-10);
        CHECK(std::abs(prod - expect) < 1e-12 * std::abs(expect) + 1e-300 + 1e-13 * expect);
    }
    CHECK(std::abs(gamma_c({0.5, 10.0}) * gamma_c({0.5, -10.0}) - 1.42697488636138086e-13) <
          1e-25);
}

TEST_CASE("Stirling modulus ratio approaches 1") {
    auto stirling_mod = [](double sigma, double t) {
        return std::sqrt(2.0 * pi) * std::pow(std::abs(t), sigma - 0.5) *
               std::exp(-0.5 * pi * std::abs(t));
    };
    double r50 = std::abs(gamma_c({2.0, 50.0})) / stirling_mod(2.0, 50.0);
    double r200 = std::abs(std::exp(lgamma_c({2.0, 200.0}))) / stirling_mod(2.0, 200.0);
    CHECK(std::abs(r50 - 1.0) < 0.02);
    CHECK(std::abs(r200 - 1.0) < 0.005);
}

TEST_CASE("bessel_J basics and oracle agreement") {
    CHECK(bessel_J(0, 0.0) == 1.0);
    for (int m = 1; m <= 6; ++m) CHECK(bessel_J(2 * m, 0.0) == 0.0);
    CHECK(std::abs(bessel_J(0, 2.4048255577)) < 1e-8);  // first zero of J_0
    // series oracle loses digits past x ~ 8; compare where it is trustworthy
    for (double x : {0.3, 1.7, 5.0}) {
        for (int n : {0, 1, 2, 7, 18}) {
            CAPTURE(n, x);
            CHECK(std::abs(bessel_J(n, x) - bessel_j_series(n, x)) < 1e-13);
        }
    }
    // frozen high-order / large-argument values
    CHECK(bessel_J(5, 17.3) == Catch::Approx(-0.195789936948724025).margin(1e-12));
    CHECK(bessel_J(40, 11.1) == Catch::Approx(3.39475840596319094e-19).margin(1e-12));
    CHECK(bessel_J(80, 95.0) == Catch::Approx(0.0172005340853574908).margin(1e-12));
    CHECK(bessel_J(0, 88.2) == Catch::Approx(0.0723657777404098756).margin(1e-12));
    CHECK_THROWS_AS(bessel_J(0, -1.0), std::domain_error);
}

TEST_CASE("bessel_K_imag values, symmetry, asymptotics") {
    CHECK(bessel_K_imag(0.0, 1.0) == Catch::Approx(0.421024438240708333).margin(1e-10));
    CHECK(bessel_K_imag(0.0, 1.0) == Catch::Approx(bessel_k0_series(1.0)).margin(1e-12));
    // symmetry in r is structural; spot-check anyway
    CHECK(bessel_K_imag(1.3, 0.7) == bessel_K_imag(-1.3, 0.7));
    // frozen independent values
    CHECK(bessel_K_imag(1.0, 0.5) == Catch::Approx(0.0165020189494814427).margin(1e-10));
    CHECK(bessel_K_imag(1.0, 3.0) == Catch::Approx(0.019156728326977343).margin(1e-10));
    CHECK(bessel_K_imag(0.3, 2.0) == Catch::Approx(0.105676601518950147).margin(1e-10));
    // series/integral paths agree across the x = 2 switch
    CHECK(bessel_K_imag(7.0, 1.9) == Catch::Approx(-1.10685485818683059e-10).margin(1e-14));
    CHECK(bessel_K_imag(7.0, 2.1) == Catch::Approx(-1.71529034287493364e-10).margin(1e-14));
    // decay: K_{2ir}(x) ~ sqrt(pi/2x) e^{-x} (1 + (4 nu^2 - 1)/(8x)), nu = 2ir
    double x = 30.0, r = 1.0;
    double lead = std::sqrt(pi / (2.0 * x)) * std::exp(-x);
    double corr = 1.0 + (-16.0 * r * r - 1.0) / (8.0 * x);
    CHECK(std::abs(bessel_K_imag(r, x) / (lead * corr) - 1.0) < 0.01);
    CHECK(std::abs(bessel_K_imag(0.0, x) / lead - 1.0) < 0.01);
    CHECK_THROWS_AS(bessel_K_imag(1.0, 0.0), std::domain_error);
}

TEST_CASE("hyp2f1 basics") {
    CHECK(hyp2f1({0.7, 0.1}, {2.0, -0.3}, {1.4, 0.0}, 0.0) == cplx{1.0, 0.0});
    // F(1,1,2;z) = -log(1-z)/z
    cplx v = hyp2f1(1.0, 1.0, 2.0, 0.5);
    CHECK(std::abs(v - (-std::log(0.5) / 0.5)) < 1e-10);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.3), HypRegimeError);
    CHECK_THROWS_AS(hyp2f1(1.0, 2.0, 3.0, {1.5, 0.0}), HypRegimeError);
}

TEST_CASE("hyp2f1 complex parameters vs frozen oracle") {
    cplx v1 = hyp2f1({0.4, 0.3}, {0.4, 0.3}, {1.6, 0.0}, {-2.0, 0.0});
    CHECK(std::abs(v1 - cplx{0.912455910139051098, -0.173887946774945782}) < 1e-9);
    cplx v2 = hyp2f1({1.0, -0.7}, {0.3, 0.2}, {1.1, 0.1}, {0.35, 0.2});
    CHECK(std::abs(v2 - cplx{1.18698830834044325, 0.108452309142672235}) < 1e-9);
    // large negative argument with conjugate parameters: 1/z connection
    cplx v3 = hyp2f1({0.4, 13.0}, {0.4, -13.0}, 1.0, {-26.39230485, 0.0});
    CHECK(std::abs(v3 - cplx{-0.0397497820668159579, 0.0}) < 1e-9 * std::abs(v3) + 1e-11);
    // small argument, large imaginary c
    cplx v4 = hyp2f1({0.4, 13.0}, {0.4, 13.0}, {1.0, 26.0}, {-1.0 / 26.39230485, 0.0});
    CHECK(std::abs(v4 - cplx{0.9652584989894204, -0.239123035470876301}) < 1e-9);
}

TEST_CASE("hyp2f1 Euler integral cross-check") {
    // F(a,b;c;z) = Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^{b-1}(1-t)^{c-b-1}(1-zt)^{-a} dt
    const cplx a{0.4, 0.3}, b{0.4, 0.3}, c{1.6, 0.0}, z{-2.0, 0.0};
    auto integrand = [&](double t) {
        return std::pow(cplx(t, 0.0), b - 1.0) * std::pow(cplx(1.0 - t, 0.0), c - b - 1.0) *
               std::pow(1.0 - z * t, -a);
    };
    cplx quad = integrate_tanh_sinh(integrand, 0.0, 1.0, 1e-13);
    cplx ref = gamma_c(c) / (gamma_c(b) * gamma_c(c - b)) * quad;
    CHECK(std::abs(hyp2f1(a, b, c, z) - ref) < 1e-8);
}

TEST_CASE("upper incomplete gamma vs frozen oracle") {
    auto close = [](cplx v, cplx ref, double tol) { return std::abs(v - ref) < tol; };
    CHECK(close(upper_gamma({0.7, 0.4}, 0.98), {0.306266249425117818, 0.0660930575402074878}, 1e-12));
    CHECK(close(upper_gamma({-0.3, 0.4}, 3.2), {0.00573060178943981148, 0.00347842810038977897}, 1e-12));
    CHECK(close(upper_gamma({2.3, -1.0}, 17.0), {-1.71723087804861668e-6, -4.36363839184049924e-7}, 1e-15));
    CHECK(close(upper_gamma({-1.7, 0.9}, 0.31), {1.77136903174191774, -1.47204771358498814}, 1e-11));
    CHECK_THROWS_AS(upper_gamma({1.0, 0.0}, 0.0), std::domain_error);
}
