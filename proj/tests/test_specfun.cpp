#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <doctest.h>

#include "reference_values.hpp"
#include "xih/specfun.hpp"
#include "xih/types.hpp"

using xih::complex;

namespace {

double rel_err(complex got, complex want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

double rel_err(double got, double want) {
    return rel_err(complex(got, 0.0), complex(want, 0.0));
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("gamma against frozen oracle points") {
    CHECK(rel_err(xih::gamma_complex({3.0, 4.0}),
                  {ref::gamma_3_4i_re, ref::gamma_3_4i_im}) < 1e-12);
    CHECK(rel_err(xih::gamma_complex({-5.5, 0.0}), {ref::gamma_m5p5, 0.0}) < 1e-12);
    CHECK(rel_err(xih::gamma_complex({0.5, 60.0}),
                  {ref::gamma_half_60i_re, ref::gamma_half_60i_im}) < 1e-11);
    CHECK(rel_err(xih::gamma_complex({-3.2, -4.7}),
                  {ref::gamma_m3p2_m4p7i_re, ref::gamma_m3p2_m4p7i_im}) < 1e-11);
    CHECK(rel_err(xih::gamma_complex({25.0, 10.0}),
                  {ref::gamma_25_10i_re, ref::gamma_25_10i_im}) < 1e-12);
}

TEST_CASE("gamma recurrence and reflection consistency") {
    // Gamma(s+1) = s Gamma(s) away from poles, including complex s.
    for (complex s : {complex{0.3, 0.7}, complex{-2.4, 1.1}, complex{4.0, -3.0}}) {
        complex lhs = xih::gamma_complex(s + complex{1.0, 0.0});
        complex rhs = s * xih::gamma_complex(s);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
    CHECK(rel_err(xih::gamma_complex({0.5, 0.0}), {std::sqrt(M_PI), 0.0}) < 1e-13);
    CHECK(rel_err(xih::gamma_complex({6.0, 0.0}), {120.0, 0.0}) < 1e-13);
}

TEST_CASE("gamma pole rejection") {
    CHECK_THROWS_AS((void)xih::gamma_complex({0.0, 0.0}), xih::PoleError);
    CHECK_THROWS_AS((void)xih::gamma_complex({-3.0, 0.0}), xih::PoleError);
}

TEST_CASE("zeta against frozen oracle points") {
    CHECK(rel_err(xih::zeta_complex({0.5, 0.0}), {ref::zeta_half, 0.0}) < 1e-12);
    CHECK(rel_err(xih::zeta_complex({2.0, 0.0}), {ref::zeta_2, 0.0}) < 1e-13);
    CHECK(rel_err(xih::zeta_complex({0.5, 10.0}),
                  {ref::zeta_half_10i_re, ref::zeta_half_10i_im}) < 1e-12);
    CHECK(rel_err(xih::zeta_complex({0.5, 30.0}),
                  {ref::zeta_half_30i_re, ref::zeta_half_30i_im}) < 1e-12);
    CHECK(rel_err(xih::zeta_complex({0.5, 60.0}),
                  {ref::zeta_half_60i_re, ref::zeta_half_60i_im}) < 1e-11);
    CHECK(rel_err(xih::zeta_complex({2.0, 60.0}),
                  {ref::zeta_2_60i_re, ref::zeta_2_60i_im}) < 1e-12);
    // Functional-equation region.
    CHECK(rel_err(xih::zeta_complex({-3.0, 10.0}),
                  {ref::zeta_m3_10i_re, ref::zeta_m3_10i_im}) < 1e-11);
    CHECK(rel_err(xih::zeta_complex({0.25, 5.0}),
                  {ref::zeta_0p25_5i_re, ref::zeta_0p25_5i_im}) < 1e-12);
    CHECK_THROWS_AS((void)xih::zeta_complex({1.0, 0.0}), xih::PoleError);
}

TEST_CASE("xi special values and symmetry") {
    CHECK(rel_err(xih::xi({0.5, 0.0}), {ref::xi_half, 0.0}) < 1e-12);
    CHECK(rel_err(xih::xi({2.0, 0.0}), {ref::xi_2, 0.0}) < 1e-12);
    // xi(0) = xi(1) = 1/2: the pole of zeta cancels against s-1.
    CHECK(rel_err(xih::xi({0.0, 0.0}), {ref::xi_0, 0.0}) < 1e-12);
    CHECK(rel_err(xih::xi({1.0, 0.0}), {ref::xi_0, 0.0}) < 1e-12);
    CHECK(rel_err(xih::xi({0.3, 0.3}), {ref::xi_0p3_0p3i_re, ref::xi_0p3_0p3i_im}) < 1e-12);
    // Functional symmetry xi(s) = xi(1-s) at an asymmetric point.
    complex s{0.3, 0.7};
    CHECK(rel_err(xih::xi(s), xih::xi(complex{1.0, 0.0} - s)) < 1e-12);
}

TEST_CASE("Xi on the line: oracle points, evenness, realness") {
    CHECK(rel_err(xih::Xi({0.25, 0.0}), {ref::Xi_0p25, 0.0}) < 1e-12);
    CHECK(rel_err(xih::Xi({0.5, 0.0}), {ref::Xi_0p5, 0.0}) < 1e-12);
    CHECK(rel_err(xih::Xi({1.0, 0.0}), {ref::Xi_1, 0.0}) < 1e-12);
    CHECK(rel_err(xih::Xi({2.0, 0.0}), {ref::Xi_2, 0.0}) < 1e-12);
    CHECK(rel_err(xih::Xi({5.0, 0.0}), {ref::Xi_5, 0.0}) < 1e-12);
    CHECK(rel_err(xih::Xi({10.0, 0.0}), {ref::Xi_10, 0.0}) < 1e-12);
    CHECK(rel_err(xih::Xi({20.0, 0.0}), {ref::Xi_20, 0.0}) < 1e-10);
    CHECK(rel_err(xih::Xi({30.0, 0.0}), {ref::Xi_30, 0.0}) < 1e-10);
    CHECK(rel_err(xih::Xi({40.0, 0.0}), {ref::Xi_40, 0.0}) < 1e-10);
    CHECK(rel_err(xih::Xi({60.0, 0.0}), {ref::Xi_60, 0.0}) < 1e-9);

    for (double t : {0.7, 3.3, 17.0, 41.5}) {
        complex plus = xih::Xi({t, 0.0});
        complex minus = xih::Xi({-t, 0.0});
        CHECK(plus.real() == minus.real());  // even, and bitwise so
        CHECK(plus.imag() == 0.0);           // exactly real on the real axis
        CHECK(minus.imag() == 0.0);
    }
}

TEST_CASE("theta remainder psi and the modular transformation") {
    CHECK(rel_err(xih::psi_theta(0.1), ref::psi_0p1) < 1e-13);
    CHECK(rel_err(xih::psi_theta(0.25), ref::psi_0p25) < 1e-13);
    CHECK(rel_err(xih::psi_theta(1.0), ref::psi_1) < 1e-13);
    CHECK(rel_err(xih::psi_theta(4.0), ref::psi_4) < 1e-13);

    // 2 psi(x) + 1 = x^{-1/2} (2 psi(1/x) + 1), checked off the seam points.
    for (double x : {0.07, 0.4, 0.9, 1.6, 7.0}) {
        double lhs = 2.0 * xih::psi_theta(x) + 1.0;
        double rhs = (2.0 * xih::psi_theta(1.0 / x) + 1.0) / std::sqrt(x);
        CHECK(rel_err(lhs, rhs) < 1e-13);
    }
    CHECK_THROWS_AS((void)xih::psi_theta(0.0), xih::DomainError);
    CHECK_THROWS_AS((void)xih::psi_theta(-1.0), xih::DomainError);
}

TEST_CASE("theta factor: oracle points, evenness, flat center, tail") {
    CHECK(rel_err(xih::theta_factor(0.0), ref::h_0) < 1e-13);
    CHECK(rel_err(xih::theta_factor(0.7), ref::h_0p7) < 1e-13);
    CHECK(rel_err(xih::theta_factor(1.0), ref::h_1) < 1e-13);
    CHECK(xih::theta_factor(2.5) == xih::theta_factor(-2.5));

    // h'(0) = 0: the modular transformation makes the derivative cancel
    // exactly, so a central difference sits at rounding level.
    double d = (xih::theta_factor(1e-4) - xih::theta_factor(-1e-4)) / 2e-4;
    CHECK(std::abs(d) < 1e-9);

    // Large |y|: h(y) = e^{-|y|/2} to within the doubly exponential remainder.
    for (double y : {12.0, 100.0, 1400.0}) {
        CHECK(rel_err(xih::theta_factor(y), std::exp(-y / 2.0)) < 1e-14);
    }
    CHECK_THROWS_AS((void)xih::theta_factor(1400.5), xih::OverflowError);
    CHECK_THROWS_AS((void)xih::theta_factor(-1e6), xih::OverflowError);
}

TEST_CASE("incomplete gamma: oracle points and recurrence") {
    CHECK(rel_err(xih::incomplete_gamma_upper({1.25, 0.0}, M_PI),
                  {ref::igamma_1p25_pi, 0.0}) < 1e-12);
    CHECK(rel_err(xih::incomplete_gamma_upper({2.5, -1.0}, 3.0),
                  {ref::igamma_2p5_m1i_3_re, ref::igamma_2p5_m1i_3_im}) < 1e-12);
    // Gamma(s+1, x) = s Gamma(s, x) + x^s e^{-x}.
    for (double x : {0.3, 2.0, 11.0}) {
        complex s{1.7, 0.4};
        complex lhs = xih::incomplete_gamma_upper(s + complex{1.0, 0.0}, x);
        complex rhs = s * xih::incomplete_gamma_upper(s, x) +
                      std::pow(complex{x, 0.0}, s) * std::exp(-x);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
    // Gamma(s, 0) = Gamma(s).
    CHECK(rel_err(xih::incomplete_gamma_upper({2.5, 0.0}, 0.0),
                  xih::gamma_complex({2.5, 0.0})) < 1e-13);
    CHECK_THROWS_AS((void)xih::incomplete_gamma_upper({1.0, 0.0}, -1.0), xih::DomainError);
}

TEST_CASE("mobius sieve basics") {
    std::vector<int> mu = xih::mobius_sieve(30);
    REQUIRE(mu.size() == 31);
    CHECK(mu[1] == 1);
    CHECK(mu[2] == -1);
    CHECK(mu[4] == 0);
    CHECK(mu[6] == 1);
    CHECK(mu[12] == 0);
    CHECK(mu[30] == -1);
    // Mertens check: sum_{m<=30} mu(m) = -3.
    int mertens = 0;
    for (int m = 1; m <= 30; ++m) mertens += mu[m];
    CHECK(mertens == -3);
    CHECK_THROWS_AS((void)xih::mobius_sieve(200000000), xih::CapacityError);
}

TEST_CASE("sum-of-squares counters: small closed values") {
    // r_2: 1, 4, 4, 0, 4, 8 for n = 0..5.
    CHECK(xih::sum_of_squares_r(2, 0) == 1);
    CHECK(xih::sum_of_squares_r(2, 1) == 4);
    CHECK(xih::sum_of_squares_r(2, 2) == 4);
    CHECK(xih::sum_of_squares_r(2, 3) == 0);
    CHECK(xih::sum_of_squares_r(2, 4) == 4);
    CHECK(xih::sum_of_squares_r(2, 5) == 8);
    // r_4(n) = 8 sigma(n) for odd n (16, 24 -> n=1,2 known: 8, 24).
    CHECK(xih::sum_of_squares_r(4, 1) == 8);
    CHECK(xih::sum_of_squares_r(4, 2) == 24);
    // positive-coordinate counts
    CHECK(xih::sum_of_squares_rprime(1, 9) == 1);
    CHECK(xih::sum_of_squares_rprime(1, 10) == 0);
    CHECK(xih::sum_of_squares_rprime(2, 5) == 2);   // (1,2),(2,1)
    CHECK(xih::sum_of_squares_rprime(2, 50) == 3);  // (1,7),(7,1),(5,5)
    CHECK(xih::sum_of_squares_rprime(3, 3) == 1);   // (1,1,1)
    CHECK(xih::sum_of_squares_rprime(0, 0) == 1);   // empty tuple
    CHECK(xih::sum_of_squares_rprime(0, 2) == 0);
}

TEST_CASE("sum-of-squares tables match scalar accessors and caps hold") {
    auto table = xih::sum_of_squares_r_table(3, 40);
    REQUIRE(table.size() == 41);
    for (std::int64_t n : {0, 1, 7, 25, 40})
        CHECK(table[static_cast<std::size_t>(n)] == xih::sum_of_squares_r(3, n));
    auto ptable = xih::sum_of_squares_rprime_table(4, 40);
    for (std::int64_t n : {0, 4, 12, 31, 40})
        CHECK(ptable[static_cast<std::size_t>(n)] == xih::sum_of_squares_rprime(4, n));
    CHECK_THROWS_AS((void)xih::sum_of_squares_r(9, 10), xih::CapacityError);
    CHECK_THROWS_AS((void)xih::sum_of_squares_r(2, 2000000), xih::CapacityError);
    CHECK_THROWS_AS((void)xih::sum_of_squares_r(2, -1), xih::DomainError);
}

}  // TEST_SUITE
