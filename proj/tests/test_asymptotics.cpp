#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "volterra/asymptotics.hpp"
#include "volterra/direct.hpp"
#include "volterra/errors.hpp"
#include "volterra/laplace.hpp"
#include "volterra/ramanujan.hpp"
#include "volterra/residues.hpp"

using namespace volterra;

TEST_SUITE("asymptotics") {

TEST_CASE("Cauchy-circle coefficients of a known function") {
  // e^x: n-th derivative is 1. Round-off grows like n! / rho^n.
  const CoefficientSeries s = taylor_coeffs_cauchy([](Complex x) { return std::exp(x); }, 8, 0.5, 64);
  for (int n = 0; n <= 8; ++n) CHECK(s[n] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.imag_residual < 1e-9);
  CHECK_THROWS_AS(taylor_coeffs_cauchy([](Complex x) { return std::exp(x); }, 8, 0.5, 16), DomainError);
}

TEST_CASE("D_n^(0) matches the log-gamma series") {
  const std::vector<double> want = oracle::recip_gamma_taylor(10);
  const auto d = coeff_D(0.0, 10);
  for (int n = 0; n <= 10; ++n) CHECK((*d)[n] == doctest::Approx(want[n]).epsilon(1e-11).scale(1.0));
  CHECK((*d)[1] == doctest::Approx(oracle::kEulerGamma).epsilon(1e-13));
}

TEST_CASE("D_n^(alpha) against 30-digit values") {
  const double d08[] = {1.0736712740308343279, -0.305987115272493856, -0.35203212729413185994,
                        0.20235350405956074882, -0.0019145766858700380491, -0.027756477561673902839,
                        0.0086419267429932879589};
  const double dm05[] = {0.56418958354775628695, 1.1077919038728710232, -0.30450174420805534108,
                         -0.43910342250357719852, 0.20058545616778759988, 0.029889275563438276278,
                         -0.038848720455123537355};
  const auto a = coeff_D(0.8, 6);
  const auto b = coeff_D(-0.5, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK((*a)[n] == doctest::Approx(d08[n]).epsilon(1e-11).scale(1.0));
    CHECK((*b)[n] == doctest::Approx(dm05[n]).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("D^(alpha, beta) carries the rising factorial") {
  const auto d = coeff_D(0.3, 5);
  const auto db = coeff_D_ab(0.3, 1.5, 5);
  for (int n = 0; n <= 5; ++n) CHECK((*db)[n] == doctest::Approx(rising_factorial(2.5, n) * (*d)[n]));
}

TEST_CASE("E coefficients against exact series arithmetic") {
  const double e1[] = {1.0, -0.25, 0.26041666666666666667, -0.24739583333333333333, 0.23757595486111111111,
                       -0.2303466796875, 0.22485957070002480159};
  const double e2[] = {1.0, 0.5, 0.0, 0.0, 0.0041666666666666666667, -0.00625, 0.0073082010582010582011};
  const auto a = coeff_E(0.5, 1.5, 6);
  const auto b = coeff_E(0.0, 2.0, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK((*a)[n] == doctest::Approx(e1[n]).epsilon(1e-11).scale(1.0));
    CHECK((*b)[n] == doctest::Approx(e2[n]).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("coefficients are stable under changes of the circle") {
  const auto a = coeff_D(0.0, 6, 0.4, 64);
  const auto b = coeff_D(0.0, 6, 0.6, 128);
  for (int n = 0; n <= 6; ++n) CHECK((*a)[n] == doctest::Approx((*b)[n]).epsilon(1e-10).scale(1.0));
  // Memoised instances are shared.
  CHECK(coeff_D(0.0, 6).get() == coeff_D(0.0, 6).get());
}

TEST_CASE("Ramanujan coefficients are derivatives of 1/Gamma(1 - x)") {
  const std::vector<double> d0 = oracle::recip_gamma_taylor(6);
  const auto r = coeff_ramanujan(6);
  double fact = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    CHECK((*r)[n] == doctest::Approx((n % 2 ? -1.0 : 1.0) * fact * d0[n]).epsilon(1e-10).scale(1.0));
  }
  CHECK((*r)[1] == doctest::Approx(-oracle::kEulerGamma));
}

TEST_CASE("exponential part reproduces the residue for integer beta") {
  for (int k : {1, 2, 3}) {
    for (double a : {0.0, -0.5}) {
      for (double t : {2.0, 5.0}) {
        CHECK(exponential_part(t, k, a, 10) == doctest::Approx(residue_at_one(t, k, a)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("small-argument expansion approaches mu") {
  const double t = 1e-4;
  const double ref = mu_direct(t, 1.0, 0.8);
  const double e0 = std::abs(mu_small(t, 1.0, 0.8, 0) - ref);
  const double e3 = std::abs(mu_small(t, 1.0, 0.8, 3) - ref);
  CHECK(e3 < 0.05 * e0);
  CHECK_THROWS_AS(mu_small(2.0, 1.0, 0.0, 2), DomainError);
}

TEST_CASE("large-argument expansion approaches mu") {
  for (double beta : {0.0, 1.0, 1.5}) {
    const double t = 30.0;
    const double ref = invert(t, beta, 0.4);
    CHECK(mu_large(t, beta, 0.4, 6) == doctest::Approx(ref).epsilon(1e-8));
  }
  const LargeArgumentExpansion p = mu_large_parts(20.0, 1.5, 0.0, 3);
  CHECK_FALSE(p.h_included);
  CHECK(p.h_part == 0.0);
  CHECK(mu_large_parts(20.0, 2.0, 0.0, 3).h_included);
}

TEST_CASE("negative integer beta expansion is exact") {
  for (int n : {0, 1, 2}) {
    CHECK(mu_negint_expansion(3.0, n, 0.2) ==
          doctest::Approx(mu_negative_integer_beta(3.0, n, 0.2)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("Ramanujan expansion for large t") {
  for (double t : {1e3, 1e6}) {
    CHECK(ramanujan_expansion(t, 6) == doctest::Approx(N_classic(t)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(ramanujan_expansion(2.0, 3), DomainError);
}

TEST_CASE("N_k expansion carries a minus sign") {
  // N_k is positive for k = 0; the sign of each term is fixed by D_0 > 0.
  const double t = 1e4;
  CHECK(nk_expansion_conjecture(t, 0, 0.0, 6) == doctest::Approx(N_classic(t)).epsilon(1e-4));
  for (int k : {1, 2}) {
    const double n = N_k(t, k, 0.0);
    CHECK(nk_expansion_conjecture(t, k, 0.0, 6) == doctest::Approx(n).epsilon(1e-3));
  }
}

}
