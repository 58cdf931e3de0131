#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracdg/special.hpp"

using fracdg::gamma_fn;
using fracdg::inc_beta_lower;
using fracdg::lgamma_fn;

TEST_CASE("gamma function reference values") {
  CHECK(gamma_fn(0.5) == doctest::Approx(1.77245385090551603).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.886226925452758014).epsilon(1e-14));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.1) == doctest::Approx(9.51350769866873184).epsilon(1e-13));
  CHECK(gamma_fn(12.3) ==
        doctest::Approx(83385367.8999698547).epsilon(1e-13));
  CHECK(gamma_fn(50.0) ==
        doctest::Approx(6.08281864034267561e+62).epsilon(1e-13));
}

TEST_CASE("gamma function functional identity") {
  for (double x : {0.3, 0.75, 1.9, 4.4, 11.0}) {
    CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-13));
  }
}

TEST_CASE("gamma function domain") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("log gamma matches gamma") {
  for (double x : {0.2, 1.0, 2.0, 7.5, 30.0}) {
    CHECK(std::exp(lgamma_fn(x)) == doctest::Approx(gamma_fn(x)).epsilon(1e-12));
  }
  CHECK(lgamma_fn(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(lgamma_fn(-2.0), std::domain_error);
}

TEST_CASE("incomplete beta endpoints and reference values") {
  // full-range integral of (1-s)^{-1/2} is 2
  CHECK(inc_beta_lower(1.0, 1.0, 0.5) == doctest::Approx(2.0).epsilon(1e-13));
  // complete beta B(2, 1/2) = 4/3
  CHECK(inc_beta_lower(1.0, 2.0, 0.5) ==
        doctest::Approx(1.33333333333333333).epsilon(1e-13));
  CHECK(inc_beta_lower(0.0, 3.0, 0.7) == 0.0);
  // half-range value, frozen from an exact reference evaluation
  CHECK(inc_beta_lower(0.5, 2.0, 0.5) ==
        doctest::Approx(0.154822031355754126).epsilon(1e-12));
  // symmetric weight at the midpoint: half the complete integral
  CHECK(inc_beta_lower(0.5, 2.0, 2.0) ==
        doctest::Approx(0.5 / 6.0).epsilon(1e-12));
}

TEST_CASE("incomplete beta is monotone in z") {
  double prev = -1.0;
  for (double z = 0.0; z <= 1.0; z += 0.125) {
    const double v = inc_beta_lower(z, 1.5, 0.6);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("incomplete beta parameter validation") {
  CHECK_THROWS_AS(inc_beta_lower(-0.1, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(inc_beta_lower(1.1, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(inc_beta_lower(0.5, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(inc_beta_lower(0.5, 1.0, -0.2), std::domain_error);
}
