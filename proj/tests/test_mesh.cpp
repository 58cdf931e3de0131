#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "fracdg/mesh.hpp"

using fracdg::GradedMesh;
using fracdg::make_graded_mesh;

TEST_CASE("endpoints are exact and nodes strictly increase") {
  for (double sigma : {1.0, 1.5, 2.0, 10.0 / 3.0}) {
    const GradedMesh mesh = make_graded_mesh(16, 2.5, sigma);
    CHECK(mesh.node(0) == 0.0);
    CHECK(mesh.node(16) == 2.5);
    for (int j = 1; j <= 16; ++j) CHECK(mesh.node(j) > mesh.node(j - 1));
  }
}

TEST_CASE("first node of a graded mesh") {
  const GradedMesh mesh = make_graded_mesh(3, 2.0, 1.5);
  CHECK(mesh.node(1) ==
        doctest::Approx(0.38490017945975051).epsilon(1e-15));
}

TEST_CASE("uniform mesh") {
  const GradedMesh mesh = make_graded_mesh(5, 1.0, 1.0);
  for (int j = 1; j <= 5; ++j) {
    CHECK(mesh.width(j) == doctest::Approx(0.2).epsilon(1e-14));
  }
}

TEST_CASE("widths telescope to the horizon") {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (double sigma : {1.0, 2.0, 4.0}) {
    for (int J : {1, 7, 64}) {
      const GradedMesh mesh = make_graded_mesh(J, 3.0, sigma);
      double sum = 0.0;
      for (int j = 1; j <= J; ++j) sum += mesh.width(j);
      CHECK(std::abs(sum - 3.0) <= 4.0 * eps * 3.0 * J);
    }
  }
}

TEST_CASE("widths grow monotonically under grading") {
  const GradedMesh mesh = make_graded_mesh(32, 1.0, 3.0);
  for (int j = 2; j <= 32; ++j) CHECK(mesh.width(j) > mesh.width(j - 1));
}

TEST_CASE("width bound of the graded family") {
  // tau_j <= sigma J^{-1} T^{1/sigma} t_j^{1 - 1/sigma}, from the mean value
  // theorem applied to t(x) = (x/J)^sigma T
  for (double sigma : {1.0, 1.5, 2.0, 3.0}) {
    for (int J : {1, 2, 5, 16}) {
      const double T = 2.0;
      const GradedMesh mesh = make_graded_mesh(J, T, sigma);
      for (int j = 1; j <= J; ++j) {
        const double bound = sigma / J * std::pow(T, 1.0 / sigma) *
                             std::pow(mesh.node(j), 1.0 - 1.0 / sigma);
        CHECK(mesh.width(j) <= bound * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("critical grading exponents") {
  CHECK(fracdg::sigma_star(0, 0.2, 0.8) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(fracdg::sigma_star_star(0, 0.2, 0.8) ==
        doctest::Approx(10.0 / 3.0).epsilon(1e-14));
  CHECK(fracdg::sigma_star(1, 0.2, 0.8) ==
        doctest::Approx(16.0 / 3.0).epsilon(1e-14));
  CHECK(fracdg::sigma_star_star(1, 0.2, 0.8) ==
        doctest::Approx(20.0 / 3.0).epsilon(1e-14));
  CHECK(fracdg::sigma_star(0, 0.4, 0.8) == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(fracdg::sigma_star_star(0, 0.4, 0.8) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(fracdg::sigma_star(1, 0.4, 0.8) == doctest::Approx(3.2).epsilon(1e-14));
  CHECK(fracdg::sigma_star_star(1, 0.4, 0.8) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("mesh construction validation") {
  CHECK_THROWS_AS(make_graded_mesh(0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_graded_mesh(4, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_graded_mesh(4, -1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_graded_mesh(4, 1.0, 0.9), std::invalid_argument);
}
