#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "fracdg/fem1d.hpp"
#include "fracdg/oracle.hpp"

using fracdg::BandedSpd;
using fracdg::SpatialFem;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("banded storage reproduces the dense operator") {
  BandedSpd a(4, 1);
  for (int i = 0; i < 4; ++i) a.entry(i, i) = 2.0;
  for (int i = 0; i < 3; ++i) a.entry(i, i + 1) = -1.0;
  const Eigen::MatrixXd dense = a.dense();
  CHECK(dense(0, 1) == -1.0);
  CHECK(dense(1, 0) == -1.0);
  CHECK(dense(3, 3) == 2.0);
  Eigen::VectorXd x(4);
  x << 1.0, -2.0, 0.5, 3.0;
  CHECK((a.apply(x) - dense * x).norm() < 1e-14);

  const BandedSpd factor = a.cholesky();
  Eigen::VectorXd b(4);
  b << 0.3, 1.0, -0.7, 2.0;
  const Eigen::VectorXd got = factor.cholesky_solve(b);
  const Eigen::VectorXd want = dense.ldlt().solve(b);
  CHECK((got - want).norm() < 1e-12);
}

TEST_CASE("piecewise linear stencils on four cells") {
  const SpatialFem fem(4, 1);
  CHECK(fem.dof_count() == 3);
  const double h = 0.25;
  const Eigen::MatrixXd a = fem.stiffness_dense();
  const Eigen::MatrixXd m = fem.mass_dense();
  for (int i = 0; i < 3; ++i) {
    CHECK(a(i, i) == doctest::Approx(2.0 / h).epsilon(1e-14));
    CHECK(m(i, i) == doctest::Approx(4.0 * h / 6.0).epsilon(1e-14));
  }
  for (int i = 0; i + 1 < 3; ++i) {
    CHECK(a(i, i + 1) == doctest::Approx(-1.0 / h).epsilon(1e-14));
    CHECK(m(i, i + 1) == doctest::Approx(h / 6.0).epsilon(1e-14));
  }
  CHECK(a(0, 2) == 0.0);
}

TEST_CASE("dof counts and coordinates") {
  const SpatialFem fem(2, 3);
  CHECK(fem.dof_count() == 5);
  CHECK(fem.dof_coord(2) == doctest::Approx(0.5).epsilon(1e-14));
  // interior nodes of the first cell sit at the scaled quartic points
  const double s = 1.0 / std::sqrt(5.0);
  CHECK(fem.dof_coord(0) == doctest::Approx(0.5 * (1.0 - s) / 2.0).epsilon(1e-13));
  CHECK(fem.dof_coord(1) == doctest::Approx(0.5 * (1.0 + s) / 2.0).epsilon(1e-13));

  const SpatialFem small(2, 1);
  CHECK(small.dof_count() == 1);
  CHECK(small.dof_coord(0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("interpolation is nodally exact and evaluation is Lagrange") {
  const SpatialFem fem(4, 2);
  const auto v = [](double x) { return x * (1.0 - x); };
  const Eigen::VectorXd u = fem.interpolate(v);
  for (int k = 0; k < fem.dof_count(); ++k) {
    CHECK(std::abs(fem.evaluate(u, fem.dof_coord(k)) - v(fem.dof_coord(k))) <
          1e-13);
  }
  // quadratics are reproduced exactly everywhere
  for (double x : {0.1, 0.33, 0.5, 0.77, 0.99}) {
    CHECK(std::abs(fem.evaluate(u, x) - v(x)) < 1e-13);
  }
}

TEST_CASE("elliptic projection of a representable function is itself") {
  const SpatialFem fem(3, 2);
  const auto v_dx = [](double x) { return 1.0 - 2.0 * x; };
  const auto v = [](double x) { return x * (1.0 - x); };
  const Eigen::VectorXd u = fem.ritz_project(v_dx);
  CHECK(fem.l2_error(u, v) < 1e-13);
}

TEST_CASE("elliptic projection is exact at the cell boundaries") {
  // the 1D H1-projection of v interpolates v at the mesh vertices (interior
  // degrees of freedom carry the usual O(h^{n+1}) deviation)
  const int cells = 5;
  const SpatialFem fem(cells, 3);
  const auto v = [](double x) { return std::sin(kPi * x); };
  const auto v_dx = [](double x) { return kPi * std::cos(kPi * x); };
  const Eigen::VectorXd u = fem.ritz_project(v_dx);
  for (int vtx = 1; vtx < cells; ++vtx) {
    const double x = static_cast<double>(vtx) / cells;
    CHECK(std::abs(fem.evaluate(u, x) - v(x)) < 1e-11);
  }
}

TEST_CASE("projection satisfies the weak identity") {
  // A u = pi^2 load(sin): integration by parts of the projection equations
  const SpatialFem fem(6, 2);
  const Eigen::VectorXd u =
      fem.ritz_project([](double x) { return kPi * std::cos(kPi * x); });
  const Eigen::VectorXd lhs = fem.apply_stiffness(u);
  const Eigen::VectorXd rhs =
      kPi * kPi *
      fem.load_vector([](double x) { return std::sin(kPi * x); });
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("projection error decays at the optimal rate") {
  const auto v = [](double x) { return std::sin(kPi * x); };
  const auto v_dx = [](double x) { return kPi * std::cos(kPi * x); };
  for (int n : {1, 2, 3}) {
    double prev = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
      const int cells = pass == 0 ? 8 : 16;
      const SpatialFem fem(cells, n);
      const double err = fem.l2_error(fem.ritz_project(v_dx), v);
      if (pass == 1) {
        const double rate = std::log2(prev / err);
        CHECK(rate == doctest::Approx(n + 1.0).epsilon(0.1 / (n + 1.0)));
      }
      prev = err;
    }
  }
}

TEST_CASE("norms against the mass matrix") {
  const SpatialFem fem(8, 2);
  const Eigen::MatrixXd m = fem.mass_dense();
  Eigen::VectorXd e = Eigen::VectorXd::Zero(fem.dof_count());
  e[5] = 1.0;
  CHECK(fem.l2_norm(e) == doctest::Approx(std::sqrt(m(5, 5))).epsilon(1e-13));

  const SpatialFem fine(32, 3);
  const Eigen::VectorXd u =
      fine.ritz_project([](double x) { return kPi * std::cos(kPi * x); });
  CHECK(fine.l2_norm(u) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("load vector matches independent quadrature") {
  const SpatialFem fem(4, 2);
  const Eigen::VectorXd load =
      fem.load_vector([](double x) { return std::sin(kPi * x); });
  for (int k : {0, 3, 6}) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(fem.dof_count());
    e[k] = 1.0;
    const double want = fracdg::oracle::adaptive_quad(
        [&](double x) { return std::sin(kPi * x) * fem.evaluate(e, x); }, 0.0,
        1.0, 1e-13);
    CHECK(std::abs(load[k] - want) < 1e-12);
  }
}

TEST_CASE("own projection has zero error") {
  const SpatialFem fem(4, 3);
  const Eigen::VectorXd u =
      fem.ritz_project([](double x) { return kPi * std::cos(kPi * x); });
  const Eigen::VectorXd again = fem.ritz_project(
      [&](double x) {
        // derivative of the projected function, cellwise
        const double h = 1e-7;
        const double xl = std::max(0.0, x - h), xr = std::min(1.0, x + h);
        return (fem.evaluate(u, xr) - fem.evaluate(u, xl)) / (xr - xl);
      },
      12);
  CHECK((u - again).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(SpatialFem(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SpatialFem(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(SpatialFem(4, 4), std::invalid_argument);
}
