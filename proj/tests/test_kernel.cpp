#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "fracdg/basis.hpp"
#include "fracdg/kernel.hpp"
#include "fracdg/mesh.hpp"
#include "fracdg/oracle.hpp"
#include "fracdg/quadrature.hpp"
#include "fracdg/special.hpp"

using fracdg::gamma_fn;
using fracdg::GradedMesh;
using fracdg::history_block;
using fracdg::HistoryAssembler;
using fracdg::LegendreBasis;
using fracdg::make_graded_mesh;
using fracdg::power_moment;
using fracdg::rl_derivative_of_power;
using fracdg::rl_integral_of_slab_poly;

TEST_CASE("shifted power moments match panel quadrature in all regimes") {
  const LegendreBasis basis(2);
  const double t_lo = 0.5, t_hi = 1.25;
  // c = t_lo: singular weight, matched rule; c < t_lo: near and far cuts
  for (double mu : {-0.8, -0.5, -0.2, 0.7, 1.7}) {
    for (double c : {0.5, 0.3, 0.0, -2.0, -20.0}) {
      for (int q = 0; q <= 2; ++q) {
        const double got = power_moment(basis, q, t_lo, t_hi, c, mu);
        double want = 0.0;
        if (c == t_lo) {
          // weight (t - t_lo)^mu: rule matched to the left edge
          const fracdg::QuadRule rule = fracdg::detail::jacobi_rule(8, 0.0, mu);
          const double tau = t_hi - t_lo;
          for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
            want += rule.weights[g] * basis.eval(q, rule.nodes[g]);
          }
          want *= std::pow(tau, mu + 1.0);
        } else {
          want = fracdg::oracle::split_quad(
              [&](double t) {
                return basis.eval(q, (t - t_lo) / (t_hi - t_lo)) *
                       std::pow(t - c, mu);
              },
              t_lo, t_hi, /*toward_a=*/true);
        }
        CHECK(std::abs(got - want) < 1e-12 * (1.0 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("fractional integral of the constant slab polynomial") {
  const GradedMesh mesh = make_graded_mesh(4, 1.0, 1.0);
  const LegendreBasis basis(2);
  const double gamma = 0.3;
  const double tau = mesh.width(2);
  // at the right slab edge: tau^{1-g} / Gamma(2-g)
  CHECK(rl_integral_of_slab_poly(gamma, mesh, basis, 2, 0, mesh.node(2)) ==
        doctest::Approx(std::pow(tau, 1.0 - gamma) / gamma_fn(2.0 - gamma))
            .epsilon(1e-13));
  // at the left slab edge the window is empty
  CHECK(rl_integral_of_slab_poly(gamma, mesh, basis, 2, 0, mesh.node(1)) ==
        0.0);
  // shrinking window: continuous decay to zero
  double prev = rl_integral_of_slab_poly(gamma, mesh, basis, 2, 0,
                                         mesh.node(1) + 1e-3);
  for (double d : {1e-4, 1e-6, 1e-9}) {
    const double v =
        rl_integral_of_slab_poly(gamma, mesh, basis, 2, 0, mesh.node(1) + d);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("fractional integral agrees with brute-force quadrature") {
  const GradedMesh mesh = make_graded_mesh(3, 1.0, 2.0);
  const LegendreBasis basis(2);
  for (double gamma : {0.2, 0.5, 0.8}) {
    for (int p = 0; p <= 2; ++p) {
      for (double t : {0.21, 0.4444444444444444, 0.55, 0.83, 1.0}) {
        const double got = rl_integral_of_slab_poly(gamma, mesh, basis, 2, p, t);
        const double want =
            fracdg::oracle::brute_rl_integral(gamma, mesh, 2, 2, p, t);
        CHECK(std::abs(got - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("semigroup property of the fractional integrals") {
  // I^0.3 (I^0.4 f) = I^0.7 f for f = phi_0 on the first slab of a two-slab
  // mesh, the outer integral by singularity-split quadrature
  const GradedMesh mesh = make_graded_mesh(2, 1.0, 1.0);
  const LegendreBasis basis(1);
  const double t1 = mesh.node(1);
  const auto inner = [&](double s) {
    return rl_integral_of_slab_poly(0.6, mesh, basis, 1, 0, s);  // I^{0.4}
  };
  for (int k = 1; k <= 20; ++k) {
    const double t = t1 + (mesh.node(2) - t1) * k / 20.0;
    // int_0^t (t-s)^{-0.7} inner(s) ds, split at the kink s = t1; the
    // integrand has an s^{0.4} layer at 0 and a (t-s)^{-0.7} layer that
    // steepens toward s = t1 as t approaches t1, so refine toward both ends
    const auto f = [&](double s) { return std::pow(t - s, -0.7) * inner(s); };
    const double left =
        fracdg::oracle::split_quad(f, 0.0, 0.5 * t1, /*toward_a=*/true) +
        fracdg::oracle::split_quad(f, 0.5 * t1, t1, /*toward_a=*/false);
    // inner() has a (s - t1)^{0.4} kink entering the second slab, so the
    // weighted rule only covers the half next to the s = t singularity
    const double tm = 0.5 * (t1 + t);
    const double kink =
        fracdg::oracle::split_quad(f, t1, tm, /*toward_a=*/true);
    const fracdg::QuadRule rule =
        fracdg::gauss_jacobi(24, 0.7, fracdg::JacobiSide::right);
    double right = 0.0;
    const double len = t - tm;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      right += rule.weights[g] * inner(tm + len * rule.nodes[g]);
    }
    right *= std::pow(len, 0.3);
    const double lhs = (left + kink + right) / gamma_fn(0.3);
    const double rhs = rl_integral_of_slab_poly(0.3, mesh, basis, 1, 0, t);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("piecewise constant closed forms") {
  // single unit slab: diagonal entry is 1/Gamma(2-gamma) at gamma = 1/2
  const GradedMesh unit = make_graded_mesh(1, 1.0, 1.0);
  const LegendreBasis basis(0);
  CHECK(history_block(0.5, unit, basis, 1, 1).entries(0, 0) ==
        doctest::Approx(1.12837916709551257).epsilon(1e-13));
  // two unit slabs: the lagged entry is (sqrt(2) - 2)/Gamma(3/2)
  const GradedMesh two = make_graded_mesh(2, 2.0, 1.0);
  CHECK(history_block(0.5, two, basis, 2, 1).entries(0, 0) ==
        doctest::Approx(-0.660989212585294436).epsilon(1e-13));

  // the general piecewise-constant formula on a graded mesh
  const GradedMesh mesh = make_graded_mesh(5, 1.0, 2.0);
  for (double gamma : {0.2, 0.8}) {
    for (int j = 1; j <= 5; ++j) {
      for (int i = 1; i <= j; ++i) {
        const double tj = mesh.node(j), tjm = mesh.node(j - 1);
        const double ti = mesh.node(i), tim = mesh.node(i - 1);
        const auto pw = [&](double x) {
          return x <= 0.0 ? 0.0 : std::pow(x, 1.0 - gamma);
        };
        const double expect =
            (pw(tj - tim) - pw(tj - ti) - pw(tjm - tim) + pw(tjm - ti)) /
            gamma_fn(2.0 - gamma);
        CHECK(history_block(gamma, mesh, basis, j, i).entries(0, 0) ==
              doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("diagonal blocks scale like tau^{1-gamma}") {
  const LegendreBasis basis(2);
  const double gamma = 0.4;
  const Eigen::MatrixXd ref =
      history_block(gamma, make_graded_mesh(1, 1.0, 1.0), basis, 1, 1).entries;
  for (double tau : {0.5, 2.0, 10.0}) {
    const Eigen::MatrixXd scaled =
        history_block(gamma, make_graded_mesh(1, tau, 1.0), basis, 1, 1)
            .entries;
    const double factor = std::pow(tau, 1.0 - gamma);
    CHECK((scaled - factor * ref).cwiseAbs().maxCoeff() < 1e-13 * factor);
  }
}

TEST_CASE("blocks match the brute-force reference") {
  const LegendreBasis basis(2);
  for (double sigma : {1.0, 2.0}) {
    const GradedMesh mesh = make_graded_mesh(4, 1.0, sigma);
    const double gamma = 0.5;
    for (int j : {1, 2, 4}) {
      for (int i = 1; i <= j; ++i) {
        const Eigen::MatrixXd got =
            history_block(gamma, mesh, basis, j, i).entries;
        const Eigen::MatrixXd want =
            fracdg::oracle::brute_force_kernel_block(gamma, mesh, 2, j, i,
                                                     1e-11);
        CHECK((got - want).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("assembled quadratic form is positive definite") {
  // DG bilinear form of the memory operator: block lower-triangular history
  // matrix; its symmetric part must be positive definite
  const int J = 4, m = 1;
  const LegendreBasis basis(m);
  const GradedMesh mesh = make_graded_mesh(J, 1.0, 1.5);
  const int n = J * (m + 1);
  for (double gamma : {0.2, 0.5, 0.8}) {
    Eigen::MatrixXd big = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j <= J; ++j) {
      for (int i = 1; i <= j; ++i) {
        big.block((j - 1) * (m + 1), (i - 1) * (m + 1), m + 1, m + 1) =
            history_block(gamma, mesh, basis, j, i).entries;
      }
    }
    std::mt19937 rng(20240 + static_cast<int>(10 * gamma));
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      Eigen::VectorXd c(n);
      for (int k = 0; k < n; ++k) c[k] = normal(rng);
      CHECK(c.dot(big * c) > 0.0);
    }
  }
}

TEST_CASE("derivative of pure powers") {
  CHECK(rl_derivative_of_power(0.5, 1.0, 1.0) ==
        doctest::Approx(1.0 / gamma_fn(1.5)).epsilon(1e-14));
  CHECK(rl_derivative_of_power(0.2, 4.0, 0.5) ==
        doctest::Approx(0.0965949581991533665).epsilon(1e-13));
  // derivative of the constant decays like t^{-gamma}
  const double g = 0.3;
  CHECK(rl_derivative_of_power(g, 0.0, 2.0) ==
        doctest::Approx(std::pow(2.0, -g) / gamma_fn(1.0 - g)).epsilon(1e-13));
  CHECK_THROWS_AS(rl_derivative_of_power(0.5, -0.8, 1.0),
                  std::invalid_argument);
}

TEST_CASE("cached assembler matches the direct computation") {
  const GradedMesh mesh = make_graded_mesh(4, 1.0, 2.0);
  const LegendreBasis basis(1);
  HistoryAssembler assembler(0.7, mesh, 1);
  const Eigen::MatrixXd& first = assembler.block(3, 2);
  const Eigen::MatrixXd direct = history_block(0.7, mesh, basis, 3, 2).entries;
  CHECK((first - direct).cwiseAbs().maxCoeff() == 0.0);
  // second call returns the cached block
  const Eigen::MatrixXd& second = assembler.block(3, 2);
  CHECK(&first == &second);
}

TEST_CASE("argument validation") {
  const GradedMesh mesh = make_graded_mesh(3, 1.0, 1.0);
  const LegendreBasis basis(1);
  CHECK_THROWS_AS(history_block(0.0, mesh, basis, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(history_block(1.0, mesh, basis, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(history_block(0.5, mesh, basis, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(history_block(0.5, mesh, basis, 4, 1),
                  std::invalid_argument);
}
