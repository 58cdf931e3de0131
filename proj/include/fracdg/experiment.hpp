#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracdg/fem1d.hpp"
#include "fracdg/solver.hpp"

namespace fracdg {

/// One sweep block of the convergence study: a manufactured problem
/// u = t^r sin(pi x) run over the cross product of the listed grading
/// exponents, trial degrees, and slab counts.
struct ExperimentConfig {
  double alpha = 0.2;
  double beta = 0.8;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double T = 1.0;
  int cells = 32;
  int degree_space = 3;
  double r = 4.0;
  std::vector<int> J_values;
  std::vector<double> sigma_values;
  std::vector<int> m_values;
};

/// One table row. Orders compare against the run with half the slab count
/// in the same (sigma, m) group and are empty when that run is absent.
struct RunCell {
  int J = 0;
  double sigma = 1.0;
  int m = 0;
  double r = 0.0;
  double E1 = 0.0;
  double E2 = 0.0;
  std::optional<double> order1;
  std::optional<double> order2;
  std::string failure;  // empty on success

  bool ok() const { return failure.empty(); }
};

struct ConvergenceReport {
  std::vector<RunCell> rows;
  std::string config_digest;
  double runtime_seconds = 0.0;  // never written to table files

  bool all_ok() const;
  /// Comma-separated table: one digest comment, a header row, then the rows
  /// (errors %.2e, orders %.2f). Byte-identical across runs of one config.
  std::string csv() const;
  /// Aligned human-readable table, failures annotated.
  std::string table() const;
};

/// Nodal errors of a solution against the exact solution:
/// first = max over j = 1..J of the L2 error at t_j, second = the j = J term.
/// When exact_dx is provided the comparison target is the elliptic
/// projection of the exact solution (its nodal finite element shadow),
/// which isolates the time-stepping error; otherwise the plain L2 distance
/// to exact is used. quad_points = 0 picks the default rule.
std::pair<double, double> error_metrics(const SpaceTimeSolution& solution,
                                        const SpatialFem& fem,
                                        const SpaceTimeFn& exact,
                                        const SpaceTimeFn& exact_dx = nullptr,
                                        int quad_points = 0);

/// log2(coarse / fine); both inputs must be positive.
double observed_order(double error_coarse, double error_fine);

/// Run every cell of every block, capturing per-cell failures without
/// aborting. Deterministic for a fixed config and environment.
ConvergenceReport run_sweep(const std::vector<ExperimentConfig>& blocks);

inline ConvergenceReport run_experiment(const ExperimentConfig& config) {
  return run_sweep({config});
}

/// The three built-in studies:
/// 1: smooth data (r = 4), uniform mesh, m in {0,1}, J = 64..1024.
/// 2: singular data on uniform meshes; m = 0 with r in {0.2, 0.5, 0.8} and
///    m = 1 with r in {0.5, 0.8, 1.5}, J = 16..256.
/// 3: graded meshes, r in {0.2, 0.4}, m in {0,1}, with the two critical
///    grading exponents computed from sigma_star / sigma_star_star.
std::vector<ExperimentConfig> experiment_preset(int which);

/// Override for quadrature point counts used by the error metrics and data
/// projections (diagnostic only): reads the environment variable
/// FRACDG_QUAD_POINTS, returning 0 (use defaults) when unset or invalid.
int quadrature_override();

}  // namespace fracdg
