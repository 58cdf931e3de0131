#include "fracdg/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "fracdg/mesh.hpp"

namespace fracdg {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_of(const std::vector<ExperimentConfig>& blocks) {
  std::string canon;
  for (const auto& b : blocks) {
    canon += fmt("%.17g|", b.alpha) + fmt("%.17g|", b.beta) +
             fmt("%.17g|", b.kappa1) + fmt("%.17g|", b.kappa2) +
             fmt("%.17g|", b.T) + std::to_string(b.cells) + "|" +
             std::to_string(b.degree_space) + "|" + fmt("%.17g|", b.r);
    for (int J : b.J_values) canon += std::to_string(J) + ",";
    canon += "|";
    for (double s : b.sigma_values) canon += fmt("%.17g,", s);
    canon += "|";
    for (int m : b.m_values) canon += std::to_string(m) + ",";
    canon += ";";
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(canon)));
  return buf;
}

}  // namespace

int quadrature_override() {
  const char* env = std::getenv("FRACDG_QUAD_POINTS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 64) return 0;
  return static_cast<int>(v);
}

std::pair<double, double> error_metrics(const SpaceTimeSolution& solution,
                                        const SpatialFem& fem,
                                        const SpaceTimeFn& exact,
                                        const SpaceTimeFn& exact_dx,
                                        int quad_points) {
  if (!exact && !exact_dx) {
    throw std::invalid_argument("error_metrics: no exact solution given");
  }
  const int J = solution.mesh.num_slabs();
  double e_max = 0.0;
  double e_final = 0.0;
  for (int j = 1; j <= J; ++j) {
    const double t = solution.mesh.node(j);
    double e;
    if (exact_dx) {
      const Eigen::VectorXd ref = fem.ritz_project(
          [&](double x) { return exact_dx(x, t); }, quad_points);
      e = fem.l2_norm(solution.trace.row(j).transpose() - ref);
    } else {
      e = fem.l2_error(solution.trace.row(j).transpose(),
                       [&](double x) { return exact(x, t); }, quad_points);
    }
    e_max = std::max(e_max, e);
    if (j == J) e_final = e;
  }
  return {e_max, e_final};
}

double observed_order(double error_coarse, double error_fine) {
  if (!(error_coarse > 0.0) || !(error_fine > 0.0)) {
    throw std::invalid_argument("observed_order: errors must be positive");
  }
  return std::log2(error_coarse / error_fine);
}

ConvergenceReport run_sweep(const std::vector<ExperimentConfig>& blocks) {
  const auto t_start = std::chrono::steady_clock::now();
  const int qp = quadrature_override();
  ConvergenceReport report;
  report.config_digest = digest_of(blocks);

  for (const auto& block : blocks) {
    for (double sigma : block.sigma_values) {
      for (int m : block.m_values) {
        std::vector<RunCell> group;
        for (int J : block.J_values) {
          RunCell cell;
          cell.J = J;
          cell.sigma = sigma;
          cell.m = m;
          cell.r = block.r;
          try {
            const ProblemSpec problem =
                manufactured_problem(block.alpha, block.beta, block.kappa1,
                                     block.kappa2, block.T, block.r);
            const Forcing forcing = manufactured_forcing(problem, block.r);
            const GradedMesh mesh = make_graded_mesh(J, block.T, sigma);
            const SpatialFem fem(block.cells, block.degree_space);
            const SpaceTimeSolution sol =
                solve(problem, forcing, mesh, m, fem);
            const auto [e1, e2] = error_metrics(sol, fem, problem.exact,
                                                problem.exact_dx, qp);
            cell.E1 = e1;
            cell.E2 = e2;
          } catch (const std::exception& ex) {
            cell.failure = ex.what();
          }
          group.push_back(std::move(cell));
        }
        // orders against the half-J member of the same group, wherever it
        // appears in the list (row order never affects values)
        std::map<int, const RunCell*> by_J;
        for (const auto& c : group) {
          if (c.ok()) by_J[c.J] = &c;
        }
        for (auto& c : group) {
          if (!c.ok() || c.J % 2 != 0) continue;
          const auto it = by_J.find(c.J / 2);
          if (it == by_J.end()) continue;
          const RunCell& prev = *it->second;
          if (prev.E1 > 0.0 && c.E1 > 0.0) {
            c.order1 = observed_order(prev.E1, c.E1);
          }
          if (prev.E2 > 0.0 && c.E2 > 0.0) {
            c.order2 = observed_order(prev.E2, c.E2);
          }
        }
        for (auto& c : group) report.rows.push_back(std::move(c));
      }
    }
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return report;
}

bool ConvergenceReport::all_ok() const {
  for (const auto& c : rows) {
    if (!c.ok()) return false;
  }
  return true;
}

std::string ConvergenceReport::csv() const {
  std::string out = "# config " + config_digest + "\n";
  out += "J,sigma,m,r,E1,order1,E2,order2\n";
  for (const auto& c : rows) {
    out += std::to_string(c.J) + "," + fmt("%.10g", c.sigma) + "," +
           std::to_string(c.m) + "," + fmt("%.10g", c.r) + ",";
    if (c.ok()) {
      out += fmt("%.2e", c.E1) + ",";
      out += c.order1 ? fmt("%.2f", *c.order1) : std::string();
      out += "," + fmt("%.2e", c.E2) + ",";
      out += c.order2 ? fmt("%.2f", *c.order2) : std::string();
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

std::string ConvergenceReport::table() const {
  char line[256];
  std::snprintf(line, sizeof(line), "%6s  %-10s %2s %6s  %-9s %-6s %-9s %-6s\n",
                "J", "sigma", "m", "r", "E1", "ord1", "E2", "ord2");
  std::string out = line;
  for (const auto& c : rows) {
    if (c.ok()) {
      std::snprintf(line, sizeof(line),
                    "%6d  %-10.6g %2d %6g  %-9.2e %-6s %-9.2e %-6s\n", c.J,
                    c.sigma, c.m, c.r, c.E1,
                    c.order1 ? fmt("%.2f", *c.order1).c_str() : "-", c.E2,
                    c.order2 ? fmt("%.2f", *c.order2).c_str() : "-");
    } else {
      std::snprintf(line, sizeof(line), "%6d  %-10.6g %2d %6g  FAILED: %s\n",
                    c.J, c.sigma, c.m, c.r, c.failure.c_str());
    }
    out += line;
  }
  return out;
}

std::vector<ExperimentConfig> experiment_preset(int which) {
  ExperimentConfig base;
  switch (which) {
    case 1: {
      base.r = 4.0;
      base.J_values = {64, 128, 256, 512, 1024};
      base.sigma_values = {1.0};
      base.m_values = {0, 1};
      return {base};
    }
    case 2: {
      std::vector<ExperimentConfig> blocks;
      const std::vector<int> J_list = {16, 32, 64, 128, 256};
      for (double r : {0.2, 0.5, 0.8}) {
        ExperimentConfig b = base;
        b.r = r;
        b.J_values = J_list;
        b.sigma_values = {1.0};
        b.m_values = {0};
        blocks.push_back(std::move(b));
      }
      for (double r : {0.5, 0.8, 1.5}) {
        ExperimentConfig b = base;
        b.r = r;
        b.J_values = J_list;
        b.sigma_values = {1.0};
        b.m_values = {1};
        blocks.push_back(std::move(b));
      }
      return blocks;
    }
    case 3: {
      std::vector<ExperimentConfig> blocks;
      for (double r : {0.2, 0.4}) {
        for (int m : {0, 1}) {
          ExperimentConfig b = base;
          b.r = r;
          b.m_values = {m};
          // one mild literal exponent plus the two critical ones
          const double lead =
              (r == 0.2) ? (m == 0 ? 1.5 : 3.0) : (m == 0 ? 1.1 : 2.0);
          b.sigma_values = {lead, sigma_star(m, r, b.beta),
                            sigma_star_star(m, r, b.beta)};
          b.J_values = (m == 0) ? std::vector<int>{16, 32, 64, 128, 256}
                                : std::vector<int>{4, 8, 16, 32, 64};
          blocks.push_back(std::move(b));
        }
      }
      return blocks;
    }
    default:
      throw std::invalid_argument("experiment_preset: expected 1, 2, or 3");
  }
}

}  // namespace fracdg
