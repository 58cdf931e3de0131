#pragma once

#include <vector>

namespace fracdg {

/// Temporal mesh 0 = t_0 < t_1 < ... < t_J = T with t_j = (j/J)^sigma * T.
/// sigma = 1 is uniform; sigma > 1 concentrates slabs near t = 0.
struct GradedMesh {
  double T = 1.0;
  double sigma = 1.0;
  std::vector<double> nodes;  // size J + 1

  int num_slabs() const { return static_cast<int>(nodes.size()) - 1; }
  /// Width of slab j, 1-based: I_j = (t_{j-1}, t_j).
  double width(int j) const { return nodes[j] - nodes[j - 1]; }
  double node(int j) const { return nodes[j]; }
};

/// Build the graded mesh. Requires J >= 1, T > 0, sigma >= 1.
GradedMesh make_graded_mesh(int J, double T, double sigma);

/// Grading exponent at which the maximal nodal-error rate is first attained
/// for trial degree m and data exponent r: (2m + 2 - beta) / (2r + 1 - beta).
double sigma_star(int m, double r, double beta);

/// Grading exponent at which the final-time rate saturates:
/// (2m + 2) / (2r + 1 - beta).
double sigma_star_star(int m, double r, double beta);

}  // namespace fracdg
