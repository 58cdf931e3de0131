#include "fracdg/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdg {

GradedMesh make_graded_mesh(int J, double T, double sigma) {
  if (J < 1) throw std::invalid_argument("make_graded_mesh: J must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("make_graded_mesh: T must be > 0");
  if (!(sigma >= 1.0))
    throw std::invalid_argument("make_graded_mesh: sigma must be >= 1");
  GradedMesh mesh;
  mesh.T = T;
  mesh.sigma = sigma;
  mesh.nodes.resize(J + 1);
  for (int j = 0; j <= J; ++j)
    mesh.nodes[j] = std::pow(static_cast<double>(j) / J, sigma) * T;
  mesh.nodes[0] = 0.0;
  mesh.nodes[J] = T;
  return mesh;
}

double sigma_star(int m, double r, double beta) {
  if (!(2.0 * r + 1.0 - beta > 0.0))
    throw std::invalid_argument("sigma_star: requires 2r + 1 - beta > 0");
  return (2.0 * m + 2.0 - beta) / (2.0 * r + 1.0 - beta);
}

double sigma_star_star(int m, double r, double beta) {
  if (!(2.0 * r + 1.0 - beta > 0.0))
    throw std::invalid_argument("sigma_star_star: requires 2r + 1 - beta > 0");
  return (2.0 * m + 2.0) / (2.0 * r + 1.0 - beta);
}

}  // namespace fracdg
