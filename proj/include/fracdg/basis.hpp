#pragma once

#include <array>
#include <vector>

namespace fracdg {

/// Shifted Legendre polynomials phi_0..phi_m on the reference interval
/// [0, 1], normalized so that phi_p(1) = 1 (hence phi_p(0) = (-1)^p and
/// int_0^1 phi_p phi_q = delta_pq / (2p + 1)). Degrees up to 4.
class LegendreBasis {
 public:
  static constexpr int kMaxDegree = 4;

  explicit LegendreBasis(int m);

  int degree() const { return m_; }
  int size() const { return m_ + 1; }

  double eval(int p, double x) const;
  double deriv(int p, double x) const;

  /// Monomial coefficients of phi_p: phi_p(x) = sum_k coeff[k] x^k.
  const std::vector<double>& monomial_expansion(int p) const;

  /// int_0^1 phi_p(x) x^n dx. Zero for n < p by orthogonality.
  double power_moment(int p, int n) const;

 private:
  int m_;
  std::vector<std::vector<double>> coeffs_;
};

}  // namespace fracdg
