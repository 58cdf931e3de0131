#include "fracdg/basis.hpp"

#include <stdexcept>

namespace fracdg {

namespace {

// Monomial coefficients of the shifted Legendre polynomials P_p(2x-1),
// p = 0..4, lowest power first.
constexpr std::array<std::array<double, 5>, 5> kCoeffs = {{
    {1.0, 0.0, 0.0, 0.0, 0.0},
    {-1.0, 2.0, 0.0, 0.0, 0.0},
    {1.0, -6.0, 6.0, 0.0, 0.0},
    {-1.0, 12.0, -30.0, 20.0, 0.0},
    {1.0, -20.0, 90.0, -140.0, 70.0},
}};

}  // namespace

LegendreBasis::LegendreBasis(int m) : m_(m) {
  if (m < 0 || m > kMaxDegree)
    throw std::invalid_argument("LegendreBasis: degree out of [0, 4]");
  coeffs_.resize(m + 1);
  for (int p = 0; p <= m; ++p)
    coeffs_[p].assign(kCoeffs[p].begin(), kCoeffs[p].begin() + p + 1);
}

double LegendreBasis::eval(int p, double x) const {
  const auto& c = coeffs_.at(p);
  double v = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * x + c[k];
  return v;
}

double LegendreBasis::deriv(int p, double x) const {
  const auto& c = coeffs_.at(p);
  double v = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
    v = v * x + c[k] * k;
  return v;
}

const std::vector<double>& LegendreBasis::monomial_expansion(int p) const {
  return coeffs_.at(p);
}

double LegendreBasis::power_moment(int p, int n) const {
  if (n < 0) throw std::invalid_argument("power_moment: n must be >= 0");
  if (n < p) return 0.0;
  const auto& c = coeffs_.at(p);
  double s = 0.0;
  for (int k = 0; k < static_cast<int>(c.size()); ++k)
    s += c[k] / static_cast<double>(k + n + 1);
  return s;
}

}  // namespace fracdg
