#include "fracdg/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdg {

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
  return std::tgamma(x);
}

double lgamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("lgamma_fn: requires x > 0");
  return std::lgamma(x);
}

namespace {

// Continued fraction for the regularized incomplete beta I_z(a,b),
// valid for z < (a+1)/(a+b+2). Modified Lentz iteration.
double beta_cf(double z, double a, double b) {
  constexpr int kMaxIter = 300;
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * z / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * z / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("inc_beta_lower: continued fraction did not converge");
}

}  // namespace

double inc_beta_lower(double z, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("inc_beta_lower: requires a > 0 and b > 0");
  if (!(z >= 0.0 && z <= 1.0))
    throw std::domain_error("inc_beta_lower: requires z in [0, 1]");
  if (z == 0.0) return 0.0;
  const double complete =
      std::exp(lgamma_fn(a) + lgamma_fn(b) - lgamma_fn(a + b));
  if (z == 1.0) return complete;
  // front factor z^a (1-z)^b / (a * B(a,b)) of the regularized CF form
  const double lfront = a * std::log(z) + b * std::log1p(-z);
  double iz;
  if (z < (a + 1.0) / (a + b + 2.0)) {
    iz = std::exp(lfront - lgamma_fn(a) - lgamma_fn(b) + lgamma_fn(a + b)) *
         beta_cf(z, a, b) / a;
  } else {
    iz = 1.0 -
         std::exp(lfront - lgamma_fn(a) - lgamma_fn(b) + lgamma_fn(a + b)) *
             beta_cf(1.0 - z, b, a) / b;
  }
  return iz * complete;
}

}  // namespace fracdg
