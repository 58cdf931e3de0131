#include "fracdg/kernel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "fracdg/special.hpp"

namespace fracdg {

namespace {

// Binomial coefficients up to the largest basis degree plus one.
constexpr std::array<std::array<double, 5>, 5> kBinom = {{
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},
    {1, 4, 6, 4, 1},
}};

}  // namespace

double power_moment(const LegendreBasis& basis, int q, double t_lo,
                    double t_hi, double c, double mu) {
  if (!(t_hi > t_lo)) throw std::invalid_argument("power_moment: empty slab");
  if (mu <= -1.0) throw std::invalid_argument("power_moment: mu <= -1");
  const double tau = t_hi - t_lo;
  const double dist = t_lo - c;
  if (dist < -1e-14 * tau) {
    throw std::invalid_argument("power_moment: cut right of slab start");
  }
  const auto& cq = basis.monomial_expansion(q);
  const int nq = static_cast<int>(cq.size());

  if (dist <= 0.0) {
    // Cut at the slab start: t - c = tau * x.
    double s = 0.0;
    for (int k = 0; k < nq; ++k) s += cq[k] / (k + mu + 1.0);
    return std::pow(tau, mu + 1.0) * s;
  }

  if (dist >= 2.0 * tau) {
    // Far cut: (t - c)^mu = dist^mu (1 + rho x)^mu, rho = tau / dist <= 1/2,
    // expanded binomially against the moments of phi_q.
    const double rho = tau / dist;
    double s = 0.0;
    double binom = 1.0;  // binom(mu, n)
    double rho_n = 1.0;
    constexpr int kMaxTerms = 200;
    for (int n = 0; n < kMaxTerms; ++n) {
      s += binom * rho_n * basis.power_moment(q, n);
      binom *= (mu - n) / (n + 1.0);
      rho_n *= rho;
      if (n > 5 && std::abs(binom * rho_n) < 1e-19) break;
    }
    return tau * std::pow(dist, mu) * s;
  }

  // Near cut: write phi_q((y - dist) / tau) as a polynomial in y / tau for
  // y = t - c in [dist, dist + tau] and integrate each power exactly.
  const double d = dist / tau;
  std::array<double, 5> e{};
  for (int k = 0; k < nq; ++k) {
    double md_pow = 1.0;  // (-d)^(k - i), built from i = k downwards
    for (int i = k; i >= 0; --i) {
      e[i] += cq[k] * kBinom[k][i] * md_pow;
      md_pow *= -d;
    }
  }
  double s = 0.0;
  double tau_i = 1.0;
  const double hi = dist + tau;
  for (int i = 0; i < nq; ++i) {
    const double ex = i + mu + 1.0;
    s += e[i] * (std::pow(hi, ex) - std::pow(dist, ex)) / (ex * tau_i);
    tau_i *= tau;
  }
  return s;
}

HistoryBlock history_block(double gamma, const GradedMesh& mesh,
                           const LegendreBasis& basis, int j, int i) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("history_block: gamma outside (0,1)");
  }
  if (i < 1 || j < i || j > mesh.num_slabs()) {
    throw std::invalid_argument("history_block: bad slab pair");
  }
  const int m = basis.degree();
  const double t_lo = mesh.node(j - 1);
  const double t_hi = mesh.node(j);
  const double cut_lo = mesh.node(i - 1);
  const double cut_hi = mesh.node(i);
  const double tau_i = cut_hi - cut_lo;
  const bool strict_past = i < j;

  // Power-rule factors Gamma(k+1) / Gamma(k+1-gamma) and the two families of
  // test moments, which do not depend on the trial index p.
  std::array<double, 5> ratio{};
  Eigen::MatrixXd w_lo(m + 1, m + 1);
  Eigen::MatrixXd w_hi = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int k = 0; k <= m; ++k) {
    ratio[k] = gamma_fn(k + 1.0) / gamma_fn(k + 1.0 - gamma);
  }
  for (int q = 0; q <= m; ++q) {
    for (int k = 0; k <= m; ++k) {
      w_lo(q, k) = power_moment(basis, q, t_lo, t_hi, cut_lo, k - gamma);
      if (strict_past) {
        w_hi(q, k) = power_moment(basis, q, t_lo, t_hi, cut_hi, k - gamma);
      }
    }
  }

  HistoryBlock block{j, i, gamma, Eigen::MatrixXd::Zero(m + 1, m + 1)};
  for (int p = 0; p <= m; ++p) {
    const auto& a = basis.monomial_expansion(p);
    // Re-expansion of phi_p about the slab's right endpoint, x = 1 + z.
    std::array<double, 5> b{};
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
      for (int l = 0; l <= k; ++l) b[l] += a[k] * kBinom[k][l];
    }
    double tau_pow = 1.0;  // tau_i^{-k}
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
      const double scale = ratio[k] * (1.0 / tau_pow);
      for (int q = 0; q <= m; ++q) {
        double v = a[k] * scale * w_lo(q, k);
        if (strict_past) v -= b[k] * scale * w_hi(q, k);
        block.entries(q, p) += v;
      }
      tau_pow *= tau_i;
    }
  }
  return block;
}

double rl_integral_of_slab_poly(double gamma, const GradedMesh& mesh,
                                const LegendreBasis& basis, int i, int p,
                                double t) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("rl_integral_of_slab_poly: gamma outside (0,1)");
  }
  if (i < 1 || i > mesh.num_slabs()) {
    throw std::invalid_argument("rl_integral_of_slab_poly: bad slab index");
  }
  const double t_lo = mesh.node(i - 1);
  const double tau = mesh.width(i);
  if (t <= t_lo) return 0.0;
  const double x = (t - t_lo) / tau;
  const double z = std::min(1.0, x) / x;
  const auto& cp = basis.monomial_expansion(p);
  double s = 0.0;
  for (int k = 0; k < static_cast<int>(cp.size()); ++k) {
    if (cp[k] == 0.0) continue;
    s += cp[k] * std::pow(x, k + 1.0 - gamma) *
         inc_beta_lower(z, k + 1.0, 1.0 - gamma);
  }
  return std::pow(tau, 1.0 - gamma) / gamma_fn(1.0 - gamma) * s;
}

double rl_derivative_of_power(double gamma, double r, double t) {
  if (!(r + 1.0 - gamma > 0.0)) {
    throw std::invalid_argument("rl_derivative_of_power: r <= gamma - 1");
  }
  if (t < 0.0) throw std::invalid_argument("rl_derivative_of_power: t < 0");
  if (t == 0.0) {
    if (r == gamma) return gamma_fn(r + 1.0);
    if (r < gamma) throw std::domain_error("rl_derivative_of_power: singular at 0");
    return 0.0;
  }
  return gamma_fn(r + 1.0) / gamma_fn(r + 1.0 - gamma) * std::pow(t, r - gamma);
}

HistoryAssembler::HistoryAssembler(double gamma, const GradedMesh& mesh,
                                   int degree)
    : gamma_(gamma), mesh_(mesh), basis_(degree) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("HistoryAssembler: gamma outside (0,1)");
  }
}

const Eigen::MatrixXd& HistoryAssembler::block(int j, int i) {
  const auto key = std::make_pair(j, i);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(key, history_block(gamma_, mesh_, basis_, j, i).entries)
             .first;
  }
  return it->second;
}

}  // namespace fracdg
