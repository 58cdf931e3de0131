#include "fracdg/oracle.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracdg/basis.hpp"
#include "fracdg/quadrature.hpp"
#include "fracdg/special.hpp"

namespace fracdg::oracle {

namespace {

double gauss_panel(const RealFn& f, double a, double b, const QuadRule& rule) {
  const double len = b - a;
  double s = 0.0;
  for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
    s += rule.weights[g] * f(a + len * rule.nodes[g]);
  }
  return s * len;
}

double adaptive_rec(const RealFn& f, double a, double b, double tol, int depth,
                    const QuadRule& rule) {
  const double whole = gauss_panel(f, a, b, rule);
  const double mid = 0.5 * (a + b);
  const double refined =
      gauss_panel(f, a, mid, rule) + gauss_panel(f, mid, b, rule);
  if (std::abs(refined - whole) <= tol) return refined;
  if (depth <= 0) {
    throw std::runtime_error("adaptive_quad: no convergence at depth limit");
  }
  return adaptive_rec(f, a, mid, 0.5 * tol, depth - 1, rule) +
         adaptive_rec(f, mid, b, 0.5 * tol, depth - 1, rule);
}

/// Visit the Gauss nodes of dyadic panels accumulating toward one endpoint
/// (the panel set of split_quad); cb(x, weight) with weights including the
/// panel lengths.
template <typename Fn>
void for_each_split_node(double a, double b, bool toward_a, int levels,
                         const QuadRule& rule, Fn&& cb) {
  const double len = b - a;
  double w = len;
  for (int k = 0; k < levels; ++k) {
    w *= 0.5;
    // panel of width w adjacent to the previous one
    const double lo = toward_a ? a + w : b - 2.0 * w;
    const double panel_len = w;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double x = lo + panel_len * rule.nodes[g];
      // deep panels can round onto the singular endpoint; see the tip note
      if (x == a || x == b) continue;
      cb(x, panel_len * rule.weights[g]);
    }
  }
  // tip panel at the refined end; by now w is far below one ulp of the
  // endpoint, so affine node positions can collapse onto it exactly. Skip
  // those nodes: the lost mass is at most the tip integral itself, and the
  // collapse would evaluate f at a point where it may be singular.
  const double lo = toward_a ? a : b - w;
  for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
    const double x = lo + w * rule.nodes[g];
    if (x == a || x == b) continue;
    cb(x, w * rule.weights[g]);
  }
}

}  // namespace

double adaptive_quad(const RealFn& f, double a, double b, double abs_tol,
                     int max_depth) {
  if (!(b >= a)) throw std::invalid_argument("adaptive_quad: b < a");
  if (a == b) return 0.0;
  static const QuadRule rule = gauss_legendre(15);
  return adaptive_rec(f, a, b, abs_tol, max_depth, rule);
}

double split_quad(const RealFn& f, double a, double b, bool toward_a,
                  int levels, int points) {
  if (!(b >= a)) throw std::invalid_argument("split_quad: b < a");
  if (a == b) return 0.0;
  if (levels < 1 || points < 1) {
    throw std::invalid_argument("split_quad: bad panel parameters");
  }
  const QuadRule rule = gauss_legendre(points);
  double s = 0.0;
  for_each_split_node(a, b, toward_a, levels, rule,
                      [&](double x, double w) { s += w * f(x); });
  return s;
}

double ModeSolution::value(double t) const {
  if (t == 0.0) return coefficients.empty() ? 0.0 : 1.0;
  const __float128 tq = t;
  __float128 s = 0.0Q;
  for (std::size_t i = 0; i < coefficients_hp.size(); ++i) {
    s += coefficients_hp[i] * powq(tq, exponents_hp[i]);
  }
  return static_cast<double>(s);
}

double ModeSolution::fractional_integral(double mu, double t) const {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("ModeSolution::fractional_integral: mu <= 0");
  }
  if (t == 0.0) return 0.0;
  const __float128 tq = t;
  const __float128 muq = mu;
  __float128 s = 0.0Q;
  for (std::size_t i = 0; i < coefficients_hp.size(); ++i) {
    const __float128 nu = exponents_hp[i];
    s += coefficients_hp[i] *
         expq(lgammaq(nu + 1.0Q) - lgammaq(nu + 1.0Q + muq)) *
         powq(tq, nu + muq);
  }
  return static_cast<double>(s);
}

double ModeSolution::equation_residual(double t) const {
  if (t == 0.0) return value(0.0) - 1.0;
  // evaluate the whole combination in quad precision; the three sums share
  // huge mutually cancelling terms
  const __float128 tq = t;
  __float128 s = -1.0Q;
  const __float128 ea = 1.0Q - static_cast<__float128>(alpha);
  const __float128 eb = 1.0Q - static_cast<__float128>(beta);
  for (std::size_t i = 0; i < coefficients_hp.size(); ++i) {
    const __float128 nu = exponents_hp[i];
    const __float128 tp = powq(tq, nu);
    const __float128 lg1 = lgammaq(nu + 1.0Q);
    __float128 term = coefficients_hp[i] * tp;
    term += coefficients_hp[i] * lambda * kappa1 *
            expq(lg1 - lgammaq(nu + 1.0Q + ea)) * tp * powq(tq, ea);
    term += coefficients_hp[i] * lambda * kappa2 *
            expq(lg1 - lgammaq(nu + 1.0Q + eb)) * tp * powq(tq, eb);
    s += term;
  }
  return static_cast<double>(s);
}

ModeSolution build_mode_solution(double lambda, double kappa1, double kappa2,
                                 double alpha, double beta, double horizon,
                                 double tol) {
  if (lambda < 0.0 || kappa1 < 0.0 || kappa2 < 0.0) {
    throw std::invalid_argument("build_mode_solution: negative coefficient");
  }
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("build_mode_solution: orders outside (0,1)");
  }
  if (!(horizon > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("build_mode_solution: bad horizon/tol");
  }
  ModeSolution ms;
  ms.lambda = lambda;
  ms.kappa1 = kappa1;
  ms.kappa2 = kappa2;
  ms.alpha = alpha;
  ms.beta = beta;

  const double la = lambda * kappa1;
  const double lb = lambda * kappa2;
  const __float128 ea = 1.0Q - static_cast<__float128>(alpha);
  const __float128 eb = 1.0Q - static_cast<__float128>(beta);
  const __float128 log_la = (la > 0.0) ? logq(la) : 0.0Q;
  const __float128 log_lb = (lb > 0.0) ? logq(lb) : 0.0Q;
  const __float128 log_h = logq(horizon);
  constexpr int kMaxOrder = 400;
  constexpr double kEpsQ = 1.93e-34;  // quad-precision unit roundoff

  __float128 sum_abs = 0.0Q;
  double prev_layer = std::numeric_limits<double>::infinity();
  double max_log_scale = 0.0;
  bool converged = false;
  double layer_abs = 0.0;
  double tail_est = std::numeric_limits<double>::infinity();
  for (int r = 0; r <= kMaxOrder; ++r) {
    __float128 layer = 0.0Q;
    for (int p = 0; p <= r; ++p) {
      const int q = r - p;
      if (p > 0 && la == 0.0) continue;
      if (q > 0 && lb == 0.0) continue;
      const __float128 nu = p * ea + q * eb;
      __float128 logc = lgammaq(r + 1.0Q) - lgammaq(p + 1.0Q) -
                        lgammaq(q + 1.0Q) - lgammaq(1.0Q + nu);
      if (p > 0) logc += p * log_la;
      if (q > 0) logc += q * log_lb;
      const __float128 coef = (r % 2 == 0 ? 1.0Q : -1.0Q) * expq(logc);
      ms.exponents.push_back(static_cast<double>(nu));
      ms.coefficients.push_back(static_cast<double>(coef));
      ms.exponents_hp.push_back(nu);
      ms.coefficients_hp.push_back(coef);
      layer += fabsq(coef) * expq(nu * log_h);
      max_log_scale =
          std::max(max_log_scale, std::abs(static_cast<double>(logc)));
    }
    sum_abs += layer;
    ms.order = r;
    layer_abs = static_cast<double>(layer);
    // the layer magnitudes decay sub-geometrically; bound the dropped tail
    // by a geometric series with the observed ratio
    if (r > 0 && layer_abs < prev_layer) {
      const double rho = layer_abs / prev_layer;
      tail_est = (rho < 0.95)
                     ? layer_abs * rho / (1.0 - rho)
                     : std::numeric_limits<double>::infinity();
      if (layer_abs <= 0.25 * tol && tail_est <= 0.25 * tol) {
        converged = true;
        break;
      }
    }
    prev_layer = layer_abs;
  }
  ms.tail_bound = layer_abs + tail_est;
  ms.roundoff_bound =
      kEpsQ * static_cast<double>(sum_abs) * (4.0 + max_log_scale);
  if (!converged) {
    throw std::range_error(
        "build_mode_solution: series not converged by order 400; last layer "
        "bound " +
        std::to_string(layer_abs));
  }
  if (ms.tail_bound + ms.roundoff_bound > tol) {
    throw std::range_error(
        "build_mode_solution: requested tolerance unattainable; achieved "
        "bound " +
        std::to_string(ms.tail_bound + ms.roundoff_bound));
  }
  return ms;
}

double w_series(double lambda, double kappa1, double kappa2, double alpha,
                double beta, double t, double tol) {
  if (t < 0.0) throw std::invalid_argument("w_series: t < 0");
  if (t == 0.0) return 1.0;
  return build_mode_solution(lambda, kappa1, kappa2, alpha, beta, t, tol)
      .value(t);
}

double mittag_leffler(double nu, double x) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw std::invalid_argument("mittag_leffler: nu outside (0,1]");
  }
  double s = 0.0, comp = 0.0;
  double xpow = 1.0;
  for (int k = 0; k < 300; ++k) {
    const double term = xpow / gamma_fn(1.0 + nu * k);
    const double y = term - comp;
    const double next = s + y;
    comp = (next - s) - y;
    s = next;
    if (k > 3 && std::abs(term) < 1e-18 * (1.0 + std::abs(s))) return s;
    xpow *= x;
  }
  throw std::runtime_error("mittag_leffler: series too slow; |x| too large");
}

SpectralReference::SpectralReference(const ProblemSpec& problem,
                                     std::vector<SineMode> modes, double tol)
    : modes_(std::move(modes)), tol_(tol) {
  w_.reserve(modes_.size());
  for (const auto& md : modes_) {
    if (md.k < 1) throw std::invalid_argument("SpectralReference: mode k < 1");
    const double lam = (md.k * M_PI) * (md.k * M_PI);
    w_.push_back(build_mode_solution(lam, problem.kappa1, problem.kappa2,
                                     problem.alpha, problem.beta, problem.T,
                                     tol));
  }
}

double SpectralReference::mode_value(std::size_t idx, double t) const {
  const auto& md = modes_[idx];
  const auto& w = w_[idx];
  double v = md.u0_amplitude * w.value(t);
  if (md.forcing && t > 0.0) {
    const auto h = [&](double s) { return md.forcing(s) * w.value(t - s); };
    const double mid = 0.5 * t;
    const double e = md.forcing_t0_exponent;
    double conv = 0.0;
    if (e > 0.0) {
      // dyadic panels toward 0, the last panel with a rule matched to s^-e
      const QuadRule gl = gauss_legendre(16);
      const QuadRule gj = gauss_jacobi(16, e, JacobiSide::left);
      double hi = mid;
      for (int k = 0; k < 50; ++k) {
        const double lo = 0.5 * hi;
        conv += gauss_panel(h, lo, hi, gl);
        hi = lo;
      }
      for (std::size_t g = 0; g < gj.nodes.size(); ++g) {
        const double xi = gj.nodes[g];
        conv += std::pow(hi, 1.0 - e) * gj.weights[g] * std::pow(xi, e) *
                h(hi * xi);
      }
    } else {
      conv += adaptive_quad(h, 0.0, mid, std::max(0.25 * tol_, 1e-14));
    }
    // w(t-s) has an algebraic kink as s -> t: refine toward the right end
    conv += split_quad(h, mid, t, /*toward_a=*/false, 50, 16);
    v += conv;
  }
  return v;
}

double SpectralReference::value(double x, double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    s += mode_value(i, t) * std::sin(modes_[i].k * M_PI * x);
  }
  return s;
}

double SpectralReference::value_dx(double x, double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    const double kpi = modes_[i].k * M_PI;
    s += mode_value(i, t) * kpi * std::cos(kpi * x);
  }
  return s;
}

double brute_rl_integral(double gamma, const GradedMesh& mesh, int degree,
                         int i, int p, double t) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("brute_rl_integral: gamma outside (0,1)");
  }
  if (i < 1 || i > mesh.num_slabs()) {
    throw std::invalid_argument("brute_rl_integral: bad slab");
  }
  const LegendreBasis basis(degree);
  const double t_lo = mesh.node(i - 1);
  const double t_hi = mesh.node(i);
  const double tau = t_hi - t_lo;
  if (t < t_lo - 1e-13 * tau) {
    throw std::invalid_argument("brute_rl_integral: t left of the slab");
  }
  if (t <= t_lo) return 0.0;

  if (t <= t_hi) {
    // window ends inside the slab: the weight (t-s)^-gamma times a
    // polynomial, integrated exactly by a matched rule
    const double len = t - t_lo;
    const QuadRule gj = gauss_jacobi(degree + 2, gamma, JacobiSide::right);
    double s = 0.0;
    for (std::size_t g = 0; g < gj.nodes.size(); ++g) {
      s += gj.weights[g] * basis.eval(p, len * gj.nodes[g] / tau);
    }
    return std::pow(len, 1.0 - gamma) / gamma_fn(1.0 - gamma) * s;
  }

  // window covers the slab: substitute v = t - s and double the panel width
  // away from v = d, which keeps the integrand v^-gamma scale-free per panel
  const double d = t - t_hi;
  static const QuadRule gl = gauss_legendre(20);
  const auto integrand = [&](double v) {
    return std::pow(v, -gamma) * basis.eval(p, (t - v - t_lo) / tau);
  };
  const double v_end = d + tau;
  double lo = d;
  double acc = 0.0;
  for (int guard = 0; lo < v_end; ++guard) {
    if (guard > 4000) {
      throw std::runtime_error("brute_rl_integral: panel budget exhausted");
    }
    const double hi = std::min(2.0 * lo, v_end);
    acc += gauss_panel(integrand, lo, hi, gl);
    lo = hi;
  }
  return acc / gamma_fn(1.0 - gamma);
}

Eigen::MatrixXd brute_force_kernel_block(double gamma, const GradedMesh& mesh,
                                         int degree, int j, int i,
                                         double tol) {
  if (i < 1 || j < i || j > mesh.num_slabs()) {
    throw std::invalid_argument("brute_force_kernel_block: bad slab pair");
  }
  const LegendreBasis basis(degree);
  const int m = degree;
  const double t_lo = mesh.node(j - 1);
  const double t_hi = mesh.node(j);
  const double tau_j = t_hi - t_lo;
  const int pts = tol <= 1e-11 ? 24 : 16;
  const int levels = 60;
  const QuadRule rule = gauss_legendre(pts);

  Eigen::MatrixXd entries(m + 1, m + 1);
  for (int p = 0; p <= m; ++p) {
    const double f_hi = brute_rl_integral(gamma, mesh, degree, i, p, t_hi);
    const double f_lo = brute_rl_integral(gamma, mesh, degree, i, p, t_lo);
    // inner[q] = int_{I_j} phi_q'((u-t_lo)/tau) / tau * F(u) du, refined
    // toward t_lo where F has its algebraic kink
    Eigen::VectorXd inner = Eigen::VectorXd::Zero(m + 1);
    for_each_split_node(
        t_lo, t_hi, /*toward_a=*/true, levels, rule, [&](double u, double w) {
          const double fv = brute_rl_integral(gamma, mesh, degree, i, p, u);
          const double xr = (u - t_lo) / tau_j;
          for (int q = 0; q <= m; ++q) {
            inner[q] += w * basis.deriv(q, xr) / tau_j * fv;
          }
        });
    for (int q = 0; q <= m; ++q) {
      entries(q, p) =
          basis.eval(q, 1.0) * f_hi - basis.eval(q, 0.0) * f_lo - inner[q];
    }
  }
  return entries;
}

double brute_force_kernel_entry(double gamma, const GradedMesh& mesh,
                                int degree, int j, int i, int q, int p,
                                double tol) {
  return brute_force_kernel_block(gamma, mesh, degree, j, i, tol)(q, p);
}

double PiecewisePolyPath::eval(double t) const {
  const int J = mesh.num_slabs();
  if (t < mesh.node(0) - 1e-14 || t > mesh.node(J) * (1.0 + 1e-14)) {
    throw std::invalid_argument("PiecewisePolyPath::eval outside span");
  }
  int j = 1;
  while (j < J && t > mesh.node(j)) ++j;
  const double xr =
      std::clamp((t - mesh.node(j - 1)) / mesh.width(j), 0.0, 1.0);
  const LegendreBasis basis(degree);
  double s = 0.0;
  for (int p = 0; p <= degree; ++p) s += coeffs(j - 1, p) * basis.eval(p, xr);
  return s;
}

PiecewisePolyPath PiecewisePolyPath::from_solution(const SpaceTimeSolution& sol,
                                                   int dof) {
  PiecewisePolyPath path;
  path.mesh = sol.mesh;
  path.degree = sol.degree;
  const int J = sol.mesh.num_slabs();
  path.coeffs.resize(J, sol.degree + 1);
  for (int j = 1; j <= J; ++j) {
    for (int p = 0; p <= sol.degree; ++p) {
      path.coeffs(j - 1, p) = sol.coeffs[j - 1](p, dof);
    }
  }
  return path;
}

namespace {

/// Monomial coefficients of the path polynomial on slab j (local x in [0,1]).
std::vector<double> slab_monomials(const PiecewisePolyPath& path,
                                   const LegendreBasis& basis, int j) {
  std::vector<double> c(path.degree + 1, 0.0);
  for (int p = 0; p <= path.degree; ++p) {
    const auto& mono = basis.monomial_expansion(p);
    for (std::size_t k = 0; k < mono.size(); ++k) {
      c[k] += path.coeffs(j - 1, p) * mono[k];
    }
  }
  return c;
}

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

/// (poly(x1) - poly(x2)) / (x1 - x2), evaluated without the subtraction.
double divided_difference(const std::vector<double>& c, double x1, double x2) {
  double s = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    // (x1^k - x2^k)/(x1 - x2) = sum_{l=0}^{k-1} x1^l x2^{k-1-l}
    double part = 0.0;
    double x1l = 1.0;
    for (std::size_t l = 0; l < k; ++l) {
      part += x1l * std::pow(x2, static_cast<double>(k - 1 - l));
      x1l *= x1;
    }
    s += c[k] * part;
  }
  return s;
}

double binom_coef(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

/// int_a^b (global s)^{expnt} * x^n ds with x = (s - t0)/tau, by binomial
/// expansion of x^n into global powers of s (exact; mild cancellation when
/// tau << t0, acceptable for a diagnostic).
double weighted_monomial_integral(int n, double expnt, double t0, double tau,
                                  double a, double b) {
  double total = 0.0;
  for (int l = 0; l <= n; ++l) {
    const double coef = binom_coef(n, l) * std::pow(-t0, n - l) /
                        std::pow(tau, n);
    const double e = l + expnt + 1.0;
    total += coef * (std::pow(b, e) - std::pow(a, e)) / e;
  }
  return total;
}

}  // namespace

double seminorm_estimate(double order, const PiecewisePolyPath& path) {
  const int J = path.mesh.num_slabs();
  if (J > 32) {
    throw std::invalid_argument("seminorm_estimate: J > 32 rejected");
  }
  if (!(order > 0.0 && order < 1.0) || std::abs(order - 0.5) < 1e-6) {
    throw std::invalid_argument("seminorm_estimate: order must avoid 1/2");
  }
  const double s2 = 2.0 * order;
  const LegendreBasis basis(path.degree);
  const double T = path.mesh.node(J);

  double interior = 0.0;
  // diagonal slab terms, exact: weight splits into sigma^{2-2o} xi^{1-2o}
  {
    const int k = path.degree + 2;
    const QuadRule r_sigma = detail::jacobi_rule(k, 0.0, 2.0 - s2);
    const QuadRule r_xi = detail::jacobi_rule(k, 0.0, 1.0 - s2);
    for (int a = 1; a <= J; ++a) {
      const auto mono = slab_monomials(path, basis, a);
      double acc = 0.0;
      for (std::size_t gs = 0; gs < r_sigma.nodes.size(); ++gs) {
        const double sg = r_sigma.nodes[gs];
        for (std::size_t gx = 0; gx < r_xi.nodes.size(); ++gx) {
          const double xi = r_xi.nodes[gx];
          const double dd = divided_difference(mono, sg, sg * (1.0 - xi));
          acc += r_sigma.weights[gs] * r_xi.weights[gx] * dd * dd;
        }
      }
      interior += 2.0 * std::pow(path.mesh.width(a), 1.0 - s2) * acc;
    }
  }
  // adjacent pairs: outer geometric toward the shared node, inner panels
  // doubling away from the running distance; closed-form jump tip
  {
    const QuadRule rule = gauss_legendre(14);
    for (int a = 2; a <= J; ++a) {
      const int b = a - 1;
      const double c = path.mesh.node(a - 1);
      const double tau_a = path.mesh.width(a);
      const double tau_b = path.mesh.width(b);
      const auto ca = slab_monomials(path, basis, a);
      const auto cb = slab_monomials(path, basis, b);
      const auto inner_for = [&](double x) {
        const double va = poly_eval(ca, x / tau_a);
        double acc = 0.0;
        const double d_end = x + tau_b;
        double lo = x;
        const auto ig = [&](double d) {
          const double vb = poly_eval(cb, (tau_b - (d - x)) / tau_b);
          const double df = va - vb;
          return df * df * std::pow(d, -1.0 - s2);
        };
        while (lo < d_end) {
          const double hi = std::min(2.0 * lo, d_end);
          acc += gauss_panel(ig, lo, hi, rule);
          lo = hi;
        }
        return acc;
      };
      const int levels = 80;
      double pair = 0.0;
      double w = tau_a;
      double hi_x = tau_a;
      for (int k = 0; k < levels; ++k) {
        w *= 0.5;
        pair += gauss_panel(inner_for, w, hi_x, rule);
        hi_x = w;
      }
      // remaining sliver [0, w]: constant-in-x jump approximation, exact in d
      const double jump = poly_eval(ca, 0.0) - poly_eval(cb, 1.0);
      pair += jump * jump / (s2 * (1.0 - s2)) *
              (std::pow(w, 1.0 - s2) - std::pow(w + tau_b, 1.0 - s2) +
               std::pow(tau_b, 1.0 - s2));
      interior += 2.0 * pair;
    }
  }
  // separated pairs: tensor Gauss panels refined toward the facing ends
  {
    const QuadRule rule = gauss_legendre(12);
    const int levels = 30;
    for (int a = 3; a <= J; ++a) {
      const auto ca = slab_monomials(path, basis, a);
      const double a_lo = path.mesh.node(a - 1);
      const double tau_a = path.mesh.width(a);
      for (int b = 1; b <= a - 2; ++b) {
        const auto cb = slab_monomials(path, basis, b);
        const double b_lo = path.mesh.node(b - 1);
        const double tau_b = path.mesh.width(b);
        double pair = 0.0;
        for_each_split_node(
            a_lo, a_lo + tau_a, /*toward_a=*/true, levels, rule,
            [&](double s, double ws) {
              const double va = poly_eval(ca, (s - a_lo) / tau_a);
              for_each_split_node(
                  b_lo, b_lo + tau_b, /*toward_a=*/false, levels, rule,
                  [&](double u, double wu) {
                    const double vb = poly_eval(cb, (u - b_lo) / tau_b);
                    const double df = va - vb;
                    pair += ws * wu * df * df * std::pow(s - u, -1.0 - s2);
                  });
            });
        interior += 2.0 * pair;
      }
    }
  }

  // exterior terms of the zero extension:
  // (1/order) int v^2 [ s^{-2o} + (T-s)^{-2o} ] ds, slabwise exact
  double exterior = 0.0;
  for (int a = 1; a <= J; ++a) {
    const auto mono = slab_monomials(path, basis, a);
    // square the polynomial (local coordinates)
    std::vector<double> sq(2 * mono.size() - 1, 0.0);
    for (std::size_t i1 = 0; i1 < mono.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < mono.size(); ++i2) {
        sq[i1 + i2] += mono[i1] * mono[i2];
      }
    }
    const double t0 = path.mesh.node(a - 1);
    const double t1 = path.mesh.node(a);
    const double tau = t1 - t0;
    for (std::size_t n = 0; n < sq.size(); ++n) {
      if (sq[n] == 0.0) continue;
      // weight s^{-2o}
      exterior += sq[n] * weighted_monomial_integral(static_cast<int>(n), -s2,
                                                     t0, tau, t0, t1);
      // weight (T-s)^{-2o}: substitute y = T - s, so x = ((T - t0) - y)/tau
      // with y in [T - t1, T - t0] and expand powers of x in y
      double total = 0.0;
      for (std::size_t l = 0; l <= n; ++l) {
        const double coef = binom_coef(static_cast<int>(n),
                                       static_cast<int>(l)) *
                            std::pow(T - t0, static_cast<double>(n - l)) *
                            (l % 2 == 0 ? 1.0 : -1.0) /
                            std::pow(tau, static_cast<double>(n));
        const double e = static_cast<double>(l) - s2 + 1.0;
        total += coef * (std::pow(T - t0, e) - std::pow(T - t1, e)) / e;
      }
      exterior += sq[n] * total;
    }
  }
  exterior /= order;

  return std::sqrt(interior + exterior);
}

}  // namespace fracdg::oracle
