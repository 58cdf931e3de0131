#pragma once

namespace fracdg {

/// Gamma function for positive real arguments.
/// Relative accuracy better than 1e-13 on [0.1, 50]. Throws
/// std::domain_error for x <= 0.
double gamma_fn(double x);

/// log(Gamma(x)) for x > 0.
double lgamma_fn(double x);

/// Lower incomplete beta integral B_z(a, b) = int_0^z s^{a-1} (1-s)^{b-1} ds
/// (unregularized), for z in [0,1], a > 0, b > 0. Absolute accuracy ~1e-13
/// for the moderate parameters used here (a <= ~10, b in (0,1]).
double inc_beta_lower(double z, double a, double b);

}  // namespace fracdg
