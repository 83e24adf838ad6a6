#include "fracsum/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracsum/asymptotic.hpp"
#include "fracsum/root_locus.hpp"

namespace fracsum {

namespace {

void check_x(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw Error(Errc::domain_error, "x must be finite and >= 0");
  }
}

double alpha_min(const ExpPolyParams& p) {
  double m = p.alpha[0];
  for (double a : p.alpha) {
    m = std::min(m, a);
  }
  return m;
}

}  // namespace

ExpPolyParams make_exp_poly(std::vector<double> a, std::vector<double> b,
                            std::vector<double> alpha) {
  if (a.size() != b.size() || a.size() != alpha.size()) {
    throw Error(Errc::length_mismatch, "a, b, alpha must have equal length");
  }
  if (a.empty()) {
    throw Error(Errc::empty_input, "at least one term is required");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i]) || !std::isfinite(b[i]) ||
        !std::isfinite(alpha[i])) {
      throw Error(Errc::non_finite, "coefficients must be finite");
    }
    if (a[i] <= 0.0 || b[i] <= 0.0 || alpha[i] <= 0.0) {
      throw Error(Errc::non_positive_coefficient,
                  "coefficients must be strictly positive");
    }
  }
  return ExpPolyParams{std::move(a), std::move(b), std::move(alpha)};
}

double eval_exp_poly(const ExpPolyParams& p, double x) {
  check_x(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += (p.a[i] * x - p.b[i]) * std::exp(-p.alpha[i] * x);
  }
  return sum;
}

double eval_exp_poly_rescaled(const ExpPolyParams& p, double x) {
  check_x(x);
  const double amin = alpha_min(p);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += (p.a[i] * x - p.b[i]) * std::exp(-(p.alpha[i] - amin) * x);
  }
  return sum;
}

double find_unique_positive_zero(const ExpPolyParams& p, double tol) {
  if (!(tol > 0.0)) {
    throw Error(Errc::domain_error, "tol must be > 0");
  }
  double upper = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    upper = std::max(upper, p.b[i] / p.a[i]);
  }
  double fu = eval_exp_poly_rescaled(p, upper);
  if (fu == 0.0) {
    return upper;
  }
  // Every term is nonnegative at max b_i/a_i; a slightly negative value
  // can only come from rounding in b/a itself.  Nudge upward.
  for (int tries = 0; fu < 0.0; ++tries) {
    if (tries > 100) {
      throw Error(Errc::bracket_failure, "upper endpoint stayed negative");
    }
    upper = std::nextafter(upper, 2.0 * upper + 1.0);
    fu = eval_exp_poly_rescaled(p, upper);
  }

  double lo = 0.0;  // f(0) = -sum b < 0
  double hi = upper;
  double mid = 0.5 * hi;
  for (int iter = 0; iter < kMaxBisectIters; ++iter) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max(1.0, mid)) {
      break;
    }
    if (eval_exp_poly_rescaled(p, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double g_m_eval(const ExpPolyParams& p, int m, double x, int order) {
  check_x(x);
  if (m < 1) {
    throw Error(Errc::domain_error, "m must be >= 1");
  }
  if (order < 0 || order > 2) {
    throw Error(Errc::order_out_of_range, "order must be 0, 1 or 2");
  }
  const double amin = alpha_min(p);
  const double inv_m = 1.0 / m;
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double beta = p.alpha[i] - amin + inv_m;
    const double e = std::exp(-beta * x);
    switch (order) {
      case 0:
        sum += (p.a[i] * x - p.b[i]) * e;
        break;
      case 1:
        sum += (p.a[i] - beta * (p.a[i] * x - p.b[i])) * e;
        break;
      default:
        sum += beta * (beta * p.a[i] * x - 2.0 * p.a[i] - beta * p.b[i]) * e;
        break;
    }
  }
  return sum;
}

std::pair<double, double> g_m_second_deriv_zero_bounds(const ExpPolyParams& p,
                                                       int m) {
  if (m < 1) {
    throw Error(Errc::domain_error, "m must be >= 1");
  }
  const double amin = alpha_min(p);
  const double inv_m = 1.0 / m;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double delta = p.alpha[i] - amin;
    const double bound =
        (2.0 * p.a[i] + p.b[i] * delta + inv_m) / (p.a[i] * (delta + inv_m));
    lo = std::min(lo, bound);
    hi = std::max(hi, bound);
  }
  return {lo, hi};
}

double g_inf_real_zero(const FractionSumParams& p, double tol) {
  std::vector<double> a, b, alpha;
  a.reserve(p.size());
  b.reserve(p.size());
  alpha.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p.d[i];
    const double w = 1.0 / (d * d) + p.c[i] / (d * d * d * d);
    a.push_back(w);
    b.push_back(w * v_infinity(p, i));
    alpha.push_back(1.0 / d);
  }
  const ExpPolyParams q = make_exp_poly(std::move(a), std::move(b),
                                        std::move(alpha));
  return 1.0 / find_unique_positive_zero(q, tol);
}

}  // namespace fracsum
