#include "fracsum/fraction_sum.hpp"

#include <cmath>
#include <limits>

namespace fracsum {

namespace {

// ln(1e-300): numerators below this magnitude count as exact zeros, so the
// sign logic never feeds 0 into a logarithm.
constexpr double kSignZeroLogFloor = -690.77552789821368;

void check_x(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw Error(Errc::domain_error, "x must be finite and >= 0");
  }
}

}  // namespace

FractionSumParams make_params(std::vector<double> c, std::vector<double> d) {
  if (c.size() != d.size()) {
    throw Error(Errc::length_mismatch, "c and d must have equal length");
  }
  if (c.empty()) {
    throw Error(Errc::empty_input, "at least one (c, d) pair is required");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i]) || !std::isfinite(d[i])) {
      throw Error(Errc::non_finite, "coefficients must be finite");
    }
    if (c[i] <= 0.0 || d[i] <= 0.0) {
      throw Error(Errc::non_positive_coefficient,
                  "coefficients must be strictly positive");
    }
  }
  return FractionSumParams{std::move(c), std::move(d)};
}

double eval_f(const FractionSumParams& p, double x) {
  check_x(x);
  double sum = 0.0;
  const std::size_t n = p.size();
  if (x > 1e150) {
    // (1 + c x^2) / (1 + d x)^2 == (1/x^2 + c) / (1/x + d)^2; the divided
    // form avoids overflow of c x^2 for very large x.
    const double ix = 1.0 / x;
    for (std::size_t i = 0; i < n; ++i) {
      const double den = ix + p.d[i];
      sum += (ix * ix + p.c[i]) / (den * den);
    }
    return sum;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double den = 1.0 + p.d[i] * x;
    sum += (1.0 + p.c[i] * x * x) / (den * den);
  }
  return sum;
}

double deriv_term_ratio(double c, double d, int k) {
  return 0.5 * (k + 1) * d / c + 0.5 * (k - 1) / d;
}

DerivCoeffs deriv_coeffs(const FractionSumParams& p, int k) {
  if (k < 1 || k > kMaxDerivOrder) {
    throw Error(Errc::order_out_of_range, "derivative order out of range");
  }
  DerivCoeffs out;
  out.k = k;
  out.log_scale = std::log(2.0) + std::lgamma(k + 1.0);
  out.a_hat.reserve(p.size());
  out.b_hat.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double b = p.c[i] * std::pow(p.d[i], k - 1);
    out.b_hat.push_back(b);
    out.a_hat.push_back(b * deriv_term_ratio(p.c[i], p.d[i], k));
  }
  return out;
}

DerivEvaluator::DerivEvaluator(const FractionSumParams& p, int k) : k_(k) {
  if (k < 1 || k > kMaxDerivOrder) {
    throw Error(Errc::order_out_of_range, "derivative order out of range");
  }
  sign_factor_ = (k % 2 == 1) ? 1.0 : -1.0;
  terms_.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    terms_.push_back(Term{p.d[i], deriv_term_ratio(p.c[i], p.d[i], k),
                          std::log(p.c[i]) + (k - 1) * std::log(p.d[i])});
  }
}

DerivEvaluator::Combined DerivEvaluator::combine(double x) const {
  check_x(x);
  const double inf = std::numeric_limits<double>::infinity();
  double m = -inf;
  double s = 0.0;
  double mag = 0.0;
  for (const Term& t : terms_) {
    const double diff = x - t.ratio;
    const double log_num = t.log_b + std::log(std::abs(diff));
    if (!(log_num >= kSignZeroLogFloor)) {
      continue;  // numerator treated as exact zero
    }
    const double L = log_num - (k_ + 2) * std::log1p(t.d * x);
    const double sgn = diff > 0.0 ? 1.0 : -1.0;
    if (L <= m) {
      const double e = std::exp(L - m);
      s += sgn * e;
      mag += e;
    } else {
      const double shrink = std::exp(m - L);
      s = s * shrink + sgn;
      mag = mag * shrink + 1.0;
      m = L;
    }
  }
  return Combined{s, mag, m};
}

double DerivEvaluator::operator()(double x) const {
  const Combined c = combine(x);
  if (c.max_log == -std::numeric_limits<double>::infinity()) {
    return 0.0;
  }
  return sign_factor_ * c.shifted_sum * std::exp(c.max_log);
}

int DerivEvaluator::sign(double x) const {
  const Combined c = combine(x);
  if (c.shifted_sum == 0.0) {
    return 0;
  }
  const double v = sign_factor_ * c.shifted_sum;
  return v > 0.0 ? 1 : -1;
}

double DerivEvaluator::magnitude(double x) const {
  const Combined c = combine(x);
  if (c.max_log == -std::numeric_limits<double>::infinity()) {
    return 0.0;
  }
  return c.shifted_mag * std::exp(c.max_log);
}

double eval_deriv_scaled(const FractionSumParams& p, int k, double x) {
  if (k == 0) {
    return eval_f(p, x);
  }
  if (k < 0 || k > kMaxDerivOrder) {
    throw Error(Errc::order_out_of_range, "derivative order out of range");
  }
  return DerivEvaluator(p, k)(x);
}

}  // namespace fracsum
