#ifndef FRACSUM_FRACTION_SUM_HPP
#define FRACSUM_FRACTION_SUM_HPP

#include <vector>

#include "fracsum/errors.hpp"

namespace fracsum {

/// Highest derivative order supported by the evaluators.
inline constexpr int kMaxDerivOrder = 300;

/// Coefficients of F(x) = sum_i (1 + c_i x^2) / (1 + d_i x)^2 on x >= 0.
/// All entries are strictly positive and finite; build through make_params.
struct FractionSumParams {
  std::vector<double> c;
  std::vector<double> d;

  std::size_t size() const noexcept { return c.size(); }
};

/// Validates and builds FractionSumParams.
/// Throws Error with code empty_input, length_mismatch,
/// non_positive_coefficient or non_finite.
FractionSumParams make_params(std::vector<double> c, std::vector<double> d);

/// F(x). Strictly positive for every valid input and x >= 0.
/// Throws Error{domain_error} for negative or non-finite x.
double eval_f(const FractionSumParams& p, double x);

/// Per-term coefficients of the k-th derivative, normalized by 1/(2 k!):
///   F^(k)(x) = (-1)^(k+1) * 2k! * sum_i (b_hat_i x - a_hat_i) / (1 + d_i x)^(k+2)
/// with b_hat_i = c_i d_i^(k-1) and a_hat_i = b_hat_i * ((k+1) d_i / (2 c_i)
/// + (k-1) / (2 d_i)).  log_scale records ln(2 k!), the factor removed by
/// the normalization.  For extreme d_i and large k the stored doubles can
/// overflow; evaluation goes through DerivEvaluator, which never forms them.
struct DerivCoeffs {
  int k = 0;
  std::vector<double> a_hat;
  std::vector<double> b_hat;
  double log_scale = 0.0;
};

/// Throws Error{order_out_of_range} unless 1 <= k <= kMaxDerivOrder.
DerivCoeffs deriv_coeffs(const FractionSumParams& p, int k);

/// a_hat_i / b_hat_i, the zero of term i's numerator.
double deriv_term_ratio(double c, double d, int k);

/// Repeated evaluation of the scaled k-th derivative at fixed order.
/// Each term is handled as sign * exp(log-magnitude) and the terms are
/// combined with a running max-shifted summation, so sign() is meaningful
/// even where the absolute value of the derivative is not representable.
class DerivEvaluator {
 public:
  DerivEvaluator(const FractionSumParams& p, int k);

  /// F^(k)(x) / (2 k!).  May return +-0 when the true magnitude
  /// underflows; the sign bit is still that of the true value.
  double operator()(double x) const;

  /// Sign of the scaled derivative: -1, 0 or +1.  Never under/overflows.
  int sign(double x) const;

  /// Sum of the term magnitudes at x, a local scale for error analysis.
  double magnitude(double x) const;

  int order() const noexcept { return k_; }

 private:
  struct Term {
    double d;
    double ratio;  // a_hat / b_hat
    double log_b;  // ln(c) + (k-1) ln(d)
  };

  struct Combined {
    double shifted_sum;  // signed sum of exp(L_i - max_log)
    double shifted_mag;  // sum of |exp(L_i - max_log)|
    double max_log;
  };

  Combined combine(double x) const;

  std::vector<Term> terms_;
  int k_;
  double sign_factor_;  // (-1)^(k+1)
};

/// F^(k)(x) / (2 k!) for k >= 1; eval_f for k = 0.
/// Throws Error{domain_error} for bad x, Error{order_out_of_range} for
/// k < 0 or k > kMaxDerivOrder.
double eval_deriv_scaled(const FractionSumParams& p, int k, double x);

}  // namespace fracsum

#endif
