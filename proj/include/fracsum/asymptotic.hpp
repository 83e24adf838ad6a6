#ifndef FRACSUM_ASYMPTOTIC_HPP
#define FRACSUM_ASYMPTOTIC_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "fracsum/fraction_sum.hpp"

namespace fracsum {

/// {tau_min, tau_max} with tau_min = min_i d_i/(2 c_i) and
/// tau_max = max_i (d_i/c_i + 1/(2 d_i)).  The zeros of the scaled k-th
/// derivative lie in [k tau_min, k tau_max].
std::pair<double, double> tau_bounds(const FractionSumParams& p);

/// V_inf for term i (0-based): 2 / (d_i/c_i + 1/d_i).
/// Throws Error{index_out_of_range} for i >= n.
double v_infinity(const FractionSumParams& p, std::size_t i);

/// Limit function G_inf(z) = sum_i w_i (V_inf_i z - 1) exp(-1/(d_i z))
/// with w_i = 1/d_i^2 + c_i/d_i^4.
/// Throws Error{pole_at_origin} when |z| < 1e-300.
std::complex<double> eval_g_inf(const FractionSumParams& p,
                                std::complex<double> z);

/// Rescaled derivative function
///   G_k(z) = (-1)^(k+1) sqrt(k/(2 pi)) e^k z^(k+2) F^(k)(k z),
/// evaluated term-wise with the k!, k^(k+2) and e^k factors combined in
/// the log domain before exponentiation.  Requires Re(z) > 0 and
/// 1 <= k <= kMaxDerivOrder.
std::complex<double> eval_g_k(const FractionSumParams& p, int k,
                              std::complex<double> z);

/// k! / (sqrt(2 pi k) (k/e)^k), computed through lgamma.  Greater than 1
/// and decreasing toward 1.
double stirling_ratio(int k);

struct ConvergencePoint {
  int k = 0;
  double sup_err = 0.0;
};

/// sup over a uniform grid on [tau_min, tau_max] of |G_k - G_inf|,
/// one entry per requested k.  grid_n >= 64.
std::vector<ConvergencePoint> convergence_report(
    const FractionSumParams& p, const std::vector<int>& k_list, int grid_n);

/// Axis-aligned strip [x_lo, x_hi] x [-eps, eps] in the complex plane.
struct Rectangle {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double eps = 0.0;  // half-height
};

/// An analytic function together with its analytic derivative.
struct AnalyticFn {
  std::function<std::complex<double>(std::complex<double>)> value;
  std::function<std::complex<double>(std::complex<double>)> derivative;
};

struct WindingCount {
  int zeros = 0;
  double integer_distance = 0.0;  // |pre-rounding winding - zeros|
};

/// Argument-principle zero count: (1/2 pi i) contour integral of f'/f
/// over the rectangle boundary by trapezoidal quadrature, rounded to the
/// nearest integer.  samples_per_side >= 1000.
/// Throws Error{zero_on_contour} when min |f| on the contour drops below
/// 1e-8 times the median |f|, and Error{quadrature_unstable} when the
/// pre-rounding value is farther than 0.2 from an integer.
WindingCount count_zeros_rectangle_detail(const AnalyticFn& fn,
                                          const Rectangle& rect,
                                          int samples_per_side);

int count_zeros_rectangle(const AnalyticFn& fn, const Rectangle& rect,
                          int samples_per_side);

/// G_inf as an AnalyticFn (value and product-rule derivative).
AnalyticFn g_inf_fn(const FractionSumParams& p);

/// G_inf multiplied by exp(+1/(d_max z)).  Same zeros as G_inf on
/// Re z > 0, and the multiplier contributes zero net winding around any
/// closed contour in that half-plane, so zero counts are unchanged.
/// Unlike the plain form it stays representable when every exponent
/// -1/(d_i x) is far below the underflow threshold, which happens for
/// strongly scaled coefficient sets near the left edge of the strip.
AnalyticFn g_inf_rescaled_fn(const FractionSumParams& p);

struct AdaptiveStrip {
  Rectangle rect;
  bool limit_reached = false;  // hit the 20-halving cap
  int halvings = 0;
};

/// Strip [tau_min, tau_max] x [-eps, eps] with eps chosen adaptively:
/// start at 0.1 (tau_max - tau_min) and halve until the rescaled G_inf
/// satisfies min |G| > 1e-6 median |G| on the contour (at most 20 times).
AdaptiveStrip adaptive_strip(const FractionSumParams& p,
                             int probe_samples = 2048);

struct GInfZeroCount {
  int zeros = 0;
  double integer_distance = 0.0;
  Rectangle rect;
  bool eps_limit_reached = false;
};

/// Zero count of G_inf on the adaptive strip.
GInfZeroCount count_g_inf_zeros(const FractionSumParams& p,
                                int samples_per_side);

}  // namespace fracsum

#endif
