#ifndef FRACSUM_EXP_POLY_HPP
#define FRACSUM_EXP_POLY_HPP

#include <utility>
#include <vector>

#include "fracsum/fraction_sum.hpp"

namespace fracsum {

/// Coefficients of f(x) = sum_i (a_i x - b_i) exp(-alpha_i x).
/// All entries strictly positive and finite; build through make_exp_poly.
struct ExpPolyParams {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> alpha;

  std::size_t size() const noexcept { return a.size(); }
};

ExpPolyParams make_exp_poly(std::vector<double> a, std::vector<double> b,
                            std::vector<double> alpha);

/// f(x) for x >= 0.  f(0) = -sum b_i < 0.
double eval_exp_poly(const ExpPolyParams& p, double x);

/// exp(alpha_min x) * f(x): a strictly positive multiple of f, so it has
/// exactly f's zeros and signs, but its dominant term carries no
/// exponential decay and its sign stays computable where f itself
/// underflows.  Sign decisions (the solver, grid oracles) go through this
/// form.
double eval_exp_poly_rescaled(const ExpPolyParams& p, double x);

/// The unique positive zero, by bisection on [0, max_i b_i/a_i]:
/// f(0) < 0 and every term is nonnegative at the upper endpoint.  If f is
/// exactly zero at the upper endpoint it is returned directly.  Final
/// bracket width at most tol * max(1, zero).
double find_unique_positive_zero(const ExpPolyParams& p, double tol);

/// The auxiliary transform g_m(x) = exp((alpha_min - 1/m) x) f(x) and its
/// first two derivatives, evaluated from the per-term closed forms with
/// beta_i = alpha_i - alpha_min + 1/m:
///   order 0:  sum_i (a_i x - b_i) exp(-beta_i x)
///   order 1:  sum_i (a_i - beta_i (a_i x - b_i)) exp(-beta_i x)
///   order 2:  sum_i beta_i (beta_i a_i x - 2 a_i - beta_i b_i) exp(-beta_i x)
/// Ties in alpha_min resolve to the lowest index; m >= 1, order in {0,1,2}.
double g_m_eval(const ExpPolyParams& p, int m, double x, int order);

/// Bounds on the zeros of g_m'' at a given m (a computed diagnostic):
/// [min, max] over i of
///   (2 a_i + b_i (alpha_i - alpha_min) + 1/m) / (a_i (alpha_i - alpha_min + 1/m)).
std::pair<double, double> g_m_second_deriv_zero_bounds(const ExpPolyParams& p,
                                                       int m);

/// The real positive zero of G_inf, through the reciprocal transform:
/// x G_inf(1/x) is (up to sign) an exponential polynomial with
/// a_i = w_i, b_i = w_i V_inf_i, alpha_i = 1/d_i, so the zero of G_inf is
/// the reciprocal of that exponential polynomial's unique positive zero.
double g_inf_real_zero(const FractionSumParams& p, double tol);

}  // namespace fracsum

#endif
