#ifndef FRACSUM_ROOT_LOCUS_HPP
#define FRACSUM_ROOT_LOCUS_HPP

#include "fracsum/fraction_sum.hpp"

namespace fracsum {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultCertifyGrid = 100000;
inline constexpr int kDefaultOracleGrid = 1000000;
inline constexpr int kMaxBisectIters = 200;

/// Interval [k tau_min, k tau_max] containing every zero of the k-th
/// derivative; outside it all terms share one sign.
struct ZeroBracket {
  int k = 0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Bracket for the zeros of F^(k); the constant-sign claim is probed at
/// lo/2 and 2 hi.
ZeroBracket zero_bracket(const FractionSumParams& p, int k);

/// Adjacent-sample sign flips of the scaled k-th derivative on a uniform
/// grid over [0, 2 hi].  A lower bound on the true zero count.
/// grid_points >= 1000.
int count_sign_changes(const FractionSumParams& p, int k, int grid_points);

/// The unique positive zero of F^(k), by sign bisection.  The endpoints
/// are found by probing the bracket: near 0 the scaled derivative has
/// sign (-1)^k and the opposite sign at infinity; the probe halves lo
/// toward 0 or doubles hi upward until both signs are seen (at most 60
/// steps each, then Error{bracket_failure}).  Final bracket width is at
/// most tol * max(1, zero).
double find_unique_zero(const FractionSumParams& p, int k, double tol);

struct ZeroCertificate {
  double x_z = 0.0;                 // zero of F'
  double f_at_xz = 0.0;             // F(x_z)
  double second_deriv_scaled = 0.0; // F''(x_z) / (2 * 2!)
  int sign_changes_k1 = 0;
  int sign_changes_k2 = 0;
  double bracket_width_final = 0.0;
  bool pass = false;
};

/// Locates the zero of F', evaluates F and the scaled F'' there, and
/// counts grid sign changes of F' and F''.  PASS requires both counts to
/// be exactly 1 and the scaled F'' at the zero to be positive.
ZeroCertificate certify_unimodal(const FractionSumParams& p, double tol,
                                 int grid_points);

struct MinimizeResult {
  double x_star = 0.0;
  double f_star = 0.0;
};

/// Global minimum of F over [0, inf): the zero of F' (F decreases before
/// it and increases after it).
MinimizeResult minimize(const FractionSumParams& p, double tol);

}  // namespace fracsum

#endif
