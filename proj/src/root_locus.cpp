#include "fracsum/root_locus.hpp"

#include <cassert>
#include <cmath>

#include "fracsum/asymptotic.hpp"

namespace fracsum {

namespace {

struct Bisection {
  double zero;
  double width;
};

int probed_sign(const DerivEvaluator& ev, double x) {
  int s = ev.sign(x);
  if (s == 0 && x > 0.0) {
    // exact-zero probe: nudge by one ulp-scale step
    s = ev.sign(std::nextafter(x, 2.0 * x + 1.0));
  }
  return s;
}

Bisection bisect_deriv_zero(const FractionSumParams& p, int k, double tol) {
  if (!(tol > 0.0)) {
    throw Error(Errc::domain_error, "tol must be > 0");
  }
  const DerivEvaluator ev(p, k);
  const ZeroBracket br = zero_bracket(p, k);
  const int sign_near_zero = (k % 2 == 1) ? -1 : 1;

  double a = br.lo;
  int tries = 0;
  while (probed_sign(ev, a) != sign_near_zero) {
    a *= 0.5;
    if (++tries > 60 || a == 0.0) {
      throw Error(Errc::bracket_failure,
                  "no sign change found below the bracket");
    }
  }
  double b = br.hi;
  tries = 0;
  while (probed_sign(ev, b) != -sign_near_zero) {
    b *= 2.0;
    if (++tries > 60 || !std::isfinite(b)) {
      throw Error(Errc::bracket_failure,
                  "no sign change found above the bracket");
    }
  }

  double mid = 0.5 * (a + b);
  for (int iter = 0; iter < kMaxBisectIters; ++iter) {
    mid = 0.5 * (a + b);
    if (b - a <= tol * std::max(1.0, mid)) {
      break;
    }
    if (ev.sign(mid) == sign_near_zero) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return Bisection{0.5 * (a + b), b - a};
}

}  // namespace

ZeroBracket zero_bracket(const FractionSumParams& p, int k) {
  if (k < 1 || k > kMaxDerivOrder) {
    throw Error(Errc::order_out_of_range, "derivative order out of range");
  }
  const auto [tau_min, tau_max] = tau_bounds(p);
  ZeroBracket br{k, k * tau_min, k * tau_max};

  // Outside [lo, hi] every term keeps one sign; probe both sides.
  const DerivEvaluator ev(p, k);
  const int below = ev.sign(0.5 * br.lo);
  const int above = ev.sign(2.0 * br.hi);
  if (below == 0 || above == 0 || below == above) {
    throw Error(Errc::bracket_failure, "bracket sign probe failed");
  }
  return br;
}

int count_sign_changes(const FractionSumParams& p, int k, int grid_points) {
  if (grid_points < 1000) {
    throw Error(Errc::domain_error, "grid_points must be >= 1000");
  }
  const ZeroBracket br = zero_bracket(p, k);
  const DerivEvaluator ev(p, k);
  const double hi = 2.0 * br.hi;
  int changes = 0;
  int last = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = hi * static_cast<double>(i) / (grid_points - 1);
    const int s = ev.sign(x);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

double find_unique_zero(const FractionSumParams& p, int k, double tol) {
  return bisect_deriv_zero(p, k, tol).zero;
}

ZeroCertificate certify_unimodal(const FractionSumParams& p, double tol,
                                 int grid_points) {
  const Bisection bi = bisect_deriv_zero(p, 1, tol);
  ZeroCertificate cert;
  cert.x_z = bi.zero;
  cert.bracket_width_final = bi.width;
  cert.f_at_xz = eval_f(p, bi.zero);
  cert.second_deriv_scaled = DerivEvaluator(p, 2)(bi.zero);
  cert.sign_changes_k1 = count_sign_changes(p, 1, grid_points);
  cert.sign_changes_k2 = count_sign_changes(p, 2, grid_points);
  cert.pass = cert.sign_changes_k1 == 1 && cert.sign_changes_k2 == 1 &&
              cert.second_deriv_scaled > 0.0;
  return cert;
}

MinimizeResult minimize(const FractionSumParams& p, double tol) {
  const double x_star = find_unique_zero(p, 1, tol);
  const double f_star = eval_f(p, x_star);
  assert(f_star <= eval_f(p, 0.0) * (1.0 + 1e-12));
  assert(f_star <= eval_f(p, 2.0 * zero_bracket(p, 1).hi) * (1.0 + 1e-12));
  return MinimizeResult{x_star, f_star};
}

}  // namespace fracsum
