#ifndef FRACSUM_TEST_UTIL_HPP
#define FRACSUM_TEST_UTIL_HPP

#include <cmath>
#include <random>
#include <vector>

#include "fracsum/fraction_sum.hpp"

namespace testutil {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

// n uniform in [1, max_terms], coefficients log-uniform on [1e-2, 1e2]
inline fracsum::FractionSumParams random_params(std::mt19937_64& rng,
                                                int max_terms = 8,
                                                double lo = 1e-2,
                                                double hi = 1e2) {
  std::uniform_int_distribution<int> nd(1, max_terms);
  const int n = nd(rng);
  std::vector<double> c(n), d(n);
  for (int i = 0; i < n; ++i) {
    c[i] = log_uniform(rng, lo, hi);
    d[i] = log_uniform(rng, lo, hi);
  }
  return fracsum::make_params(std::move(c), std::move(d));
}

// Local curvature scale of the scaled k-th derivative: per-term bound on
// |t'/t| from the log-derivative 1/(x-r) - (k+2) d/(1+dx).
inline double deriv_curvature_scale(const fracsum::FractionSumParams& p, int k,
                                    double x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = fracsum::deriv_term_ratio(p.c[i], p.d[i], k);
    const double pole = (k + 3) * p.d[i] / (1.0 + p.d[i] * x);
    const double num = x == r ? 1e300 : 1.0 / std::abs(x - r);
    worst = std::max(worst, num + pole);
  }
  return worst;
}

}  // namespace testutil

#endif
