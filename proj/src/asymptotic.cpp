#include "fracsum/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

namespace fracsum {

namespace {

using cplx = std::complex<double>;

double term_weight(double c, double d) {
  return 1.0 / (d * d) + c / (d * d * d * d);
}

double term_v_inf(double c, double d) { return 2.0 / (d / c + 1.0 / d); }

// log of the positive prefactor of term i in G_k:
//   sqrt(k/2pi) e^k 2 k! c d^(k-1) / (d k)^(k+2)
double g_k_log_amp(double c, double d, int k) {
  const double kk = static_cast<double>(k);
  return 0.5 * std::log(kk / (2.0 * std::numbers::pi)) + kk +
         std::log(2.0) + std::lgamma(kk + 1.0) + std::log(c) -
         3.0 * std::log(d) - (kk + 2.0) * std::log(kk);
}

void check_g_k_args(int k, cplx z) {
  if (k < 1 || k > kMaxDerivOrder) {
    throw Error(Errc::order_out_of_range, "derivative order out of range");
  }
  if (!(z.real() > 0.0)) {
    throw Error(Errc::domain_error, "G_k requires Re(z) > 0");
  }
}

}  // namespace

std::pair<double, double> tau_bounds(const FractionSumParams& p) {
  double tau_min = std::numeric_limits<double>::infinity();
  double tau_max = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    tau_min = std::min(tau_min, p.d[i] / (2.0 * p.c[i]));
    tau_max = std::max(tau_max, p.d[i] / p.c[i] + 0.5 / p.d[i]);
  }
  return {tau_min, tau_max};
}

double v_infinity(const FractionSumParams& p, std::size_t i) {
  if (i >= p.size()) {
    throw Error(Errc::index_out_of_range, "term index out of range");
  }
  return term_v_inf(p.c[i], p.d[i]);
}

std::complex<double> eval_g_inf(const FractionSumParams& p, cplx z) {
  if (std::abs(z) < 1e-300) {
    throw Error(Errc::pole_at_origin, "G_inf has an essential singularity at 0");
  }
  if (z.imag() == 0.0) {
    const double x = z.real();
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double w = term_weight(p.c[i], p.d[i]);
      sum += w * (term_v_inf(p.c[i], p.d[i]) * x - 1.0) *
             std::exp(-1.0 / (p.d[i] * x));
    }
    return cplx(sum, 0.0);
  }
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double w = term_weight(p.c[i], p.d[i]);
    sum += w * (term_v_inf(p.c[i], p.d[i]) * z - 1.0) *
           std::exp(-1.0 / (p.d[i] * z));
  }
  return sum;
}

std::complex<double> eval_g_k(const FractionSumParams& p, int k, cplx z) {
  check_g_k_args(k, z);
  const double kk = static_cast<double>(k);
  if (z.imag() == 0.0) {
    const double x = z.real();
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double amp = g_k_log_amp(p.c[i], p.d[i], k);
      const double u = 1.0 / (p.d[i] * kk * x);
      const double r = deriv_term_ratio(p.c[i], p.d[i], k);
      sum += std::exp(amp - (kk + 2.0) * std::log1p(u)) * (kk * x - r);
    }
    return cplx(sum, 0.0);
  }
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double amp = g_k_log_amp(p.c[i], p.d[i], k);
    const cplx u = 1.0 / (p.d[i] * kk * z);
    const double r = deriv_term_ratio(p.c[i], p.d[i], k);
    sum += std::exp(amp - (kk + 2.0) * std::log(1.0 + u)) * (kk * z - r);
  }
  return sum;
}

double stirling_ratio(int k) {
  if (k < 1) {
    throw Error(Errc::domain_error, "k must be >= 1");
  }
  const double kk = static_cast<double>(k);
  return std::exp(std::lgamma(kk + 1.0) -
                  0.5 * std::log(2.0 * std::numbers::pi * kk) -
                  kk * (std::log(kk) - 1.0));
}

std::vector<ConvergencePoint> convergence_report(
    const FractionSumParams& p, const std::vector<int>& k_list, int grid_n) {
  if (grid_n < 64) {
    throw Error(Errc::domain_error, "grid_n must be >= 64");
  }
  const auto [tau_min, tau_max] = tau_bounds(p);
  std::vector<ConvergencePoint> report;
  report.reserve(k_list.size());
  for (int k : k_list) {
    double sup = 0.0;
    for (int j = 0; j < grid_n; ++j) {
      const double x =
          tau_min + (tau_max - tau_min) * static_cast<double>(j) / (grid_n - 1);
      const double err =
          std::abs(eval_g_k(p, k, cplx(x, 0.0)) - eval_g_inf(p, cplx(x, 0.0)));
      sup = std::max(sup, err);
    }
    report.push_back(ConvergencePoint{k, sup});
  }
  return report;
}

namespace {

// Trapezoid rule for f'/f along one side, appending |f| samples.
cplx integrate_side(const AnalyticFn& fn, cplx from, cplx to, int samples,
                    std::vector<double>& abs_values) {
  const cplx dz = (to - from) / static_cast<double>(samples);
  cplx total(0.0, 0.0);
  cplx prev = fn.derivative(from) / fn.value(from);
  abs_values.push_back(std::abs(fn.value(from)));
  for (int j = 1; j <= samples; ++j) {
    const cplx z = from + dz * static_cast<double>(j);
    const cplx val = fn.value(z);
    abs_values.push_back(std::abs(val));
    const cplx cur = fn.derivative(z) / val;
    total += 0.5 * (prev + cur) * dz;
    prev = cur;
  }
  return total;
}

}  // namespace

WindingCount count_zeros_rectangle_detail(const AnalyticFn& fn,
                                          const Rectangle& rect,
                                          int samples_per_side) {
  if (!(rect.x_lo < rect.x_hi) || !(rect.eps > 0.0)) {
    throw Error(Errc::domain_error, "degenerate rectangle");
  }
  if (samples_per_side < 1000) {
    throw Error(Errc::domain_error, "samples_per_side must be >= 1000");
  }
  const cplx corners[4] = {cplx(rect.x_lo, -rect.eps), cplx(rect.x_hi, -rect.eps),
                           cplx(rect.x_hi, rect.eps), cplx(rect.x_lo, rect.eps)};
  std::vector<double> abs_values;
  abs_values.reserve(4 * (samples_per_side + 1));
  cplx integral(0.0, 0.0);
  for (int side = 0; side < 4; ++side) {
    integral += integrate_side(fn, corners[side], corners[(side + 1) % 4],
                               samples_per_side, abs_values);
  }

  const double min_abs = *std::min_element(abs_values.begin(), abs_values.end());
  std::vector<double> sorted = abs_values;
  const std::size_t mid = sorted.size() / 2;
  std::nth_element(sorted.begin(), sorted.begin() + mid, sorted.end());
  const double median_abs = sorted[mid];
  if (!(min_abs > 1e-8 * median_abs)) {
    throw Error(Errc::zero_on_contour,
                "function vanishes (or nearly) on the contour");
  }

  const cplx winding = integral / cplx(0.0, 2.0 * std::numbers::pi);
  const double rounded = std::round(winding.real());
  const double dist = std::abs(winding - cplx(rounded, 0.0));
  if (!(dist <= 0.2)) {
    throw Error(Errc::quadrature_unstable,
                "winding number is not close to an integer");
  }
  return WindingCount{static_cast<int>(rounded), dist};
}

int count_zeros_rectangle(const AnalyticFn& fn, const Rectangle& rect,
                          int samples_per_side) {
  return count_zeros_rectangle_detail(fn, rect, samples_per_side).zeros;
}

namespace {

// G_inf with every exponent shifted by `shift`:
//   sum_i w_i (V_i z - 1) exp((shift - 1/d_i) / z)
// shift = 0 gives G_inf itself; shift = 1/d_max the rescaled variant.
AnalyticFn make_g_inf_fn(const FractionSumParams& p, double shift) {
  struct TermData {
    double w, v, mu;
  };
  auto terms = std::make_shared<std::vector<TermData>>();
  for (std::size_t i = 0; i < p.size(); ++i) {
    terms->push_back(TermData{term_weight(p.c[i], p.d[i]),
                              term_v_inf(p.c[i], p.d[i]),
                              shift - 1.0 / p.d[i]});
  }
  AnalyticFn fn;
  fn.value = [terms](cplx z) {
    cplx sum(0.0, 0.0);
    for (const TermData& t : *terms) {
      sum += t.w * (t.v * z - 1.0) * std::exp(t.mu / z);
    }
    return sum;
  };
  fn.derivative = [terms](cplx z) {
    cplx sum(0.0, 0.0);
    for (const TermData& t : *terms) {
      sum += t.w * std::exp(t.mu / z) *
             (t.v - (t.v * z - 1.0) * t.mu / (z * z));
    }
    return sum;
  };
  return fn;
}

}  // namespace

AnalyticFn g_inf_fn(const FractionSumParams& p) { return make_g_inf_fn(p, 0.0); }

AnalyticFn g_inf_rescaled_fn(const FractionSumParams& p) {
  const double d_max = *std::max_element(p.d.begin(), p.d.end());
  return make_g_inf_fn(p, 1.0 / d_max);
}

AdaptiveStrip adaptive_strip(const FractionSumParams& p, int probe_samples) {
  const auto [tau_min, tau_max] = tau_bounds(p);
  const AnalyticFn fn = g_inf_rescaled_fn(p);
  AdaptiveStrip strip;
  strip.rect = Rectangle{tau_min, tau_max, 0.1 * (tau_max - tau_min)};
  for (int halvings = 0;; ++halvings) {
    std::vector<double> abs_values;
    abs_values.reserve(4 * (probe_samples + 1));
    const cplx corners[4] = {cplx(tau_min, -strip.rect.eps),
                             cplx(tau_max, -strip.rect.eps),
                             cplx(tau_max, strip.rect.eps),
                             cplx(tau_min, strip.rect.eps)};
    for (int side = 0; side < 4; ++side) {
      const cplx from = corners[side];
      const cplx to = corners[(side + 1) % 4];
      for (int j = 0; j <= probe_samples; ++j) {
        const cplx z =
            from + (to - from) * (static_cast<double>(j) / probe_samples);
        abs_values.push_back(std::abs(fn.value(z)));
      }
    }
    const double min_abs =
        *std::min_element(abs_values.begin(), abs_values.end());
    std::vector<double> sorted = abs_values;
    const std::size_t mid = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + mid, sorted.end());
    strip.halvings = halvings;
    if (min_abs > 1e-6 * sorted[mid]) {
      return strip;
    }
    if (halvings == 20) {
      strip.limit_reached = true;
      return strip;
    }
    strip.rect.eps *= 0.5;
  }
}

GInfZeroCount count_g_inf_zeros(const FractionSumParams& p,
                                int samples_per_side) {
  const AdaptiveStrip strip = adaptive_strip(p);
  const WindingCount wc = count_zeros_rectangle_detail(
      g_inf_rescaled_fn(p), strip.rect, samples_per_side);
  return GInfZeroCount{wc.zeros, wc.integer_distance, strip.rect,
                       strip.limit_reached};
}

}  // namespace fracsum
