#include "fracsum/semiblind.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fracsum {

namespace {

using cplx = std::complex<double>;

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (i != j) {
        sum += std::norm(m.at(i, j));
      }
    }
  }
  return std::sqrt(sum);
}

void check_hermitian(const ComplexMatrix& a, const char* name) {
  double diff = 0.0;
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) {
      diff += std::norm(a.at(i, j) - std::conj(a.at(j, i)));
    }
  }
  if (std::sqrt(diff) > 1e-12 * frobenius_norm(a)) {
    throw Error(Errc::not_hermitian,
                std::string(name) + " is not Hermitian");
  }
}

// m' = u^H m u
ComplexMatrix conjugate_by(const ComplexMatrix& m, const ComplexMatrix& u) {
  const std::size_t n = m.n;
  ComplexMatrix mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        s += m.at(i, k) * u.at(k, j);
      }
      mu.at(i, j) = s;
    }
  }
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        s += std::conj(u.at(k, i)) * mu.at(k, j);
      }
      out.at(i, j) = s;
    }
  }
  return out;
}

}  // namespace

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const cplx& v : m.data) {
    sum += std::norm(v);
  }
  return std::sqrt(sum);
}

SpectralMseModel make_spectral_model(std::vector<double> a_diag,
                                     std::vector<double> d_diag,
                                     double gamma) {
  if (a_diag.size() != d_diag.size()) {
    throw Error(Errc::length_mismatch, "a and d must have equal length");
  }
  if (a_diag.empty()) {
    throw Error(Errc::empty_input, "spectrum must be nonempty");
  }
  for (std::size_t i = 0; i < a_diag.size(); ++i) {
    if (!std::isfinite(a_diag[i]) || !std::isfinite(d_diag[i])) {
      throw Error(Errc::non_finite, "spectral entries must be finite");
    }
    if (a_diag[i] <= 0.0 || d_diag[i] <= 0.0) {
      throw Error(Errc::non_positive_spectrum,
                  "spectral entries must be strictly positive");
    }
  }
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw Error(Errc::domain_error, "gamma must be finite and > 0");
  }
  return SpectralMseModel{std::move(a_diag), std::move(d_diag), gamma};
}

FractionSumParams to_fraction_sum(const SpectralMseModel& model) {
  std::vector<double> c(model.a_diag.size());
  std::vector<double> d(model.d_diag.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = model.gamma * model.a_diag[i];
    d[i] = model.gamma * model.d_diag[i];
  }
  return make_params(std::move(c), std::move(d));
}

double mse(const SpectralMseModel& model, double lambda) {
  return eval_f(to_fraction_sum(model), lambda);
}

OptimalLambda optimal_lambda(const SpectralMseModel& model, double tol) {
  const MinimizeResult r = minimize(to_fraction_sum(model), tol);
  return OptimalLambda{r.x_star, r.f_star};
}

HermitianPair make_hermitian_pair(ComplexMatrix q, ComplexMatrix m,
                                  double gamma) {
  if (q.n == 0 || q.n != m.n) {
    throw Error(Errc::length_mismatch,
                "q and m must be square with equal, nonzero size");
  }
  if (q.data.size() != q.n * q.n || m.data.size() != m.n * m.n) {
    throw Error(Errc::length_mismatch, "matrix storage size mismatch");
  }
  check_hermitian(q, "q");
  check_hermitian(m, "m");
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw Error(Errc::domain_error, "gamma must be finite and > 0");
  }
  return HermitianPair{std::move(q), std::move(m), gamma};
}

EigenDecomposition jacobi_eigen(const ComplexMatrix& hermitian) {
  const std::size_t n = hermitian.n;
  ComplexMatrix a = hermitian;
  ComplexMatrix u = ComplexMatrix::identity(n);
  const double target = 1e-12 * frobenius_norm(hermitian);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      EigenDecomposition out;
      out.vectors = std::move(u);
      out.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a.at(i, i).real();
      }
      return out;
    }
    for (std::size_t pi = 0; pi + 1 < n; ++pi) {
      for (std::size_t qi = pi + 1; qi < n; ++qi) {
        const cplx apq = a.at(pi, qi);
        const double r = std::abs(apq);
        if (r < 1e-300) {
          continue;
        }
        const cplx g = apq / r;  // phase of the pivot entry
        const double theta =
            (a.at(qi, qi).real() - a.at(pi, pi).real()) / (2.0 * r);
        const double sgn = theta >= 0.0 ? 1.0 : -1.0;
        const double t = -sgn / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- V^H A V and U <- U V with the 2x2 block
        // V = [[c, -s g], [s conj(g), c]] on rows/columns (pi, qi).
        for (std::size_t j = 0; j < n; ++j) {
          const cplx ap = a.at(pi, j);
          const cplx aq = a.at(qi, j);
          a.at(pi, j) = c * ap + s * g * aq;
          a.at(qi, j) = -s * std::conj(g) * ap + c * aq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cplx ap = a.at(i, pi);
          const cplx aq = a.at(i, qi);
          a.at(i, pi) = c * ap + s * std::conj(g) * aq;
          a.at(i, qi) = -s * g * ap + c * aq;
          const cplx up = u.at(i, pi);
          const cplx uq = u.at(i, qi);
          u.at(i, pi) = c * up + s * std::conj(g) * uq;
          u.at(i, qi) = -s * g * up + c * uq;
        }
      }
    }
  }
  throw Error(Errc::no_convergence, "Jacobi sweeps did not converge");
}

SpectralMseModel spectral_from_matrices(const HermitianPair& pair,
                                        double align_tol) {
  if (!(align_tol > 0.0)) {
    throw Error(Errc::domain_error, "align_tol must be > 0");
  }
  const EigenDecomposition eig = jacobi_eigen(pair.q);
  const ComplexMatrix m_rot = conjugate_by(pair.m, eig.vectors);
  const double m_norm = frobenius_norm(pair.m);
  if (off_diagonal_norm(m_rot) > align_tol * m_norm) {
    throw Error(Errc::not_aligned,
                "m is not diagonal in q's eigenbasis");
  }

  const double zero_eig = 1e-12 * frobenius_norm(pair.q);
  std::vector<std::pair<double, double>> kept;  // (d_ii, a_ii)
  for (std::size_t i = 0; i < pair.q.n; ++i) {
    const double d = eig.values[i];
    const double a = m_rot.at(i, i).real();
    if (std::abs(d) <= zero_eig) {
      // dropped q eigenvalue: the matching m entry must vanish too
      if (std::abs(m_rot.at(i, i)) > align_tol * m_norm) {
        throw Error(Errc::not_aligned,
                    "m has weight outside q's column space");
      }
      continue;
    }
    if (d <= 0.0 || a <= 0.0) {
      throw Error(Errc::non_positive_spectrum,
                  "retained spectral entries must be positive");
    }
    kept.emplace_back(d, a);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<double> a_diag, d_diag;
  a_diag.reserve(kept.size());
  d_diag.reserve(kept.size());
  for (const auto& [d, a] : kept) {
    d_diag.push_back(d);
    a_diag.push_back(a);
  }
  return make_spectral_model(std::move(a_diag), std::move(d_diag), pair.gamma);
}

std::vector<TradeoffRow> training_tradeoff_scan(
    const std::vector<double>& a_diag, const std::vector<double>& d_diag,
    const std::vector<double>& gamma_list, double tol) {
  if (gamma_list.empty()) {
    throw Error(Errc::empty_input, "gamma list must be nonempty");
  }
  std::vector<TradeoffRow> rows;
  rows.reserve(gamma_list.size());
  for (double gamma : gamma_list) {
    const SpectralMseModel model = make_spectral_model(a_diag, d_diag, gamma);
    const OptimalLambda opt = optimal_lambda(model, tol);
    rows.push_back(TradeoffRow{gamma, opt.lambda_star, opt.mse_star});
  }
  return rows;
}

}  // namespace fracsum
