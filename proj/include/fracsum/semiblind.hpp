#ifndef FRACSUM_SEMIBLIND_HPP
#define FRACSUM_SEMIBLIND_HPP

#include <complex>
#include <vector>

#include "fracsum/fraction_sum.hpp"
#include "fracsum/root_locus.hpp"

namespace fracsum {

/// Spectral data of the asymptotic estimation error: the criterion matrix
/// eigenvalues d_ii, the matching diagonal entries a_ii of the companion
/// matrix in that basis, and the data-to-training length ratio gamma.
struct SpectralMseModel {
  std::vector<double> a_diag;
  std::vector<double> d_diag;
  double gamma = 0.0;
};

SpectralMseModel make_spectral_model(std::vector<double> a_diag,
                                     std::vector<double> d_diag,
                                     double gamma);

/// Mapping onto the fraction-sum family: c_i = gamma a_ii, d_i = gamma d_ii.
FractionSumParams to_fraction_sum(const SpectralMseModel& model);

/// Error level at weighting coefficient lambda >= 0 (proportionality
/// constant fixed to 1).  Same evaluation path as eval_f on the mapped
/// parameters, so the two agree bit for bit.
double mse(const SpectralMseModel& model, double lambda);

struct OptimalLambda {
  double lambda_star = 0.0;
  double mse_star = 0.0;
};

/// Global minimizer of mse over lambda in [0, inf).  Always positive:
/// the derivative at 0 is negative.
OptimalLambda optimal_lambda(const SpectralMseModel& model, double tol);

/// Dense square complex matrix, row-major.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> data;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t size)
      : n(size), data(size * size, std::complex<double>(0.0, 0.0)) {}

  std::complex<double>& at(std::size_t i, std::size_t j) {
    return data[i * n + j];
  }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return data[i * n + j];
  }

  static ComplexMatrix identity(std::size_t size) {
    ComplexMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
      m.at(i, i) = 1.0;
    }
    return m;
  }
};

double frobenius_norm(const ComplexMatrix& m);

/// A criterion matrix q and companion matrix m assumed to share q's
/// eigenbasis, plus gamma.  Both must be Hermitian to 1e-12 relative.
struct HermitianPair {
  ComplexMatrix q;
  ComplexMatrix m;
  double gamma = 0.0;
};

HermitianPair make_hermitian_pair(ComplexMatrix q, ComplexMatrix m,
                                  double gamma);

struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;  // columns are eigenvectors
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix: plane rotations
/// until the off-diagonal Frobenius norm drops below 1e-12 times the
/// matrix norm, at most 100 sweeps (Error{no_convergence} otherwise).
EigenDecomposition jacobi_eigen(const ComplexMatrix& hermitian);

/// Diagonalizes q, transforms m into q's eigenbasis, and extracts the
/// spectral model.  The transformed m must be diagonal to within
/// align_tol * |m| (Error{not_aligned} otherwise).  Zero eigenvalues of q
/// are dropped together with the matching m entries, which must then be
/// negligible; every retained pair must be strictly positive
/// (Error{non_positive_spectrum}).  Output is sorted by ascending d_ii,
/// ties by ascending a_ii.
SpectralMseModel spectral_from_matrices(const HermitianPair& pair,
                                        double align_tol);

inline constexpr double kDefaultAlignTol = 1e-8;

struct TradeoffRow {
  double gamma = 0.0;
  double lambda_star = 0.0;
  double mse_star = 0.0;
};

/// optimal_lambda for each gamma in gamma_list, in the given order.
std::vector<TradeoffRow> training_tradeoff_scan(
    const std::vector<double>& a_diag, const std::vector<double>& d_diag,
    const std::vector<double>& gamma_list, double tol);

}  // namespace fracsum

#endif
