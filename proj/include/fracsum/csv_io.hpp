#ifndef FRACSUM_CSV_IO_HPP
#define FRACSUM_CSV_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fracsum/exp_poly.hpp"
#include "fracsum/fraction_sum.hpp"
#include "fracsum/semiblind.hpp"

namespace fracsum {

/// Coefficient file: header exactly `c,d`, one row per term, decimal or
/// scientific notation, UTF-8, LF line endings.
FractionSumParams read_fraction_params_csv(std::istream& in);
FractionSumParams read_fraction_params_csv(const std::string& path);

/// Exponential polynomial file: header exactly `a,b,alpha`.
ExpPolyParams read_exp_poly_csv(std::istream& in);
ExpPolyParams read_exp_poly_csv(const std::string& path);

struct Spectrum {
  std::vector<double> a;
  std::vector<double> d;
};

/// Spectral file: header exactly `a,d`; gamma is supplied separately.
Spectrum read_spectrum_csv(std::istream& in);
Spectrum read_spectrum_csv(const std::string& path);

/// Square complex matrix: first line `N=<int>`, then N rows of N re,im
/// pairs (2N comma-separated numbers per row), row-major.
ComplexMatrix read_complex_matrix_csv(std::istream& in);
ComplexMatrix read_complex_matrix_csv(const std::string& path);

/// Decimal rendering with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace fracsum

#endif
