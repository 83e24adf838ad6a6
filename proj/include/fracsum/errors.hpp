#ifndef FRACSUM_ERRORS_HPP
#define FRACSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracsum {

enum class Errc {
  // input validation
  empty_input,
  length_mismatch,
  non_positive_coefficient,
  non_finite,
  domain_error,
  order_out_of_range,
  index_out_of_range,
  pole_at_origin,
  parse_error,
  not_hermitian,
  non_positive_spectrum,
  // numerical failures
  bracket_failure,
  zero_on_contour,
  quadrature_unstable,
  not_aligned,
  no_convergence,
};

/// Library-wide exception. `is_validation()` distinguishes bad inputs
/// (malformed files, out-of-domain arguments) from numerical failures
/// encountered on well-formed inputs; the CLI maps the former to exit 1
/// and the latter to exit 3.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

  bool is_validation() const noexcept {
    switch (code_) {
      case Errc::bracket_failure:
      case Errc::zero_on_contour:
      case Errc::quadrature_unstable:
      case Errc::not_aligned:
      case Errc::no_convergence:
        return false;
      default:
        return true;
    }
  }

 private:
  Errc code_;
};

}  // namespace fracsum

#endif
