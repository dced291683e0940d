#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shor_spectra {

enum class Errc {
  not_coprime,
  dimension_too_large,
  bad_dimension,
  not_unitary,
  convergence_failure,
  empty_spectrum,
  domain_error,
  index_out_of_range,
  invalid_theta,
  invalid_config,
  verification_failure,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Upper limit on the dimension of a dense matrix. Returns `default_dim`
// unless the environment variable SHOR_SPECTRA_MAX_DIM holds a positive
// integer, in which case that value replaces every dense guard.
std::size_t dense_dimension_limit(std::size_t default_dim);

// Throws dimension_too_large when `dim` exceeds dense_dimension_limit.
void check_dense_dimension(std::size_t dim, std::size_t default_dim,
                           std::string_view what);

} // namespace shor_spectra
