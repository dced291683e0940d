#include "shor_spectra/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace shor_spectra {

std::string_view to_string(Errc code) {
  switch (code) {
  case Errc::not_coprime: return "NotCoprime";
  case Errc::dimension_too_large: return "DimensionTooLarge";
  case Errc::bad_dimension: return "BadDimension";
  case Errc::not_unitary: return "NotUnitary";
  case Errc::convergence_failure: return "ConvergenceFailure";
  case Errc::empty_spectrum: return "EmptySpectrum";
  case Errc::domain_error: return "DomainError";
  case Errc::index_out_of_range: return "IndexOutOfRange";
  case Errc::invalid_theta: return "InvalidTheta";
  case Errc::invalid_config: return "InvalidConfig";
  case Errc::verification_failure: return "VerificationFailure";
  }
  return "Unknown";
}

std::size_t dense_dimension_limit(std::size_t default_dim) {
  const char *env = std::getenv("SHOR_SPECTRA_MAX_DIM");
  if (env == nullptr) {
    return default_dim;
  }
  std::size_t value = 0;
  const char *end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    return default_dim;
  }
  return value;
}

void check_dense_dimension(std::size_t dim, std::size_t default_dim,
                           std::string_view what) {
  const std::size_t limit = dense_dimension_limit(default_dim);
  if (dim > limit) {
    throw Error(Errc::dimension_too_large,
                std::string(what) + " needs dimension " + std::to_string(dim) +
                    ", limit is " + std::to_string(limit) +
                    " (raise with SHOR_SPECTRA_MAX_DIM)");
  }
}

} // namespace shor_spectra
