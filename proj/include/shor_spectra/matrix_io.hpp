#pragma once

#include "shor_spectra/operators.hpp"

#include <filesystem>
#include <optional>

namespace shor_spectra {

struct MatrixDumpInfo {
  std::optional<double> theta;
  std::optional<int> n1;
};

// Binary layout: u64 dim, then dim*dim (re, im) f64 pairs in row-major
// order, all little-endian. A JSON sidecar `<path>.json` carries
// {label, dim, theta?, n1?}.
void write_matrix_dump(const std::filesystem::path &path, const UnitaryMatrix &m,
                       const MatrixDumpInfo &info = {});

// Reads the binary file; the label comes from the sidecar when present.
UnitaryMatrix read_matrix_dump(const std::filesystem::path &path);

std::filesystem::path sidecar_path(const std::filesystem::path &path);

} // namespace shor_spectra
