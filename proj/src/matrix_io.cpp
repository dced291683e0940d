#include "shor_spectra/matrix_io.hpp"

#include "shor_spectra/error.hpp"

#include <json.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>

namespace shor_spectra {

namespace {

void put_u64(std::ostream &out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (std::size_t i = 0; i < 8; ++i) {
    bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
  }
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream &in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char *>(bytes.data()), bytes.size());
  if (!in) {
    throw Error(Errc::bad_dimension, "matrix dump is truncated");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  }
  return v;
}

} // namespace

std::filesystem::path sidecar_path(const std::filesystem::path &path) {
  auto sidecar = path;
  sidecar += ".json";
  return sidecar;
}

void write_matrix_dump(const std::filesystem::path &path, const UnitaryMatrix &m,
                       const MatrixDumpInfo &info) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::invalid_config, "cannot open " + path.string());
  }
  const auto dim = static_cast<std::uint64_t>(m.dim());
  put_u64(out, dim);
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    for (Eigen::Index c = 0; c < m.dim(); ++c) {
      put_u64(out, std::bit_cast<std::uint64_t>(m.entries(r, c).real()));
      put_u64(out, std::bit_cast<std::uint64_t>(m.entries(r, c).imag()));
    }
  }

  nlohmann::ordered_json meta;
  meta["label"] = m.label;
  meta["dim"] = dim;
  if (info.theta) {
    meta["theta"] = *info.theta;
  }
  if (info.n1) {
    meta["n1"] = *info.n1;
  }
  std::ofstream side(sidecar_path(path));
  side << meta.dump(2) << '\n';
}

UnitaryMatrix read_matrix_dump(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::invalid_config, "cannot open " + path.string());
  }
  const std::uint64_t dim = get_u64(in);
  if (dim > (std::uint64_t{1} << 16)) {
    throw Error(Errc::dimension_too_large, "matrix dump dimension too large");
  }
  UnitaryMatrix m;
  const auto n = static_cast<Eigen::Index>(dim);
  m.entries.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = std::bit_cast<double>(get_u64(in));
      const double im = std::bit_cast<double>(get_u64(in));
      m.entries(r, c) = Complex(re, im);
    }
  }
  std::ifstream side(sidecar_path(path));
  if (side) {
    const auto meta = nlohmann::json::parse(side);
    m.label = meta.value("label", std::string{});
  }
  return m;
}

} // namespace shor_spectra
