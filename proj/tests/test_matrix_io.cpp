#include "shor_spectra/matrix_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

using namespace shor_spectra;

TEST_CASE("matrix dump layout and round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "shor_spectra_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "block.bin";

  const auto block = block_operator_direct(BlockSpec(Turn(2, 28), 3));
  write_matrix_dump(path, block, {Turn(2, 28).radians(), 3});

  std::ifstream in(path, std::ios::binary);
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  REQUIRE(bytes.size() == 8 + 64 * 16);
  CHECK(bytes[0] == 8);
  for (int i = 1; i < 8; ++i) {
    CHECK(bytes[i] == 0);
  }
  // Row-major: bytes 8.. hold entry (0,0), then (0,1).
  auto read_f64 = [&](std::size_t offset) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(bytes[offset + i]) << (8 * i);
    }
    return std::bit_cast<double>(v);
  };
  CHECK(read_f64(8) == block.entries(0, 0).real());
  CHECK(read_f64(16) == block.entries(0, 0).imag());
  CHECK(read_f64(24) == block.entries(0, 1).real());
  CHECK(read_f64(8 + 16 * 8) == block.entries(1, 0).real());

  const auto back = read_matrix_dump(path);
  CHECK(back.entries == block.entries);
  CHECK(back.label == block.label);

  std::ifstream side(sidecar_path(path));
  const auto meta = nlohmann::json::parse(side);
  CHECK(meta["dim"] == 8);
  CHECK(meta["n1"] == 3);
  CHECK(meta["theta"].get<double>() == doctest::Approx(Turn(2, 28).radians()));
  CHECK(meta["label"] == block.label);

  std::filesystem::remove_all(dir);
}
