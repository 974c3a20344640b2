#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tensorloc/regions.hpp"
#include "tensorloc/tensor.hpp"

namespace tensorloc {

/// Malformed or schema-violating tensor file content.
class TensorFileError : public TensorError {
 public:
  using TensorError::TensorError;
};

/// Filesystem failure while reading or writing.
class IoError : public std::runtime_error {
 public:
  enum class Kind { read, write };
  IoError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses the JSON tensor format:
///
///   {"order": 4, "dim": 3, "symmetric": true,
///    "entries": [{"idx": [1, 1, 1, 1], "re": 5}, ...]}
///
/// Indices are 1-based; "im" is optional. With "symmetric" set each idx is
/// a sorted representative and is expanded over all permutations. Errors
/// name the offending entry by its 0-based position in "entries".
Tensor parse_tensor_file(std::string_view text);

/// Inverse of parse_tensor_file. Symmetric tensors are written as their
/// sorted representatives; values keep full double precision.
std::string serialize_tensor(const Tensor& t);

Tensor load_tensor(const std::filesystem::path& path);

enum class RasterFormat { pgm, csv, svg };

std::optional<RasterFormat> parse_raster_format(std::string_view name);

/// PGM: plain P2, members 0 and non-members 255, top row = largest imaginary
/// part. CSV: `re,im,member` per cell center at full precision. SVG: one rect
/// per member cell in complex-plane coordinates, plus the Geršgorin circles
/// for gamma rasters.
std::string write_raster(const GridRaster& g, RasterFormat format);

void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace tensorloc
