#pragma once

// Binary PGM (P5) input/output for raw Bayer mosaics.
//
// The mosaic bit depth is max(8, bits needed for maxval); files are written
// with maxval = 2^bit_depth - 1 so canonical files round-trip byte for byte.
// Samples wider than 8 bits are big-endian, as the format requires.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sst/cfa.hpp"

namespace sst {

/// IoError (with line and byte offset) on malformed input, DimensionError on
/// odd dimensions, RangeError on samples above maxval.
BayerMosaic read_pgm(std::istream& in);
BayerMosaic read_pgm(const std::filesystem::path& path);

void write_pgm(std::ostream& out, const BayerMosaic& mosaic);
void write_pgm(const std::filesystem::path& path, const BayerMosaic& mosaic);

/// Smallest supported bit depth (8..16) that can hold `maxval`.
int bit_depth_for_maxval(std::uint32_t maxval);

}  // namespace sst
