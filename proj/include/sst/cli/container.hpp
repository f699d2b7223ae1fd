#pragma once

// SSQ1 subband container.
//
//   SSQ1\n
//   width=<int>\n ... dc_offset=<int>\n   (keys in the fixed order below)
//   \n
//   Y, Dg, C1, C2 planes: row-major little-endian int32
//
// dc_offset is added to Dg, C1 and C2 on write and removed on read, so the
// stored residual planes are non-negative for typical content.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "sst/cfa.hpp"
#include "sst/transforms.hpp"

namespace sst {

struct SsqHeader {
  int width = 0;
  int height = 0;
  int bit_depth = 0;
  TransformSpec spec;
  std::int64_t dc_offset = 0;

  bool operator==(const SsqHeader&) const = default;
};

struct SsqFile {
  SsqHeader header;
  SubbandQuad<std::int32_t> subbands;
};

std::string serialize_header(const SsqHeader& header);

/// Parses the text between the magic line and the blank line. Every key must
/// appear once, in order; IoError otherwise.
SsqHeader parse_header(std::string_view text);

/// Header for subbands of a width x height mosaic, dc_offset = 2^bit_depth.
SsqHeader make_header(int width, int height, int bit_depth, const TransformSpec& spec);

void write_ssq(std::ostream& out, const SsqFile& file);
void write_ssq(const std::filesystem::path& path, const SsqFile& file);
SsqFile read_ssq(std::istream& in);
SsqFile read_ssq(const std::filesystem::path& path);

}  // namespace sst
