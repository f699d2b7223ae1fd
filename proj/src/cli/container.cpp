#include "sst/cli/container.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

#include "sst/cli/report.hpp"
#include "sst/errors.hpp"

namespace sst {

namespace {

constexpr std::string_view kMagic = "SSQ1\n";
constexpr std::array<std::string_view, 10> kKeys = {"width", "height", "bit_depth", "family",  "wavelet",
                                                    "mode",  "edge_aware", "gamma", "epsilon", "dc_offset"};

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw IoError("SSQ1: bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

void put_le32(std::vector<unsigned char>& out, std::int32_t v) {
  const auto u = static_cast<std::uint32_t>(v);
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<unsigned char>((u >> (8 * k)) & 0xFF));
}

std::int32_t get_le32(const unsigned char* p) {
  std::uint32_t u = 0;
  for (int k = 3; k >= 0; --k) u = (u << 8) | p[k];
  return static_cast<std::int32_t>(u);
}

std::int64_t band_offset(int band, std::int64_t dc_offset) { return band == kY ? 0 : dc_offset; }

}  // namespace

SsqHeader make_header(int width, int height, int bit_depth, const TransformSpec& spec) {
  return {width, height, bit_depth, spec, std::int64_t{1} << bit_depth};
}

std::string serialize_header(const SsqHeader& h) {
  std::string s;
  s += "width=" + std::to_string(h.width) + "\n";
  s += "height=" + std::to_string(h.height) + "\n";
  s += "bit_depth=" + std::to_string(h.bit_depth) + "\n";
  s += "family=" + std::string(to_string(h.spec.family)) + "\n";
  s += "wavelet=" + std::string(to_string(h.spec.wavelet)) + "\n";
  s += "mode=" + std::string(to_string(h.spec.mode)) + "\n";
  s += std::string("edge_aware=") + (h.spec.edge_aware ? "1" : "0") + "\n";
  s += "gamma=" + format_double(h.spec.gamma) + "\n";
  s += "epsilon=" + format_double(h.spec.epsilon) + "\n";
  s += "dc_offset=" + std::to_string(h.dc_offset) + "\n";
  return s;
}

SsqHeader parse_header(std::string_view text) {
  std::array<std::string_view, kKeys.size()> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  for (; line_no < kKeys.size(); ++line_no) {
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      throw IoError("SSQ1: header ends before key '" + std::string(kKeys[line_no]) + "'");
    }
    const std::string_view line = text.substr(pos, eol - pos);
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || line.substr(0, eq) != kKeys[line_no]) {
      throw IoError("SSQ1: header line " + std::to_string(line_no + 2) + " should set '" +
                    std::string(kKeys[line_no]) + "', got '" + std::string(line) + "'");
    }
    values[line_no] = line.substr(eq + 1);
    pos = eol + 1;
  }
  if (pos != text.size()) throw IoError("SSQ1: unexpected text after dc_offset");

  SsqHeader h;
  h.width = parse_number<int>("width", values[0]);
  h.height = parse_number<int>("height", values[1]);
  h.bit_depth = parse_number<int>("bit_depth", values[2]);
  const auto family = parse_family(values[3]);
  const auto wavelet = parse_wavelet(values[4]);
  const auto mode = parse_mode(values[5]);
  if (!family) throw IoError("SSQ1: unknown family '" + std::string(values[3]) + "'");
  if (!wavelet) throw IoError("SSQ1: unknown wavelet '" + std::string(values[4]) + "'");
  if (!mode) throw IoError("SSQ1: unknown mode '" + std::string(values[5]) + "'");
  if (values[6] != "0" && values[6] != "1") throw IoError("SSQ1: edge_aware must be 0 or 1");
  h.spec.family = *family;
  h.spec.wavelet = *wavelet;
  h.spec.mode = *mode;
  h.spec.edge_aware = values[6] == "1";
  h.spec.gamma = parse_number<double>("gamma", values[7]);
  h.spec.epsilon = parse_number<double>("epsilon", values[8]);
  h.dc_offset = parse_number<std::int64_t>("dc_offset", values[9]);
  if (h.width <= 0 || h.height <= 0 || h.width % 2 || h.height % 2) {
    throw IoError("SSQ1: width and height must be positive and even");
  }
  if (h.bit_depth < 8 || h.bit_depth > 16) throw IoError("SSQ1: bit_depth must be in 8..16");
  return h;
}

void write_ssq(std::ostream& out, const SsqFile& file) {
  const SsqHeader& h = file.header;
  const Index rows = h.height / 2;
  const Index cols = h.width / 2;
  std::vector<unsigned char> payload;
  payload.reserve(static_cast<std::size_t>(4 * rows * cols * 4));
  for (int b = 0; b < 4; ++b) {
    const IntPlane& p = file.subbands[b];
    if (p.rows() != rows || p.cols() != cols) throw DimensionError("SSQ1: subband size does not match header");
    const std::int64_t off = band_offset(b, h.dc_offset);
    for (Index i = 0; i < p.size(); ++i) {
      const std::int64_t v = p.data()[i] + off;
      if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max()) {
        throw RangeError("SSQ1: offset sample does not fit in int32");
      }
      put_le32(payload, static_cast<std::int32_t>(v));
    }
  }
  out << kMagic << serialize_header(h) << '\n';
  out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (!out) throw IoError("SSQ1: write failed");
}

void write_ssq(const std::filesystem::path& path, const SsqFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  write_ssq(out, file);
}

SsqFile read_ssq(std::istream& in) {
  std::string magic(kMagic.size(), '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (!in || magic != kMagic) throw IoError("SSQ1: missing magic at byte 0");

  std::string header_text;
  std::string line;
  for (;;) {
    if (!std::getline(in, line)) throw IoError("SSQ1: header not terminated by a blank line");
    if (line.empty()) break;
    header_text += line;
    header_text += '\n';
    if (header_text.size() > 4096) throw IoError("SSQ1: header too long");
  }

  SsqFile file;
  file.header = parse_header(header_text);
  const SsqHeader& h = file.header;
  const Index rows = h.height / 2;
  const Index cols = h.width / 2;
  const std::size_t band_bytes = static_cast<std::size_t>(rows * cols) * 4;
  std::vector<unsigned char> payload(4 * band_bytes);
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (static_cast<std::size_t>(in.gcount()) != payload.size()) {
    throw IoError("SSQ1: payload truncated, expected " + std::to_string(payload.size()) + " bytes, got " +
                  std::to_string(in.gcount()));
  }
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("SSQ1: trailing bytes after payload");

  file.subbands.bit_depth = h.bit_depth;
  for (int b = 0; b < 4; ++b) {
    IntPlane& p = file.subbands[b];
    p.resize(rows, cols);
    const std::int64_t off = band_offset(b, h.dc_offset);
    const unsigned char* base = payload.data() + static_cast<std::size_t>(b) * band_bytes;
    for (Index i = 0; i < p.size(); ++i) {
      p.data()[i] = static_cast<std::int32_t>(get_le32(base + 4 * i) - off);
    }
  }
  return file;
}

SsqFile read_ssq(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_ssq(in);
}

}  // namespace sst
