#include "sst/cli/pgm.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <vector>

#include "sst/errors.hpp"

namespace sst {

namespace {

// Tracks line and byte position while reading the text header.
class HeaderReader {
 public:
  explicit HeaderReader(std::istream& in) : in_(in) {}

  int get() {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) return c;
    ++offset_;
    if (c == '\n') ++line_;
    return c;
  }

  int peek() { return in_.peek(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw IoError("PGM: " + what + " (line " + std::to_string(line_) + ", byte " + std::to_string(offset_) + ")");
  }

  void skip_space_and_comments() {
    for (;;) {
      const int c = peek();
      if (c == '#') {
        while (peek() != '\n' && peek() != std::char_traits<char>::eof()) get();
      } else if (c != std::char_traits<char>::eof() && std::isspace(c)) {
        get();
      } else {
        return;
      }
    }
  }

  std::uint32_t number(const char* field) {
    skip_space_and_comments();
    if (!std::isdigit(peek())) fail(std::string("expected ") + field);
    std::uint64_t v = 0;
    while (std::isdigit(peek())) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > 0xFFFFFFFFu) fail(std::string(field) + " too large");
    }
    return static_cast<std::uint32_t>(v);
  }

  std::uint64_t offset() const { return offset_; }

 private:
  std::istream& in_;
  std::uint64_t offset_ = 0;
  int line_ = 1;
};

}  // namespace

int bit_depth_for_maxval(std::uint32_t maxval) {
  return std::max(8, static_cast<int>(std::bit_width(maxval)));
}

BayerMosaic read_pgm(std::istream& in) {
  HeaderReader r(in);
  if (r.get() != 'P' || r.get() != '5') r.fail("missing P5 magic");
  const std::uint32_t width = r.number("width");
  const std::uint32_t height = r.number("height");
  const std::uint32_t maxval = r.number("maxval");
  if (maxval == 0 || maxval > 65535) r.fail("maxval must be in 1..65535");
  if (width == 0 || height == 0) r.fail("empty image");
  const int c = r.get();
  if (c == std::char_traits<char>::eof() || !std::isspace(c)) r.fail("expected whitespace after maxval");

  const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<unsigned char> raw(count * bytes_per_sample);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
    throw IoError("PGM: truncated raster, expected " + std::to_string(raw.size()) + " bytes after byte " +
                  std::to_string(r.offset()) + ", got " + std::to_string(in.gcount()));
  }

  SamplePlane samples(height, width);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t v = raw[i * bytes_per_sample];
    if (bytes_per_sample == 2) v = (v << 8) | raw[i * 2 + 1];
    if (v > maxval) {
      throw RangeError("PGM: sample " + std::to_string(v) + " above maxval " + std::to_string(maxval) +
                       " at byte " + std::to_string(r.offset() + i * bytes_per_sample));
    }
    samples.data()[i] = static_cast<std::uint16_t>(v);
  }
  if ((width | height) & 1u) {
    throw DimensionError("PGM: Bayer mosaic needs even dimensions, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  return BayerMosaic(std::move(samples), bit_depth_for_maxval(maxval));
}

BayerMosaic read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const BayerMosaic& mosaic) {
  const std::uint32_t maxval = mosaic.max_value();
  out << "P5\n" << mosaic.width() << ' ' << mosaic.height() << '\n' << maxval << '\n';
  const SamplePlane& s = mosaic.samples();
  std::vector<unsigned char> raw;
  raw.reserve(static_cast<std::size_t>(s.size()) * 2);
  for (Index i = 0; i < s.size(); ++i) {
    const std::uint16_t v = s.data()[i];
    if (maxval > 255) raw.push_back(static_cast<unsigned char>(v >> 8));
    raw.push_back(static_cast<unsigned char>(v & 0xFF));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("PGM: write failed");
}

void write_pgm(const std::filesystem::path& path, const BayerMosaic& mosaic) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  write_pgm(out, mosaic);
}

}  // namespace sst
