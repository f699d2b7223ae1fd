#include "sst/cli/report.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace sst {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

Record& Record::add(std::string_view key, std::string_view value) {
  fields_.emplace_back(std::string(key), std::string(value));
  return *this;
}

Record& Record::add(std::string_view key, double value) { return add(key, std::string_view(format_double(value))); }

Record& Record::add(std::string_view key, long long value) {
  return add(key, std::string_view(std::to_string(value)));
}

void write_records(std::ostream& out, const std::vector<Record>& records) {
  bool first = true;
  for (const Record& r : records) {
    if (!first) out << '\n';
    first = false;
    for (const auto& [k, v] : r.fields()) out << k << '=' << v << '\n';
  }
}

void add_rate_fields(Record& record, const RateReport& report) {
  static constexpr std::array<std::string_view, 4> kNames = {"entropy_y", "entropy_dg", "entropy_c1", "entropy_c2"};
  if (report.quant_step) record.add("step", *report.quant_step);
  for (std::size_t b = 0; b < 4; ++b) record.add(kNames[b], report.entropy[b]);
  record.add("bpp", report.bpp);
  record.add("dg_energy", report.dg_energy);
  if (report.psnr) record.add("psnr", *report.psnr);
  if (report.weight_divergence) record.add("weight_divergence", *report.weight_divergence);
}

}  // namespace sst
