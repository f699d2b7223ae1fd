#pragma once

// Line-oriented report records: one key=value per line, blank line between
// records. Values are plain tokens; doubles use the shortest round-trip form.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sst/rate_metrics.hpp"

namespace sst {

class Record {
 public:
  Record& add(std::string_view key, std::string_view value);
  Record& add(std::string_view key, double value);
  Record& add(std::string_view key, long long value);
  Record& add(std::string_view key, int value) { return add(key, static_cast<long long>(value)); }

  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string format_double(double v);

void write_records(std::ostream& out, const std::vector<Record>& records);

/// entropy_y .. entropy_c2, bpp, dg_energy and whichever optional fields are set.
void add_rate_fields(Record& record, const RateReport& report);

}  // namespace sst
