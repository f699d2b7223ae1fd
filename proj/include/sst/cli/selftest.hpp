#pragma once

#include <string>
#include <vector>

namespace sst {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Round trips of every transform, Star-Tetrix equivalence, Haar DC matrix
/// identities and gamma = 0 weight neutrality, on a fixed set of mosaics.
std::vector<SelftestCheck> run_selftest();

}  // namespace sst
