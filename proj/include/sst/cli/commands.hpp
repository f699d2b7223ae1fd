#pragma once

// The `sst` command-line tool. Every command returns a process exit code:
// 0 success, 2 usage error, 3 unreadable or rejected input, 4 selftest
// invariant violation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sst/cli/synth.hpp"
#include "sst/transforms.hpp"

namespace sst {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInvariant = 4;

struct SpecFlags {
  std::string family = "xstt-i";
  std::string wavelet = "5/3";
  bool edge_aware = false;
  std::optional<double> gamma;  ///< mode default when unset
  double epsilon = 1e-8;
  std::string mode = "integer-lossless";
};

/// ConfigError on unknown names or invalid parameters.
TransformSpec resolve_spec(const SpecFlags& flags);

/// Parses "family:wavelet", e.g. "exstt-ii:9/7"; an "e" prefix on the family
/// turns edge-aware prediction on.
std::optional<std::pair<Family, WaveletKind>> parse_spec_token(std::string_view token, bool* edge_aware = nullptr);

struct ForwardArgs {
  std::string input;
  std::string output;
  SpecFlags spec;
};

struct InverseArgs {
  std::string input;
  std::string output;
};

struct AnalyzeArgs {
  std::string input;
  std::vector<std::string> specs;  ///< empty: every family and wavelet
  std::string mode = "integer-lossless";
  std::optional<double> gamma;
  double epsilon = 1e-8;
};

struct RdArgs {
  std::string input;
  std::string spec = "xstt-i:5/3";
  bool edge_aware = false;
  std::optional<double> gamma;
  double epsilon = 1e-8;
  std::vector<double> steps = {1, 2, 4, 8, 16, 32, 64};
};

struct SynthArgs {
  std::string kind;
  std::string output;
  std::string size = "64";  ///< "N" or "WxH"
  int bit_depth = 12;
  std::uint32_t seed = 1;
  int scene_noise = 4;
};

int cmd_forward(const ForwardArgs& args, std::ostream& out, std::ostream& err);
int cmd_inverse(const InverseArgs& args, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_rd(const RdArgs& args, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);
int cmd_selftest(std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sst
