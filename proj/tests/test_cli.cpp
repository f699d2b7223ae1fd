#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sst/cli/commands.hpp"
#include "sst/cli/container.hpp"
#include "sst/cli/pgm.hpp"
#include "sst/errors.hpp"
#include "test_support.hpp"

namespace sst {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "sst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

/// key=value records separated by blank lines.
std::vector<std::map<std::string, std::string>> records(const std::string& text) {
  std::vector<std::map<std::string, std::string>> out(1);
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) {
      if (!out.back().empty()) out.emplace_back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq != std::string::npos) out.back()[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (out.back().empty()) out.pop_back();
  return out;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("sst_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

// --------------------------------------------------------------------- PGM

BayerMosaic pgm_round_trip(const BayerMosaic& m) {
  std::stringstream buf;
  write_pgm(buf, m);
  return read_pgm(buf);
}

BayerMosaic pgm_from(const std::string& bytes) {
  std::istringstream in(bytes);
  return read_pgm(in);
}

TEST(Pgm, RoundTripsEveryBitDepth) {
  std::mt19937 rng(41);
  for (int bd = 8; bd <= 16; ++bd) {
    const BayerMosaic m = test::random_mosaic(rng, 6, 4, bd);
    EXPECT_EQ(pgm_round_trip(m), m) << bd;
  }
}

TEST(Pgm, WritesBigEndianSamplesAfterTheHeader) {
  SamplePlane s(2, 2);
  s << 0x0102, 0x0A0B,  //
      0x0FFF, 0;
  std::ostringstream out;
  write_pgm(out, BayerMosaic(s, 12));
  const std::string bytes = out.str();
  ASSERT_EQ(bytes.rfind("P5", 0), 0u);
  ASSERT_NE(bytes.find("4095"), std::string::npos);
  const std::string raster = bytes.substr(bytes.size() - 8);
  EXPECT_EQ(raster, std::string("\x01\x02\x0A\x0B\x0F\xFF\x00\x00", 8));
}

TEST(Pgm, EightBitSamplesUseOneByte) {
  std::ostringstream out;
  write_pgm(out, test::constant_mosaic(4, 2, 8, 200));
  const std::string bytes = out.str();
  EXPECT_EQ(bytes.substr(bytes.size() - 8), std::string(8, static_cast<char>(200)));
  EXPECT_NE(bytes.find("255"), std::string::npos);
}

TEST(Pgm, AcceptsCommentsAndDerivesBitDepth) {
  std::string bytes = "P5 # raw\n# size next\n2 2\n# depth\n1023\n";
  bytes += std::string("\x00\x01\x03\xFF\x00\x00\x02\x00", 8);
  const BayerMosaic m = pgm_from(bytes);
  EXPECT_EQ(m.bit_depth(), 10);
  EXPECT_EQ(m.samples()(0, 0), 1);
  EXPECT_EQ(m.samples()(0, 1), 1023);
  EXPECT_EQ(m.samples()(1, 0), 0);
  EXPECT_EQ(m.samples()(1, 1), 512);
}

TEST(Pgm, BitDepthForMaxval) {
  EXPECT_EQ(bit_depth_for_maxval(1), 8);
  EXPECT_EQ(bit_depth_for_maxval(255), 8);
  EXPECT_EQ(bit_depth_for_maxval(256), 9);
  EXPECT_EQ(bit_depth_for_maxval(4095), 12);
  EXPECT_EQ(bit_depth_for_maxval(65535), 16);
}

TEST(Pgm, RejectsMalformedInput) {
  EXPECT_THROW(pgm_from(""), IoError);
  EXPECT_THROW(pgm_from("P2\n2 2\n255\n0 0 0 0\n"), IoError);
  EXPECT_THROW(pgm_from("P5\n2\n"), IoError);
  EXPECT_THROW(pgm_from("P5\nx 2\n255\n"), IoError);
  EXPECT_THROW(pgm_from("P5\n2 2\n0\n"), IoError);
  EXPECT_THROW(pgm_from("P5\n2 2\n70000\n"), IoError);
  EXPECT_THROW(pgm_from(std::string("P5\n2 2\n255\n\x01\x02\x03", 14)), IoError);
  EXPECT_THROW(pgm_from(std::string("P5\n2 2\n1000\n\x03\xE9\x00\x00\x00\x00\x00\x00", 21)), RangeError);
  EXPECT_THROW(pgm_from(std::string("P5\n3 2\n255\n") + std::string(6, '\0')), DimensionError);
}

TEST(Pgm, HeaderErrorsNameTheirPosition) {
  try {
    pgm_from("P5\n2 2\nabc\n");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

// -------------------------------------------------------------------- SSQ1

SsqFile sample_file(const TransformSpec& spec) {
  std::mt19937 rng(42);
  const BayerMosaic m = test::random_mosaic(rng, 8, 6, 12);
  SsqFile f;
  f.header = make_header(8, 6, 12, spec);
  f.subbands = forward<std::int32_t>(m, spec).subbands;
  return f;
}

TEST(Ssq, HeaderRoundTrips) {
  std::vector<TransformSpec> specs = {TransformSpec::make(Family::XsttI, WaveletKind::LeGall53, false),
                                      TransformSpec::make(Family::WsstYDgCoCg2, WaveletKind::Cdf97, true,
                                                          Mode::RealLossy)};
  specs.push_back(specs[0]);
  specs.back().edge_aware = true;
  specs.back().gamma = 0.3;
  specs.back().epsilon = 1e-3;
  for (const TransformSpec& spec : specs) {
    const SsqHeader h = make_header(640, 480, 14, spec);
    EXPECT_EQ(h.dc_offset, 1 << 14);
    EXPECT_EQ(parse_header(serialize_header(h)), h);
  }
}

TEST(Ssq, SerializesKeysInOrder) {
  const SsqHeader h = make_header(4, 2, 12, TransformSpec::make(Family::XsttII, WaveletKind::Haar, true));
  EXPECT_EQ(serialize_header(h),
            "width=4\nheight=2\nbit_depth=12\nfamily=xstt-ii\nwavelet=haar\nmode=integer-lossless\n"
            "edge_aware=1\ngamma=1\nepsilon=1e-08\ndc_offset=4096\n");
}

TEST(Ssq, RejectsBadHeaders) {
  const std::string good = serialize_header(
      make_header(4, 2, 12, TransformSpec::make(Family::XsttI, WaveletKind::LeGall53, false)));
  EXPECT_NO_THROW(parse_header(good));
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_THROW(parse_header(replaced("height=2\n", "")), IoError);
  EXPECT_THROW(parse_header(replaced("width=4\nheight=2\n", "height=2\nwidth=4\n")), IoError);
  EXPECT_THROW(parse_header(replaced("width=4", "width=four")), IoError);
  EXPECT_THROW(parse_header(replaced("family=xstt-i", "family=dct")), IoError);
  EXPECT_THROW(parse_header(replaced("wavelet=5/3", "wavelet=db4")), IoError);
  EXPECT_THROW(parse_header(replaced("mode=integer-lossless", "mode=fast")), IoError);
  EXPECT_THROW(parse_header(good + "extra=1\n"), IoError);
  EXPECT_THROW(parse_header(replaced("width=4", "width=3")), IoError);
}

TEST(Ssq, PayloadIsLittleEndianWithOffsetChroma) {
  SsqFile f = sample_file(TransformSpec::make(Family::XsttI, WaveletKind::LeGall53, false));
  f.subbands[kY](0, 0) = 0x01020304;
  f.subbands[kDg](0, 0) = -5;
  std::ostringstream out;
  write_ssq(out, f);
  const std::string bytes = out.str();
  const std::string head = "SSQ1\n" + serialize_header(f.header) + "\n";
  ASSERT_EQ(bytes.rfind(head, 0), 0u);
  const std::size_t plane = 4 * 3 * 4;  // rows * cols * 4 bytes
  ASSERT_EQ(bytes.size(), head.size() + 4 * plane);
  EXPECT_EQ(bytes.substr(head.size(), 4), std::string("\x04\x03\x02\x01", 4));
  auto le32 = [&](std::size_t at) {
    std::uint32_t v = 0;
    for (int k = 3; k >= 0; --k) v = (v << 8) | static_cast<unsigned char>(bytes[at + k]);
    return static_cast<std::int32_t>(v);
  };
  EXPECT_EQ(le32(head.size() + plane), 4096 - 5);
  EXPECT_EQ(le32(head.size() + 2 * plane), f.subbands[kC1](0, 0) + 4096);
  EXPECT_EQ(le32(head.size() + 3 * plane + 4), f.subbands[kC2](0, 1) + 4096);
}

TEST(Ssq, RoundTripsSubbands) {
  const SsqFile f = sample_file(TransformSpec::make(Family::XsttII, WaveletKind::Cdf97, true));
  std::stringstream buf;
  write_ssq(buf, f);
  const SsqFile back = read_ssq(buf);
  EXPECT_EQ(back.header, f.header);
  EXPECT_TRUE(test::quads_equal(back.subbands, f.subbands));
  EXPECT_EQ(back.subbands.dc_offset, 0);
  EXPECT_EQ(back.subbands.bit_depth, 12);
}

TEST(Ssq, RejectsDamagedFiles) {
  std::ostringstream out;
  write_ssq(out, sample_file(TransformSpec::make(Family::XsttI, WaveletKind::Haar, false)));
  const std::string bytes = out.str();
  auto read = [](const std::string& b) {
    std::istringstream in(b);
    return read_ssq(in);
  };
  EXPECT_NO_THROW(read(bytes));
  EXPECT_THROW(read(bytes.substr(0, bytes.size() - 1)), IoError);
  EXPECT_THROW(read(bytes + "x"), IoError);
  EXPECT_THROW(read("SSQ2\n" + bytes.substr(5)), IoError);
  EXPECT_THROW(read(""), IoError);
}

// ------------------------------------------------------------- spec tokens

TEST(SpecToken, ParsesFamiliesWaveletsAndEdgePrefix) {
  bool edge = true;
  auto t = parse_spec_token("xstt-ii:9/7", &edge);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->first, Family::XsttII);
  EXPECT_EQ(t->second, WaveletKind::Cdf97);
  EXPECT_FALSE(edge);
  t = parse_spec_token("ewsst-ydgcocg:haar", &edge);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->first, Family::WsstYDgCoCg);
  EXPECT_TRUE(edge);
  EXPECT_FALSE(parse_spec_token("xstt-i").has_value());
  EXPECT_FALSE(parse_spec_token("xstt-i:7/5").has_value());
  EXPECT_FALSE(parse_spec_token("foo:5/3").has_value());
}

TEST(ResolveSpec, AppliesModeDefaultsAndRejectsNonsense) {
  SpecFlags flags;
  flags.edge_aware = true;
  flags.mode = "real-lossy";
  EXPECT_EQ(resolve_spec(flags).gamma, 0.5);
  flags.gamma = 2.0;
  EXPECT_EQ(resolve_spec(flags).gamma, 2.0);
  flags.family = "xstt-v";
  EXPECT_THROW(resolve_spec(flags), ConfigError);
  flags = SpecFlags{};
  flags.epsilon = 0.0;
  EXPECT_THROW(resolve_spec(flags), ConfigError);
}

// --------------------------------------------------------------- commands

using Cli = TempDir;

TEST_F(Cli, SynthForwardInverseIsByteIdentical) {
  const std::vector<std::vector<std::string>> spec_flags = {
      {},
      {"--family", "xstt-ii", "--wavelet", "9/7", "--edge-aware"},
      {"--family", "wsst-ydgcocg2", "--wavelet", "haar"},
      {"--family", "xstt-i", "--edge-aware", "--gamma", "0.5"},
  };
  for (const std::string kind : {"diag-edge-45", "noise", "ramp"}) {
    ASSERT_EQ(run({"synth", kind, path("in.pgm"), "--size", "24x16"}).code, kExitOk);
    for (const auto& flags : spec_flags) {
      std::vector<std::string> fwd = {"forward", path("in.pgm"), path("x.ssq")};
      fwd.insert(fwd.end(), flags.begin(), flags.end());
      const CliResult f = run(fwd);
      ASSERT_EQ(f.code, kExitOk) << f.err;
      const CliResult i = run({"inverse", path("x.ssq"), path("out.pgm")});
      ASSERT_EQ(i.code, kExitOk) << i.err;
      EXPECT_EQ(slurp(path("out.pgm")), slurp(path("in.pgm"))) << kind;
    }
  }
}

TEST_F(Cli, RealLossyForwardStillDecodes) {
  ASSERT_EQ(run({"synth", "ramp", path("in.pgm"), "--size", "16"}).code, kExitOk);
  ASSERT_EQ(run({"forward", path("in.pgm"), path("x.ssq"), "--mode", "real-lossy", "--edge-aware"}).code, kExitOk);
  ASSERT_EQ(run({"inverse", path("x.ssq"), path("out.pgm")}).code, kExitOk);
  const BayerMosaic a = read_pgm(fs::path(path("in.pgm")));
  const BayerMosaic b = read_pgm(fs::path(path("out.pgm")));
  // Subbands were rounded to integers for storage; the damage stays small.
  EXPECT_LE((a.samples().cast<int>() - b.samples().cast<int>()).abs().maxCoeff(), 4);
}

TEST_F(Cli, ConstantInputHasZeroDgEntropy) {
  ASSERT_EQ(run({"synth", "constant", path("c.pgm"), "--size", "16"}).code, kExitOk);
  const CliResult r = run({"forward", path("c.pgm"), path("c.ssq")});
  ASSERT_EQ(r.code, kExitOk);
  const auto rec = records(r.out);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0].at("entropy_dg"), "0");
  EXPECT_EQ(rec[0].at("dg_energy"), "0");
}

TEST_F(Cli, SynthIsSeedReproducible) {
  ASSERT_EQ(run({"synth", "noise", path("a.pgm"), "--seed", "7", "--size", "20"}).code, kExitOk);
  ASSERT_EQ(run({"synth", "noise", path("b.pgm"), "--seed", "7", "--size", "20"}).code, kExitOk);
  ASSERT_EQ(run({"synth", "noise", path("c.pgm"), "--seed", "8", "--size", "20"}).code, kExitOk);
  EXPECT_EQ(slurp(path("a.pgm")), slurp(path("b.pgm")));
  EXPECT_NE(slurp(path("a.pgm")), slurp(path("c.pgm")));
  const BayerMosaic m = read_pgm(fs::path(path("a.pgm")));
  EXPECT_EQ(m.width(), 20);
  EXPECT_EQ(m.bit_depth(), 12);
}

TEST_F(Cli, EdgeAwareLowersDgEnergyOnDiagonalEdge) {
  ASSERT_EQ(run({"synth", "diag-edge-45", path("e.pgm")}).code, kExitOk);
  const CliResult r = run({"analyze", path("e.pgm"), "--specs", "xstt-i:5/3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rec = records(r.out);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0].at("plain"), "xstt-i/5/3");
  EXPECT_EQ(rec[0].at("edge_aware"), "exstt-i/5/3");
  EXPECT_LT(std::stod(rec[0].at("dg_energy_edge_aware")), std::stod(rec[0].at("dg_energy_plain")));
  EXPECT_LT(std::stod(rec[0].at("dg_improvement_percent")), 0.0);
}

TEST_F(Cli, AnalyzeDefaultsToEveryPair) {
  ASSERT_EQ(run({"synth", "h-stripes", path("s.pgm"), "--size", "16"}).code, kExitOk);
  const CliResult r = run({"analyze", path("s.pgm")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(records(r.out).size(), 15u);
}

TEST_F(Cli, RdPrintsOneRecordPerStep) {
  ASSERT_EQ(run({"synth", "diag-edge-135", path("d.pgm"), "--size", "16"}).code, kExitOk);
  const CliResult r = run({"rd", path("d.pgm"), "--spec", "exstt-ii:5/3", "--steps", "2", "8", "32"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rec = records(r.out);
  ASSERT_EQ(rec.size(), 3u);
  EXPECT_EQ(rec[0].at("spec"), "exstt-ii/5/3");
  EXPECT_EQ(rec[1].at("step"), "8");
  for (const auto& x : rec) {
    EXPECT_TRUE(x.count("psnr"));
    EXPECT_TRUE(x.count("weight_divergence"));
  }
  EXPECT_GE(std::stod(rec[0].at("bpp")), std::stod(rec[2].at("bpp")));
}

TEST_F(Cli, ExitCodes) {
  ASSERT_EQ(run({"synth", "ramp", path("r.pgm"), "--size", "8"}).code, kExitOk);
  EXPECT_EQ(run({"forward", path("r.pgm"), path("r.ssq"), "--family", "dct"}).code, kExitUsage);
  EXPECT_EQ(run({"forward", path("r.pgm"), path("r.ssq"), "--wavelet", "db4"}).code, kExitUsage);
  EXPECT_EQ(run({"forward", path("r.pgm"), path("r.ssq"), "--gamma", "-1", "--edge-aware"}).code, kExitUsage);
  EXPECT_EQ(run({"rd", path("r.pgm"), "--steps", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"rd", path("r.pgm"), "--spec", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "plaid", path("p.pgm")}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);

  spit(path("odd.pgm"), std::string("P5\n3 2\n255\n") + std::string(6, '\x10'));
  EXPECT_EQ(run({"forward", path("odd.pgm"), path("o.ssq")}).code, kExitIo);
  EXPECT_EQ(run({"forward", path("missing.pgm"), path("o.ssq")}).code, kExitIo);
  spit(path("junk.ssq"), "SSQ1\nwidth=2\n");
  EXPECT_EQ(run({"inverse", path("junk.ssq"), path("j.pgm")}).code, kExitIo);
}

TEST(CliHelp, ExitsCleanly) {
  const CliResult r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("forward"), std::string::npos);
  EXPECT_NE(r.out.find("selftest"), std::string::npos);
}

TEST(CliSelftest, PassesOnThisBuild) {
  const CliResult r = run({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace sst
