#include "sst/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

#include "sst/cli/container.hpp"
#include "sst/cli/pgm.hpp"
#include "sst/cli/report.hpp"
#include "sst/cli/selftest.hpp"
#include "sst/errors.hpp"
#include "sst/rate_metrics.hpp"

namespace sst {

namespace {

// Maps library exceptions to exit codes; anything else propagates.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

SubbandQuad<std::int32_t> round_subbands(const SubbandQuad<double>& s) {
  SubbandQuad<std::int32_t> out;
  out.bit_depth = s.bit_depth;
  for (int b = 0; b < 4; ++b) {
    out[b] = s[b].unaryExpr([](double v) { return static_cast<std::int32_t>(std::nearbyint(v)); });
  }
  return out;
}

// Integer subbands of either mode; real-mode output is rounded to nearest.
SubbandQuad<std::int32_t> integer_subbands(const BayerMosaic& m, const TransformSpec& spec) {
  if (spec.mode == Mode::IntegerLossless) return forward<std::int32_t>(m, spec).subbands;
  return round_subbands(forward<double>(m, spec).subbands);
}

std::pair<int, int> parse_size(const std::string& text) {
  auto number = [&](std::string_view part) {
    int v = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size() || v <= 0) {
      throw ConfigError("bad --size '" + text + "', expected N or WxH");
    }
    return v;
  };
  const std::string_view s = text;
  const std::size_t x = s.find('x');
  if (x == std::string_view::npos) {
    const int n = number(s);
    return {n, n};
  }
  return {number(s.substr(0, x)), number(s.substr(x + 1))};
}

}  // namespace

TransformSpec resolve_spec(const SpecFlags& flags) {
  const auto family = parse_family(flags.family);
  if (!family) throw ConfigError("unknown family '" + flags.family + "'");
  const auto wavelet = parse_wavelet(flags.wavelet);
  if (!wavelet) throw ConfigError("unknown wavelet '" + flags.wavelet + "'");
  const auto mode = parse_mode(flags.mode);
  if (!mode) throw ConfigError("unknown mode '" + flags.mode + "'");
  TransformSpec spec = TransformSpec::make(*family, *wavelet, flags.edge_aware, *mode);
  if (flags.gamma) spec.gamma = *flags.gamma;
  spec.epsilon = flags.epsilon;
  validate(spec);
  return spec;
}

std::optional<std::pair<Family, WaveletKind>> parse_spec_token(std::string_view token, bool* edge_aware) {
  const std::size_t colon = token.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view family_name = token.substr(0, colon);
  bool edge = false;
  auto family = parse_family(family_name);
  if (!family && family_name.starts_with('e')) {
    family = parse_family(family_name.substr(1));
    edge = family.has_value();
  }
  const auto wavelet = parse_wavelet(token.substr(colon + 1));
  if (!family || !wavelet) return std::nullopt;
  if (edge_aware) *edge_aware = edge;
  return std::pair{*family, *wavelet};
}

int cmd_forward(const ForwardArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TransformSpec spec = resolve_spec(args.spec);
    const BayerMosaic mosaic = read_pgm(args.input);
    SsqFile file;
    file.header = make_header(mosaic.width(), mosaic.height(), mosaic.bit_depth(), spec);
    file.subbands = integer_subbands(mosaic, spec);
    write_ssq(args.output, file);

    Record r;
    r.add("command", "forward").add("spec", describe(spec)).add("input", args.input).add("output", args.output);
    add_rate_fields(r, rate_report(file.subbands));
    write_records(out, {r});
    return kExitOk;
  });
}

int cmd_inverse(const InverseArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SsqFile file = read_ssq(args.input);
    const TransformSpec& spec = file.header.spec;
    BayerMosaic mosaic = [&] {
      if (spec.mode == Mode::IntegerLossless) return inverse(file.subbands, spec);
      SubbandQuad<double> real;
      real.bit_depth = file.subbands.bit_depth;
      for (int b = 0; b < 4; ++b) real[b] = file.subbands[b].cast<double>();
      return inverse(real, spec);
    }();
    write_pgm(args.output, mosaic);
    Record r;
    r.add("command", "inverse").add("spec", describe(spec)).add("input", args.input).add("output", args.output);
    write_records(out, {r});
    return kExitOk;
  });
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto mode = parse_mode(args.mode);
    if (!mode) throw ConfigError("unknown mode '" + args.mode + "'");
    std::vector<std::pair<Family, WaveletKind>> pairs;
    for (const std::string& token : args.specs) {
      const auto p = parse_spec_token(token);
      if (!p) throw ConfigError("bad spec '" + token + "', expected family:wavelet");
      pairs.push_back(*p);
    }
    if (pairs.empty()) {
      for (Family f : kAllFamilies) {
        for (WaveletKind w : kAllWavelets) pairs.emplace_back(f, w);
      }
    }

    const BayerMosaic mosaic = read_pgm(args.input);
    std::vector<Record> records;
    for (const auto& [family, wavelet] : pairs) {
      TransformSpec plain = TransformSpec::make(family, wavelet, false, *mode);
      TransformSpec edge = TransformSpec::make(family, wavelet, true, *mode);
      if (args.gamma) edge.gamma = plain.gamma = *args.gamma;
      edge.epsilon = plain.epsilon = args.epsilon;
      validate(edge);
      const RateReport rp = rate_report(integer_subbands(mosaic, plain));
      const RateReport re = rate_report(integer_subbands(mosaic, edge));
      const double ep = mode == Mode::IntegerLossless ? rp.dg_energy
                                                       : dg_energy(forward<double>(mosaic, plain).subbands);
      const double ee = mode == Mode::IntegerLossless ? re.dg_energy
                                                       : dg_energy(forward<double>(mosaic, edge).subbands);
      Record r;
      r.add("plain", describe(plain)).add("edge_aware", describe(edge)).add("mode", to_string(*mode));
      r.add("gamma", edge.gamma);
      r.add("dg_energy_plain", ep).add("dg_energy_edge_aware", ee);
      r.add("dg_improvement_percent", dg_improvement_percent(ee, ep));
      r.add("bpp_plain", rp.bpp).add("bpp_edge_aware", re.bpp);
      records.push_back(std::move(r));
    }
    write_records(out, records);
    return kExitOk;
  });
}

int cmd_rd(const RdArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool edge_prefix = false;
    const auto p = parse_spec_token(args.spec, &edge_prefix);
    if (!p) throw ConfigError("bad spec '" + args.spec + "', expected family:wavelet");
    TransformSpec spec = TransformSpec::make(p->first, p->second, args.edge_aware || edge_prefix, Mode::RealLossy);
    if (args.gamma) spec.gamma = *args.gamma;
    spec.epsilon = args.epsilon;
    validate(spec);
    if (args.steps.empty()) throw ConfigError("--steps is empty");

    const BayerMosaic mosaic = read_pgm(args.input);
    std::vector<Record> records;
    for (const RateReport& rep : rd_sweep(mosaic, spec, args.steps)) {
      Record r;
      r.add("spec", describe(spec));
      add_rate_fields(r, rep);
      records.push_back(std::move(r));
    }
    write_records(out, records);
    return kExitOk;
  });
}

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto kind = parse_synth_kind(args.kind);
    if (!kind) throw ConfigError("unknown synth kind '" + args.kind + "'");
    const auto [w, h] = parse_size(args.size);
    if (args.bit_depth < 8 || args.bit_depth > 16) throw ConfigError("--bit-depth must be in 8..16");
    if (args.scene_noise < 0) throw ConfigError("--scene-noise must be >= 0");
    const BayerMosaic m = synthesize(*kind, {w, h, args.bit_depth, args.seed, args.scene_noise});
    write_pgm(args.output, m);
    Record r;
    r.add("command", "synth").add("kind", args.kind).add("width", w).add("height", h);
    r.add("bit_depth", args.bit_depth).add("output", args.output);
    write_records(out, {r});
    return kExitOk;
  });
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool ok = true;
    for (const SelftestCheck& c : run_selftest()) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
      ok = ok && c.passed;
    }
    return ok ? kExitOk : kExitInvariant;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral-spatial transforms for Bayer mosaics", "sst"};
  app.require_subcommand(1);

  auto add_spec_flags = [](CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--family", f.family, "wsst-ydgcbcr, wsst-ydgcocg, wsst-ydgcocg2, xstt-i, xstt-ii")
        ->capture_default_str();
    cmd->add_option("--wavelet", f.wavelet, "haar, 5/3, 9/7")->capture_default_str();
    cmd->add_flag("--edge-aware", f.edge_aware, "weighted (edge-aware) predict steps");
    cmd->add_option("--gamma", f.gamma, "weight exponent (default 1 lossless, 0.5 lossy)");
    cmd->add_option("--epsilon", f.epsilon, "weight regularizer")->capture_default_str();
    cmd->add_option("--mode", f.mode, "integer-lossless or real-lossy")->capture_default_str();
  };

  ForwardArgs fwd;
  CLI::App* c_fwd = app.add_subcommand("forward", "PGM mosaic -> SSQ1 subbands");
  c_fwd->add_option("input", fwd.input, "input PGM")->required();
  c_fwd->add_option("output", fwd.output, "output SSQ1 file")->required();
  add_spec_flags(c_fwd, fwd.spec);

  InverseArgs inv;
  CLI::App* c_inv = app.add_subcommand("inverse", "SSQ1 subbands -> PGM mosaic");
  c_inv->add_option("input", inv.input, "input SSQ1 file")->required();
  c_inv->add_option("output", inv.output, "output PGM")->required();

  AnalyzeArgs ana;
  CLI::App* c_ana = app.add_subcommand("analyze", "Dg energy of plain vs edge-aware transforms");
  c_ana->add_option("input", ana.input, "input PGM")->required();
  c_ana->add_option("--specs", ana.specs, "family:wavelet list (default: all)")->delimiter(',');
  c_ana->add_option("--mode", ana.mode)->capture_default_str();
  c_ana->add_option("--gamma", ana.gamma);
  c_ana->add_option("--epsilon", ana.epsilon)->capture_default_str();

  RdArgs rd;
  CLI::App* c_rd = app.add_subcommand("rd", "rate/distortion sweep in real-lossy mode");
  c_rd->add_option("input", rd.input, "input PGM")->required();
  c_rd->add_option("--spec", rd.spec, "family:wavelet, 'e' prefix for edge-aware")->capture_default_str();
  c_rd->add_flag("--edge-aware", rd.edge_aware);
  c_rd->add_option("--gamma", rd.gamma);
  c_rd->add_option("--epsilon", rd.epsilon)->capture_default_str();
  c_rd->add_option("--steps", rd.steps, "quantizer steps")->delimiter(',')->capture_default_str();

  SynthArgs syn;
  CLI::App* c_syn = app.add_subcommand("synth", "write a synthetic test mosaic");
  c_syn->add_option("kind", syn.kind, "constant, ramp, diag-edge-45, diag-edge-135, h-stripes, v-stripes, noise")
      ->required();
  c_syn->add_option("output", syn.output, "output PGM")->required();
  c_syn->add_option("--size", syn.size, "N or WxH")->capture_default_str();
  c_syn->add_option("--bit-depth", syn.bit_depth)->capture_default_str();
  c_syn->add_option("--seed", syn.seed)->capture_default_str();
  c_syn->add_option("--scene-noise", syn.scene_noise, "noise amplitude (LSB) on edge and stripe kinds")
      ->capture_default_str();

  CLI::App* c_self = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (c_fwd->parsed()) return cmd_forward(fwd, out, err);
  if (c_inv->parsed()) return cmd_inverse(inv, out, err);
  if (c_ana->parsed()) return cmd_analyze(ana, out, err);
  if (c_rd->parsed()) return cmd_rd(rd, out, err);
  if (c_syn->parsed()) return cmd_synth(syn, out, err);
  if (c_self->parsed()) return cmd_selftest(out, err);
  return kExitUsage;
}

}  // namespace sst
