#include "aomsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "aomsim/entanglement.hpp"
#include "aomsim/errors.hpp"
#include "aomsim/json_io.hpp"
#include "aomsim/mode_transform.hpp"
#include "aomsim/scenarios.hpp"

namespace aomsim::cli {

namespace {

enum class Format { text, json };

struct RunConfig {
  std::string command;
  TransformKind transform_kind = TransformKind::correct;
  double theta = std::numbers::pi / 4.0;
  double phi = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  std::string input_path;
  std::string transform_path;
  std::string output_path;
  double tolerance = kDefaultAuditTolerance;
  Format format = Format::text;

  // evolve
  std::string in_low = "1";
  std::string in_high = "1'";
  std::string out_low = "t";
  std::string out_high = "d";
  int low_freq = 0;
  bool renormalize = false;

  // analyze, 1-based photon numbers
  std::vector<std::size_t> keep;
  std::vector<std::size_t> transpose;

  // run-swap
  std::size_t sweep = 0;
  std::uint64_t seed = 0;
};

// Thrown for configuration problems detected after CLI parsing.
struct ConfigError {
  std::string message;
};

std::string fixed(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(kReportDecimals) << round_fixed(x);
  return os.str();
}

std::string fixed(Complex z) {
  std::ostringstream os;
  const double im = round_fixed(z.imag());
  os << fixed(z.real()) << (im < 0.0 ? " - " : " + ") << fixed(std::abs(im)) << "i";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_state(std::ostream& os, const PhotonState& s) {
  for (const auto& [ket, amp] : s) os << "  (" << fixed(amp) << ") " << ket_notation(ket) << "\n";
}

void write_matrix(std::ostream& os, const CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << fixed(m(r, c));
    os << "]\n";
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

AOMPorts evolve_ports(const RunConfig& cfg) {
  return {{cfg.in_low, cfg.low_freq}, {cfg.in_high, cfg.low_freq + 1}, {cfg.out_low, cfg.low_freq},
          {cfg.out_high, cfg.low_freq + 1}};
}

ModeTransform device_transform(const RunConfig& cfg) {
  const AOMPorts ports = evolve_ports(cfg);
  if (cfg.transform_kind == TransformKind::flawed) return flawed_aom(ports);
  return aom_evolution({cfg.theta, cfg.phi, ports});
}

std::size_t to_slot(std::size_t photon, std::size_t n_slots) {
  if (photon == 0 || photon > n_slots) {
    throw ConfigError{"photon " + std::to_string(photon) + " out of range 1.." + std::to_string(n_slots)};
  }
  return photon - 1;
}

// ---------------------------------------------------------------------------

int check_transform(const RunConfig& cfg, std::ostream& out) {
  const ModeTransform m = cfg.transform_path.empty()
                              ? device_transform(cfg)
                              : transform_from_json(parse_json(read_file(cfg.transform_path), cfg.transform_path));
  const IsometryReport report = isometry_report(m, cfg.tolerance);
  if (cfg.format == Format::json) {
    json j = isometry_to_json(report);
    j["transform"] = transform_to_json(m);
    j["tolerance"] = cfg.tolerance;
    out << dump(j);
  } else {
    out << "gram_deviation: " << fixed(report.gram_deviation) << "\n"
        << "worst_pair_overlap: " << fixed(report.worst_pair_overlap) << "\n"
        << "is_isometry: " << std::boolalpha << report.is_isometry << "\n"
        << "is_unitary: " << report.is_unitary << "\n"
        << "tolerance: " << cfg.tolerance << "\n";
  }
  return report.is_isometry ? kExitOk : kExitAuditFailed;
}

int evolve(const RunConfig& cfg, std::ostream& out) {
  const PhotonState input = state_from_json(parse_json(read_file(cfg.input_path), cfg.input_path));
  const ModeTransform m = device_transform(cfg);
  PhotonState result = apply(m, input);
  const double norm_after = result.norm();
  if (cfg.renormalize) result = normalize(result).state;

  if (cfg.format == Format::json) {
    out << dump(state_to_json(result));
  } else {
    out << "norm_before: " << fixed(input.norm()) << "\n"
        << "norm_after: " << fixed(norm_after) << "\n"
        << "renormalized: " << std::boolalpha << cfg.renormalize << "\n"
        << "state:\n";
    write_text_state(out, result);
  }
  return kExitOk;
}

int analyze(const RunConfig& cfg, std::ostream& out) {
  const PhotonState raw = state_from_json(parse_json(read_file(cfg.input_path), cfg.input_path));
  const auto [state, original_norm] = normalize(raw);
  const std::size_t n = state.n_slots();

  SlotSet keep;
  for (std::size_t p : cfg.keep) keep.push_back(to_slot(p, n));
  if (keep.empty()) keep.push_back(0);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  const DensityMatrix rho = keep.size() == n ? density_matrix(state) : partial_trace(state, keep);
  const std::vector<double> eigenvalues = hermitian_eigenvalues(rho.matrix);

  std::optional<SchmidtSpectrum> spectrum;
  if (keep.size() < n) spectrum = schmidt(state, keep);

  std::optional<double> neg;
  SlotSet side;
  if (keep.size() >= 2) {
    for (std::size_t p : cfg.transpose) side.push_back(to_slot(p, n));
    if (side.empty()) side.push_back(keep.back());
    neg = negativity(rho, side);
  }

  if (cfg.format == Format::json) {
    json j{{"original_norm", round_fixed(original_norm)},
           {"density_matrix", density_to_json(rho)},
           {"eigenvalues", json::array()}};
    for (double ev : eigenvalues) j["eigenvalues"].push_back(round_fixed(ev));
    if (spectrum) {
      j["schmidt"] = json::array();
      for (double v : spectrum->values) j["schmidt"].push_back(round_fixed(v));
      j["entropy_bits"] = round_fixed(entropy(*spectrum));
    }
    if (neg) {
      j["negativity"] = round_fixed(*neg);
      json photons = json::array();
      for (std::size_t slot : side) photons.push_back(slot + 1);
      j["transpose_side"] = std::move(photons);
    }
    out << dump(j);
  } else {
    out << "original_norm: " << fixed(original_norm) << "\n"
        << "kept_slots:";
    for (std::size_t s : keep) out << " " << s + 1;
    out << "\nbasis:\n";
    for (const auto& k : rho.basis) out << "  " << ket_notation(k) << "\n";
    out << "density_matrix:\n";
    write_matrix(out, rho.matrix);
    out << "eigenvalues:";
    for (double ev : eigenvalues) out << " " << fixed(ev);
    out << "\n";
    if (spectrum) {
      out << "schmidt:";
      for (double v : spectrum->values) out << " " << fixed(v);
      out << "\nentropy_bits: " << fixed(entropy(*spectrum)) << "\n";
    }
    if (neg) out << "negativity: " << fixed(*neg) << "\n";
  }
  return kExitOk;
}

struct SweepSummary {
  std::size_t runs = 0;
  bool verdict_invariant = true;
  double max_negativity_deviation = 0.0;
};

SweepSummary sweep(const RunConfig& cfg, const SwapReport& base) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  SweepSummary summary;
  for (std::size_t i = 0; i < cfg.sweep; ++i) {
    const double p1 = angle(rng);
    const double p2 = angle(rng);
    const SwapReport r = run_swap(cfg.transform_kind, p1, p2);
    summary.runs++;
    summary.verdict_invariant = summary.verdict_invariant && r.swapping_verdict == base.swapping_verdict;
    summary.max_negativity_deviation =
        std::max(summary.max_negativity_deviation, std::abs(r.rho14_negativity - base.rho14_negativity));
  }
  return summary;
}

constexpr double kSweepNegativityTolerance = 1e-10;

int run_swap_command(const RunConfig& cfg, std::ostream& out) {
  const SwapReport report = run_swap(cfg.transform_kind, cfg.phi1, cfg.phi2);
  std::optional<SweepSummary> summary;
  if (cfg.sweep > 0) summary = sweep(cfg, report);
  const bool sweep_ok = !summary || (summary->verdict_invariant &&
                                     summary->max_negativity_deviation <= kSweepNegativityTolerance);

  if (cfg.format == Format::json) {
    json j = swap_report_to_json(report, {cfg.tolerance, kSwapVerdictThreshold});
    if (summary) {
      j["sweep"] = {{"runs", summary->runs},
                    {"seed", cfg.seed},
                    {"verdict_invariant", summary->verdict_invariant},
                    {"max_negativity_deviation", round_fixed(summary->max_negativity_deviation)}};
    }
    out << dump(j);
  } else {
    out << "transform_kind: " << to_string(report.transform_kind) << " (phi1 = " << fixed(report.phi1)
        << ", phi2 = " << fixed(report.phi2) << ")\n"
        << "norm_after_aoms: " << fixed(report.norm_after_aoms) << "\n"
        << "postselect_probability: " << fixed(report.postselect_probability) << "\n"
        << "post-selected state (slots 1, 2, 3, 4):\n";
    write_text_state(out, report.post_selected);
    out << "factor_overlap: " << fixed(report.factor_overlap) << "\n"
        << "rho14 basis:";
    for (const auto& k : report.rho14.basis) out << " " << ket_notation(k);
    out << "\nrho14_eigenvalues:";
    for (double ev : report.rho14_eigenvalues) out << " " << fixed(ev);
    out << "\nrho14_negativity: " << fixed(report.rho14_negativity) << "\n"
        << "nosignal_trace_distance: " << fixed(report.nosignal_trace_distance) << "\n"
        << "swapping_verdict: " << std::boolalpha << report.swapping_verdict
        << (report.swapping_verdict ? " (photons 1 and 4 entangled)" : " (photons 1 and 4 separable)") << "\n";
    if (summary) {
      out << "sweep: " << summary->runs << " random phase pairs (seed " << cfg.seed
          << "), verdict_invariant = " << summary->verdict_invariant
          << ", max_negativity_deviation = " << fixed(summary->max_negativity_deviation) << "\n";
    }
  }
  return sweep_ok ? kExitOk : kExitAuditFailed;
}

int no_signal_command(const RunConfig& cfg, std::ostream& out) {
  const double distance = no_signaling_check(cfg.transform_kind, cfg.phi1, cfg.phi2);
  const bool ok = distance <= cfg.tolerance;
  if (cfg.format == Format::json) {
    out << dump({{"tool_version", AOMSIM_VERSION},
                 {"transform_kind", std::string(to_string(cfg.transform_kind))},
                 {"phi1", round_fixed(cfg.phi1)},
                 {"phi2", round_fixed(cfg.phi2)},
                 {"nosignal_trace_distance", round_fixed(distance)},
                 {"tolerance", cfg.tolerance},
                 {"no_signaling_holds", ok}});
  } else {
    out << "transform_kind: " << to_string(cfg.transform_kind) << "\n"
        << "nosignal_trace_distance: " << fixed(distance) << "\n"
        << "no_signaling_holds: " << std::boolalpha << ok << " (tolerance " << cfg.tolerance << ")\n";
  }
  return ok ? kExitOk : kExitAuditFailed;
}

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("AOMSIM_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError{std::string("AOMSIM_TOLERANCE: not a number: ") + raw};
  }
}

void validate(RunConfig& cfg, bool tolerance_given) {
  if (!tolerance_given) {
    if (auto env = env_tolerance()) cfg.tolerance = *env;
  }
  if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) {
    throw ConfigError{"tolerance: must be positive and finite"};
  }
  for (const auto* path : {&cfg.input_path, &cfg.transform_path}) {
    if (!path->empty() && !std::filesystem::is_regular_file(*path)) {
      throw ConfigError{"input file not found: " + *path};
    }
  }
  if (!cfg.output_path.empty()) {
    const auto parent = std::filesystem::path(cfg.output_path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
      throw ConfigError{"output directory does not exist: " + parent.string()};
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Photon mode-transform simulator for acousto-optic entanglement-swapping schemes"};
  app.require_subcommand(1);

  std::string kind_text = "correct";
  std::string format_text = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tolerance", cfg.tolerance, "audit tolerance (default 1e-12, env AOMSIM_TOLERANCE)");
    sub->add_option("-o,--output", cfg.output_path, "write the report to this file");
  };
  auto kind_option = [&](CLI::App* sub) {
    sub->add_option("--transform,--kind", kind_text, "correct or flawed")
        ->check(CLI::IsMember({"correct", "flawed"}));
  };

  auto* check = app.add_subcommand("check-transform", "Gram-matrix audit of a modulator transform");
  kind_option(check);
  check->add_option("--theta", cfg.theta, "pulse area (correct kind)");
  check->add_option("--phi", cfg.phi, "coupling phase (correct kind)");
  check->add_option("--file", cfg.transform_path, "audit a transform loaded from JSON instead");
  common(check);

  auto* evolve_cmd = app.add_subcommand("evolve", "Apply a modulator transform to a state file");
  kind_option(evolve_cmd);
  evolve_cmd->add_option("--state", cfg.input_path, "input state JSON")->required();
  evolve_cmd->add_option("--theta", cfg.theta, "pulse area");
  evolve_cmd->add_option("--phi", cfg.phi, "coupling phase");
  evolve_cmd->add_option("--in-low", cfg.in_low, "spatial token of the low-frequency input");
  evolve_cmd->add_option("--in-high", cfg.in_high, "spatial token of the high-frequency input");
  evolve_cmd->add_option("--out-low", cfg.out_low, "spatial token of the low-frequency output");
  evolve_cmd->add_option("--out-high", cfg.out_high, "spatial token of the high-frequency output");
  evolve_cmd->add_option("--low-freq", cfg.low_freq, "frequency index of the low ports");
  evolve_cmd->add_flag("--renormalize", cfg.renormalize, "renormalize the output state");
  common(evolve_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "Reduced density matrix, Schmidt spectrum and negativity");
  analyze_cmd->add_option("--state", cfg.input_path, "input state JSON")->required();
  analyze_cmd->add_option("--keep", cfg.keep, "photons (1-based) to keep")->delimiter(',');
  analyze_cmd->add_option("--transpose", cfg.transpose, "kept photons to partially transpose")->delimiter(',');
  common(analyze_cmd);

  auto* swap_cmd = app.add_subcommand("run-swap", "Run the two-source swapping scheme");
  kind_option(swap_cmd);
  swap_cmd->add_option("--phi1", cfg.phi1, "phase of modulator 1");
  swap_cmd->add_option("--phi2", cfg.phi2, "phase of modulator 2");
  swap_cmd->add_option("--sweep", cfg.sweep, "also run N random phase pairs and check verdict invariance");
  swap_cmd->add_option("--seed", cfg.seed, "seed for --sweep");
  common(swap_cmd);

  auto* nosig_cmd = app.add_subcommand("no-signal", "Compare rho_14 before and after the modulators");
  kind_option(nosig_cmd);
  nosig_cmd->add_option("--phi1", cfg.phi1, "phase of modulator 1");
  nosig_cmd->add_option("--phi2", cfg.phi2, "phase of modulator 2");
  common(nosig_cmd);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage_error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  cfg.transform_kind = *parse_transform_kind(kind_text);
  cfg.format = format_text == "json" ? Format::json : Format::text;

  try {
    validate(cfg, chosen->count("--tolerance") > 0);

    std::ostringstream buffer;
    int code = kExitOk;
    if (cfg.command == "check-transform") {
      code = check_transform(cfg, buffer);
    } else if (cfg.command == "evolve") {
      code = evolve(cfg, buffer);
    } else if (cfg.command == "analyze") {
      code = analyze(cfg, buffer);
    } else if (cfg.command == "run-swap") {
      code = run_swap_command(cfg, buffer);
    } else {
      code = no_signal_command(cfg, buffer);
    }

    if (cfg.output_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!(file << buffer.str())) throw ConfigError{"cannot write " + cfg.output_path};
    }
    return code;
  } catch (const ConfigError& e) {
    err << "error: config_error: " << e.message << "\n";
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: internal_error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalidInput;
}

}  // namespace aomsim::cli
