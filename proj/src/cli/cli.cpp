#include "locc/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locc/discrimination.hpp"
#include "locc/ensemble_file.hpp"
#include "locc/error.hpp"
#include "locc/spectra.hpp"
#include "locc/states.hpp"
#include "locc/sweep.hpp"

namespace locc::cli {
namespace {

using nlohmann::ordered_json;

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw ValidationError("bad number in " + what + ": '" + std::string(text, pos, end - pos) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::array<std::size_t, 3> parse_subset(const std::string& text) {
  const auto values = parse_list(text, "--subset");
  if (values.size() != 3) throw ValidationError("--subset needs exactly three member indices");
  std::array<std::size_t, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    const double v = values[k];
    if (v != static_cast<double>(static_cast<int>(v)) || v < 1 || v > 4) {
      throw ValidationError("--subset indices must be integers in 1..4");
    }
    out[k] = static_cast<std::size_t>(v) - 1;
  }
  return out;
}

ordered_json spectrum_json(const ProbVector& p) { return ordered_json(std::vector<double>(p.begin(), p.end())); }

std::string text_value(const ordered_json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + text_value(v[i]);
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const ordered_json& result, bool as_json, std::ostream& out) {
  if (as_json) {
    out << result.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : result.items()) out << key << '=' << text_value(value) << '\n';
}

ordered_json nullable(double v) { return std::isnan(v) ? ordered_json(nullptr) : ordered_json(v); }

// Either (--a2, --c2[, --probs]) or --ensemble.
struct ProblemArgs {
  std::optional<double> a2, c2;
  std::string probs;
  std::string ensemble_path;

  void attach(CLI::App& sub, bool with_file = true) {
    sub.add_option("--a2", a2, "squared Schmidt coefficient a^2 in [0.5, 1]");
    sub.add_option("--c2", c2, "squared Schmidt coefficient c^2 in [0.5, 1]");
    sub.add_option("--probs", probs, "comma-separated priors (default: equal)");
    if (with_file) sub.add_option("--ensemble", ensemble_path, "JSON ensemble file");
  }

  std::vector<double> priors() const {
    return probs.empty() ? std::vector<double>{} : parse_list(probs, "--probs");
  }

  // Loads the problem; warnings from the file go to err.
  EnsembleFile resolve(std::ostream& err) const {
    const bool have_params = a2.has_value() || c2.has_value();
    if (have_params == !ensemble_path.empty()) {
      throw ValidationError("give either --a2 and --c2, or --ensemble");
    }
    EnsembleFile file;
    if (!ensemble_path.empty()) {
      if (!probs.empty()) throw ValidationError("--probs cannot be combined with --ensemble");
      file = load_ensemble_file(ensemble_path);
      for (const auto& w : file.warnings) err << "warning: " << w << '\n';
    } else {
      if (!a2 || !c2) throw ValidationError("both --a2 and --c2 are required");
      file.family = BellFamily::from_squared(*a2, *c2);
      file.probs = priors();
    }
    return file;
  }
};

ordered_json family_header(const EnsembleFile& file) {
  ordered_json r;
  if (file.family) {
    r["a2"] = file.family->a2();
    r["c2"] = file.family->c2();
  }
  return r;
}

ordered_json run_discriminate(const ProblemArgs& args, double tol, std::ostream& err) {
  const EnsembleFile file = args.resolve(err);
  const Ensemble ensemble = file.to_ensemble();
  const PointerSpectra s = pointer_spectra(ensemble);
  ordered_json r = family_header(file);
  r["feasible_unassisted"] = majorizes(s.source, s.target, tol);
  r["lambda_max"] = s.source.largest();
  r["pointer_spectrum"] = spectrum_json(s.source);
  r["target_spectrum"] = spectrum_json(s.target);
  if (file.family && file.probs.empty()) r["closed_form_lhs"] = closed_form_lhs(*file.family);
  return r;
}

ordered_json run_three_state(const ProblemArgs& args, const std::string& subset, double tol) {
  if (!args.a2 || !args.c2) throw ValidationError("both --a2 and --c2 are required");
  const BellFamily family = BellFamily::from_squared(*args.a2, *args.c2);
  const auto which = parse_subset(subset);
  ordered_json r;
  r["a2"] = family.a2();
  r["c2"] = family.c2();
  r["subset"] = {which[0] + 1, which[1] + 1, which[2] + 1};
  r["feasible_unassisted"] = three_state_feasible(family, which, args.priors(), tol);
  return r;
}

ordered_json run_assist(const ProblemArgs& args, std::ostream& err) {
  const EnsembleFile file = args.resolve(err);
  const CostReport report = file.family ? assisted_alpha2_max(*file.family, file.probs)
                                        : assisted_alpha2_max(*file.ensemble);
  ordered_json r = family_header(file);
  r["feasible"] = report.feasible;
  r["alpha2_max"] = nullable(report.alpha2_max);
  r["assist_cost_ebits"] = nullable(report.cost_ebits);
  r["first_sum_bound"] = report.first_sum_bound;
  return r;
}

ordered_json run_preserve(const ProblemArgs& args, std::ostream& err) {
  const EnsembleFile file = args.resolve(err);
  ProbVector spectrum = file.family ? (file.probs.empty() ? preserve_spectrum(*file.family)
                                                          : preserve_spectrum(*file.family, file.probs))
                                    : preserve_spectrum(*file.ensemble);
  ordered_json r = family_header(file);
  r["preserve_spectrum"] = spectrum_json(spectrum);
  r["preserve_cost_ebits"] = entropy_bits(spectrum);
  return r;
}

ordered_json run_bounds(const ProblemArgs& args, std::ostream& err) {
  const EnsembleFile file = args.resolve(err);
  const DistinguishabilityBound b = distinguishability_bound(file.to_ensemble());
  ordered_json r = family_header(file);
  r["n_robustness"] = b.n_robustness;
  r["n_rel_entropy"] = b.n_rel_entropy;
  r["n_geometric"] = b.n_geometric;
  return r;
}

ordered_json run_convert(const std::string& source_text, const std::vector<std::string>& target_texts,
                         double tol) {
  if (target_texts.empty()) throw ValidationError("convert needs at least one --target");
  const ProbVector source(parse_list(source_text, "--source"));
  std::vector<Weighted> targets;
  for (const auto& t : target_texts) {
    const std::size_t colon = t.find(':');
    double weight = 1.0;
    std::string vec = t;
    if (colon != std::string::npos) {
      const auto w = parse_list(t.substr(0, colon), "--target weight");
      if (w.size() != 1) throw ValidationError("--target weight must be a single number");
      weight = w.front();
      vec = t.substr(colon + 1);
    }
    targets.push_back({weight, ProbVector(parse_list(vec, "--target"))});
  }
  const ProbVector mixed = mix(targets);
  ordered_json r;
  r["source"] = spectrum_json(source);
  r["target"] = spectrum_json(mixed);
  r["feasible"] = majorizes(source, mixed, tol);
  return r;
}

ordered_json record_json(const SweepRecord& rec) {
  ordered_json r;
  r["a2"] = rec.a2;
  r["c2"] = rec.c2;
  r["avg_ent_ebits"] = rec.avg_ent_ebits;
  r["feasible_unassisted"] = rec.feasible_unassisted ? ordered_json(*rec.feasible_unassisted) : ordered_json(nullptr);
  const auto opt = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  r["alpha2_max"] = opt(rec.alpha2_max);
  r["assist_cost_ebits"] = opt(rec.assist_cost_ebits);
  r["preserve_cost_ebits"] = opt(rec.preserve_cost_ebits);
  return r;
}

void run_sweep_command(const std::string& mode, std::size_t grid_n, const std::string& probs,
                       const std::string& subset, const std::string& out_path, bool as_json,
                       std::ostream& out) {
  SweepOptions options;
  options.mode = parse_sweep_mode(mode);
  options.grid_n = grid_n;
  if (!probs.empty()) options.probs = parse_list(probs, "--probs");
  if (!subset.empty()) options.subset = parse_subset(subset);
  const auto records = run_sweep(options);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file " + out_path);
  }
  std::ostream& sink = out_path.empty() ? out : file;
  if (as_json) {
    ordered_json doc;
    doc["mode"] = std::string(to_string(options.mode));
    doc["grid_n"] = grid_n;
    doc["records"] = ordered_json::array();
    for (const auto& rec : records) doc["records"].push_back(record_json(rec));
    sink << doc.dump() << '\n';
  } else {
    write_csv(records, sink);
  }
  if (!sink) throw std::runtime_error("failed writing sweep output");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorization tests for LOCC discrimination of bipartite pure states"};
  app.name(argc > 0 ? argv[0] : "locc-cli");
  app.require_subcommand(1);
  app.fallthrough();

  double tol = kDefaultTol;
  bool as_json = false;
  app.add_option("--tol", tol, "partial-sum tolerance for majorization tests")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", as_json, "print results as a single JSON object");

  ProblemArgs problem;
  std::string subset = "1,2,3";
  std::string source;
  std::vector<std::string> targets;
  std::string mode = "assist";
  std::size_t grid_n = 101;
  std::string out_path;
  std::string sweep_subset;

  auto* discriminate = app.add_subcommand("discriminate", "perfect LOCC discrimination test with Bell pointers");
  problem.attach(*discriminate);
  auto* three = app.add_subcommand("three-state", "discrimination test for three family members");
  problem.attach(*three, false);
  three->add_option("--subset", subset, "three 1-based member indices (default 1,2,3)");
  auto* assist = app.add_subcommand("assist-cost", "least entanglement a two-qubit resource must spend");
  problem.attach(*assist);
  auto* preserve = app.add_subcommand("preserve-cost", "entanglement cost of discrimination that keeps the states");
  problem.attach(*preserve);
  auto* bounds = app.add_subcommand("bounds", "bounds on the number of LOCC-distinguishable states");
  problem.attach(*bounds);
  auto* convert = app.add_subcommand("convert", "Nielsen / Jonathan-Plenio convertibility test");
  convert->add_option("--source", source, "source spectrum, comma-separated")->required();
  convert->add_option("--target", targets, "target [p:]v1,v2,...; repeatable")->required();
  auto* sweep = app.add_subcommand("sweep", "grid scan over (a2, c2) in [0.5, 1]^2");
  sweep->add_option("--mode", mode, "assist, preserve or feasible3");
  sweep->add_option("--grid", grid_n, "points per axis (default 101)");
  sweep->add_option("--probs", problem.probs, "comma-separated priors");
  sweep->add_option("--subset", sweep_subset, "feasible3 member indices (default 1,2,3)");
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    if (dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr ||
        dynamic_cast<const CLI::RequiredError*>(&e) != nullptr) {
      err << app.help();
    }
    return kExitValidation;
  }

  try {
    ordered_json result;
    if (*discriminate) {
      result = run_discriminate(problem, tol, err);
    } else if (*three) {
      result = run_three_state(problem, subset, tol);
    } else if (*assist) {
      result = run_assist(problem, err);
    } else if (*preserve) {
      result = run_preserve(problem, err);
    } else if (*bounds) {
      result = run_bounds(problem, err);
    } else if (*convert) {
      result = run_convert(source, targets, tol);
    } else if (*sweep) {
      run_sweep_command(mode, grid_n, problem.probs, sweep_subset, out_path, as_json, out);
      return kExitOk;
    }
    emit(result, as_json, out);
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace locc::cli
