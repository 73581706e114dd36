#include "locc/sweep.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "locc/discrimination.hpp"
#include "locc/error.hpp"
#include "locc/spectra.hpp"

namespace locc {

SweepMode parse_sweep_mode(std::string_view name) {
  if (name == "assist") return SweepMode::assist;
  if (name == "preserve") return SweepMode::preserve;
  if (name == "feasible3") return SweepMode::feasible3;
  throw ValidationError("unknown sweep mode '" + std::string(name) +
                        "' (expected assist, preserve or feasible3)");
}

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::assist: return "assist";
    case SweepMode::preserve: return "preserve";
    case SweepMode::feasible3: return "feasible3";
  }
  return "?";
}

double avg_entanglement(const BellFamily& family, std::span<const double> probs) {
  if (!probs.empty() && probs.size() != 4) throw ValidationError("expected 4 priors");
  const double ha = binary_entropy(family.a2());
  const double hc = binary_entropy(family.c2());
  if (probs.empty()) return 0.5 * (ha + hc);
  return (probs[0] + probs[1]) * ha + (probs[2] + probs[3]) * hc;
}

std::vector<double> grid_axis(std::size_t grid_n) {
  if (grid_n < 2) throw ValidationError("grid_n must be at least 2");
  std::vector<double> axis(grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) {
    axis[i] = 0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(grid_n - 1);
  }
  axis.back() = 1.0;
  return axis;
}

std::vector<SweepRecord> run_sweep(const SweepOptions& options) {
  const auto axis = grid_axis(options.grid_n);
  const std::span<const double> probs = options.probs;
  std::vector<SweepRecord> records;
  records.reserve(axis.size() * axis.size());
  for (double a2 : axis) {
    for (double c2 : axis) {
      const BellFamily family = BellFamily::from_squared(a2, c2);
      SweepRecord rec{a2, c2, 0.0, {}, {}, {}, {}};
      switch (options.mode) {
        case SweepMode::assist: {
          rec.avg_ent_ebits = avg_entanglement(family, probs);
          const CostReport report = assisted_alpha2_max(family, probs);
          rec.feasible_unassisted = perfect_discrimination_feasible(family, probs);
          if (report.feasible) {
            rec.alpha2_max = report.alpha2_max;
            rec.assist_cost_ebits = report.cost_ebits;
          }
          break;
        }
        case SweepMode::preserve:
          rec.avg_ent_ebits = avg_entanglement(family, probs);
          rec.preserve_cost_ebits =
              probs.empty() ? preserve_cost(family) : preserve_cost(family, probs);
          break;
        case SweepMode::feasible3: {
          if (!probs.empty() && probs.size() != 3) throw ValidationError("expected 3 priors");
          const double h[4] = {binary_entropy(family.a2()), binary_entropy(family.a2()),
                               binary_entropy(family.c2()), binary_entropy(family.c2())};
          double avg = 0.0;
          for (std::size_t k = 0; k < 3; ++k) {
            avg += (probs.empty() ? 1.0 / 3.0 : probs[k]) * h[options.subset[k]];
          }
          rec.avg_ent_ebits = avg;
          rec.feasible_unassisted = three_state_feasible(family, options.subset, probs);
          break;
        }
      }
      records.push_back(rec);
    }
  }
  return records;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::span<const SweepRecord> records, std::ostream& out) {
  const auto num = [](const std::optional<double>& v) { return v ? format_number(*v) : ""; };
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_number(r.a2) << ',' << format_number(r.c2) << ',' << format_number(r.avg_ent_ebits)
        << ',';
    if (r.feasible_unassisted) out << (*r.feasible_unassisted ? "true" : "false");
    out << ',' << num(r.alpha2_max) << ',' << num(r.assist_cost_ebits) << ','
        << num(r.preserve_cost_ebits) << '\n';
  }
}

std::string to_csv(std::span<const SweepRecord> records) {
  std::ostringstream out;
  write_csv(records, out);
  return out.str();
}

}  // namespace locc
