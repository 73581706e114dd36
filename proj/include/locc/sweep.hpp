#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locc/states.hpp"

namespace locc {

enum class SweepMode { assist, preserve, feasible3 };

SweepMode parse_sweep_mode(std::string_view name);
std::string_view to_string(SweepMode mode);

struct SweepOptions {
  SweepMode mode = SweepMode::assist;
  std::size_t grid_n = 101;
  std::vector<double> probs;  // empty: equal priors over the members in play
  std::array<std::size_t, 3> subset{0, 1, 2};  // feasible3 only
};

/// One lattice point. Columns a mode does not compute stay empty:
///   assist     feasible_unassisted, alpha2_max, assist_cost_ebits
///   preserve   preserve_cost_ebits
///   feasible3  feasible_unassisted (three-state test over the subset)
struct SweepRecord {
  double a2;
  double c2;
  double avg_ent_ebits;
  std::optional<bool> feasible_unassisted;
  std::optional<double> alpha2_max;
  std::optional<double> assist_cost_ebits;
  std::optional<double> preserve_cost_ebits;
};

/// Σ_i p_i E(ψ_i) over the four family members; empty probs means 1/4 each.
double avg_entanglement(const BellFamily& family, std::span<const double> probs = {});

/// 0.5 + 0.5·i/(n−1) for i = 0..n−1, with the last point exactly 1.
std::vector<double> grid_axis(std::size_t grid_n);

/// Row-major over (a2, c2): a2 is the slow index.
std::vector<SweepRecord> run_sweep(const SweepOptions& options);

inline constexpr std::string_view kSweepCsvHeader =
    "a2,c2,avg_ent_ebits,feasible_unassisted,alpha2_max,assist_cost_ebits,preserve_cost_ebits";

/// Numbers with 12 significant digits, booleans as true/false, LF endings.
void write_csv(std::span<const SweepRecord> records, std::ostream& out);
std::string to_csv(std::span<const SweepRecord> records);

std::string format_number(double value);

}  // namespace locc
