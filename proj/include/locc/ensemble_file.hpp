#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locc/ensemble.hpp"
#include "locc/states.hpp"

namespace locc {

/// A discrimination problem read from JSON. Exactly one of the two forms:
///
///   {"family": {"a2": 0.8, "c2": 0.6}, "probs": [0.25, 0.25, 0.25, 0.25]}
///   {"states": [{"amplitudes": [[re, im], ...], "dim_a": 2, "dim_b": 2}, ...],
///    "probs": [...]}
///
/// "probs" is optional for the family form. State amplitudes within 1e-6 of
/// unit norm are renormalized and a warning is recorded; anything farther
/// off is rejected.
struct EnsembleFile {
  std::optional<BellFamily> family;
  std::vector<double> probs;  // family form; empty means equal priors
  std::optional<Ensemble> ensemble;  // states form
  std::vector<std::string> warnings;

  /// The family form expanded into its four states.
  Ensemble to_ensemble() const;
};

EnsembleFile parse_ensemble_json(const nlohmann::json& doc);
EnsembleFile load_ensemble_file(const std::filesystem::path& path);

}  // namespace locc
