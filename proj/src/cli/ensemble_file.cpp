#include "locc/ensemble_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "locc/error.hpp"

namespace locc {
namespace {

constexpr double kFileNormTol = 1e-6;

using nlohmann::json;

double number_at(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ValidationError(std::string("missing or non-numeric field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

std::size_t dim_at(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<long long>() <= 0) {
    throw ValidationError(std::string("field '") + key + "' must be a positive integer");
  }
  return obj.at(key).get<std::size_t>();
}

std::vector<double> probs_at(const json& doc) {
  const json& p = doc.at("probs");
  if (!p.is_array()) throw ValidationError("'probs' must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : p) {
    if (!v.is_number()) throw ValidationError("'probs' must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

PureState read_state(const json& s, std::size_t index, std::vector<std::string>& warnings) {
  if (!s.is_object()) throw ValidationError("each entry of 'states' must be an object");
  const std::size_t da = dim_at(s, "dim_a");
  const std::size_t db = dim_at(s, "dim_b");
  if (!s.contains("amplitudes") || !s.at("amplitudes").is_array()) {
    throw ValidationError("state is missing its 'amplitudes' array");
  }
  std::vector<Complex> amps;
  for (const auto& z : s.at("amplitudes")) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw ValidationError("amplitudes must be [re, im] pairs");
    }
    amps.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  if (amps.size() != da * db) {
    throw ValidationError("state " + std::to_string(index) + " has " + std::to_string(amps.size()) +
                          " amplitudes, expected dim_a*dim_b = " + std::to_string(da * db));
  }
  const double n2 = squared_norm(amps);
  if (std::abs(n2 - 1.0) > kFileNormTol) {
    throw ValidationError("state " + std::to_string(index) + " has squared norm " +
                          std::to_string(n2) + ", not 1");
  }
  if (std::abs(n2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state " << index << " renormalized (squared norm was " << n2 << ")";
    warnings.push_back(msg.str());
  }
  return PureState::normalized(std::move(amps), da, db);
}

}  // namespace

Ensemble EnsembleFile::to_ensemble() const {
  if (ensemble) return *ensemble;
  const auto states = bell_family(*family);
  return Ensemble::with_priors(states, probs);
}

EnsembleFile parse_ensemble_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("ensemble file must hold a JSON object");
  const bool has_family = doc.contains("family");
  const bool has_states = doc.contains("states");
  if (has_family == has_states) {
    throw ValidationError("ensemble file needs exactly one of 'family' or 'states'");
  }

  EnsembleFile file;
  if (has_family) {
    const json& f = doc.at("family");
    if (!f.is_object()) throw ValidationError("'family' must be an object with a2 and c2");
    file.family = BellFamily::from_squared(number_at(f, "a2"), number_at(f, "c2"));
    if (doc.contains("probs")) {
      file.probs = probs_at(doc);
      if (file.probs.size() != 4) throw ValidationError("family form takes exactly 4 probs");
    }
    // Validates the priors eagerly.
    static_cast<void>(file.to_ensemble());
    return file;
  }

  const json& states = doc.at("states");
  if (!states.is_array() || states.empty()) throw ValidationError("'states' must be a non-empty array");
  if (!doc.contains("probs")) throw ValidationError("states form requires 'probs'");
  const auto probs = probs_at(doc);
  if (probs.size() != states.size()) {
    throw ValidationError("'probs' has " + std::to_string(probs.size()) + " entries for " +
                          std::to_string(states.size()) + " states");
  }
  std::vector<Ensemble::Member> members;
  for (std::size_t i = 0; i < states.size(); ++i) {
    members.push_back({probs[i], read_state(states[i], i, file.warnings)});
  }
  file.ensemble = Ensemble(std::move(members));
  return file;
}

EnsembleFile load_ensemble_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open ensemble file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_ensemble_json(doc);
}

}  // namespace locc
