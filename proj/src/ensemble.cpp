#include "locc/ensemble.hpp"

#include <cmath>
#include <string>

#include "locc/error.hpp"
#include "locc/prob_vector.hpp"

namespace locc {

Ensemble::Ensemble(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("ensemble must have at least one member");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.prob >= 0.0)) throw ValidationError("ensemble priors must be nonnegative");
    if (m.state.dim_a() != dim_a() || m.state.dim_b() != dim_b()) {
      throw ValidationError("ensemble members have mismatched local dimensions");
    }
    total += m.prob;
  }
  if (std::abs(total - 1.0) > kDefaultTol) {
    throw ValidationError("ensemble priors sum to " + std::to_string(total) + ", not 1");
  }
}

Ensemble Ensemble::uniform(std::span<const PureState> states) {
  return with_priors(states, {});
}

Ensemble Ensemble::with_priors(std::span<const PureState> states, std::span<const double> priors) {
  if (!priors.empty() && priors.size() != states.size()) {
    throw ValidationError("expected " + std::to_string(states.size()) + " priors, got " +
                          std::to_string(priors.size()));
  }
  std::vector<Member> members;
  members.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double p = priors.empty() ? 1.0 / static_cast<double>(states.size()) : priors[i];
    members.push_back({p, states[i]});
  }
  return Ensemble(std::move(members));
}

}  // namespace locc
