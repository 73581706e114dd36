#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "locc/pure_state.hpp"

namespace locc {

/// A discrimination problem: states |ψ_i⟩ with prior probabilities p_i.
class Ensemble {
 public:
  struct Member {
    double prob;
    PureState state;
  };

  /// Priors must be nonnegative and sum to 1 within 1e-9; all states must
  /// share (dim_a, dim_b).
  explicit Ensemble(std::vector<Member> members);

  /// Equal priors 1/n.
  static Ensemble uniform(std::span<const PureState> states);

  /// Pairs states with the given priors; an empty span means equal priors.
  static Ensemble with_priors(std::span<const PureState> states, std::span<const double> priors);

  std::span<const Member> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t dim_a() const { return members_.front().state.dim_a(); }
  std::size_t dim_b() const { return members_.front().state.dim_b(); }

 private:
  std::vector<Member> members_;
};

}  // namespace locc
