#include "locc/pure_state.hpp"

#include <cmath>
#include <string>

#include "locc/error.hpp"

namespace locc {

double squared_norm(std::span<const Complex> amplitudes) {
  double s = 0.0;
  for (const auto& z : amplitudes) s += std::norm(z);
  return s;
}

PureState::PureState(std::vector<Complex> amplitudes, std::size_t dim_a, std::size_t dim_b,
                     double tol)
    : amplitudes_(std::move(amplitudes)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ == 0 || dim_b_ == 0) throw ValidationError("local dimensions must be positive");
  if (amplitudes_.size() != dim_a_ * dim_b_) {
    throw ValidationError("expected " + std::to_string(dim_a_ * dim_b_) + " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
  const double n2 = squared_norm(amplitudes_);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
    throw ValidationError("state has squared norm " + std::to_string(n2) + ", not 1");
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes, std::size_t dim_a,
                                std::size_t dim_b) {
  const double n2 = squared_norm(amplitudes);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw ValidationError("cannot normalize a zero state");
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : amplitudes) z *= scale;
  return PureState(std::move(amplitudes), dim_a, dim_b);
}

PureState PureState::conjugate() const {
  std::vector<Complex> out(amplitudes_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(amplitudes_[i]);
  return PureState(std::move(out), dim_a_, dim_b_);
}

Complex inner_product(const PureState& x, const PureState& y) {
  if (x.size() != y.size()) throw ValidationError("inner product of states with different sizes");
  Complex s{0.0, 0.0};
  const auto xa = x.amplitudes();
  const auto ya = y.amplitudes();
  for (std::size_t i = 0; i < xa.size(); ++i) s += std::conj(xa[i]) * ya[i];
  return s;
}

}  // namespace locc
