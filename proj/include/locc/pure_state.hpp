#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace locc {

using Complex = std::complex<double>;

/// A normalized pure state of a bipartite system A:B.
///
/// Amplitudes are row-major over (a, b): index = a * dim_b + b, so the
/// amplitude vector reshapes directly into the dim_a × dim_b coefficient
/// matrix used by the Schmidt decomposition.
class PureState {
 public:
  /// Throws ValidationError unless amplitudes.size() == dim_a * dim_b and the
  /// squared norm is within tol of 1.
  PureState(std::vector<Complex> amplitudes, std::size_t dim_a, std::size_t dim_b,
            double tol = 1e-9);

  /// Rescales to unit norm first. Throws ValidationError on a zero vector.
  static PureState normalized(std::vector<Complex> amplitudes, std::size_t dim_a,
                              std::size_t dim_b);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator()(std::size_t a, std::size_t b) const { return amplitudes_[a * dim_b_ + b]; }

  /// Amplitude-wise complex conjugate in the computational basis.
  PureState conjugate() const;

 private:
  std::vector<Complex> amplitudes_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

/// ⟨x|y⟩ over the flat amplitude vectors; sizes must match.
Complex inner_product(const PureState& x, const PureState& y);

double squared_norm(std::span<const Complex> amplitudes);

}  // namespace locc
