#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace locc {

inline constexpr double kDefaultTol = 1e-9;

/// A probability vector in canonical (non-increasing) order.
///
/// This is the λ(·) of a state: Schmidt probabilities, or eigenvalues of a
/// reduced density matrix, sorted descending. Construction validates and
/// canonicalizes; the value is immutable afterwards.
class ProbVector {
 public:
  /// Entries in [-1e-9, 0) are clamped to 0. Throws ValidationError on an
  /// empty vector, a more negative or non-finite entry, or a sum farther
  /// than 1e-9 from 1.
  explicit ProbVector(std::vector<double> entries);
  ProbVector(std::initializer_list<double> entries)
      : ProbVector(std::vector<double>(entries)) {}

  static ProbVector uniform(std::size_t dim);
  static ProbVector point_mass(std::size_t dim);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double largest() const { return entries_.front(); }
  std::span<const double> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  std::vector<double> entries_;
};

// Entry-wise comparison after zero-padding to a common dimension.
bool approx_equal(const ProbVector& x, const ProbVector& y, double tol);

}  // namespace locc
