#include "locc/prob_vector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "locc/error.hpp"

namespace locc {

ProbVector::ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("probability vector must be non-empty");
  for (double& e : entries_) {
    if (!std::isfinite(e)) throw ValidationError("probability entry is not finite");
    if (e < -kDefaultTol) {
      throw ValidationError("probability entry " + std::to_string(e) + " is negative");
    }
    if (e < 0.0) e = 0.0;
  }
  const double total = std::accumulate(entries_.begin(), entries_.end(), 0.0);
  if (std::abs(total - 1.0) > kDefaultTol) {
    throw ValidationError("probability entries sum to " + std::to_string(total) + ", not 1");
  }
  std::stable_sort(entries_.begin(), entries_.end(), std::greater<>());
}

ProbVector ProbVector::uniform(std::size_t dim) {
  if (dim == 0) throw ValidationError("dimension must be positive");
  return ProbVector(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ProbVector ProbVector::point_mass(std::size_t dim) {
  if (dim == 0) throw ValidationError("dimension must be positive");
  std::vector<double> e(dim, 0.0);
  e[0] = 1.0;
  return ProbVector(std::move(e));
}

bool approx_equal(const ProbVector& x, const ProbVector& y, double tol) {
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = i < x.size() ? x[i] : 0.0;
    const double yi = i < y.size() ? y[i] : 0.0;
    if (std::abs(xi - yi) > tol) return false;
  }
  return true;
}

}  // namespace locc
