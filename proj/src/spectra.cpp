#include "locc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "locc/error.hpp"
#include "locc/kernels.hpp"

namespace locc {
namespace {

std::vector<double> padded(const ProbVector& x, std::size_t d) {
  std::vector<double> out(x.begin(), x.end());
  out.resize(d, 0.0);
  return out;
}

}  // namespace

double majorization_margin(const ProbVector& x, const ProbVector& y) {
  const std::size_t d = std::max(x.size(), y.size());
  const auto xs = padded(x, d);
  const auto ys = padded(y, d);
  return kernels::active().max_prefix_excess(xs, ys);
}

bool majorizes(const ProbVector& x, const ProbVector& y, double tol) {
  return majorization_margin(x, y) <= tol;
}

ProbVector tensor(const ProbVector& x, const ProbVector& y) {
  std::vector<double> out(x.size() * y.size());
  kernels::active().outer_product(x.entries(), y.entries(), out);
  return ProbVector(std::move(out));
}

ProbVector mix(std::span<const Weighted> terms) {
  if (terms.empty()) throw ValidationError("mix needs at least one term");
  double total = 0.0;
  std::size_t d = 0;
  for (const auto& t : terms) {
    if (!(t.weight >= 0.0)) throw ValidationError("mix weight must be nonnegative");
    total += t.weight;
    d = std::max(d, t.vector.size());
  }
  if (std::abs(total - 1.0) > kDefaultTol) {
    throw ValidationError("mix weights sum to " + std::to_string(total) + ", not 1");
  }
  std::vector<double> acc(d, 0.0);
  const auto& k = kernels::active();
  for (const auto& t : terms) k.axpy(t.weight, padded(t.vector, d), acc);
  return ProbVector(std::move(acc));
}

double entropy_bits(const ProbVector& x) {
  double h = 0.0;
  for (double p : x) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

ProbVector pad(const ProbVector& x, std::size_t d) {
  if (d < x.size()) {
    throw ValidationError("cannot pad a " + std::to_string(x.size()) +
                          "-dimensional vector down to " + std::to_string(d));
  }
  return ProbVector(padded(x, d));
}

}  // namespace locc
