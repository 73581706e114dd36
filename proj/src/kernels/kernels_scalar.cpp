#include <algorithm>
#include <cassert>

#include "locc/kernels.hpp"

namespace locc::kernels {
namespace {

double max_prefix_excess(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size() && !x.empty());
  double running = 0.0;
  double worst = x[0] - y[0];
  for (std::size_t i = 0; i < x.size(); ++i) {
    running += x[i] - y[i];
    worst = std::max(worst, running);
  }
  return worst;
}

void outer_product(std::span<const double> x, std::span<const double> y,
                   std::span<double> out) {
  assert(out.size() == x.size() * y.size());
  const std::size_t ny = y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < ny; ++j) out[i * ny + j] = x[i] * y[j];
  }
}

void axpy(double alpha, std::span<const double> x, std::span<double> out) {
  assert(out.size() == x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += alpha * x[i];
}

}  // namespace

const KernelSet& scalar() {
  static constexpr KernelSet set{"scalar", &max_prefix_excess, &outer_product, &axpy};
  return set;
}

}  // namespace locc::kernels
