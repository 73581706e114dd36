#pragma once

// Low-level arithmetic kernels used by the majorization machinery.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled separately and chosen at runtime when the CPU
// supports it. Variants must agree with the reference: outer_product and
// axpy bit-for-bit, max_prefix_excess to within summation reordering.

#include <cstddef>
#include <span>

namespace locc::kernels {

struct KernelSet {
  const char* name;

  // max over k of sum_{i<=k} (x_i - y_i); x and y have equal length >= 1.
  double (*max_prefix_excess)(std::span<const double> x, std::span<const double> y);

  // out[i * y.size() + j] = x[i] * y[j]; out.size() == x.size() * y.size().
  void (*outer_product)(std::span<const double> x, std::span<const double> y,
                        std::span<double> out);

  // out[i] += alpha * x[i]; out.size() == x.size().
  void (*axpy)(double alpha, std::span<const double> x, std::span<double> out);
};

const KernelSet& scalar();

// nullptr when the variant was not compiled in or the CPU lacks AVX2.
const KernelSet* avx2();

// The fastest supported set, resolved once on first use.
const KernelSet& active();

}  // namespace locc::kernels
