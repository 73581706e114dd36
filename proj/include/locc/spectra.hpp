#pragma once

#include <cstddef>
#include <span>

#include "locc/prob_vector.hpp"

namespace locc {

/// True iff x ≺ y, i.e. every sorted partial sum of x is at most the
/// matching partial sum of y plus tol. The shorter vector is zero-padded.
bool majorizes(const ProbVector& x, const ProbVector& y, double tol = kDefaultTol);

/// Largest violation max_k (Σ_{i≤k} x_i − Σ_{i≤k} y_i); x ≺ y iff this is ≤ 0.
double majorization_margin(const ProbVector& x, const ProbVector& y);

/// All pairwise products x_i·y_j, re-sorted.
ProbVector tensor(const ProbVector& x, const ProbVector& y);

struct Weighted {
  double weight;
  ProbVector vector;
};

/// Σ_i p_i v_i over the sorted vectors, padded to the largest dimension.
/// Weights must be nonnegative and sum to 1 within 1e-9.
ProbVector mix(std::span<const Weighted> terms);

/// Shannon entropy in bits; 0·log 0 = 0.
double entropy_bits(const ProbVector& x);

/// h(p) = −p log₂ p − (1−p) log₂(1−p), with h(0) = h(1) = 0.
double binary_entropy(double p);

/// Appends zeros up to dimension d; throws ValidationError if d < x.size().
ProbVector pad(const ProbVector& x, std::size_t d);

}  // namespace locc
