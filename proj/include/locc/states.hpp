#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "locc/ensemble.hpp"
#include "locc/prob_vector.hpp"
#include "locc/pure_state.hpp"

namespace locc {

/// Schmidt form Σ_i √probs_i |a_i⟩|b_i⟩. Only probs is unique; the bases
/// are fixed by the reconstruction, not by any phase convention.
struct SchmidtDecomposition {
  ProbVector probs;
  std::vector<std::vector<Complex>> basis_a;
  std::vector<std::vector<Complex>> basis_b;

  PureState reconstruct() const;
};

SchmidtDecomposition schmidt(const PureState& state);

/// Eigenvalues of ρ_A = tr_B |ψ⟩⟨ψ|, length min(dim_a, dim_b).
ProbVector reduced_spectrum(const PureState& state);

/// Real amplitudes of the family
///   ψ1 = a|00⟩ + b|11⟩,  ψ2 = b|00⟩ − a|11⟩,
///   ψ3 = c|01⟩ + d|10⟩,  ψ4 = d|01⟩ − c|10⟩
/// with a ≥ b ≥ 0 and c ≥ d ≥ 0.
struct BellFamily {
  double a;
  double b;
  double c;
  double d;

  /// a = √a2, b = √(1−a2), etc. Throws ValidationError outside [0.5, 1].
  static BellFamily from_squared(double a2, double c2);

  double a2() const { return a * a; }
  double c2() const { return c * c; }
};

std::array<PureState, 4> bell_family(const BellFamily& family);
std::array<PureState, 4> bell_family(double a2, double c2);

/// Φ+, Φ−, Ψ+, Ψ− in that order (the family at a2 = c2 = 1/2).
std::array<PureState, 4> bell_states();

double entanglement_entropy(const PureState& state);

/// (Σ_i √λ_i)² − 1.
double global_robustness(const PureState& state);

/// Coincides with the entanglement entropy on pure states.
double relative_entropy_ent(const PureState& state);

/// −log₂ λ_max.
double geometric_measure(const PureState& state);

struct DistinguishabilityBound {
  double n_robustness;
  double n_rel_entropy;
  double n_geometric;
};

/// D / mean(1+R), D / mean(2^{E_R}), D / mean(2^{E_g}), with D = dim_a·dim_b
/// and unweighted means over the members. Always
/// n_robustness ≤ n_rel_entropy ≤ n_geometric.
DistinguishabilityBound distinguishability_bound(const Ensemble& ensemble);

}  // namespace locc
