#pragma once

// Discrimination problems recast as entanglement transformations.
//
// Perfect LOCC discrimination of an ensemble {p_i, |ψ_i⟩} on AB turns the
// pointer state Σ_i √p_i |ψ_i⟩_{AB}|φ_i⟩_{CD} into |φ_i⟩ with probability p_i,
// so it is only possible when λ(Ψ) ≺ Σ_i p_i λ(φ_i) across the AC:BD cut.
// The same reduction bounds the entanglement a resource state must carry to
// make discrimination possible, with or without preserving the states.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "locc/ensemble.hpp"
#include "locc/prob_vector.hpp"
#include "locc/pure_state.hpp"
#include "locc/spectra.hpp"
#include "locc/states.hpp"

namespace locc {

/// Partial-sum tolerance used inside the resource bisection. Only large
/// enough to absorb rounding in λ(Ψ); a kDefaultTol-sized slack would move
/// the located boundary tol/λ_max past the true one.
inline constexpr double kBisectionTol = 1e-14;
inline constexpr int kBisectionIterations = 60;

/// Σ_i √p_i |ψ_i⟩_{AB} ⊗ |φ_i⟩_{CD}, laid out over the AC:BD cut: row index
/// a·dim_c + c, column index b·dim_d + d. Pointers must be orthonormal and
/// share dimensions; one per ensemble member.
PureState pointer_state(const Ensemble& ensemble, std::span<const PureState> pointers);

/// The first n Bell states (n ≤ 4), the default pointers.
std::vector<PureState> bell_pointers(std::size_t n);

/// Nielsen: source → target deterministically iff source ≺ target.
bool locc_deterministic_feasible(const ProbVector& source, const ProbVector& target,
                                 double tol = kDefaultTol);

/// Jonathan–Plenio: source → {p_i, target_i} iff source ≺ Σ_i p_i target_i.
bool locc_ensemble_feasible(const ProbVector& source, std::span<const Weighted> targets,
                            double tol = kDefaultTol);

/// Pointer state with Bell pointers, its spectrum and the majorization target.
struct PointerSpectra {
  ProbVector source;  // λ(Ψ)
  ProbVector target;  // Σ p_i λ(φ_i), padded to dim(λ(Ψ))
};
PointerSpectra pointer_spectra(const Ensemble& ensemble);

/// Ensembles of up to four members, with Bell pointers.
bool perfect_discrimination_feasible(const Ensemble& ensemble, double tol = kDefaultTol);

/// Empty probs means 1/4 each.
bool perfect_discrimination_feasible(const BellFamily& family, std::span<const double> probs = {},
                                     double tol = kDefaultTol);

/// (1/8)(a+b+c+d)², the largest pointer-state eigenvalue at equal priors.
double closed_form_lhs(const BellFamily& family);

/// Three distinct 0-based member indices; member which[k] is paired with
/// Bell pointer which[k]. Empty probs means 1/3 each.
bool three_state_feasible(const BellFamily& family, std::array<std::size_t, 3> which = {0, 1, 2},
                          std::span<const double> probs = {}, double tol = kDefaultTol);

/// Outcome of the resource search for |φ⟩ = α|00⟩ + β|11⟩, |α|² ≥ |β|².
struct CostReport {
  double alpha2_max;       // largest usable |α|²; NaN when infeasible
  double cost_ebits;       // h(alpha2_max); NaN when infeasible
  double first_sum_bound;  // min(1, t_1 / λ_max(Ψ)) from the first partial sum alone
  bool feasible;
};

/// Bisects |α|² over [0.5, 1] against the full partial-sum test of
/// (α², 1−α²) ⊗ λ(Ψ) ≺ Σ p_i λ(φ_i).
CostReport assisted_alpha2_max(const Ensemble& ensemble);

/// At equal priors first_sum_bound is the closed form min(1, 4/(a+b+c+d)²).
CostReport assisted_alpha2_max(const BellFamily& family, std::span<const double> probs = {});

/// ½(a⁴+c⁴, a²b²+c²d², a²b²+c²d², b⁴+d⁴): the bound on a resource that is
/// consumed while the family is identified with equal priors.
ProbVector preserve_spectrum(const BellFamily& family);

/// Σ_i p_i λ(ψ_i) ⊗ λ(ψ_i) for arbitrary priors.
ProbVector preserve_spectrum(const BellFamily& family, std::span<const double> probs);
ProbVector preserve_spectrum(const Ensemble& ensemble);

/// Entropy of the preserving-discrimination bound, the least entanglement a
/// feasible resource can have. Never exceeds 2 e-bits for qubit pairs.
double preserve_cost(const BellFamily& family);
double preserve_cost(const BellFamily& family, std::span<const double> probs);
double preserve_cost(const Ensemble& ensemble);

/// Unnormalized residual ⟨ψ|Ψ⟩⟩ on ĀB̄.
struct Contraction {
  std::vector<Complex> amplitudes;
  std::size_t dim_a;
  std::size_t dim_b;
  double norm2;  // outcome probability ‖φ‖²

  PureState normalized() const;
};

/// Contracts bra over the AB factor of joint. joint is laid out with AB as
/// its row factor and ĀB̄ as its column factor (joint.dim_a() == bra.size());
/// the residual is reshaped to residual_dim_a × residual_dim_b.
Contraction partial_inner_product(const PureState& bra, const PureState& joint,
                                  std::size_t residual_dim_a, std::size_t residual_dim_b);

/// |u⟩_{AĀ} ⊗ |v⟩_{BB̄} regrouped for partial_inner_product: rows (a, b),
/// columns (ā, b̄).
PureState product_joint(const PureState& u, const PureState& v);

/// Σ_m ‖φ_m‖² λ(ψ_m) ⊗ λ(φ_m/‖φ_m‖) with φ_m = ⟨ψ_m|Ψ⟩⟩, for joint built
/// by product_joint. Outcomes with ‖φ_m‖² below 1e-15 are dropped.
ProbVector preserve_bound(std::span<const PureState> members, const PureState& joint,
                          std::size_t residual_dim_a, std::size_t residual_dim_b);

}  // namespace locc
