#include "locc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "locc/error.hpp"

namespace locc {
namespace {

std::vector<double> resolve_priors(std::span<const double> probs, std::size_t n) {
  if (probs.empty()) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  if (probs.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " priors, got " +
                          std::to_string(probs.size()));
  }
  return {probs.begin(), probs.end()};
}

bool is_uniform(std::span<const double> probs) {
  if (probs.empty()) return true;
  for (double p : probs) {
    if (std::abs(p - probs.front()) > kDefaultTol) return false;
  }
  return true;
}

Ensemble family_ensemble(const BellFamily& family, std::span<const double> probs) {
  const auto states = bell_family(family);
  const auto priors = resolve_priors(probs, states.size());
  return Ensemble::with_priors(states, priors);
}

}  // namespace

PureState pointer_state(const Ensemble& ensemble, std::span<const PureState> pointers) {
  if (pointers.size() != ensemble.size()) {
    throw ValidationError("need one pointer per ensemble member");
  }
  const std::size_t dc = pointers.front().dim_a();
  const std::size_t dd = pointers.front().dim_b();
  for (std::size_t i = 0; i < pointers.size(); ++i) {
    if (pointers[i].dim_a() != dc || pointers[i].dim_b() != dd) {
      throw ValidationError("pointer states have mismatched dimensions");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(inner_product(pointers[j], pointers[i])) > kDefaultTol) {
        throw ValidationError("pointer states " + std::to_string(j) + " and " +
                              std::to_string(i) + " are not orthogonal");
      }
    }
  }

  const std::size_t da = ensemble.dim_a();
  const std::size_t db = ensemble.dim_b();
  const std::size_t cols = db * dd;
  std::vector<Complex> amps(da * dc * cols, Complex{0.0, 0.0});
  const auto members = ensemble.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const double w = std::sqrt(members[i].prob);
    const PureState& psi = members[i].state;
    const PureState& phi = pointers[i];
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t b = 0; b < db; ++b) {
        const Complex pa = w * psi(a, b);
        if (pa == Complex{}) continue;
        for (std::size_t c = 0; c < dc; ++c)
          for (std::size_t d = 0; d < dd; ++d)
            amps[(a * dc + c) * cols + (b * dd + d)] += pa * phi(c, d);
      }
  }
  return PureState(std::move(amps), da * dc, db * dd);
}

std::vector<PureState> bell_pointers(std::size_t n) {
  if (n == 0 || n > 4) throw ValidationError("Bell pointers exist for 1 to 4 members only");
  const auto all = bell_states();
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)};
}

bool locc_deterministic_feasible(const ProbVector& source, const ProbVector& target, double tol) {
  return majorizes(source, target, tol);
}

bool locc_ensemble_feasible(const ProbVector& source, std::span<const Weighted> targets,
                            double tol) {
  return majorizes(source, mix(targets), tol);
}

PointerSpectra pointer_spectra(const Ensemble& ensemble) {
  const auto pointers = bell_pointers(ensemble.size());
  ProbVector source = reduced_spectrum(pointer_state(ensemble, pointers));
  std::vector<Weighted> terms;
  terms.reserve(pointers.size());
  for (std::size_t i = 0; i < pointers.size(); ++i) {
    terms.push_back({ensemble.members()[i].prob, reduced_spectrum(pointers[i])});
  }
  ProbVector target = mix(terms);
  const std::size_t d = std::max(source.size(), target.size());
  return {pad(source, d), pad(target, d)};
}

bool perfect_discrimination_feasible(const Ensemble& ensemble, double tol) {
  const auto s = pointer_spectra(ensemble);
  return majorizes(s.source, s.target, tol);
}

bool perfect_discrimination_feasible(const BellFamily& family, std::span<const double> probs,
                                     double tol) {
  return perfect_discrimination_feasible(family_ensemble(family, probs), tol);
}

double closed_form_lhs(const BellFamily& f) {
  const double s = f.a + f.b + f.c + f.d;
  return s * s / 8.0;
}

bool three_state_feasible(const BellFamily& family, std::array<std::size_t, 3> which,
                          std::span<const double> probs, double tol) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (which[k] > 3) throw ValidationError("member index out of range: " + std::to_string(which[k]));
    for (std::size_t j = 0; j < k; ++j) {
      if (which[j] == which[k]) throw ValidationError("three-state subset has repeated members");
    }
  }
  const auto priors = resolve_priors(probs, 3);
  const auto all = bell_family(family);
  const auto bells = bell_states();
  std::vector<Ensemble::Member> members;
  std::vector<PureState> pointers;
  std::vector<Weighted> targets;
  for (std::size_t k = 0; k < 3; ++k) {
    members.push_back({priors[k], all[which[k]]});
    pointers.push_back(bells[which[k]]);
    targets.push_back({priors[k], reduced_spectrum(bells[which[k]])});
  }
  const ProbVector source = reduced_spectrum(pointer_state(Ensemble(std::move(members)), pointers));
  return locc_ensemble_feasible(source, targets, tol);
}

CostReport assisted_alpha2_max(const Ensemble& ensemble) {
  const auto s = pointer_spectra(ensemble);
  const double first_sum_bound = std::min(1.0, s.target[0] / s.source.largest());

  const auto feasible_at = [&](double alpha2) {
    return majorizes(tensor(ProbVector{alpha2, 1.0 - alpha2}, s.source), s.target, kBisectionTol);
  };
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (feasible_at(1.0)) return {1.0, 0.0, first_sum_bound, true};
  if (!feasible_at(0.5)) return {nan, nan, first_sum_bound, false};

  // Feasibility is monotone in α²: a larger α² only makes the resource
  // spectrum more ordered.
  double lo = 0.5, hi = 1.0;
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible_at(mid) ? lo : hi) = mid;
  }
  return {lo, binary_entropy(lo), first_sum_bound, true};
}

CostReport assisted_alpha2_max(const BellFamily& family, std::span<const double> probs) {
  CostReport report = assisted_alpha2_max(family_ensemble(family, probs));
  if (is_uniform(probs)) {
    const double s = family.a + family.b + family.c + family.d;
    report.first_sum_bound = std::min(1.0, 4.0 / (s * s));
  }
  return report;
}

ProbVector preserve_spectrum(const BellFamily& f) {
  const double a2 = f.a * f.a, b2 = f.b * f.b, c2 = f.c * f.c, d2 = f.d * f.d;
  const double cross = 0.5 * (a2 * b2 + c2 * d2);
  return ProbVector{0.5 * (a2 * a2 + c2 * c2), cross, cross, 0.5 * (b2 * b2 + d2 * d2)};
}

ProbVector preserve_spectrum(const BellFamily& family, std::span<const double> probs) {
  return preserve_spectrum(family_ensemble(family, probs));
}

ProbVector preserve_spectrum(const Ensemble& ensemble) {
  std::vector<Weighted> terms;
  terms.reserve(ensemble.size());
  for (const auto& m : ensemble.members()) {
    const ProbVector lambda = reduced_spectrum(m.state);
    terms.push_back({m.prob, tensor(lambda, lambda)});
  }
  return mix(terms);
}

double preserve_cost(const BellFamily& family) { return entropy_bits(preserve_spectrum(family)); }

double preserve_cost(const BellFamily& family, std::span<const double> probs) {
  return entropy_bits(preserve_spectrum(family, probs));
}

double preserve_cost(const Ensemble& ensemble) { return entropy_bits(preserve_spectrum(ensemble)); }

PureState Contraction::normalized() const {
  return PureState::normalized(amplitudes, dim_a, dim_b);
}

Contraction partial_inner_product(const PureState& bra, const PureState& joint,
                                  std::size_t residual_dim_a, std::size_t residual_dim_b) {
  if (joint.dim_a() != bra.size()) {
    throw ValidationError("joint state's AB factor has dimension " + std::to_string(joint.dim_a()) +
                          ", bra has " + std::to_string(bra.size()));
  }
  if (residual_dim_a * residual_dim_b != joint.dim_b()) {
    throw ValidationError("residual dimensions do not match the joint state's second factor");
  }
  const auto psi = bra.amplitudes();
  std::vector<Complex> out(joint.dim_b(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < psi.size(); ++r) {
    const Complex w = std::conj(psi[r]);
    if (w == Complex{}) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * joint(r, c);
  }
  const double n2 = squared_norm(out);
  return {std::move(out), residual_dim_a, residual_dim_b, n2};
}

PureState product_joint(const PureState& u, const PureState& v) {
  const std::size_t da = u.dim_a(), dabar = u.dim_b();
  const std::size_t db = v.dim_a(), dbbar = v.dim_b();
  const std::size_t cols = dabar * dbbar;
  std::vector<Complex> amps(da * db * cols);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < dabar; ++j)
        for (std::size_t l = 0; l < dbbar; ++l)
          amps[(i * db + k) * cols + (j * dbbar + l)] = u(i, j) * v(k, l);
  return PureState(std::move(amps), da * db, cols);
}

ProbVector preserve_bound(std::span<const PureState> members, const PureState& joint,
                          std::size_t residual_dim_a, std::size_t residual_dim_b) {
  std::vector<Weighted> terms;
  for (const auto& psi : members) {
    const Contraction phi = partial_inner_product(psi, joint, residual_dim_a, residual_dim_b);
    if (phi.norm2 < 1e-15) continue;
    terms.push_back({phi.norm2, tensor(reduced_spectrum(psi), reduced_spectrum(phi.normalized()))});
  }
  return mix(terms);
}

}  // namespace locc
