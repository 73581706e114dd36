#include "locc/states.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "locc/error.hpp"
#include "locc/spectra.hpp"

namespace locc {
namespace {

Eigen::MatrixXcd coefficient_matrix(const PureState& state) {
  Eigen::MatrixXcd m(state.dim_a(), state.dim_b());
  for (std::size_t a = 0; a < state.dim_a(); ++a) {
    for (std::size_t b = 0; b < state.dim_b(); ++b) m(a, b) = state(a, b);
  }
  return m;
}

// Squared singular values, renormalized against rounding so they always
// form a valid ProbVector.
ProbVector probs_from_singular_values(const Eigen::VectorXd& sv) {
  std::vector<double> p(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) p[i] = sv[i] * sv[i];
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= total;
  return ProbVector(std::move(p));
}

// Bounds for a parameter that should lie in [0.5, 1]; grid arithmetic may put
// it a few ulps outside.
double checked_square(double v, const char* name) {
  constexpr double slack = 1e-12;
  if (!(v >= 0.5 - slack && v <= 1.0 + slack)) {
    throw ValidationError(std::string(name) + " must lie in [0.5, 1], got " + std::to_string(v));
  }
  return std::clamp(v, 0.5, 1.0);
}

}  // namespace

PureState SchmidtDecomposition::reconstruct() const {
  const std::size_t da = basis_a.empty() ? 0 : basis_a.front().size();
  const std::size_t db = basis_b.empty() ? 0 : basis_b.front().size();
  std::vector<Complex> amps(da * db, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double s = std::sqrt(probs[k]);
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t b = 0; b < db; ++b) amps[a * db + b] += s * basis_a[k][a] * basis_b[k][b];
    }
  }
  return PureState(std::move(amps), da, db, 1e-8);
}

SchmidtDecomposition schmidt(const PureState& state) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficient_matrix(state),
                                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const auto& u = svd.matrixU();
  const auto& v = svd.matrixV();

  // M = U Σ V†, so M_ab = Σ_k σ_k U_ak conj(V_bk).
  std::vector<std::vector<Complex>> basis_a(sv.size()), basis_b(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    basis_a[k].resize(state.dim_a());
    basis_b[k].resize(state.dim_b());
    for (std::size_t a = 0; a < state.dim_a(); ++a) basis_a[k][a] = u(a, k);
    for (std::size_t b = 0; b < state.dim_b(); ++b) basis_b[k][b] = std::conj(v(b, k));
  }
  // JacobiSVD returns singular values in decreasing order, matching the
  // canonical ProbVector order, so the bases stay aligned with probs.
  return {probs_from_singular_values(sv), std::move(basis_a), std::move(basis_b)};
}

ProbVector reduced_spectrum(const PureState& state) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficient_matrix(state));
  return probs_from_singular_values(svd.singularValues());
}

BellFamily BellFamily::from_squared(double a2, double c2) {
  a2 = checked_square(a2, "a2");
  c2 = checked_square(c2, "c2");
  return {std::sqrt(a2), std::sqrt(1.0 - a2), std::sqrt(c2), std::sqrt(1.0 - c2)};
}

std::array<PureState, 4> bell_family(const BellFamily& f) {
  using V = std::vector<Complex>;
  return {
      PureState(V{f.a, 0.0, 0.0, f.b}, 2, 2),
      PureState(V{f.b, 0.0, 0.0, -f.a}, 2, 2),
      PureState(V{0.0, f.c, f.d, 0.0}, 2, 2),
      PureState(V{0.0, f.d, -f.c, 0.0}, 2, 2),
  };
}

std::array<PureState, 4> bell_family(double a2, double c2) {
  return bell_family(BellFamily::from_squared(a2, c2));
}

std::array<PureState, 4> bell_states() {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  return bell_family(BellFamily{h, h, h, h});
}

double entanglement_entropy(const PureState& state) {
  return entropy_bits(reduced_spectrum(state));
}

double global_robustness(const PureState& state) {
  double root_sum = 0.0;
  for (double p : reduced_spectrum(state)) root_sum += std::sqrt(p);
  return std::max(root_sum * root_sum - 1.0, 0.0);
}

double relative_entropy_ent(const PureState& state) { return entanglement_entropy(state); }

double geometric_measure(const PureState& state) {
  return std::max(-std::log2(reduced_spectrum(state).largest()), 0.0);
}

DistinguishabilityBound distinguishability_bound(const Ensemble& ensemble) {
  double robust = 0.0, rel = 0.0, geo = 0.0;
  for (const auto& m : ensemble.members()) {
    const ProbVector lambda = reduced_spectrum(m.state);
    double root_sum = 0.0;
    for (double p : lambda) root_sum += std::sqrt(p);
    robust += root_sum * root_sum;
    rel += std::exp2(entropy_bits(lambda));
    geo += 1.0 / lambda.largest();
  }
  const double n = static_cast<double>(ensemble.size());
  const double dim = static_cast<double>(ensemble.dim_a() * ensemble.dim_b());
  return {dim / (robust / n), dim / (rel / n), dim / (geo / n)};
}

}  // namespace locc
