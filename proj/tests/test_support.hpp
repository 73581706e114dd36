#pragma once

// Shared generators for the property-style tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "locc/prob_vector.hpp"
#include "locc/pure_state.hpp"

namespace locc::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

// Random point of the simplex; with `sparse` some entries are forced to 0.
inline std::vector<double> random_simplex(std::size_t d, bool sparse = false) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution drop(0.3);
  std::vector<double> v(d);
  double total = 0.0;
  for (auto& x : v) {
    x = (sparse && drop(rng())) ? 0.0 : expo(rng());
    total += x;
  }
  if (total == 0.0) {
    v[0] = 1.0;
    total = 1.0;
  }
  for (auto& x : v) x /= total;
  return v;
}

inline ProbVector random_prob(std::size_t d) { return ProbVector(random_simplex(d, d > 2)); }

inline PureState random_state(std::size_t da, std::size_t db) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(da * db);
  for (auto& z : amps) z = {g(rng()), g(rng())};
  return PureState::normalized(std::move(amps), da, db);
}

// Haar-ish random unitary from the QR factor of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {g(rng()), g(rng())};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ();
}

// Sorted eigenvalues of ρ_A = M M† by a Hermitian eigensolve, independent of
// the SVD route the library uses.
inline std::vector<double> reduced_eigenvalues(const PureState& s) {
  Eigen::MatrixXcd m(s.dim_a(), s.dim_b());
  for (std::size_t a = 0; a < s.dim_a(); ++a)
    for (std::size_t b = 0; b < s.dim_b(); ++b) m(a, b) = s(a, b);
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace locc::testing
