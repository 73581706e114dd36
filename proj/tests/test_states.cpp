#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "locc/error.hpp"
#include "locc/spectra.hpp"
#include "locc/states.hpp"
#include "test_support.hpp"

using locc::Complex;
using locc::PureState;
using locc::ValidationError;

namespace {

const double kH = std::numbers::sqrt2 / 2.0;

PureState bell() { return PureState({kH, 0.0, 0.0, kH}, 2, 2); }
PureState ket01() { return PureState({0.0, 1.0, 0.0, 0.0}, 2, 2); }
PureState partial() { return PureState({0.8, 0.0, 0.0, 0.6}, 2, 2); }

double distance(const PureState& x, const PureState& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x.amplitudes()[i] - y.amplitudes()[i]);
  return std::sqrt(s);
}

PureState apply_local(const PureState& s, const Eigen::MatrixXcd& ua, const Eigen::MatrixXcd& ub) {
  Eigen::MatrixXcd m(s.dim_a(), s.dim_b());
  for (std::size_t a = 0; a < s.dim_a(); ++a)
    for (std::size_t b = 0; b < s.dim_b(); ++b) m(a, b) = s(a, b);
  const Eigen::MatrixXcd out = ua * m * ub.transpose();
  std::vector<Complex> amps;
  for (std::size_t a = 0; a < s.dim_a(); ++a)
    for (std::size_t b = 0; b < s.dim_b(); ++b) amps.push_back(out(a, b));
  return PureState::normalized(std::move(amps), s.dim_a(), s.dim_b());
}

}  // namespace

TEST_CASE("PureState validation") {
  CHECK_THROWS_AS(PureState({1.0, 0.0, 0.0}, 2, 2), ValidationError);
  CHECK_THROWS_AS(PureState({1.0, 1.0, 0.0, 0.0}, 2, 2), ValidationError);
  CHECK_THROWS_AS(PureState::normalized({0.0, 0.0}, 1, 2), ValidationError);
  const PureState s = PureState::normalized({1.0, 1.0, 0.0, 0.0}, 2, 2);
  CHECK(s(0, 1).real() == doctest::Approx(kH));
  CHECK(s.conjugate()(0, 0) == s(0, 0));
}

TEST_CASE("schmidt examples") {
  const auto b = locc::schmidt(bell());
  CHECK(b.probs[0] == doctest::Approx(0.5));
  CHECK(b.probs[1] == doctest::Approx(0.5));
  const auto p = locc::schmidt(ket01());
  CHECK(p.probs[0] == doctest::Approx(1.0));
  CHECK(p.probs[1] == doctest::Approx(0.0));
  const auto q = locc::schmidt(partial());
  CHECK(q.probs[0] == doctest::Approx(0.64));
  CHECK(q.probs[1] == doctest::Approx(0.36));
}

TEST_CASE("schmidt reconstruction round-trips random states") {
  const std::size_t dims[][2] = {{2, 2}, {2, 3}, {3, 2}, {4, 4}, {1, 3}, {3, 5}};
  for (const auto& d : dims) {
    for (int rep = 0; rep < 50; ++rep) {
      const PureState s = locc::testing::random_state(d[0], d[1]);
      const auto dec = locc::schmidt(s);
      CHECK(dec.probs.size() == std::min(d[0], d[1]));
      CHECK(distance(dec.reconstruct(), s) < 1e-8);
      CHECK(locc::approx_equal(locc::schmidt(dec.reconstruct()).probs, dec.probs, 1e-8));
      const auto ev = locc::testing::reduced_eigenvalues(s);
      const auto lambda = locc::reduced_spectrum(s);
      for (std::size_t k = 0; k < lambda.size(); ++k) CHECK(lambda[k] == doctest::Approx(ev[k]).epsilon(1e-10));
    }
  }
}

TEST_CASE("reduced spectrum is invariant under local unitaries") {
  for (int rep = 0; rep < 100; ++rep) {
    const PureState s = locc::testing::random_state(3, 4);
    const PureState t = apply_local(s, locc::testing::random_unitary(3), locc::testing::random_unitary(4));
    CHECK(locc::approx_equal(locc::reduced_spectrum(s), locc::reduced_spectrum(t), 1e-10));
  }
}

TEST_CASE("bell_family endpoints") {
  const auto maximal = locc::bell_family(0.5, 0.5);
  const auto bells = locc::bell_states();
  for (std::size_t i = 0; i < 4; ++i) CHECK(distance(maximal[i], bells[i]) < 1e-15);

  const auto products = locc::bell_family(1.0, 1.0);
  CHECK(products[0](0, 0) == Complex(1.0));
  CHECK(products[1](1, 1) == Complex(-1.0));
  CHECK(products[2](0, 1) == Complex(1.0));
  CHECK(products[3](1, 0) == Complex(-1.0));
  for (const auto& s : products) CHECK(locc::entanglement_entropy(s) == doctest::Approx(0.0));

  CHECK_THROWS_AS(locc::bell_family(0.4, 0.7), ValidationError);
  CHECK_THROWS_AS(locc::bell_family(0.7, 1.2), ValidationError);
}

TEST_CASE("bell_family members are orthogonal with paired spectra") {
  for (double a2 = 0.5; a2 <= 1.0; a2 += 0.05) {
    for (double c2 = 0.5; c2 <= 1.0; c2 += 0.05) {
      const auto f = locc::bell_family(a2, c2);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          CHECK(std::abs(locc::inner_product(f[i], f[j])) == doctest::Approx(i == j ? 1.0 : 0.0));
      const locc::ProbVector ac{a2, 1.0 - a2};
      const locc::ProbVector cc{c2, 1.0 - c2};
      CHECK(locc::approx_equal(locc::reduced_spectrum(f[0]), ac, 1e-12));
      CHECK(locc::approx_equal(locc::reduced_spectrum(f[1]), ac, 1e-12));
      CHECK(locc::approx_equal(locc::reduced_spectrum(f[2]), cc, 1e-12));
      CHECK(locc::approx_equal(locc::reduced_spectrum(f[3]), cc, 1e-12));
    }
  }
}

TEST_CASE("entanglement measures on reference states") {
  CHECK(locc::entanglement_entropy(bell()) == doctest::Approx(1.0));
  CHECK(locc::entanglement_entropy(ket01()) == doctest::Approx(0.0));
  CHECK(locc::entanglement_entropy(partial()) == doctest::Approx(0.942683).epsilon(1e-6));

  CHECK(locc::global_robustness(bell()) == doctest::Approx(1.0));
  CHECK(locc::global_robustness(ket01()) == doctest::Approx(0.0));
  CHECK(locc::global_robustness(partial()) == doctest::Approx(0.96));

  CHECK(locc::relative_entropy_ent(bell()) == doctest::Approx(1.0));
  CHECK(locc::relative_entropy_ent(ket01()) == doctest::Approx(0.0));
  CHECK(locc::relative_entropy_ent(partial()) == doctest::Approx(0.942683).epsilon(1e-6));

  CHECK(locc::geometric_measure(bell()) == doctest::Approx(1.0));
  CHECK(locc::geometric_measure(ket01()) == doctest::Approx(0.0));
  CHECK(locc::geometric_measure(partial()) == doctest::Approx(0.643856).epsilon(1e-6));
}

TEST_CASE("measure chain holds on random two-qubit states") {
  for (int rep = 0; rep < 1000; ++rep) {
    const PureState s = locc::testing::random_state(2, 2);
    const double r = locc::global_robustness(s);
    const double er = locc::relative_entropy_ent(s);
    const double eg = locc::geometric_measure(s);
    CHECK(1.0 + r >= std::exp2(er) - 1e-12);
    CHECK(std::exp2(er) >= std::exp2(eg) - 1e-12);
    CHECK(locc::entanglement_entropy(s) <= 1.0 + 1e-12);
  }
}

TEST_CASE("distinguishability bounds") {
  const auto bells = locc::bell_states();
  const auto b = locc::distinguishability_bound(locc::Ensemble::uniform(bells));
  CHECK(b.n_robustness == doctest::Approx(2.0));
  CHECK(b.n_rel_entropy == doctest::Approx(2.0));
  CHECK(b.n_geometric == doctest::Approx(2.0));

  const auto products = locc::bell_family(1.0, 1.0);
  const auto p = locc::distinguishability_bound(locc::Ensemble::uniform(products));
  CHECK(p.n_robustness == doctest::Approx(4.0));
  CHECK(p.n_geometric == doctest::Approx(4.0));

  for (int rep = 0; rep < 200; ++rep) {
    std::vector<PureState> states;
    for (int k = 0; k < 3; ++k) states.push_back(locc::testing::random_state(2, 3));
    const auto r = locc::distinguishability_bound(locc::Ensemble::uniform(states));
    CHECK(r.n_robustness <= r.n_rel_entropy + 1e-12);
    CHECK(r.n_rel_entropy <= r.n_geometric + 1e-12);
  }

  const std::vector<PureState> mixed{bell(), PureState({1.0, 0.0, 0.0}, 1, 3)};
  CHECK_THROWS_AS(locc::Ensemble::uniform(mixed), ValidationError);
}
