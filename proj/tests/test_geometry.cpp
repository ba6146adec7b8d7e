#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/geometry.hpp"

using namespace ncf;

namespace {

long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

CrossedModule two_cycles(int N) {
  return CrossedModule::build(N, CycleType::parse("2", N), false);
}

std::vector<CycleType> nontrivial_classes(int N) {
  std::vector<CycleType> out;
  if (N >= 2) out.push_back(CycleType::parse("2", N));
  if (N >= 3) out.push_back(CycleType::parse("3", N));
  if (N >= 4) {
    out.push_back(CycleType::parse("4", N));
    out.push_back(CycleType::parse("2+2", N));
  }
  if (N >= 5) {
    out.push_back(CycleType::parse("5", N));
    out.push_back(CycleType::parse("3+2", N));
  }
  return out;
}

}  // namespace

TEST_CASE("2-cycle Killing form matches the binomial pattern, N = 3..8") {
  for (int N = 3; N <= 8; ++N) {
    CAPTURE(N);
    auto cm = two_cycles(N);
    Metric k = killing_form(cm);
    Metric pattern = general_two_cycle_metric(
        N, choose2(N), choose2(N - 4) + 2, choose2(N - 3));
    REQUIRE(k.eta.rows() == pattern.eta.rows());
    for (int a = 0; a < k.eta.rows(); ++a)
      for (int b = 0; b < k.eta.cols(); ++b) CHECK(k.eta(a, b) == pattern.eta(a, b));
  }
}

TEST_CASE("S_3 2-cycle Killing form is diag(3,3,3) with det 27") {
  auto cm = two_cycles(3);
  Metric k = killing_form(cm);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(k.eta(a, b) == (a == b ? 3 : 0));
  CHECK(determinant(k.eta) == 27);
}

TEST_CASE("Killing and Kronecker forms pass the invariance asserts on every class of S_3..S_5") {
  for (int N = 3; N <= 5; ++N)
    for (const auto& t : nontrivial_classes(N)) {
      CAPTURE(N);
      CAPTURE(t.to_string());
      auto cm = CrossedModule::build(N, t, false);
      CHECK_NOTHROW(killing_form(cm));
      // All these classes are inversion-stable except the 4-cycles and
      // 5-cycles, which are too (a cycle's inverse has the same type).
      CHECK_NOTHROW(kronecker_metric(cm));
    }
}

TEST_CASE("patterned determinant closed form at random rational points, N = 2..10") {
  for (int N = 2; N <= 10; ++N) {
    CAPTURE(N);
    auto rep = general_metric_det_check(N, 5, 20260826 + N);
    CHECK(rep.ok);
    CHECK(rep.agreements == 5);
  }
}

TEST_CASE("patterned determinant at (1,0,0) is 1") {
  for (int N : {2, 3, 5, 8}) {
    CAPTURE(N);
    Metric id = general_two_cycle_metric(N, 1, 0, 0);
    CHECK(determinant(id.eta) == 1);
    auto f = two_cycle_metric_det_formula(N, 1, 0, 0);
    REQUIRE(f.has_value());
    CHECK(*f == 1);
  }
}

TEST_CASE("determinant formula handles the N = 2 cancellation") {
  // 1x1 matrix (alpha); the negative-exponent factor cancels symbolically.
  auto f = two_cycle_metric_det_formula(2, make_rat(7, 3), 5, 1);
  REQUIRE(f.has_value());
  CHECK(*f == make_rat(7, 3));
  // alpha + beta = 2 gamma makes the cancelled base vanish: refuse.
  CHECK_FALSE(two_cycle_metric_det_formula(2, 1, 1, 1).has_value());
}

TEST_CASE("Killing invertibility certified across the supported range") {
  for (int N = 3; N <= 10; ++N) {
    CAPTURE(N);
    CHECK(killing_invertibility(N));  // exact determinant
  }
  for (int N : {12, 20, 29}) {
    CAPTURE(N);
    CHECK(killing_invertibility(N));  // modular certificate
  }
  CHECK_THROWS_AS(killing_invertibility(30), std::invalid_argument);
}

TEST_CASE("wedge of a symmetric invariant metric vanishes") {
  {
    auto cm = two_cycles(4);
    GradedAlgebra alg(cm, Flavor::Quadratic, AlgSign::Exterior);
    CHECK(wedge_vanishing(alg, killing_form(cm)));
  }
  {
    auto cm = two_cycles(3);
    GradedAlgebra alg(cm, Flavor::Quadratic, AlgSign::Exterior);
    CHECK(wedge_vanishing(alg, kronecker_metric(cm)));
    // An antisymmetric perturbation survives the wedge.
    Metric eta = kronecker_metric(cm);
    eta.eta(0, 1) += 1;
    eta.eta(1, 0) -= 1;
    eta.provenance = "perturbed";
    CHECK_FALSE(wedge_vanishing(alg, eta));
  }
}

TEST_CASE("rack bracket: self-distributivity and the enveloping relation") {
  for (int N = 3; N <= 5; ++N)
    for (const auto& t : nontrivial_classes(N)) {
      CAPTURE(N);
      CAPTURE(t.to_string());
      auto cm = CrossedModule::build(N, t, false);
      auto rep = rack_checks(cm);
      CHECK(rep.self_distributive);
      CHECK(rep.enveloping);
      CHECK(rep.ok);
    }
  // Degenerate triple a = b = c reduces both sides to [x_a, x_a] = x_a.
  auto cm = two_cycles(4);
  for (int a = 0; a < cm.size(); ++a)
    CHECK(rack_bracket(cm, a, a) == a);
}

TEST_CASE("Hodge star on S_3: epsilon tensor and full-rank star maps") {
  HodgeStarS3 h;
  const auto& alg = h.algebra();
  const auto& cm = alg.cm();
  auto idx = [&](int i, int j) {
    return cm.index_of(Perm::from_cycles(3, {{i, j}}));
  };
  const int a12 = idx(1, 2), a13 = idx(1, 3), a23 = idx(2, 3);

  // The designated top word itself has coefficient 1.
  CHECK(h.epsilon({a12, a13, a12, a23}) == 1);
  CHECK(h.top().coeff(4, 0) == 1);
  // A word with a repeated adjacent-free square pattern dies.
  CHECK(h.epsilon({a12, a13, a12, a13}) == 0);
  // epsilon is just the degree-4 normal-form coefficient, so it vanishes
  // exactly on words that are zero in the algebra.
  int nonzero = 0;
  for (const Word& w : cm.all_words(4))
    if (h.epsilon(w) != 0) ++nonzero;
  CHECK(nonzero > 0);

  // Star maps hit the full target dimension in every degree.
  const int dims[5] = {1, 3, 4, 3, 1};
  for (int m = 0; m <= 4; ++m) {
    CAPTURE(m);
    CHECK(h.star_matrix(m).rows() == dims[4 - m]);
    CHECK(h.star_matrix(m).cols() == dims[m]);
    CHECK(h.star_rank(m) == dims[m]);
  }
}

TEST_CASE("Hodge star squares to a scalar in each degree; scalars reported") {
  HodgeStarS3 h;
  // With all normalizations d_m = 1 the composition * . * on degree m is a
  // scalar; frozen values from the epsilon-tensor computation.
  const Rat expected[5] = {-12, -4, -3, -4, -12};
  for (int m = 0; m <= 4; ++m) {
    CAPTURE(m);
    CHECK(h.star_square_scalar(m) == expected[m]);
  }
  // *(1) is proportional to the top form, with the degree-0 scalar.
  AlgElement starOne = h.star(h.algebra().one());
  AlgElement expectedTop = h.top();
  expectedTop *= Rat(-12);
  CHECK(starOne == expectedTop);
  AlgElement scaledOne = h.algebra().one();
  scaledOne *= Rat(-12);
  CHECK(h.star(starOne) == scaledOne);
}
