#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ncforms/crossed_module.hpp"
#include "ncforms/graded_algebra.hpp"
#include "ncforms/linalg.hpp"

namespace ncf {

// Symmetric Ad-invariant bilinear form on the span of the class, indexed by
// class element pairs.
struct Metric {
  QMatrix eta;
  std::string provenance;  // "killing", "general", "kronecker"
};

// eta^{a,b} = #{c in C : cab = abc}. Symmetry and Ad-invariance are asserted
// on construction (invariance under the adjacent transpositions suffices).
Metric killing_form(const CrossedModule& cm);

// eta^{a,b} = delta_{a, b^-1}; requires the class to be inversion-stable.
Metric kronecker_metric(const CrossedModule& cm);

// The general invariant pattern on the 2-cycle class of S_N: alpha on the
// diagonal, beta on disjoint pairs, gamma on pairs sharing one point.
Metric general_two_cycle_metric(int N, const Rat& alpha, const Rat& beta,
                                const Rat& gamma);

// Closed-form determinant of the patterned matrix,
//   (a+b-2c)^{N(N-3)/2} (a-(N-3)b+(N-4)c)^{N-1} (a+(N-2)(N-3)/2 b+2(N-2)c).
// For N = 2 the first exponent is -1; nullopt when a negative power of a
// vanishing base would be needed.
std::optional<Rat> two_cycle_metric_det_formula(int N, const Rat& alpha,
                                                const Rat& beta,
                                                const Rat& gamma);

struct MetricDetReport {
  int N = 0;
  int samples = 0;
  int agreements = 0;
  bool ok = false;
};

// Exact determinants of the patterned matrix at random rational
// (alpha, beta, gamma) against the closed form. 2 <= N <= 10.
MetricDetReport general_metric_det_check(int N, int samples,
                                         std::uint64_t seed);

// Nonzero determinant of the 2-cycle Killing form: exact for N <= 10, via a
// 62-bit modular certificate on the patterned matrix for 10 < N < 30.
bool killing_invertibility(int N);

// True iff sum_{a,b} eta^{a,b} e_a e_b normal-forms to zero in degree 2.
bool wedge_vanishing(GradedAlgebra& alg, const Metric& eta);

// Class index of the rack bracket [x_a, x_b] = x_{b^-1 a b}.
int rack_bracket(const CrossedModule& cm, int a, int b);

struct RackReport {
  bool self_distributive = false;  // [[x_a,x_c],[x_b,x_c]] = [[x_a,x_b],x_c]
  bool enveloping = false;         // x_a x_b = x_b x_{b^-1 a b} holds in G
  bool ok = false;
};

RackReport rack_checks(const CrossedModule& cm);

// Hodge star on the 2-cycle exterior algebra of S_3 (dims 1,3,4,3,1): the
// epsilon tensor is read off from e_{a_1}..e_{a_4} = eps * Top with Top the
// normal form of e_(12) e_(13) e_(12) e_(23), and
//   *(e_{a_1}..e_{a_m}) = sum eps_{a_1..a_4} e_{a_4}..e_{a_{m+1}}
// (2-cycles are their own inverses; normalizations d_m = 1).
class HodgeStarS3 {
 public:
  HodgeStarS3();

  const GradedAlgebra& algebra() const { return alg_; }
  const AlgElement& top() const { return top_; }

  // w must have length 4; coefficient of Top in the normal form of w.
  Rat epsilon(const Word& w) const;

  // Matrix of *: degree m -> degree 4-m on the chosen bases.
  const QMatrix& star_matrix(int m) const;
  int star_rank(int m) const;
  // * on degree 4-m composed with * on degree m is scalar * id; the scalar.
  // Throws std::logic_error if the composition is not scalar.
  Rat star_square_scalar(int m) const;

  AlgElement star(const AlgElement& x) const;  // homogeneous input

 private:
  GradedAlgebra alg_;
  AlgElement top_;
  Rat topCoeff_;
  std::vector<QMatrix> mats_;  // per source degree 0..4
};

}  // namespace ncf
