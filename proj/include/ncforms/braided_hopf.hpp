#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncforms/graded_algebra.hpp"
#include "ncforms/theta_poly.hpp"

namespace ncf {

// Element of an r-fold braided tensor power of the algebra, each slot a
// (degree, basis index) pair of a homogeneous basis element.
class TensorPowerElement {
 public:
  using Slot = std::pair<int, int>;
  using Key = std::vector<Slot>;

  TensorPowerElement() = default;
  explicit TensorPowerElement(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Key& k) const;

  void add(const Key& k, const Rat& c);
  TensorPowerElement& operator+=(const TensorPowerElement& o);
  TensorPowerElement& operator-=(const TensorPowerElement& o);
  TensorPowerElement& operator*=(const Rat& c);
  bool operator==(const TensorPowerElement&) const = default;

 private:
  int arity_ = 1;
  std::map<Key, Rat> terms_;
};

// The additive braided-group structure carried by a graded quotient of the
// tensor algebra of the class: coproduct Delta e_a = e_a (x) 1 + 1 (x) e_a
// extended as an algebra map into the braided tensor square, braided
// derivatives, antipode, adjoint action and the factorial pairing.
class BraidedGroup {
 public:
  explicit BraidedGroup(GradedAlgebra* alg) : alg_(alg) {}

  GradedAlgebra& algebra() const { return *alg_; }
  const CrossedModule& cm() const { return alg_->cm(); }

  // g acting diagonally with its zeta signs, reduced to basis coordinates.
  AlgElement act(const Perm& g, const AlgElement& f) const;
  // T(f) = |f|.f for homogeneous f, extended additively.
  AlgElement degree_action(const AlgElement& f) const;
  Rat counit(const AlgElement& x) const { return x.coeff(0, 0); }

  TensorPowerElement tensor_unit(int arity) const;
  // x placed in the given slot (0-based), 1 elsewhere.
  TensorPowerElement embed(const AlgElement& x, int arity, int slot) const;
  // Multiplication of the braided tensor product algebra: passing a right
  // factor left across a slot acts by that slot's group degree.
  TensorPowerElement tensor_multiply(const TensorPowerElement& x,
                                     const TensorPowerElement& y) const;

  TensorPowerElement coproduct(const AlgElement& x) const;
  // Delta applied to one slot (0-based), raising the arity by one.
  TensorPowerElement coproduct_at(const TensorPowerElement& x, int slot) const;
  // Multiply the slots together, collapsing to an algebra element.
  AlgElement tensor_collapse(const TensorPowerElement& x) const;

  // D_a (conjugated = false) contracts with the braided integer [m, Psi],
  // bar D_a (conjugated = true) with [m, Psi^-1]; both lower degree by one.
  AlgElement braided_derivative(int a, const AlgElement& x,
                                bool conjugated) const;

  // S(1) = 1, S(e_a) = -e_a, S(e_a f) = -(a.S f) e_a.
  AlgElement antipode(const AlgElement& x) const;
  // mult (S (x) id) Delta x == counit(x) 1.
  bool convolution_identity(const AlgElement& x) const;

  // Ad_{e_a}(f) = e_a f - (a.f) e_a.
  AlgElement adjoint_action(int a, const AlgElement& f) const;

  // <e_{a_n}..e_{a_1}, e_{b_1}..e_{b_m}> = delta_{n,m} [n, s Psi]! with the
  // algebra's factorial sign; Gram matrices cached per degree.
  Rat pairing(const AlgElement& x, const AlgElement& y) const;
  const QMatrix& gram(int degree) const;

 private:
  GradedAlgebra* alg_;
  mutable std::map<int, QMatrix> gram_;
};

// Braided Fourier transform on the signed 2-cycle algebra of S_3
// (dims 1,3,4,3,1): integral = coefficient of the top monomial
// [12][23][12][31], exp = sum of basis (x) dual-basis over all degrees,
// S(f) = (integral (x) id)(f exp).
class FourierE3 {
 public:
  explicit FourierE3(BraidedGroup* bg);  // throws if Gram degenerates

  BraidedGroup& group() const { return *bg_; }
  const AlgElement& top() const { return top_; }  // the top monomial, reduced
  Rat integral(const AlgElement& f) const;
  const std::vector<AlgElement>& dual_basis(int degree) const;
  TensorPowerElement exp_element() const;  // arity 2, all degrees
  AlgElement transform(const AlgElement& f) const;

 private:
  BraidedGroup* bg_;
  AlgElement top_;
  Rat topCoeff_;  // coefficient of the degree-4 basis element in top_
  std::vector<std::vector<AlgElement>> dual_;  // per degree 0..4
};

struct DividedDifferenceReport {
  int polynomials = 0;
  int pairs_checked = 0;
  bool ok = false;
};

// For each sample p and each i < j: map p and del_{ij} p = (p - (ij).p) /
// (theta_i - theta_j) into the algebra via theta_i -> sum_{j != i} [ij] and
// assert bar D_{(ij)} intertwines them.
DividedDifferenceReport divided_difference_check(
    BraidedGroup& bg, const std::vector<ThetaPoly>& samples);

}  // namespace ncf
