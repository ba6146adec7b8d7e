#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncforms/crossed_module.hpp"
#include "ncforms/linalg.hpp"

namespace ncf {

// How the graded quotient of the tensor algebra is cut out per degree:
// quadratic uses the two-sided ideal generated by the degree-2 relations,
// woronowicz quotients degree n by the kernel of the braided factorial.
enum class Flavor { Quadratic, Woronowicz };

// Exterior cuts degree 2 by ker(id - Psi), the kernel of the braided
// factorial at sign -1; FominKirillov by ker(id + Psi), the kernel of the
// braided symmetrizer, and is normally paired with the signed braiding.
enum class AlgSign { Exterior, FominKirillov };

class GradedAlgebra;

// Element with one exact coordinate vector per built degree.
class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(const GradedAlgebra* host) : host_(host) {}

  const GradedAlgebra* host() const { return host_; }
  bool is_zero() const { return coords_.empty(); }
  std::vector<int> degrees() const;
  // Coefficient of basis word `idx` in the given degree (0 if absent).
  Rat coeff(int degree, int idx) const;
  const std::map<int, std::map<int, Rat>>& coords() const { return coords_; }

  void add(int degree, int idx, const Rat& c);
  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const Rat& c);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  bool operator==(const AlgElement& o) const { return coords_ == o.coords_; }

  std::string to_string() const;

 private:
  const GradedAlgebra* host_ = nullptr;
  std::map<int, std::map<int, Rat>> coords_;  // degree -> basis idx -> coeff
};

AlgElement multiply(const AlgElement& x, const AlgElement& y);

class GradedAlgebra {
 public:
  GradedAlgebra(CrossedModule cm, Flavor flavor, AlgSign sign, bool heavy = false);

  const CrossedModule& cm() const { return cm_; }
  Flavor flavor() const { return flavor_; }
  AlgSign alg_sign() const { return sign_; }
  // Sign s in the braided factorial [n; s Psi]! whose kernels cut the quotient.
  int factorial_sign() const { return sign_ == AlgSign::Exterior ? -1 : 1; }
  int degree_cap() const { return cap_; }

  // Degrees 0..n; throws beyond the cap with the required word-space size.
  void build_degree(int n);
  int built() const { return static_cast<int>(basis_.size()) - 1; }
  int dim(int n) const;
  const std::vector<Word>& basis_words(int n) const;
  // dim of the degree-n component of the relation ideal, |C|^n - dim(n).
  Int relation_ideal_dim(int n) const;

  // Basis of ker(id - s Psi) in degree-2 word coordinates.
  const std::vector<TensorVec>& relation_space() const { return rel2_; }
  // Same space assembled per group element g from the sigma-fixed vectors on
  // {a in C : a^-1 g in C}, sigma(a) = a^-1 g. Unsigned braiding only.
  std::vector<TensorVec> relation_space_via_Vg() const;

  // Projection to the chosen basis; builds nothing, degree must be built.
  AlgElement normal_form(const TensorVec& v) const;
  AlgElement element(int degree, int basisIdx) const;
  AlgElement one() const;
  AlgElement generator(int a) const;
  AlgElement theta() const;
  // theta_i = sum_{j != i} e_(ij); in FK sign, the (ij) with j < i enter
  // negatively. 2-cycle class only, 1-based i.
  AlgElement theta_i(int i) const;

  struct HilbertResult {
    std::vector<Int> dims;
    // Expansion of the product of q-integers when one is on record
    // (2-cycle class, N <= 5), truncated to the same length.
    std::optional<std::vector<Int>> closed_form;
  };
  // maxDegree = -1: build until a zero-dimensional degree (N = 3 only).
  HilbertResult hilbert_series(int maxDegree);

  std::string word_string(const Word& w) const;
  std::string basis_word_string(int degree, int idx) const;

 private:
  SparseVec nf_word(const Word& w) const;  // coords in basis_[w.size()]
  void build_next();                        // one more degree
  std::vector<TensorVec> compute_rel2() const;

  CrossedModule cm_;
  Flavor flavor_;
  AlgSign sign_;
  int cap_;
  std::vector<TensorVec> rel2_;
  std::vector<std::vector<Word>> basis_;        // per degree
  std::vector<std::map<Word, int>> basisIndex_; // per degree
  // Quadratic flavor: degree n entry maps (i, a), i a degree n-1 basis index,
  // to coordinates of basisWord(i) * e_a in degree n.
  std::vector<std::vector<SparseVec>> mult_;
  // Woronowicz flavor: full rewrite table, word index -> coords.
  std::vector<std::vector<SparseVec>> rewrite_;
};

// Coefficients of prod_i (1 + q + ... + q^{ns[i]-1}).
std::vector<Int> q_integer_product(const std::vector<int>& ns);

}  // namespace ncf
