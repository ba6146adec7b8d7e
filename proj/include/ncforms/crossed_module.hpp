#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ncforms/linalg.hpp"
#include "ncforms/perm.hpp"

namespace ncf {

// Word of class-element indices, the tensor index (a_1,...,a_n).
using Word = std::vector<int>;

// Sparse exact vector over degree-n words.
class TensorVec {
 public:
  TensorVec() = default;
  explicit TensorVec(int degree) : degree_(degree) {}
  static TensorVec basis(const Word& w);

  int degree() const { return degree_; }
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rat coeff(const Word& w) const;

  void add(const Word& w, const Rat& c);
  TensorVec& operator+=(const TensorVec& o);
  TensorVec& operator-=(const TensorVec& o);
  TensorVec& operator*=(const Rat& c);
  friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
  friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
  bool operator==(const TensorVec&) const = default;

 private:
  int degree_ = 0;
  std::map<Word, Rat> terms_;
};

// A conjugacy class with its Ad-action tables, the braiding
// Psi(e_a (x) e_b) = zeta_{a,b} e_{aba^-1} (x) e_a, and (for the signed
// 2-cycle case) the cocycle zeta.
class CrossedModule {
 public:
  // signed_mode is only defined for the 2-cycle class.
  static CrossedModule build(int N, const CycleType& t, bool signed_mode);

  int N() const { return n_; }
  bool is_signed() const { return signed_; }
  const CycleType& type() const { return type_; }
  int size() const { return static_cast<int>(class_.size()); }
  const std::vector<Perm>& elements() const { return class_; }
  const Perm& element(int a) const { return class_[a]; }
  int index_of(const Perm& p) const;

  // Index of g a g^-1 for g in the class.
  int ad(int g, int a) const { return ad_[g][a]; }
  // Index of g a g^-1 for arbitrary g.
  int ad(const Perm& g, int a) const;

  // zeta_{g,b}: +1/-1. For unsigned modules always +1. In the signed case
  // this is +1 iff g preserves the order of the pair b = (i j), i < j,
  // which extends the generator table multiplicatively by the cocycle law.
  int zeta(const Perm& g, int b) const;
  int zeta(int g, int b) const { return zetaClass_[g][b]; }

  // g acting on a word: product of zeta signs times the conjugated word.
  std::pair<int, Word> act(const Perm& g, const Word& w) const;

  // Psi(e_a (x) e_b) = coeff * (e_{aba^-1} (x) e_a).
  std::pair<int, std::pair<int, int>> braid_pair(int a, int b) const;
  // Psi^-1(e_c (x) e_a) = coeff * (e_a (x) e_{a^-1 c a}).
  std::pair<int, std::pair<int, int>> braid_pair_inverse(int c, int a) const;

  // Psi_i (or its inverse) acting at positions (i, i+1), 1-based position.
  TensorVec apply_braiding(int i, const TensorVec& v, bool inverse = false) const;

  // The group element a_1 a_2 ... a_n.
  Perm word_degree(const Word& w) const;

  // [n; s Psi] = id + s Psi_1 + s^2 Psi_1 Psi_2 + ... (sign s = +-1).
  TensorVec braided_integer(int n, int sign, const TensorVec& v) const;
  // [n; s Psi]! = (id (x) [n-1]!) [n], the Woronowicz antisymmetrizer for
  // s = -1 and the symmetrizer for s = +1.
  TensorVec braided_factorial(int n, int sign, const TensorVec& v) const;

  // All |C|^n words of degree n in lexicographic order.
  std::vector<Word> all_words(int n) const;

  // Materialize a linear operator column by column over the given words.
  QMatrix materialize(const std::vector<Word>& words,
                      const std::function<TensorVec(const TensorVec&)>& op) const;

 private:
  TensorVec factorial_tail(int n, int sign, const TensorVec& v, int offset) const;

  int n_ = 0;
  bool signed_ = false;
  CycleType type_;
  std::vector<Perm> class_;
  std::map<Perm, int> index_;
  std::vector<std::vector<int>> ad_;         // ad_[g][a], g in class
  std::vector<std::vector<int>> zetaClass_;  // zeta on class x class
};

}  // namespace ncf
