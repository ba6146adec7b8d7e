#pragma once

#include <string>
#include <vector>

namespace ncf {

// A permutation of {1..N}, stored as the image sequence. images_[i] is the
// 0-based image of i, so sigma(i+1) = images_[i]+1 in cycle notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity
  explicit Perm(std::vector<int> images0);

  static Perm identity(int n) { return Perm(n); }
  // From disjoint cycles over 1-based points, e.g. {{1,2},{3,4}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i - 1] + 1; }  // 1-based
  int apply0(int i) const { return images_[i]; }         // 0-based

  Perm inverse() const;
  bool is_identity() const;

  // Cycle notation like "(12)(34)" or "e"; multi-digit points separated by
  // commas: "(1,10)".
  std::string cycle_string() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial, canonical

  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

// (p*q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);

// g a g^-1.
Perm conjugate(const Perm& g, const Perm& a);

// Weakly decreasing parts summing to N. Fixed points are implicit in the
// string form: "2+2" for N=5 means cycle type (2,2,1).
struct CycleType {
  std::vector<int> parts;  // descending, includes 1s

  static CycleType of(const Perm& p);
  // Parse "2", "2+2", "3+2" etc., padding with fixed points up to n.
  static CycleType parse(const std::string& s, int n);
  int n() const;
  bool is_identity() const;
  std::string to_string() const;  // omits fixed points; "1^N" for identity

  auto operator<=>(const CycleType&) const = default;
};

// All permutations of cycle type t in S_N, sorted lexicographically on the
// image sequence. Rejects the identity type (e must not lie in the class).
std::vector<Perm> conjugacy_class(int N, const CycleType& t);

long class_size(int N, const CycleType& t);

// True iff the subgroup generated by C has order N!.
bool generates_group(const std::vector<Perm>& C, int N);

// BFS closure of C under composition (the generated subgroup).
std::vector<Perm> generated_subgroup(const std::vector<Perm>& C, int N);

// All N! permutations in lexicographic image order.
std::vector<Perm> all_perms(int N);

long factorial(int n);

}  // namespace ncf
