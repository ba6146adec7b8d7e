#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncforms/characters.hpp"
#include "ncforms/crossed_module.hpp"

namespace ncf {

// Subsets of the class are bitsets over its element indices. A set is
// closed when Ad_x(X) = X for every x in X; its indicator vector is then a
// flat {0,1} connection phi = sum_{a in X} e_a.
using ClassSubset = std::uint64_t;

struct Stratum {
  int cardinality = 0;
  std::vector<ClassSubset> sets;
};

struct StratumModule {
  int cardinality = 0;
  int dimension = 0;          // of V_n
  bool quotientedByTheta = false;
  std::vector<Rat> character; // on the classes of the character table
  std::vector<IrrepMultiplicity> decomposition;
  std::string label;
};

class FlatModuli {
 public:
  explicit FlatModuli(CrossedModule cm);

  const CrossedModule& cm() const { return cm_; }

  // Smallest Ad-closed superset; idempotent, monotone, extensive.
  ClassSubset closure(ClassSubset X) const;
  bool is_closed(ClassSubset X) const { return closure(X) == X; }

  // Every Ad-closed subset exactly once, grouped by cardinality in
  // increasing order, each stratum sorted. Lectic-order enumeration over
  // the closure operator (the family is intersection-closed).
  std::vector<Stratum> enumerate() const;

  // Both flatness conditions for a constant-coefficient connection:
  // phi^a (phi^{a^-1 b a} - phi^b) = 0 for all a, b, and
  // Psi(phi (x) phi) = phi (x) phi. Computed independently and compared.
  bool verify_flat(const QVector& phi) const;

  // The span W of the indicator vectors of a stratum inside kC, quotiented
  // by k.theta when theta lies in W; character of the Ad-action on the
  // quotient and its irreducible decomposition. Requires N <= 8.
  StratumModule stratum_module(const Stratum& s) const;

  // 2-cycle class: the nonempty stratum of largest cardinality below |C|.
  // Asserts it is { C minus the 2-cycles through i : i = 1..N }, each of
  // cardinality (N-1 choose 2).
  static std::vector<ClassSubset> submaximal_2cycles(int N);

  QVector indicator(ClassSubset X) const;
  ClassSubset full_set() const { return size_ == 64 ? ~0ULL : (1ULL << size_) - 1; }

 private:
  ClassSubset ad_image(int x, ClassSubset X) const;

  CrossedModule cm_;
  int size_;
};

}  // namespace ncf
