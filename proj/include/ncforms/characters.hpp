#pragma once

#include <string>
#include <vector>

#include "ncforms/linalg.hpp"
#include "ncforms/perm.hpp"

namespace ncf {

using Partition = std::vector<int>;  // descending positive parts

// All partitions of n, in descending lexicographic order, so (n) comes
// first and (1^n) last.
std::vector<Partition> partitions_of(int n);

struct CharacterTable {
  int N = 0;
  std::vector<CycleType> classes;      // indexed like partitions_of(N)
  std::vector<long> sizes;             // conjugacy class sizes
  std::vector<Partition> irreducibles; // row labels
  std::vector<std::vector<long>> chi;  // chi[row][class]

  int class_index(const CycleType& t) const;
  int identity_class() const;
  int two_cycle_class() const;         // index of the (2,1,..) class
  long dimension(int row) const;       // chi at the identity class
};

// Integer character values of every irreducible of S_N on every class,
// by the Murnaghan-Nakayama rule. 1 <= N <= 8.
CharacterTable irreducible_characters(int N);

// chi_lambda(mu) for single values.
long mn_character(const Partition& lambda, const Partition& mu);

struct IrrepMultiplicity {
  Partition lambda;
  long multiplicity;
};

// Inner-product decomposition of a rational class function known to be a
// character. Throws if any multiplicity is negative or non-integral.
std::vector<IrrepMultiplicity> decompose_character(
    const std::vector<Rat>& values, const CharacterTable& table);

// Informal labels in the style of the flat-connection tables: "fund" for
// (N-1,1), "sign" for (1^N), "triv" for (N), otherwise the dimension with a
// "bar" suffix when the character at the 2-cycle class is negative. When two
// distinct irreducibles share dimension and sign the label is flagged
// with the partition to avoid ambiguity.
std::string irrep_label(const Partition& lambda, const CharacterTable& table);

// Joined decomposition label, e.g. "fund+5".
std::string decomposition_label(const std::vector<IrrepMultiplicity>& dec,
                                const CharacterTable& table);

}  // namespace ncf
