#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ncforms/rational.hpp"

namespace ncf {

using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// A sparse vector with sorted, unique indices and no stored zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec to_sparse(const QVector& v);
QVector to_dense(const SparseVec& v, int dim);

// Exact right null space basis of M, in reduced echelon form with the
// leftmost-pivot convention. Basis vectors are indexed by the free columns
// in increasing order.
std::vector<QVector> kernel_basis(const QMatrix& M);

int rank(const QMatrix& M);

// Fraction-free Bareiss determinant.
Rat determinant(const QMatrix& M);

// Determinant of M reduced modulo the prime p. Denominators must be
// invertible mod p. A nonzero residue certifies a nonzero exact determinant.
std::uint64_t det_mod_p(const QMatrix& M, std::uint64_t p);

// A 62-bit prime used for modular certificates.
inline constexpr std::uint64_t kCertPrime = 4611686018427387847ULL;

// Coefficients c with sum_i c_i * vectors[i] == target, or nullopt.
std::optional<QVector> coordinates_in_span(const std::vector<QVector>& vectors,
                                           const QVector& target);

// Incremental row-echelon accumulator over Q with sparse rows. Column order
// for pivoting is ascending by default; with reverse_order the largest
// column index is eliminated first (used to keep lexicographically least
// coordinates as quotient representatives).
class RowEchelon {
 public:
  explicit RowEchelon(int width, bool reverse_order = false,
                      bool fully_reduce = true)
      : width_(width), reverse_(reverse_order), reduce_(fully_reduce) {}

  // Reduces v against the rows seen so far; if a nonzero remainder is left
  // it joins the basis and true is returned.
  bool insert(SparseVec v);

  // Residue of v modulo the current row space (pivot entries eliminated).
  SparseVec reduce(SparseVec v) const;

  bool in_span(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

  // Pivot column of each row, in insertion order of the echelon.
  const std::map<int, int>& pivots() const { return pivot_of_col_; }
  const std::vector<SparseVec>& rows() const { return rows_; }

  std::vector<int> pivot_columns() const;
  std::vector<int> free_columns() const;

 private:
  int key(int col) const { return reverse_ ? width_ - 1 - col : col; }

  int width_;
  bool reverse_;
  bool reduce_;
  std::vector<SparseVec> rows_;        // each row normalized to pivot 1
  std::map<int, int> pivot_of_col_;    // key(col) -> row index
};

bool spans_same_space(RowEchelon& a, RowEchelon& b);

}  // namespace ncf
