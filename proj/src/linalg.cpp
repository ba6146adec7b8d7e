#include "ncforms/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncf {

SparseVec to_sparse(const QVector& v) {
  SparseVec out;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

QVector to_dense(const SparseVec& v, int dim) {
  QVector out = QVector::Zero(dim);
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

namespace {

// Dense reduced row echelon form, leftmost pivots, first nonzero row chosen.
// Returns pivot columns.
std::vector<int> rref(QMatrix& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < M.rows(); ++i)
      if (M(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) M.row(pr).swap(M.row(r));
    Rat inv = M(r, c);
    for (int j = c; j < M.cols(); ++j) M(r, j) /= inv;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rat f = M(i, c);
      for (int j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<QVector> kernel_basis(const QMatrix& M) {
  QMatrix A = M;
  std::vector<int> pivots = rref(A);
  std::vector<bool> is_pivot(M.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (int c = 0; c < M.cols(); ++c) {
    if (is_pivot[c]) continue;
    QVector v = QVector::Zero(M.cols());
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const QMatrix& M) {
  QMatrix A = M;
  return static_cast<int>(rref(A).size());
}

Rat determinant(const QMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: non-square");
  const int n = static_cast<int>(M.rows());
  if (n == 0) return 1;

  // Clear denominators row by row, then run fraction-free Bareiss.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rat scale = 1;
  for (int i = 0; i < n; ++i) {
    Int lcm = 1;
    for (int j = 0; j < n; ++j) {
      Int den = M(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    scale /= Rat(lcm);
    for (int j = 0; j < n; ++j) {
      Rat r = M(i, j) * Rat(lcm);
      a[i][j] = r.get_num();
    }
  }

  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { sw = i; break; }
      if (sw < 0) return 0;
      std::swap(a[k], a[sw]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return scale * Rat(sign * a[n - 1][n - 1]);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("det_mod_p: noninvertible residue");
  return powmod(a, p - 2, p);
}

std::uint64_t rat_mod_p(const Rat& r, std::uint64_t p) {
  Int num = r.get_num(), den = r.get_den();
  Int pm(static_cast<unsigned long>(p));
  Int nm = num % pm;
  if (nm < 0) nm += pm;
  Int dm = den % pm;
  std::uint64_t n = nm.get_ui();
  std::uint64_t d = dm.get_ui();
  return mulmod(n, invmod(d, p), p);
}

}  // namespace

std::uint64_t det_mod_p(const QMatrix& M, std::uint64_t p) {
  if (M.rows() != M.cols()) throw std::invalid_argument("det_mod_p: non-square");
  const int n = static_cast<int>(M.rows());
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = rat_mod_p(M(i, j), p);

  std::uint64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) { pr = i; break; }
    if (pr < 0) return 0;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      det = p - det;
    }
    det = mulmod(det, a[k][k], p);
    std::uint64_t inv = invmod(a[k][k], p);
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      std::uint64_t f = mulmod(a[i][k], inv, p);
      for (int j = k; j < n; ++j) {
        std::uint64_t t = mulmod(f, a[k][j], p);
        a[i][j] = (a[i][j] >= t) ? a[i][j] - t : a[i][j] + p - t;
      }
    }
  }
  return det % p;
}

std::optional<QVector> coordinates_in_span(const std::vector<QVector>& vectors,
                                           const QVector& target) {
  if (vectors.empty())
    return target.isZero(0) ? std::optional<QVector>(QVector(0)) : std::nullopt;
  const int dim = static_cast<int>(vectors[0].size());
  const int k = static_cast<int>(vectors.size());
  QMatrix A(dim, k + 1);
  for (int j = 0; j < k; ++j) A.col(j) = vectors[j];
  A.col(k) = target;
  std::vector<int> pivots = rref(A);
  // Solvable iff the last column is not a pivot.
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  QVector coeff = QVector::Zero(k);
  for (size_t r = 0; r < pivots.size(); ++r) coeff[pivots[r]] = A(r, k);
  return coeff;
}

bool RowEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;

  // Normalize on the pivot (first entry in elimination order).
  auto best = v.begin();
  for (auto it = v.begin(); it != v.end(); ++it)
    if (key(it->first) < key(best->first)) best = it;
  Rat inv = best->second;
  int pcol = best->first;
  for (auto& [i, c] : v) c /= inv;

  if (reduce_) {
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (auto& row : rows_) {
      Rat f = 0;
      for (const auto& [i, c] : row)
        if (i == pcol) { f = c; break; }
      if (f == 0) continue;
      SparseVec out;
      out.reserve(row.size() + v.size());
      auto a = row.begin();
      auto b = v.begin();
      while (a != row.end() || b != v.end()) {
        if (b == v.end() || (a != row.end() && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          Rat c = -f * b->second;
          if (c != 0) out.emplace_back(b->first, std::move(c));
          ++b;
        } else {
          Rat c = a->second - f * b->second;
          if (c != 0) out.emplace_back(a->first, std::move(c));
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }
  pivot_of_col_[key(pcol)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

SparseVec RowEchelon::reduce(SparseVec v) const {
  // Repeatedly eliminate the entry with the smallest key that is a pivot.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [i, c] : v) {
      auto it = pivot_of_col_.find(key(i));
      if (it == pivot_of_col_.end()) continue;
      const SparseVec& row = rows_[it->second];
      Rat f = c;
      SparseVec out;
      out.reserve(v.size() + row.size());
      auto a = v.begin();
      auto b = row.begin();
      while (a != v.end() || b != row.end()) {
        if (b == row.end() || (a != v.end() && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == v.end() || b->first < a->first) {
          Rat t = -f * b->second;
          if (t != 0) out.emplace_back(b->first, std::move(t));
          ++b;
        } else {
          Rat t = a->second - f * b->second;
          if (t != 0) out.emplace_back(a->first, std::move(t));
          ++a;
          ++b;
        }
      }
      v = std::move(out);
      changed = true;
      break;
    }
  }
  return v;
}

std::vector<int> RowEchelon::pivot_columns() const {
  std::vector<int> cols;
  cols.reserve(pivot_of_col_.size());
  for (const auto& [k, _] : pivot_of_col_) cols.push_back(reverse_ ? width_ - 1 - k : k);
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<int> RowEchelon::free_columns() const {
  std::vector<int> piv = pivot_columns();
  std::vector<bool> is_piv(width_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free;
  for (int c = 0; c < width_; ++c)
    if (!is_piv[c]) free.push_back(c);
  return free;
}

bool spans_same_space(RowEchelon& a, RowEchelon& b) {
  if (a.rank() != b.rank()) return false;
  for (const auto& row : a.rows())
    if (!b.in_span(row)) return false;
  return true;
}

}  // namespace ncf
