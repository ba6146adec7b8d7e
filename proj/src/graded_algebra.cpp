#include "ncforms/graded_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncf {

std::vector<int> AlgElement::degrees() const {
  std::vector<int> out;
  for (const auto& [d, _] : coords_) out.push_back(d);
  return out;
}

Rat AlgElement::coeff(int degree, int idx) const {
  auto it = coords_.find(degree);
  if (it == coords_.end()) return Rat(0);
  auto jt = it->second.find(idx);
  return jt == it->second.end() ? Rat(0) : jt->second;
}

void AlgElement::add(int degree, int idx, const Rat& c) {
  if (c == 0) return;
  Rat& slot = coords_[degree][idx];
  slot += c;
  if (slot == 0) {
    coords_[degree].erase(idx);
    if (coords_[degree].empty()) coords_.erase(degree);
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  if (!host_) host_ = o.host_;
  for (const auto& [d, m] : o.coords_)
    for (const auto& [i, c] : m) add(d, i, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  if (!host_) host_ = o.host_;
  for (const auto& [d, m] : o.coords_)
    for (const auto& [i, c] : m) add(d, i, -c);
  return *this;
}

AlgElement& AlgElement::operator*=(const Rat& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [d, m] : coords_)
    for (auto& [i, v] : m) v *= c;
  return *this;
}

std::string AlgElement::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, m] : coords_)
    for (const auto& [i, c] : m) {
      Rat a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      std::string w = host_ ? host_->basis_word_string(d, i) : "?";
      if (w == "1") {
        os << rat_to_string(a);
      } else {
        if (a != 1) os << rat_to_string(a) << "*";
        os << w;
      }
    }
  return os.str();
}

AlgElement multiply(const AlgElement& x, const AlgElement& y) {
  if (x.host() && y.host() && x.host() != y.host())
    throw std::invalid_argument("multiply: elements from different algebras");
  const GradedAlgebra* host = x.host() ? x.host() : y.host();
  AlgElement out(host);
  if (!host) return out;
  for (const auto& [d1, m1] : x.coords())
    for (const auto& [d2, m2] : y.coords())
      for (const auto& [i1, c1] : m1)
        for (const auto& [i2, c2] : m2) {
          Word w = host->basis_words(d1)[i1];
          const Word& w2 = host->basis_words(d2)[i2];
          w.insert(w.end(), w2.begin(), w2.end());
          TensorVec v(static_cast<int>(w.size()));
          v.add(w, c1 * c2);
          out += host->normal_form(v);
        }
  return out;
}

GradedAlgebra::GradedAlgebra(CrossedModule cm, Flavor flavor, AlgSign sign,
                             bool heavy)
    : cm_(std::move(cm)), flavor_(flavor), sign_(sign) {
  int n = cm_.N();
  if (n <= 3)
    cap_ = 64;  // spaces die out on their own
  else if (n == 4)
    cap_ = 4;
  else
    cap_ = heavy ? 4 : 3;
  rel2_ = compute_rel2();
  // degree 0
  basis_.push_back({Word{}});
  basisIndex_.push_back({{Word{}, 0}});
  mult_.emplace_back();
  rewrite_.emplace_back();
}

std::vector<TensorVec> GradedAlgebra::compute_rel2() const {
  int s = factorial_sign();
  auto words = cm_.all_words(2);
  QMatrix M = cm_.materialize(words, [&](const TensorVec& v) {
    return cm_.braided_integer(2, s, v);
  });
  std::vector<TensorVec> out;
  for (const QVector& k : kernel_basis(M)) {
    TensorVec t(2);
    for (int i = 0; i < k.size(); ++i)
      if (k(i) != 0) t.add(words[i], k(i));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TensorVec> GradedAlgebra::relation_space_via_Vg() const {
  if (cm_.is_signed())
    throw std::invalid_argument("relation_space_via_Vg: unsigned braiding only");
  int C = cm_.size();
  // group ordered pairs by their product g
  std::map<Perm, std::vector<int>> byProduct;  // g -> sorted a with a^-1 g in C
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b)
      byProduct[compose(cm_.element(a), cm_.element(b))].push_back(a);
  std::vector<TensorVec> out;
  for (auto& [g, as] : byProduct) {
    std::sort(as.begin(), as.end());
    as.erase(std::unique(as.begin(), as.end()), as.end());
    std::vector<bool> seen(C, false);
    for (int start : as) {
      if (seen[start]) continue;
      // orbit of sigma(a) = a^-1 g
      TensorVec t(2);
      int a = start;
      do {
        seen[a] = true;
        Perm b = compose(cm_.element(a).inverse(), g);
        t.add({a, cm_.index_of(b)}, Rat(1));
        a = cm_.index_of(b);
      } while (a != start);
      out.push_back(std::move(t));
    }
  }
  return out;
}

void GradedAlgebra::build_degree(int n) {
  if (n > cap_) {
    Int need;
    mpz_ui_pow_ui(need.get_mpz_t(), cm_.size(), n);
    throw std::runtime_error("degree " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap_) + "; word space has " +
                             need.get_str() + " dimensions");
  }
  while (built() < n) build_next();
}

void GradedAlgebra::build_next() {
  int n = built() + 1;
  int C = cm_.size();
  if (n == 1) {
    std::vector<Word> b;
    std::map<Word, int> bi;
    std::vector<SparseVec> table(C);
    for (int a = 0; a < C; ++a) {
      b.push_back({a});
      bi[{a}] = a;
      table[a] = {{a, Rat(1)}};
    }
    basis_.push_back(std::move(b));
    basisIndex_.push_back(std::move(bi));
    mult_.push_back(table);
    rewrite_.push_back(std::move(table));
    return;
  }

  if (flavor_ == Flavor::Quadratic) {
    int dimPrev = dim(n - 1);
    int W = dimPrev * C;
    RowEchelon ech(W, /*reverse_order=*/true);
    for (int k = 0; k < dim(n - 2); ++k)
      for (const TensorVec& r : rel2_) {
        std::map<int, Rat> acc;
        for (const auto& [pair, lam] : r.terms()) {
          int a = pair[0], c = pair[1];
          for (const auto& [i, coef] : mult_[n - 1][k * C + a])
            acc[i * C + c] += lam * coef;
        }
        SparseVec v;
        for (const auto& [idx, val] : acc)
          if (val != 0) v.emplace_back(idx, val);
        ech.insert(std::move(v));
      }
    std::vector<int> free = ech.free_columns();
    std::sort(free.begin(), free.end());
    std::vector<int> posOf(W, -1);
    std::vector<Word> b;
    std::map<Word, int> bi;
    for (int f : free) {
      posOf[f] = static_cast<int>(b.size());
      Word w = basis_[n - 1][f / C];
      w.push_back(f % C);
      bi[w] = static_cast<int>(b.size());
      b.push_back(std::move(w));
    }
    std::vector<SparseVec> table(W);
    for (int idx = 0; idx < W; ++idx) {
      if (posOf[idx] >= 0) {
        table[idx] = {{posOf[idx], Rat(1)}};
        continue;
      }
      // pivot column: its fully reduced row has support {idx} + free columns
      SparseVec res = ech.reduce({{idx, Rat(1)}});
      // res = e_idx - (row), supported on free columns after reduction
      for (const auto& [col, val] : res) table[idx].emplace_back(posOf[col], val);
      std::sort(table[idx].begin(), table[idx].end());
    }
    basis_.push_back(std::move(b));
    basisIndex_.push_back(std::move(bi));
    mult_.push_back(std::move(table));
    rewrite_.emplace_back();
    return;
  }

  // Woronowicz flavor: relations are the kernel of the degree-n factorial.
  auto words = cm_.all_words(n);
  int W = static_cast<int>(words.size());
  std::map<Word, int> widx;
  for (int i = 0; i < W; ++i) widx[words[i]] = i;
  int s = factorial_sign();
  // rows of the factorial matrix, assembled column by column
  std::vector<SparseVec> rows(W);
  for (int j = 0; j < W; ++j) {
    TensorVec col = cm_.braided_factorial(n, s, TensorVec::basis(words[j]));
    for (const auto& [w, c] : col.terms()) rows[widx.at(w)].emplace_back(j, c);
  }
  RowEchelon rowSpace(W);
  for (auto& r : rows) rowSpace.insert(std::move(r));
  // kernel vectors, one per free column of the row space
  RowEchelon ech(W, /*reverse_order=*/true);
  for (int f : rowSpace.free_columns()) {
    std::map<int, Rat> k;
    k[f] = Rat(1);
    for (const auto& [pcol, rowIdx] : rowSpace.pivots()) {
      for (const auto& [c, v] : rowSpace.rows()[rowIdx])
        if (c == f) k[pcol] = -v;
    }
    SparseVec v;
    for (const auto& [idx, val] : k)
      if (val != 0) v.emplace_back(idx, val);
    ech.insert(std::move(v));
  }
  std::vector<int> free = ech.free_columns();
  std::sort(free.begin(), free.end());
  std::vector<int> posOf(W, -1);
  std::vector<Word> b;
  std::map<Word, int> bi;
  for (int f : free) {
    posOf[f] = static_cast<int>(b.size());
    bi[words[f]] = static_cast<int>(b.size());
    b.push_back(words[f]);
  }
  std::vector<SparseVec> table(W);
  for (int idx = 0; idx < W; ++idx) {
    if (posOf[idx] >= 0) {
      table[idx] = {{posOf[idx], Rat(1)}};
      continue;
    }
    SparseVec res = ech.reduce({{idx, Rat(1)}});
    for (const auto& [col, val] : res) table[idx].emplace_back(posOf[col], val);
    std::sort(table[idx].begin(), table[idx].end());
  }
  basis_.push_back(std::move(b));
  basisIndex_.push_back(std::move(bi));
  mult_.emplace_back();
  rewrite_.push_back(std::move(table));
}

int GradedAlgebra::dim(int n) const {
  if (n < 0) return 0;
  if (n > built()) throw std::logic_error("degree not built");
  return static_cast<int>(basis_[n].size());
}

const std::vector<Word>& GradedAlgebra::basis_words(int n) const {
  if (n < 0 || n > built()) throw std::logic_error("degree not built");
  return basis_[n];
}

Int GradedAlgebra::relation_ideal_dim(int n) const {
  Int total;
  mpz_ui_pow_ui(total.get_mpz_t(), cm_.size(), n);
  return total - dim(n);
}

SparseVec GradedAlgebra::nf_word(const Word& w) const {
  int n = static_cast<int>(w.size());
  if (n > built()) throw std::logic_error("degree not built");
  int C = cm_.size();
  if (flavor_ == Flavor::Woronowicz && n >= 1) {
    int idx = 0;
    for (int a : w) idx = idx * C + a;
    return rewrite_[n][idx];
  }
  SparseVec cur = {{0, Rat(1)}};  // degree 0
  for (int k = 0; k < n; ++k) {
    std::map<int, Rat> next;
    for (const auto& [i, c] : cur)
      for (const auto& [j, v] : mult_[k + 1][i * C + w[k]]) next[j] += c * v;
    cur.clear();
    for (const auto& [j, v] : next)
      if (v != 0) cur.emplace_back(j, v);
  }
  return cur;
}

AlgElement GradedAlgebra::normal_form(const TensorVec& v) const {
  AlgElement out(this);
  for (const auto& [w, c] : v.terms())
    for (const auto& [j, coef] : nf_word(w))
      out.add(static_cast<int>(w.size()), j, c * coef);
  return out;
}

AlgElement GradedAlgebra::element(int degree, int basisIdx) const {
  AlgElement out(this);
  out.add(degree, basisIdx, Rat(1));
  return out;
}

AlgElement GradedAlgebra::one() const { return element(0, 0); }

AlgElement GradedAlgebra::generator(int a) const { return element(1, a); }

AlgElement GradedAlgebra::theta() const {
  AlgElement out(this);
  for (int a = 0; a < cm_.size(); ++a) out.add(1, a, Rat(1));
  return out;
}

AlgElement GradedAlgebra::theta_i(int i) const {
  if (cm_.type() != CycleType::parse("2", cm_.N()))
    throw std::invalid_argument("theta_i: 2-cycle class only");
  AlgElement out(this);
  for (int j = 1; j <= cm_.N(); ++j) {
    if (j == i) continue;
    int a = cm_.index_of(Perm::from_cycles(cm_.N(), {{std::min(i, j), std::max(i, j)}}));
    int s = (sign_ == AlgSign::FominKirillov && j < i) ? -1 : 1;
    out.add(1, a, Rat(s));
  }
  return out;
}

GradedAlgebra::HilbertResult GradedAlgebra::hilbert_series(int maxDegree) {
  HilbertResult res;
  if (maxDegree < 0) {
    if (cm_.N() > 3)
      throw std::invalid_argument("open-ended Hilbert series only for N <= 3");
    int n = 0;
    while (true) {
      build_degree(n);
      if (n > 0 && dim(n) == 0) break;
      ++n;
    }
    maxDegree = n - 1;
  } else {
    build_degree(maxDegree);
  }
  for (int k = 0; k <= maxDegree; ++k) res.dims.push_back(dim(k));
  bool twoCycles =
      cm_.type() == CycleType::parse("2", cm_.N());
  if (twoCycles) {
    static const std::map<int, std::vector<int>> kProducts = {
        {2, {2}},
        {3, {2, 2, 3}},
        {4, {2, 2, 3, 3, 4, 4}},
        {5, {4, 4, 4, 4, 5, 5, 6, 6, 6, 6}}};
    auto it = kProducts.find(cm_.N());
    if (it != kProducts.end()) {
      std::vector<Int> cf = q_integer_product(it->second);
      cf.resize(maxDegree + 1, Int(0));
      res.closed_form = std::move(cf);
    }
  }
  return res;
}

std::string GradedAlgebra::word_string(const Word& w) const {
  if (w.empty()) return "1";
  bool twoCycles =
      cm_.type() == CycleType::parse("2", cm_.N()) &&
      cm_.N() <= 9;
  std::ostringstream os;
  bool first = true;
  for (int a : w) {
    const Perm& p = cm_.element(a);
    if (twoCycles) {
      auto cyc = p.cycles();
      os << "[" << cyc[0][0] << cyc[0][1] << "]";
    } else {
      if (!first) os << "*";
      os << p.cycle_string();
    }
    first = false;
  }
  return os.str();
}

std::string GradedAlgebra::basis_word_string(int degree, int idx) const {
  return word_string(basis_[degree][idx]);
}

std::vector<Int> q_integer_product(const std::vector<int>& ns) {
  std::vector<Int> poly = {Int(1)};
  for (int n : ns) {
    std::vector<Int> next(poly.size() + n - 1, Int(0));
    for (size_t i = 0; i < poly.size(); ++i)
      for (int k = 0; k < n; ++k) next[i + k] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace ncf
