#include "ncforms/crossed_module.hpp"

#include <stdexcept>

namespace ncf {

TensorVec TensorVec::basis(const Word& w) {
  TensorVec v(static_cast<int>(w.size()));
  v.terms_[w] = 1;
  return v;
}

Rat TensorVec::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void TensorVec::add(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

TensorVec& TensorVec::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

CrossedModule CrossedModule::build(int N, const CycleType& t, bool signed_mode) {
  CycleType two{std::vector<int>(N - 1, 1)};
  two.parts[0] = 2;
  std::sort(two.parts.rbegin(), two.parts.rend());
  if (signed_mode && !(t == two))
    throw std::invalid_argument(
        "CrossedModule: signed mode is defined only for the 2-cycle class");

  CrossedModule cm;
  cm.n_ = N;
  cm.signed_ = signed_mode;
  cm.type_ = t;
  cm.class_ = conjugacy_class(N, t);
  for (size_t i = 0; i < cm.class_.size(); ++i)
    cm.index_[cm.class_[i]] = static_cast<int>(i);

  int m = cm.size();
  cm.ad_.assign(m, std::vector<int>(m));
  cm.zetaClass_.assign(m, std::vector<int>(m));
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < m; ++a) {
      cm.ad_[g][a] = cm.index_.at(conjugate(cm.class_[g], cm.class_[a]));
      cm.zetaClass_[g][a] = cm.zeta(cm.class_[g], a);
    }
  return cm;
}

int CrossedModule::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("index_of: not in class");
  return it->second;
}

int CrossedModule::ad(const Perm& g, int a) const {
  return index_.at(conjugate(g, class_[a]));
}

int CrossedModule::zeta(const Perm& g, int b) const {
  if (!signed_) return 1;
  // b is a transposition (i j) with i < j; the sign tracks whether g keeps
  // the pair ordered: g.[ij] = [g(i) g(j)] = -[g(j) g(i)] when g(i) > g(j).
  auto cycs = class_[b].cycles();
  int i = cycs[0][0], j = cycs[0][1];
  if (i > j) std::swap(i, j);
  return g.apply(i) < g.apply(j) ? 1 : -1;
}

std::pair<int, Word> CrossedModule::act(const Perm& g, const Word& w) const {
  int sign = 1;
  Word out(w.size());
  for (size_t k = 0; k < w.size(); ++k) {
    sign *= zeta(g, w[k]);
    out[k] = ad(g, w[k]);
  }
  return {sign, out};
}

std::pair<int, std::pair<int, int>> CrossedModule::braid_pair(int a, int b) const {
  return {zetaClass_[a][b], {ad_[a][b], a}};
}

std::pair<int, std::pair<int, int>> CrossedModule::braid_pair_inverse(int c, int a) const {
  // Inverse of Psi(e_a (x) e_b) = zeta_{a,b} (e_{aba^-1} (x) e_a):
  // recover b = a^-1 c a and divide by the sign.
  int b = index_.at(conjugate(class_[a].inverse(), class_[c]));
  return {zetaClass_[a][b], {a, b}};
}

TensorVec CrossedModule::apply_braiding(int i, const TensorVec& v, bool inverse) const {
  int n = v.degree();
  if (i < 1 || i > n - 1)
    throw std::out_of_range("apply_braiding: position out of range");
  TensorVec out(n);
  for (const auto& [w, c] : v.terms()) {
    Word u = w;
    int sign;
    if (!inverse) {
      auto [s, pair] = braid_pair(w[i - 1], w[i]);
      sign = s;
      u[i - 1] = pair.first;
      u[i] = pair.second;
    } else {
      auto [s, pair] = braid_pair_inverse(w[i - 1], w[i]);
      sign = s;
      u[i - 1] = pair.first;
      u[i] = pair.second;
    }
    out.add(u, sign == 1 ? c : -c);
  }
  return out;
}

Perm CrossedModule::word_degree(const Word& w) const {
  Perm g = Perm::identity(n_);
  for (int a : w) g = compose(g, class_[a]);
  return g;
}

TensorVec CrossedModule::braided_integer(int n, int sign, const TensorVec& v) const {
  // id + s Psi_1 + s^2 Psi_1 Psi_2 + ... ; each term applies Psi_i first,
  // then Psi_{i-1}, ..., then Psi_1.
  TensorVec total = v;
  Rat s(sign);
  Rat factor = s;
  for (int i = 1; i <= n - 1; ++i) {
    TensorVec term = v;
    for (int j = i; j >= 1; --j) term = apply_braiding(j, term);
    term *= factor;
    total += term;
    factor *= s;
  }
  return total;
}

TensorVec CrossedModule::braided_factorial(int n, int sign, const TensorVec& v) const {
  if (n <= 1) return v;
  TensorVec t = braided_integer(n, sign, v);
  // (id (x) [n-1; sPsi]!) acts on positions 2..n; shift by recursing on the
  // subword operators, implemented via braidings at positions 2..n-1.
  return factorial_tail(n, sign, t, 2);
}

// Applies [k; sPsi]! on positions offset..n where k = n-offset+1, using the
// recursion [k]! = (id (x) [k-1]!) [k] with braidings shifted by offset-1.
TensorVec CrossedModule::factorial_tail(int n, int sign, const TensorVec& v,
                                        int offset) const {
  int k = n - offset + 1;
  if (k <= 1) return v;
  // [k; sPsi] with positions shifted
  TensorVec total = v;
  Rat s(sign);
  Rat factor = s;
  for (int i = offset; i <= n - 1; ++i) {
    TensorVec term = v;
    for (int j = i; j >= offset; --j) term = apply_braiding(j, term);
    term *= factor;
    total += term;
    factor *= s;
  }
  return factorial_tail(n, sign, total, offset + 1);
}

std::vector<Word> CrossedModule::all_words(int n) const {
  std::vector<Word> out;
  Word w(n, 0);
  int m = size();
  while (true) {
    out.push_back(w);
    int k = n - 1;
    while (k >= 0 && w[k] == m - 1) {
      w[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

QMatrix CrossedModule::materialize(
    const std::vector<Word>& words,
    const std::function<TensorVec(const TensorVec&)>& op) const {
  std::map<Word, int> idx;
  for (size_t i = 0; i < words.size(); ++i) idx[words[i]] = static_cast<int>(i);
  QMatrix M = QMatrix::Zero(words.size(), words.size());
  for (size_t j = 0; j < words.size(); ++j) {
    TensorVec col = op(TensorVec::basis(words[j]));
    for (const auto& [w, c] : col.terms()) M(idx.at(w), j) = c;
  }
  return M;
}

}  // namespace ncf
