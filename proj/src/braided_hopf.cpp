#include "ncforms/braided_hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncf {
namespace {

// [n, Psi^-1] = id + Psi_1^-1 + Psi_1^-1 Psi_2^-1 + ..., with the same
// inside-out composition order as the forward braided integer.
TensorVec inverse_braided_integer(const CrossedModule& cm, int n,
                                  const TensorVec& v) {
  TensorVec total = v;
  for (int i = 1; i <= n - 1; ++i) {
    TensorVec term = v;
    for (int j = i; j >= 1; --j) term = cm.apply_braiding(j, term, true);
    total += term;
  }
  return total;
}

// Gauss-Jordan inverse; nullopt when singular.
std::optional<QMatrix> invert(const QMatrix& M) {
  const int n = static_cast<int>(M.rows());
  QMatrix A = M, I = QMatrix::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (A(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    A.row(col).swap(A.row(piv));
    I.row(col).swap(I.row(piv));
    Rat inv = Rat(1) / A(col, col);
    for (int c = 0; c < n; ++c) {
      A(col, c) *= inv;
      I(col, c) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || A(r, col) == 0) continue;
      Rat f = A(r, col);
      for (int c = 0; c < n; ++c) {
        A(r, c) -= f * A(col, c);
        I(r, c) -= f * I(col, c);
      }
    }
  }
  return I;
}

}  // namespace

Rat TensorPowerElement::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void TensorPowerElement::add(const Key& k, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(k.size()) != arity_)
    throw std::invalid_argument("tensor term arity mismatch");
  Rat& slot = terms_[k];
  slot += c;
  if (slot == 0) terms_.erase(k);
}

TensorPowerElement& TensorPowerElement::operator+=(const TensorPowerElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorPowerElement& TensorPowerElement::operator-=(const TensorPowerElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorPowerElement& TensorPowerElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

AlgElement BraidedGroup::act(const Perm& g, const AlgElement& f) const {
  AlgElement out(alg_);
  for (const auto& [deg, row] : f.coords())
    for (const auto& [idx, c] : row) {
      auto [sign, w] = cm().act(g, alg_->basis_words(deg)[idx]);
      AlgElement nf = alg_->normal_form(TensorVec::basis(w));
      nf *= c * sign;
      out += nf;
    }
  return out;
}

AlgElement BraidedGroup::degree_action(const AlgElement& f) const {
  AlgElement out(alg_);
  for (const auto& [deg, row] : f.coords())
    for (const auto& [idx, c] : row) {
      const Word& w = alg_->basis_words(deg)[idx];
      AlgElement part(alg_);
      part.add(deg, idx, c);
      out += act(cm().word_degree(w), part);
    }
  return out;
}

TensorPowerElement BraidedGroup::tensor_unit(int arity) const {
  TensorPowerElement out(arity);
  out.add(TensorPowerElement::Key(arity, {0, 0}), 1);
  return out;
}

TensorPowerElement BraidedGroup::embed(const AlgElement& x, int arity,
                                       int slot) const {
  TensorPowerElement out(arity);
  for (const auto& [deg, row] : x.coords())
    for (const auto& [idx, c] : row) {
      TensorPowerElement::Key k(arity, {0, 0});
      k[slot] = {deg, idx};
      out.add(k, c);
    }
  return out;
}

TensorPowerElement BraidedGroup::tensor_multiply(
    const TensorPowerElement& x, const TensorPowerElement& y) const {
  if (x.arity() != y.arity())
    throw std::invalid_argument("tensor product arity mismatch");
  const int k = x.arity();
  TensorPowerElement out(k);
  for (const auto& [xs, cx] : x.terms()) {
    // Group degree of the slots to the right of slot i, acting on the
    // factor of y crossing leftwards through them.
    std::vector<Perm> rightDeg(k + 1, Perm::identity(cm().N()));
    for (int i = k - 1; i >= 0; --i) {
      const Word& w = alg_->basis_words(xs[i].first)[xs[i].second];
      rightDeg[i] = compose(cm().word_degree(w), rightDeg[i + 1]);
    }
    for (const auto& [ys, cy] : y.terms()) {
      std::vector<AlgElement> z(k);
      bool dead = false;
      for (int i = 0; i < k && !dead; ++i) {
        AlgElement yi(alg_);
        yi.add(ys[i].first, ys[i].second, 1);
        AlgElement moved = act(rightDeg[i + 1], yi);
        z[i] = multiply(alg_->element(xs[i].first, xs[i].second), moved);
        dead = z[i].is_zero();
      }
      if (dead) continue;
      // Distribute over the slot expansions.
      std::vector<std::vector<std::pair<TensorPowerElement::Slot, Rat>>> flat(k);
      for (int i = 0; i < k; ++i)
        for (const auto& [deg, row] : z[i].coords())
          for (const auto& [idx, c] : row)
            flat[i].push_back({{deg, idx}, c});
      std::vector<int> pick(k, 0);
      while (true) {
        TensorPowerElement::Key key(k);
        Rat c = cx * cy;
        for (int i = 0; i < k; ++i) {
          key[i] = flat[i][pick[i]].first;
          c *= flat[i][pick[i]].second;
        }
        out.add(key, c);
        int pos = k - 1;
        while (pos >= 0 && pick[pos] + 1 == static_cast<int>(flat[pos].size()))
          pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
      }
    }
  }
  return out;
}

TensorPowerElement BraidedGroup::coproduct(const AlgElement& x) const {
  TensorPowerElement out(2);
  for (const auto& [deg, row] : x.coords())
    for (const auto& [idx, c] : row) {
      TensorPowerElement acc = tensor_unit(2);
      for (int a : alg_->basis_words(deg)[idx]) {
        AlgElement g = alg_->generator(a);
        TensorPowerElement split = embed(g, 2, 0);
        split += embed(g, 2, 1);
        acc = tensor_multiply(acc, split);
      }
      acc *= c;
      out += acc;
    }
  return out;
}

TensorPowerElement BraidedGroup::coproduct_at(const TensorPowerElement& x,
                                              int slot) const {
  TensorPowerElement out(x.arity() + 1);
  for (const auto& [key, c] : x.terms()) {
    AlgElement part(alg_);
    part.add(key[slot].first, key[slot].second, 1);
    TensorPowerElement inner = coproduct(part);
    for (const auto& [ik, ic] : inner.terms()) {
      TensorPowerElement::Key nk;
      nk.reserve(key.size() + 1);
      for (int i = 0; i < slot; ++i) nk.push_back(key[i]);
      nk.push_back(ik[0]);
      nk.push_back(ik[1]);
      for (int i = slot + 1; i < static_cast<int>(key.size()); ++i)
        nk.push_back(key[i]);
      out.add(nk, c * ic);
    }
  }
  return out;
}

AlgElement BraidedGroup::tensor_collapse(const TensorPowerElement& x) const {
  AlgElement out(alg_);
  for (const auto& [key, c] : x.terms()) {
    AlgElement prod = alg_->one();
    for (const auto& [deg, idx] : key)
      prod = multiply(prod, alg_->element(deg, idx));
    prod *= c;
    out += prod;
  }
  return out;
}

AlgElement BraidedGroup::braided_derivative(int a, const AlgElement& x,
                                            bool conjugated) const {
  AlgElement out(alg_);
  for (const auto& [deg, row] : x.coords()) {
    if (deg == 0) continue;
    for (const auto& [idx, c] : row) {
      TensorVec v = TensorVec::basis(alg_->basis_words(deg)[idx]);
      TensorVec expanded = conjugated
                               ? inverse_braided_integer(cm(), deg, v)
                               : cm().braided_integer(deg, 1, v);
      for (const auto& [w, q] : expanded.terms()) {
        if (w[0] != a) continue;
        Word tail(w.begin() + 1, w.end());
        AlgElement nf = alg_->normal_form(TensorVec::basis(tail));
        nf *= c * q;
        out += nf;
      }
    }
  }
  return out;
}

AlgElement BraidedGroup::antipode(const AlgElement& x) const {
  // S on a word, by the recursion S(e_a f) = -(a.S f) e_a.
  std::function<AlgElement(const Word&)> sWord = [&](const Word& w) {
    if (w.empty()) return alg_->one();
    Word rest(w.begin() + 1, w.end());
    AlgElement s = act(cm().element(w[0]), sWord(rest));
    s *= Rat(-1);
    return multiply(s, alg_->generator(w[0]));
  };
  AlgElement out(alg_);
  for (const auto& [deg, row] : x.coords())
    for (const auto& [idx, c] : row) {
      AlgElement s = sWord(alg_->basis_words(deg)[idx]);
      s *= c;
      out += s;
    }
  return out;
}

bool BraidedGroup::convolution_identity(const AlgElement& x) const {
  TensorPowerElement delta = coproduct(x);
  AlgElement lhs(alg_);
  for (const auto& [key, c] : delta.terms()) {
    AlgElement left(alg_);
    left.add(key[0].first, key[0].second, 1);
    AlgElement term =
        multiply(antipode(left), alg_->element(key[1].first, key[1].second));
    term *= c;
    lhs += term;
  }
  AlgElement rhs = alg_->one();
  rhs *= counit(x);
  return lhs == rhs;
}

AlgElement BraidedGroup::adjoint_action(int a, const AlgElement& f) const {
  AlgElement left = multiply(alg_->generator(a), f);
  AlgElement right = multiply(act(cm().element(a), f), alg_->generator(a));
  return left - right;
}

const QMatrix& BraidedGroup::gram(int degree) const {
  auto it = gram_.find(degree);
  if (it != gram_.end()) return it->second;
  const auto& words = alg_->basis_words(degree);
  const int d = static_cast<int>(words.size());
  QMatrix G(d, d);
  for (int j = 0; j < d; ++j) {
    TensorVec col = degree == 0
                        ? TensorVec::basis(Word{})
                        : cm().braided_factorial(degree, alg_->factorial_sign(),
                                                 TensorVec::basis(words[j]));
    for (int i = 0; i < d; ++i) {
      Word rev(words[i].rbegin(), words[i].rend());
      G(i, j) = col.coeff(rev);
    }
  }
  return gram_.emplace(degree, std::move(G)).first->second;
}

Rat BraidedGroup::pairing(const AlgElement& x, const AlgElement& y) const {
  Rat out = 0;
  for (const auto& [deg, xrow] : x.coords()) {
    const auto& yc = y.coords();
    auto yit = yc.find(deg);
    if (yit == yc.end()) continue;
    const QMatrix& G = gram(deg);
    for (const auto& [i, cx] : xrow)
      for (const auto& [j, cy] : yit->second) out += cx * cy * G(i, j);
  }
  return out;
}

FourierE3::FourierE3(BraidedGroup* bg) : bg_(bg) {
  GradedAlgebra& alg = bg->algebra();
  if (alg.cm().N() != 3 || !alg.cm().is_signed() ||
      alg.alg_sign() != AlgSign::FominKirillov)
    throw std::invalid_argument("Fourier transform needs the signed S_3 algebra");
  alg.build_degree(4);
  const int dims[5] = {1, 3, 4, 3, 1};
  for (int d = 0; d <= 4; ++d)
    if (alg.dim(d) != dims[d])
      throw std::logic_error("unexpected graded dimensions");

  const CrossedModule& cm = alg.cm();
  auto idx = [&](int i, int j) {
    return cm.index_of(Perm::from_cycles(3, {{i, j}}));
  };
  // [12][23][12][31], with [31] = -e_(13).
  Word w{idx(1, 2), idx(2, 3), idx(1, 2), idx(1, 3)};
  top_ = alg.normal_form(TensorVec::basis(w));
  top_ *= Rat(-1);
  topCoeff_ = top_.coeff(4, 0);
  if (topCoeff_ == 0) throw std::logic_error("top monomial vanishes");

  dual_.resize(5);
  for (int d = 0; d <= 4; ++d) {
    auto inv = invert(bg_->gram(d));
    if (!inv) throw std::logic_error("degenerate pairing in degree " +
                                     std::to_string(d));
    dual_[d].resize(alg.dim(d));
    for (int A = 0; A < alg.dim(d); ++A) {
      AlgElement f(&alg);
      for (int B = 0; B < alg.dim(d); ++B) f.add(d, B, (*inv)(A, B));
      dual_[d][A] = f;
    }
  }
}

Rat FourierE3::integral(const AlgElement& f) const {
  return f.coeff(4, 0) / topCoeff_;
}

const std::vector<AlgElement>& FourierE3::dual_basis(int degree) const {
  return dual_.at(degree);
}

TensorPowerElement FourierE3::exp_element() const {
  TensorPowerElement out(2);
  for (int d = 0; d <= 4; ++d)
    for (int A = 0; A < bg_->algebra().dim(d); ++A)
      for (const auto& [deg, row] : dual_[d][A].coords())
        for (const auto& [B, c] : row) out.add({{d, A}, {deg, B}}, c);
  return out;
}

AlgElement FourierE3::transform(const AlgElement& f) const {
  GradedAlgebra& alg = bg_->algebra();
  AlgElement out(&alg);
  // Only the complementary degree of each homogeneous piece of f can reach
  // the top form under the integral.
  for (const auto& [fd, row] : f.coords()) {
    AlgElement comp(&alg);
    for (const auto& [idx, c] : row) comp.add(fd, idx, c);
    const int d = 4 - fd;
    for (int A = 0; A < alg.dim(d); ++A) {
      Rat c = integral(multiply(comp, alg.element(d, A)));
      if (c == 0) continue;
      AlgElement term = dual_[d][A];
      term *= c;
      out += term;
    }
  }
  return out;
}

DividedDifferenceReport divided_difference_check(
    BraidedGroup& bg, const std::vector<ThetaPoly>& samples) {
  GradedAlgebra& alg = bg.algebra();
  const CrossedModule& cm = alg.cm();
  const int N = cm.N();
  auto image = [&](const ThetaPoly& p) {
    AlgElement out(&alg);
    for (const auto& [e, c] : p.terms()) {
      AlgElement prod = alg.one();
      for (int i = 1; i <= N; ++i)
        for (int k = 0; k < e[i - 1]; ++k) prod = multiply(prod, alg.theta_i(i));
      prod *= c;
      out += prod;
    }
    return out;
  };
  DividedDifferenceReport rep;
  rep.ok = true;
  for (const ThetaPoly& p : samples) {
    if (p.nvars() != N)
      throw std::invalid_argument("sample polynomial in the wrong variables");
    ++rep.polynomials;
    int deg = 0;
    for (const auto& [e, c] : p.terms()) {
      int d = 0;
      for (int x : e) d += x;
      deg = std::max(deg, d);
    }
    alg.build_degree(deg);
    AlgElement img = image(p);
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        int a = cm.index_of(Perm::from_cycles(N, {{i, j}}));
        AlgElement lhs = bg.braided_derivative(a, img, true);
        AlgElement rhs = image(p.divided_difference(i, j));
        ++rep.pairs_checked;
        if (!(lhs == rhs)) rep.ok = false;
      }
  }
  return rep;
}

}  // namespace ncf
