#include "ncforms/derham.hpp"

#include <stdexcept>

namespace ncf {

Rat OmegaElement::coeff(int g, int idx) const {
  auto it = coords_.find({g, idx});
  return it == coords_.end() ? Rat(0) : it->second;
}

void OmegaElement::add(int g, int idx, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(g, idx);
  Rat& slot = coords_[key];
  slot += c;
  if (slot == 0) coords_.erase(key);
}

OmegaElement& OmegaElement::operator+=(const OmegaElement& o) {
  for (const auto& [k, c] : o.coords_) add(k.first, k.second, c);
  return *this;
}

OmegaElement& OmegaElement::operator-=(const OmegaElement& o) {
  for (const auto& [k, c] : o.coords_) add(k.first, k.second, -c);
  return *this;
}

OmegaElement& OmegaElement::operator*=(const Rat& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [k, v] : coords_) v *= c;
  return *this;
}

DeRham::DeRham(GradedAlgebra* alg, bool heavy) : alg_(alg), heavy_(heavy) {
  int N = alg_->cm().N();
  group_ = all_perms(N);
  for (int i = 0; i < static_cast<int>(group_.size()); ++i)
    groupIndex_[group_[i]] = i;
  int C = alg_->cm().size();
  rightMul_.assign(C, std::vector<int>(group_.size()));
  for (int a = 0; a < C; ++a)
    for (size_t g = 0; g < group_.size(); ++g)
      rightMul_[a][g] = groupIndex_.at(compose(group_[g], alg_->cm().element(a)));
}

int DeRham::group_index(const Perm& p) const { return groupIndex_.at(p); }

OmegaElement DeRham::delta(int g, int degree, int basisIdx) const {
  OmegaElement w(degree);
  w.add(g, basisIdx, Rat(1));
  return w;
}

OmegaElement DeRham::function_form(const QVector& f) const {
  OmegaElement w(0);
  for (int g = 0; g < f.size(); ++g) w.add(g, 0, f(g));
  return w;
}

OmegaElement DeRham::invariant(const AlgElement& lambda) const {
  auto degs = lambda.degrees();
  if (degs.size() > 1)
    throw std::invalid_argument("invariant: mixed-degree element");
  int n = degs.empty() ? 0 : degs[0];
  OmegaElement w(n);
  if (degs.empty()) return w;
  for (const auto& [i, c] : lambda.coords().at(n))
    for (size_t g = 0; g < group_.size(); ++g)
      w.add(static_cast<int>(g), i, c);
  return w;
}

OmegaElement DeRham::theta_form() const { return invariant(alg_->theta()); }

OmegaElement DeRham::d(const OmegaElement& w) {
  int n = w.degree();
  alg_->build_degree(n + 1);
  int C = alg_->cm().size();
  OmegaElement out(n + 1);
  for (const auto& [key, c] : w.coords()) {
    auto [g, i] = key;
    const Word& word = alg_->basis_words(n)[i];
    // (d delta_g) lambda = sum_a (delta_{g a^-1} - delta_g) e_a lambda
    for (int a = 0; a < C; ++a) {
      Word ext;
      ext.reserve(word.size() + 1);
      ext.push_back(a);
      ext.insert(ext.end(), word.begin(), word.end());
      TensorVec t(n + 1);
      t.add(ext, Rat(1));
      AlgElement nf = alg_->normal_form(t);
      if (nf.is_zero()) continue;
      int ga = groupIndex_.at(
          compose(group_[g], alg_->cm().element(a).inverse()));
      for (const auto& [j, v] : nf.coords().at(n + 1)) {
        out.add(ga, j, c * v);
        out.add(g, j, -c * v);
      }
    }
    // delta_g (theta lambda - (-1)^n lambda theta)
    AlgElement lam = alg_->element(n, i);
    AlgElement comm = ncf::multiply(alg_->theta(), lam);
    AlgElement right = ncf::multiply(lam, alg_->theta());
    if (n % 2 == 0)
      comm -= right;
    else
      comm += right;
    if (!comm.is_zero())
      for (const auto& [j, v] : comm.coords().at(n + 1)) out.add(g, j, c * v);
  }
  return out;
}

OmegaElement DeRham::multiply(const OmegaElement& x, const OmegaElement& y) {
  int n = x.degree() + y.degree();
  alg_->build_degree(n);
  OmegaElement out(n);
  for (const auto& [kx, cx] : x.coords()) {
    auto [g, i] = kx;
    const Word& wi = alg_->basis_words(x.degree())[i];
    Perm deg = alg_->cm().word_degree(wi);
    int h = groupIndex_.at(compose(group_[g], deg));
    for (const auto& [ky, cy] : y.coords()) {
      if (ky.first != h) continue;
      const Word& wj = alg_->basis_words(y.degree())[ky.second];
      Word prod = wi;
      prod.insert(prod.end(), wj.begin(), wj.end());
      TensorVec t(n);
      t.add(prod, cx * cy);
      AlgElement nf = alg_->normal_form(t);
      if (nf.is_zero()) continue;
      for (const auto& [j, v] : nf.coords().at(n)) out.add(g, j, v);
    }
  }
  return out;
}

int DeRham::flat_index(int degree, int g, int idx) const {
  return g * alg_->dim(degree) + idx;
}

std::vector<SparseVec> DeRham::d_columns(int k) {
  alg_->build_degree(k + 1);
  std::vector<SparseVec> cols;
  for (int g = 0; g < group_size(); ++g)
    for (int i = 0; i < alg_->dim(k); ++i) {
      OmegaElement dw = d(delta(g, k, i));
      SparseVec v;
      for (const auto& [key, c] : dw.coords())
        v.emplace_back(flat_index(k + 1, key.first, key.second), c);
      std::sort(v.begin(), v.end());
      cols.push_back(std::move(v));
    }
  return cols;
}

CohomologyResult DeRham::cohomology(int k, bool wantRepresentatives) {
  if (alg_->cm().N() >= 5 && k >= 1 && !heavy_)
    throw std::runtime_error(
        "cohomology in positive degree for N >= 5 requires heavy mode");
  alg_->build_degree(k + 1);
  int domain = group_size() * alg_->dim(k);
  int target = group_size() * alg_->dim(k + 1);

  // rank of d_k and its kernel from the row echelon of the matrix rows
  std::vector<SparseVec> cols = d_columns(k);
  std::vector<SparseVec> rows(target);
  for (int j = 0; j < domain; ++j)
    for (const auto& [r, c] : cols[j]) rows[r].emplace_back(j, c);
  RowEchelon rowSpace(domain);
  for (auto& r : rows) rowSpace.insert(std::move(r));
  int rankDk = rowSpace.rank();
  int kerDim = domain - rankDk;

  int rankPrev = 0;
  RowEchelon image(domain);
  if (k > 0) {
    RowEchelon img(domain);
    for (int g = 0; g < group_size(); ++g)
      for (int i = 0; i < alg_->dim(k - 1); ++i) {
        OmegaElement dw = d(delta(g, k - 1, i));
        SparseVec v;
        for (const auto& [key, c] : dw.coords())
          v.emplace_back(flat_index(k, key.first, key.second), c);
        std::sort(v.begin(), v.end());
        img.insert(std::move(v));
      }
    rankPrev = img.rank();
    image = std::move(img);
  }

  CohomologyResult res;
  res.dim = kerDim - rankPrev;
  if (!wantRepresentatives || res.dim == 0) return res;

  // kernel vectors of d_k from the free columns of its row space, then
  // reduce against the image of d_{k-1} and keep an independent set
  RowEchelon indep(domain);
  RowEchelon quotient(domain);
  for (const auto& [pcol, rowIdx] : image.pivots()) quotient.insert(image.rows()[rowIdx]);
  int dimK = alg_->dim(k);
  for (int f : rowSpace.free_columns()) {
    std::map<int, Rat> kv;
    kv[f] = Rat(1);
    for (const auto& [pcol, rowIdx] : rowSpace.pivots())
      for (const auto& [c, v] : rowSpace.rows()[rowIdx])
        if (c == f) kv[pcol] = -v;
    SparseVec v;
    for (const auto& [idx, val] : kv)
      if (val != 0) v.emplace_back(idx, val);
    SparseVec residue = quotient.reduce(v);
    if (residue.empty()) continue;
    if (!quotient.insert(residue)) continue;
    OmegaElement rep(k);
    for (const auto& [idx, val] : v) rep.add(idx / dimK, idx % dimK, val);
    res.representatives.push_back(std::move(rep));
    if (static_cast<int>(res.representatives.size()) == res.dim) break;
  }
  return res;
}

OmegaElement DeRham::phi(const Connection& c) const {
  OmegaElement p = c.alpha;
  p += theta_form();
  return p;
}

OmegaElement DeRham::curvature(const Connection& c) {
  OmegaElement da = d(c.alpha);
  OmegaElement asq = multiply(c.alpha, c.alpha);
  OmegaElement F = da + asq;
  OmegaElement p = phi(c);
  if (multiply(p, p) != F)
    throw std::logic_error("curvature: d(alpha)+alpha^2 differs from phi^2");
  return F;
}

int DeRham::cardinality(const Connection& c) const {
  OmegaElement p = phi(c);
  std::vector<bool> nonzero(alg_->cm().size(), false);
  for (const auto& [key, v] : p.coords()) nonzero[key.second] = true;
  int count = 0;
  for (bool b : nonzero) count += b;
  return count;
}

Connection DeRham::gauge_transform(const Connection& c, const QVector& u) {
  if (u.size() != group_size())
    throw std::invalid_argument("gauge_transform: wrong function length");
  for (int g = 0; g < u.size(); ++g)
    if (u(g) == 0) throw std::invalid_argument("gauge_transform: u vanishes");
  int C = alg_->cm().size();
  OmegaElement out(1);
  // u alpha u^-1: component a at g is u(g) alpha^a(g) / u(ga)
  for (const auto& [key, v] : c.alpha.coords()) {
    auto [g, a] = key;
    out.add(g, a, u(g) * v / u(rightMul_[a][g]));
  }
  // u d(u^-1): component a at g is u(g) (1/u(ga) - 1/u(g))
  for (int g = 0; g < group_size(); ++g)
    for (int a = 0; a < C; ++a)
      out.add(g, a, u(g) * (Rat(1) / u(rightMul_[a][g]) - Rat(1) / u(g)));
  return Connection{std::move(out)};
}

}  // namespace ncf
