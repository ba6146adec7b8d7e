#include "ncforms/flat_moduli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ncf {

FlatModuli::FlatModuli(CrossedModule cm) : cm_(std::move(cm)), size_(cm_.size()) {
  if (cm_.is_signed())
    throw std::invalid_argument("flat moduli use the unsigned braiding");
  if (size_ > 64) throw std::invalid_argument("class too large for bitsets");
}

ClassSubset FlatModuli::ad_image(int x, ClassSubset X) const {
  ClassSubset out = 0;
  for (int b = 0; b < size_; ++b)
    if (X >> b & 1) out |= 1ULL << cm_.ad(x, b);
  return out;
}

ClassSubset FlatModuli::closure(ClassSubset X) const {
  bool changed = true;
  while (changed) {
    changed = false;
    ClassSubset next = X;
    for (int x = 0; x < size_; ++x)
      if (X >> x & 1) next |= ad_image(x, X);
    if (next != X) {
      X = next;
      changed = true;
    }
  }
  return X;
}

std::vector<Stratum> FlatModuli::enumerate() const {
  std::vector<ClassSubset> out;
  ClassSubset A = closure(0);
  ClassSubset full = full_set();
  out.push_back(A);
  while (A != full) {
    // lectic successor over the closure operator
    for (int i = size_ - 1; i >= 0; --i) {
      if (A >> i & 1) {
        A &= ~(1ULL << i);
      } else {
        ClassSubset B = closure(A | 1ULL << i);
        if (((B & ~A) & ((1ULL << i) - 1)) == 0) {
          A = B;
          break;
        }
      }
    }
    out.push_back(A);
  }
  std::vector<Stratum> strata(size_ + 1);
  for (int n = 0; n <= size_; ++n) strata[n].cardinality = n;
  for (ClassSubset X : out)
    strata[std::popcount(X)].sets.push_back(X);
  std::vector<Stratum> res;
  for (auto& s : strata) {
    std::sort(s.sets.begin(), s.sets.end());
    if (!s.sets.empty()) res.push_back(std::move(s));
  }
  return res;
}

bool FlatModuli::verify_flat(const QVector& phi) const {
  if (phi.size() != size_) throw std::invalid_argument("wrong vector length");
  bool componentwise = true;
  for (int a = 0; a < size_ && componentwise; ++a)
    for (int b = 0; b < size_; ++b) {
      int conj = cm_.ad(cm_.element(a).inverse(), b);
      if (phi(a) * (phi(conj) - phi(b)) != 0) {
        componentwise = false;
        break;
      }
    }
  TensorVec v(2);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) v.add({a, b}, phi(a) * phi(b));
  bool braided = cm_.apply_braiding(1, v) == v;
  if (componentwise != braided)
    throw std::logic_error("flatness conditions disagree");
  return componentwise;
}

StratumModule FlatModuli::stratum_module(const Stratum& s) const {
  if (s.sets.empty()) throw std::invalid_argument("empty stratum");
  std::vector<QVector> basis;
  RowEchelon ech(size_);
  for (ClassSubset X : s.sets) {
    QVector v = indicator(X);
    if (ech.insert(to_sparse(v))) basis.push_back(v);
  }
  QVector theta = QVector::Constant(size_, Rat(1));
  bool quotient = ech.in_span(to_sparse(theta));

  int N = cm_.N();
  CharacterTable table = irreducible_characters(N);
  StratumModule out;
  out.cardinality = s.cardinality;
  out.quotientedByTheta = quotient;
  out.dimension = static_cast<int>(basis.size()) - (quotient ? 1 : 0);
  for (size_t c = 0; c < table.classes.size(); ++c) {
    Perm g = table.classes[c].is_identity()
                 ? Perm::identity(N)
                 : conjugacy_class(N, table.classes[c])[0];
    Rat trace(0);
    for (size_t k = 0; k < basis.size(); ++k) {
      QVector image(size_);
      for (int b = 0; b < size_; ++b) image(cm_.ad(g, b)) = basis[k](b);
      auto coords = coordinates_in_span(basis, image);
      if (!coords) throw std::logic_error("stratum span is not Ad-stable");
      trace += (*coords)(k);
    }
    if (quotient) trace -= 1;  // theta spans a trivial submodule
    out.character.push_back(trace);
  }
  out.decomposition = decompose_character(out.character, table);
  out.label = decomposition_label(out.decomposition, table);
  return out;
}

std::vector<ClassSubset> FlatModuli::submaximal_2cycles(int N) {
  FlatModuli fm(CrossedModule::build(N, CycleType::parse("2", N), false));
  auto strata = fm.enumerate();
  const Stratum* sub = nullptr;
  for (const auto& s : strata)
    if (s.cardinality < fm.size_ && !s.sets.empty() && s.cardinality > 0)
      sub = &s;  // strata are in increasing cardinality order
  if (!sub) throw std::logic_error("no submaximal stratum");
  std::vector<ClassSubset> expected;
  for (int i = 1; i <= N; ++i) {
    ClassSubset X = 0;
    for (int b = 0; b < fm.size_; ++b) {
      Perm p = fm.cm_.element(b);
      if (p.apply(i) == i) X |= 1ULL << b;  // 2-cycles avoiding i
    }
    expected.push_back(X);
  }
  std::sort(expected.begin(), expected.end());
  if (sub->sets != expected ||
      sub->cardinality != (N - 1) * (N - 2) / 2)
    throw std::logic_error("submaximal stratum is not the theta_i family");
  return sub->sets;
}

QVector FlatModuli::indicator(ClassSubset X) const {
  QVector v = QVector::Zero(size_);
  for (int b = 0; b < size_; ++b)
    if (X >> b & 1) v(b) = Rat(1);
  return v;
}

}  // namespace ncf
