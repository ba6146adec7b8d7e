#include "ncforms/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <stdexcept>

namespace ncf {
namespace {

long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<int> moved_points(const Perm& p, int N) {
  std::vector<int> out;
  for (int i = 1; i <= N; ++i)
    if (p.apply(i) != i) out.push_back(i);
  return out;
}

int overlap(const Perm& p, const Perm& q, int N) {
  auto a = moved_points(p, N), b = moved_points(q, N);
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return static_cast<int>(both.size());
}

// base^e with e possibly negative; nullopt on a negative power of zero.
std::optional<Rat> rat_pow(const Rat& base, long e) {
  if (e < 0 && base == 0) return std::nullopt;
  Rat out = 1;
  Rat b = e < 0 ? Rat(1) / base : base;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
  return out;
}

QMatrix pattern_matrix(const std::vector<Perm>& cls, int N, const Rat& alpha,
                       const Rat& beta, const Rat& gamma) {
  const int C = static_cast<int>(cls.size());
  QMatrix M(C, C);
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j) {
      if (i == j)
        M(i, j) = alpha;
      else
        M(i, j) = overlap(cls[i], cls[j], N) == 0 ? beta : gamma;
    }
  return M;
}

void assert_symmetric_invariant(const QMatrix& eta, const CrossedModule& cm) {
  const int C = cm.size();
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b)
      if (eta(a, b) != eta(b, a))
        throw std::logic_error("metric not symmetric");
  // Invariance under the adjacent transpositions implies invariance under
  // the whole group.
  for (int i = 1; i < cm.N(); ++i) {
    Perm g = Perm::from_cycles(cm.N(), {{i, i + 1}});
    for (int a = 0; a < C; ++a)
      for (int b = 0; b < C; ++b)
        if (eta(cm.ad(g, a), cm.ad(g, b)) != eta(a, b))
          throw std::logic_error("metric not Ad-invariant");
  }
}

}  // namespace

Metric killing_form(const CrossedModule& cm) {
  const int C = cm.size();
  std::vector<Perm> prod(C * C, Perm::identity(cm.N()));
  QMatrix eta(C, C);
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b)
      prod[a * C + b] = compose(cm.element(a), cm.element(b));
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b) {
      const Perm& ab = prod[a * C + b];
      int count = 0;
      for (int c = 0; c < C; ++c)
        if (compose(cm.element(c), ab) == compose(ab, cm.element(c))) ++count;
      eta(a, b) = count;
    }
  assert_symmetric_invariant(eta, cm);
  return {eta, "killing"};
}

Metric kronecker_metric(const CrossedModule& cm) {
  const int C = cm.size();
  QMatrix eta = QMatrix::Zero(C, C);
  for (int a = 0; a < C; ++a) {
    Perm inv = cm.element(a).inverse();
    eta(a, cm.index_of(inv)) = 1;  // index_of throws if C is not
                                   // inversion-stable
  }
  assert_symmetric_invariant(eta, cm);
  return {eta, "kronecker"};
}

Metric general_two_cycle_metric(int N, const Rat& alpha, const Rat& beta,
                                const Rat& gamma) {
  auto cls = conjugacy_class(N, CycleType::parse("2", N));
  return {pattern_matrix(cls, N, alpha, beta, gamma), "general"};
}

std::optional<Rat> two_cycle_metric_det_formula(int N, const Rat& alpha,
                                                const Rat& beta,
                                                const Rat& gamma) {
  Rat b1 = alpha + beta - 2 * gamma;
  Rat b2 = alpha - (N - 3) * beta + (N - 4) * gamma;
  Rat b3 = alpha + (N - 2) * (N - 3) / 2 * beta + 2 * (N - 2) * gamma;
  auto p1 = rat_pow(b1, static_cast<long>(N) * (N - 3) / 2);
  auto p2 = rat_pow(b2, N - 1);
  auto p3 = rat_pow(b3, 1);
  if (!p1 || !p2 || !p3) return std::nullopt;
  return *p1 * *p2 * *p3;
}

MetricDetReport general_metric_det_check(int N, int samples,
                                         std::uint64_t seed) {
  if (N < 2 || N > 10)
    throw std::invalid_argument("general_metric_det_check: need 2 <= N <= 10");
  auto cls = conjugacy_class(N, CycleType::parse("2", N));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  auto draw = [&] { return make_rat(num(rng), den(rng)); };
  MetricDetReport rep{N, samples, 0, false};
  for (int s = 0; s < samples; ++s) {
    Rat a, b, g;
    std::optional<Rat> expected;
    do {
      a = draw();
      b = draw();
      g = draw();
      expected = two_cycle_metric_det_formula(N, a, b, g);
    } while (!expected);
    Rat det = determinant(pattern_matrix(cls, N, a, b, g));
    if (det == *expected) ++rep.agreements;
  }
  rep.ok = rep.agreements == samples;
  return rep;
}

bool killing_invertibility(int N) {
  if (N < 2 || N >= 30)
    throw std::invalid_argument("killing_invertibility: need 2 <= N < 30");
  if (N <= 10) {
    auto cm = CrossedModule::build(N, CycleType::parse("2", N), false);
    return determinant(killing_form(cm).eta) != 0;
  }
  // The direct count reproduces this binomial pattern (checked for small N);
  // beyond N = 10 certify the patterned matrix modulo a 62-bit prime.
  auto cls = conjugacy_class(N, CycleType::parse("2", N));
  QMatrix M = pattern_matrix(cls, N, choose2(N), choose2(N - 4) + 2,
                             choose2(N - 3));
  return det_mod_p(M, kCertPrime) != 0;
}

bool wedge_vanishing(GradedAlgebra& alg, const Metric& eta) {
  const int C = alg.cm().size();
  if (eta.eta.rows() != C || eta.eta.cols() != C)
    throw std::invalid_argument("wedge_vanishing: metric size mismatch");
  alg.build_degree(2);
  TensorVec v(2);
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b)
      if (eta.eta(a, b) != 0) v.add({a, b}, eta.eta(a, b));
  return alg.normal_form(v).is_zero();
}

int rack_bracket(const CrossedModule& cm, int a, int b) {
  return cm.ad(cm.element(b).inverse(), a);
}

RackReport rack_checks(const CrossedModule& cm) {
  const int C = cm.size();
  RackReport rep;
  rep.self_distributive = true;
  for (int a = 0; a < C && rep.self_distributive; ++a)
    for (int b = 0; b < C && rep.self_distributive; ++b)
      for (int c = 0; c < C; ++c) {
        int lhs = rack_bracket(cm, rack_bracket(cm, a, c), rack_bracket(cm, b, c));
        int rhs = rack_bracket(cm, rack_bracket(cm, a, b), c);
        if (lhs != rhs) {
          rep.self_distributive = false;
          break;
        }
      }
  rep.enveloping = true;
  for (int a = 0; a < C && rep.enveloping; ++a)
    for (int b = 0; b < C; ++b) {
      const Perm &pa = cm.element(a), &pb = cm.element(b);
      Perm rewritten = compose(pb, cm.element(rack_bracket(cm, a, b)));
      if (compose(pa, pb) != rewritten) {
        rep.enveloping = false;
        break;
      }
    }
  rep.ok = rep.self_distributive && rep.enveloping;
  return rep;
}

HodgeStarS3::HodgeStarS3()
    : alg_(CrossedModule::build(3, CycleType::parse("2", 3), false),
           Flavor::Quadratic, AlgSign::Exterior) {
  alg_.build_degree(4);
  const CrossedModule& cm = alg_.cm();
  auto idx = [&](int i, int j) {
    return cm.index_of(Perm::from_cycles(3, {{i, j}}));
  };
  Word topWord{idx(1, 2), idx(1, 3), idx(1, 2), idx(2, 3)};
  top_ = alg_.normal_form(TensorVec::basis(topWord));
  topCoeff_ = top_.coeff(4, 0);
  if (topCoeff_ == 0)
    throw std::logic_error("designated top word has zero normal form");

  const int C = cm.size();
  mats_.resize(5);
  for (int m = 0; m <= 4; ++m) {
    const int rows = alg_.dim(4 - m), cols = alg_.dim(m);
    QMatrix M = QMatrix::Zero(rows, cols);
    for (int i = 0; i < cols; ++i) {
      Word w = alg_.basis_words(m)[i];
      // Enumerate the completions a_{m+1}..a_4 in C^{4-m}.
      std::vector<int> t(4 - m, 0);
      while (true) {
        Word full = w;
        full.insert(full.end(), t.begin(), t.end());
        Rat eps = epsilon(full);
        if (eps != 0) {
          Word rev(t.rbegin(), t.rend());  // 2-cycles are self-inverse
          AlgElement nf = alg_.normal_form(TensorVec::basis(rev));
          for (int r = 0; r < rows; ++r) M(r, i) += eps * nf.coeff(4 - m, r);
        }
        int pos = 4 - m - 1;
        while (pos >= 0 && t[pos] == C - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
      }
    }
    mats_[m] = std::move(M);
  }
}

Rat HodgeStarS3::epsilon(const Word& w) const {
  if (w.size() != 4) throw std::invalid_argument("epsilon: need a degree-4 word");
  return alg_.normal_form(TensorVec::basis(w)).coeff(4, 0) / topCoeff_;
}

const QMatrix& HodgeStarS3::star_matrix(int m) const {
  if (m < 0 || m > 4) throw std::invalid_argument("star_matrix: degree 0..4");
  return mats_[m];
}

int HodgeStarS3::star_rank(int m) const { return rank(star_matrix(m)); }

Rat HodgeStarS3::star_square_scalar(int m) const {
  const QMatrix &B = star_matrix(m), &A = star_matrix(4 - m);
  const int d = alg_.dim(m);
  QMatrix P = QMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < alg_.dim(4 - m); ++k) P(i, j) += A(i, k) * B(k, j);
  Rat s = P(0, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (P(i, j) != (i == j ? s : Rat(0)))
        throw std::logic_error("star squared is not a scalar");
  return s;
}

AlgElement HodgeStarS3::star(const AlgElement& x) const {
  AlgElement out(&alg_);
  if (x.is_zero()) return out;
  auto degs = x.degrees();
  if (degs.size() != 1)
    throw std::invalid_argument("star: homogeneous input required");
  const int m = degs[0];
  const QMatrix& M = star_matrix(m);
  for (int r = 0; r < alg_.dim(4 - m); ++r) {
    Rat acc = 0;
    for (int i = 0; i < alg_.dim(m); ++i) acc += M(r, i) * x.coeff(m, i);
    if (acc != 0) out.add(4 - m, r, acc);
  }
  return out;
}

}  // namespace ncf
