#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncforms/graded_algebra.hpp"

namespace ncf {

// A degree-n form sum_g f_g delta_g (x) lambda_g with exact coordinates over
// (group element index, degree-n basis word index).
class OmegaElement {
 public:
  OmegaElement() = default;
  explicit OmegaElement(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  bool is_zero() const { return coords_.empty(); }
  const std::map<std::pair<int, int>, Rat>& coords() const { return coords_; }
  Rat coeff(int g, int idx) const;

  void add(int g, int idx, const Rat& c);
  OmegaElement& operator+=(const OmegaElement& o);
  OmegaElement& operator-=(const OmegaElement& o);
  OmegaElement& operator*=(const Rat& c);
  friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
  friend OmegaElement operator-(OmegaElement a, const OmegaElement& b) { return a -= b; }
  bool operator==(const OmegaElement&) const = default;

 private:
  int degree_ = 0;
  std::map<std::pair<int, int>, Rat> coords_;
};

struct CohomologyResult {
  int dim = 0;
  std::vector<OmegaElement> representatives;  // filled on request
};

// A gauge field alpha; phi = alpha + theta.
struct Connection {
  OmegaElement alpha;  // degree 1
};

// The exterior algebra over functions on the group, with the differential
// d(f lambda) = (df) lambda + f (theta lambda - (-1)^n lambda theta) and the
// bimodule rule e_a f = R_a(f) e_a, R_a(f)(g) = f(ga).
class DeRham {
 public:
  // The algebra is shared and built lazily to the degrees d needs; heavy
  // unlocks N >= 5 cohomology in positive degree.
  DeRham(GradedAlgebra* alg, bool heavy = false);

  const GradedAlgebra& algebra() const { return *alg_; }
  const std::vector<Perm>& group() const { return group_; }
  int group_index(const Perm& p) const;
  int group_size() const { return static_cast<int>(group_.size()); }

  OmegaElement delta(int g, int degree, int basisIdx) const;
  // f as a function vector over the group enumeration, as a 0-form.
  OmegaElement function_form(const QVector& f) const;
  // 1 (x) lambda: the invariant form with the same coordinates at every g.
  OmegaElement invariant(const AlgElement& lambda) const;
  OmegaElement theta_form() const;

  OmegaElement d(const OmegaElement& w);
  OmegaElement multiply(const OmegaElement& x, const OmegaElement& y);

  CohomologyResult cohomology(int k, bool wantRepresentatives = false);

  Connection zero_connection() const { return Connection{OmegaElement(1)}; }
  // phi = alpha + theta
  OmegaElement phi(const Connection& c) const;
  // Computes d(alpha) + alpha^2 and asserts phi^2 gives the same form.
  OmegaElement curvature(const Connection& c);
  // Number of a in C whose phi^a component is not identically zero.
  int cardinality(const Connection& c) const;
  // alpha -> u alpha u^-1 + u d(u^-1), u an everywhere-nonzero function.
  Connection gauge_transform(const Connection& c, const QVector& u);

 private:
  // columns of d on degree k, as sparse vectors over (g, idx) of degree k+1
  std::vector<SparseVec> d_columns(int k);
  int flat_index(int degree, int g, int idx) const;

  GradedAlgebra* alg_;
  bool heavy_;
  std::vector<Perm> group_;
  std::map<Perm, int> groupIndex_;
  std::vector<std::vector<int>> rightMul_;  // [a][g] -> index of g * a
};

}  // namespace ncf
