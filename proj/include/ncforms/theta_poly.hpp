#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncforms/rational.hpp"

namespace ncf {

// Dense-exponent multivariate polynomial over Q in commuting variables
// theta_1..theta_n; the commutative oracle for divided differences.
class ThetaPoly {
 public:
  explicit ThetaPoly(int nvars) : nvars_(nvars) {}
  static ThetaPoly constant(int nvars, const Rat& c);
  static ThetaPoly variable(int nvars, int i);  // theta_i, 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  void add_term(const std::vector<int>& expo, const Rat& c);
  ThetaPoly& operator+=(const ThetaPoly& o);
  ThetaPoly& operator-=(const ThetaPoly& o);
  friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
  friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }
  ThetaPoly operator*(const ThetaPoly& o) const;
  bool operator==(const ThetaPoly&) const = default;

  // The polynomial with theta_i and theta_j interchanged.
  ThetaPoly swapped(int i, int j) const;
  // (p - (ij).p) / (theta_i - theta_j); the numerator always vanishes at
  // theta_i = theta_j, which is asserted before the synthetic division.
  ThetaPoly divided_difference(int i, int j) const;
  // Substitute theta_i := theta_j.
  ThetaPoly substituted(int i, int j) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace ncf
