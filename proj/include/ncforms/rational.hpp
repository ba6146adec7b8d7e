#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ncf {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 whenever
// values are produced by arithmetic; constructors from raw num/den must
// canonicalize explicitly.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical string form: "p" for integers, "p/q" with q>0 otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace ncf

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100,
  };
};

}  // namespace Eigen
