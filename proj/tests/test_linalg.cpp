#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncforms/linalg.hpp"

using namespace ncf;

TEST_CASE("kernel of identity and zero matrices") {
  CHECK(kernel_basis(QMatrix::Identity(4, 4)).empty());
  auto k = kernel_basis(QMatrix::Zero(3, 5));
  CHECK(k.size() == 5);
}

TEST_CASE("rank identity") {
  for (int n : {1, 3, 6}) CHECK(rank(QMatrix::Identity(n, n)) == n);
}

TEST_CASE("kernel vectors satisfy Mv=0 and rank-nullity on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-4, 4), den(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int r = 1 + trial % 6, c = 1 + (trial * 3) % 8;
    QMatrix M(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) M(i, j) = make_rat(val(rng), den(rng));
    auto ker = kernel_basis(M);
    CHECK(rank(M) + static_cast<int>(ker.size()) == c);
    for (const auto& v : ker) {
      QVector Mv = M * v;
      for (int i = 0; i < r; ++i) CHECK(Mv[i] == 0);
    }
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(QMatrix::Identity(5, 5)) == 1);
  QMatrix M(2, 2);
  M << make_rat(1, 2), make_rat(1), make_rat(1), make_rat(3);
  CHECK(determinant(M) == make_rat(1, 2));
  CHECK_THROWS(determinant(QMatrix::Zero(2, 3)));
}

TEST_CASE("det_mod_p agrees with exact determinant") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> val(-9, 9), den(1, 4);
  const std::uint64_t p = kCertPrime;
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + trial % 5;
    QMatrix M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = make_rat(val(rng), den(rng));
    Rat d = determinant(M);
    std::uint64_t dm = det_mod_p(M, p);
    // Compare residues via the same reduction.
    QMatrix D(1, 1);
    D(0, 0) = d;
    CHECK(det_mod_p(D, p) == dm);
  }
}

TEST_CASE("coordinates_in_span") {
  std::vector<QVector> basis;
  QVector e1 = QVector::Zero(3), e2 = QVector::Zero(3);
  e1[0] = 1;
  e2[1] = 1;
  basis = {e1, e2};
  auto c = coordinates_in_span(basis, e1);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 0);
  QVector e3 = QVector::Zero(3);
  e3[2] = 1;
  CHECK(!coordinates_in_span(basis, e3).has_value());
}

TEST_CASE("RowEchelon rank and span membership") {
  RowEchelon E(4);
  CHECK(E.insert({{0, make_rat(1)}, {1, make_rat(2)}}));
  CHECK(E.insert({{1, make_rat(1)}, {3, make_rat(1)}}));
  CHECK(!E.insert({{0, make_rat(2)}, {1, make_rat(5)}, {3, make_rat(1)}}));
  CHECK(E.rank() == 2);
  CHECK(E.free_columns() == std::vector<int>{2, 3});
}

TEST_CASE("RowEchelon reverse order pivots on largest column") {
  RowEchelon E(3, /*reverse=*/true);
  // e0 - e2 = 0 should express e2 in terms of e0, keeping e0 free.
  CHECK(E.insert({{0, make_rat(1)}, {2, make_rat(-1)}}));
  auto free = E.free_columns();
  CHECK(free == std::vector<int>{0, 1});
}
