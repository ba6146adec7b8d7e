#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/characters.hpp"

using namespace ncf;

TEST_CASE("trivial and sign rows") {
  for (int N : {3, 4, 5, 6}) {
    auto t = irreducible_characters(N);
    // trivial partition (N) is row 0 in descending lex order
    for (long v : t.chi[0]) CHECK(v == 1);
    // sign character: (-1)^{N - #cycles}
    auto sign_row = t.chi.back();
    for (size_t c = 0; c < t.classes.size(); ++c) {
      int cycles = static_cast<int>(t.classes[c].parts.size());
      CHECK(sign_row[c] == ((N - cycles) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("S_3 standard representation") {
  auto t = irreducible_characters(3);
  Partition std21{2, 1};
  int row = -1;
  for (size_t r = 0; r < t.irreducibles.size(); ++r)
    if (t.irreducibles[r] == std21) row = static_cast<int>(r);
  REQUIRE(row >= 0);
  CHECK(t.chi[row][t.identity_class()] == 2);
  CHECK(t.chi[row][t.two_cycle_class()] == 0);
  CHECK(t.chi[row][t.class_index(CycleType{{3}})] == -1);
}

TEST_CASE("row and column orthogonality, exactly") {
  for (int N : {3, 4, 5, 6, 7}) {
    auto t = irreducible_characters(N);
    long order = factorial(N);
    for (size_t a = 0; a < t.irreducibles.size(); ++a)
      for (size_t b = a; b < t.irreducibles.size(); ++b) {
        long dot = 0;
        for (size_t c = 0; c < t.classes.size(); ++c)
          dot += t.sizes[c] * t.chi[a][c] * t.chi[b][c];
        CHECK(dot == (a == b ? order : 0));
      }
    for (size_t c = 0; c < t.classes.size(); ++c)
      for (size_t d = c; d < t.classes.size(); ++d) {
        long dot = 0;
        for (size_t r = 0; r < t.irreducibles.size(); ++r)
          dot += t.chi[r][c] * t.chi[r][d];
        CHECK(dot == (c == d ? order / t.sizes[c] : 0));
      }
  }
}

TEST_CASE("sum of squared dimensions is N!") {
  for (int N : {3, 4, 5, 6, 7, 8}) {
    auto t = irreducible_characters(N);
    long sum = 0;
    for (size_t r = 0; r < t.irreducibles.size(); ++r)
      sum += t.dimension(r) * t.dimension(r);
    CHECK(sum == factorial(N));
  }
}

TEST_CASE("regular character of S_3 decomposes with dimension multiplicities") {
  auto t = irreducible_characters(3);
  std::vector<Rat> reg(t.classes.size(), Rat(0));
  reg[t.identity_class()] = 6;
  auto dec = decompose_character(reg, t);
  REQUIRE(dec.size() == 3);
  for (const auto& [lambda, m] : dec) {
    if (lambda == Partition{3}) CHECK(m == 1);
    if (lambda == Partition{2, 1}) CHECK(m == 2);
    if (lambda == Partition{1, 1, 1}) CHECK(m == 1);
  }
}

TEST_CASE("natural permutation character of S_4 = trivial + fundamental") {
  auto t = irreducible_characters(4);
  // fixed point counts per class
  std::vector<Rat> chi(t.classes.size());
  for (size_t c = 0; c < t.classes.size(); ++c) {
    int fixed = 0;
    for (int p : t.classes[c].parts)
      if (p == 1) ++fixed;
    chi[c] = fixed;
  }
  auto dec = decompose_character(chi, t);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].lambda == Partition{4});
  CHECK(dec[0].multiplicity == 1);
  CHECK(dec[1].lambda == Partition{3, 1});
  CHECK(dec[1].multiplicity == 1);
}

TEST_CASE("non-character input rejected distinctly") {
  auto t = irreducible_characters(3);
  std::vector<Rat> bad(t.classes.size(), Rat(0));
  bad[t.identity_class()] = make_rat(1, 2);
  CHECK_THROWS_AS(decompose_character(bad, t), std::domain_error);
}

TEST_CASE("labels") {
  auto t5 = irreducible_characters(5);
  CHECK(irrep_label(Partition{4, 1}, t5) == "fund");
  CHECK(irrep_label(Partition{1, 1, 1, 1, 1}, t5) == "sign");
  CHECK(irrep_label(Partition{5}, t5) == "triv");
  CHECK(irrep_label(Partition{3, 2}, t5) == "5");
  CHECK(irrep_label(Partition{2, 2, 1}, t5) == "5bar");
  auto t4 = irreducible_characters(4);
  CHECK(irrep_label(Partition{2, 2}, t4) == "2");
}
