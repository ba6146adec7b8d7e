#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <random>

#include "ncforms/flat_moduli.hpp"

using namespace ncf;

namespace {

FlatModuli make(int N, const char* cls) {
  return FlatModuli(CrossedModule::build(N, CycleType::parse(cls, N), false));
}

std::map<int, int> stratum_sizes(const FlatModuli& fm) {
  std::map<int, int> out;
  for (const auto& s : fm.enumerate())
    out[s.cardinality] = static_cast<int>(s.sets.size());
  return out;
}

// test-only oracle: all 2^|C| subsets, checked directly against the
// Ad-stability definition
std::vector<ClassSubset> brute_force(const CrossedModule& cm) {
  int M = cm.size();
  REQUIRE(M <= 15);
  std::vector<ClassSubset> out;
  for (ClassSubset X = 0; X < (1ULL << M); ++X) {
    bool ok = true;
    for (int x = 0; x < M && ok; ++x) {
      if (!(X >> x & 1)) continue;
      ClassSubset img = 0;
      for (int b = 0; b < M; ++b)
        if (X >> b & 1) img |= 1ULL << cm.ad(x, b);
      ok = img == X;
    }
    if (ok) out.push_back(X);
  }
  return out;
}

int pair_bit(const CrossedModule& cm, int i, int j) {
  return cm.index_of(
      Perm::from_cycles(cm.N(), {{std::min(i, j), std::max(i, j)}}));
}

}  // namespace

TEST_CASE("closure basics") {
  auto fm = make(4, "2");
  CHECK(fm.closure(0) == 0);
  for (int a = 0; a < 6; ++a) CHECK(fm.closure(1ULL << a) == 1ULL << a);
  // two overlapping 2-cycles generate the triangle on their three points,
  // which is already Ad-stable (it is a theta - theta_i set)
  ClassSubset two = 1ULL << pair_bit(fm.cm(), 1, 2) | 1ULL << pair_bit(fm.cm(), 1, 3);
  ClassSubset triangle = two | 1ULL << pair_bit(fm.cm(), 2, 3);
  CHECK(fm.closure(two) == triangle);
  CHECK(fm.is_closed(triangle));
  // idempotent and monotone on random seeds
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    ClassSubset X = rng() % 64, Y = X | (rng() % 64);
    CHECK(fm.closure(fm.closure(X)) == fm.closure(X));
    CHECK((fm.closure(X) & ~fm.closure(Y)) == 0);
    CHECK((X & ~fm.closure(X)) == 0);
  }
}

TEST_CASE("stratum counts for S_3 and S_4") {
  CHECK(stratum_sizes(make(3, "2")) ==
        std::map<int, int>{{0, 1}, {1, 3}, {3, 1}});
  CHECK(stratum_sizes(make(3, "3")) ==
        std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(stratum_sizes(make(4, "2")) ==
        std::map<int, int>{{0, 1}, {1, 6}, {2, 3}, {3, 4}, {6, 1}});
  CHECK(stratum_sizes(make(4, "2+2")) ==
        std::map<int, int>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  CHECK(stratum_sizes(make(4, "3")) ==
        std::map<int, int>{{0, 1}, {1, 8}, {2, 4}, {4, 2}, {8, 1}});
  CHECK(stratum_sizes(make(4, "4")) ==
        std::map<int, int>{{0, 1}, {1, 6}, {2, 3}, {6, 1}});
}

TEST_CASE("stratum counts for S_5") {
  CHECK(stratum_sizes(make(5, "2")) ==
        std::map<int, int>{
            {0, 1}, {1, 10}, {2, 15}, {3, 10}, {4, 10}, {6, 5}, {10, 1}});
  CHECK(stratum_sizes(make(5, "2+2")) ==
        std::map<int, int>{
            {0, 1}, {1, 15}, {2, 15}, {3, 15}, {5, 6}, {15, 1}});
  CHECK(stratum_sizes(make(5, "3")) ==
        std::map<int, int>{
            {0, 1}, {1, 20}, {2, 10}, {4, 10}, {8, 5}, {20, 1}});
  CHECK(stratum_sizes(make(5, "3+2")) ==
        std::map<int, int>{{0, 1}, {1, 20}, {2, 10}, {20, 1}});
  CHECK(stratum_sizes(make(5, "5")) ==
        std::map<int, int>{
            {0, 1}, {1, 24}, {2, 36}, {3, 24}, {4, 6}, {12, 2}, {24, 1}});
}

TEST_CASE("4-cycle class of S_5") {
  // six distinct submaximal sets (one line of the published list is a
  // misprinted duplicate, the count is still six)
  CHECK(stratum_sizes(make(5, "4")) ==
        std::map<int, int>{
            {0, 1}, {1, 30}, {2, 15}, {5, 12}, {6, 5}, {10, 6}, {30, 1}});
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  std::vector<std::pair<int, const char*>> cases = {
      {3, "2"}, {3, "3"}, {4, "2"}, {4, "3"}, {4, "2+2"}, {4, "4"},
      {5, "2"}, {5, "2+2"}};
  for (auto [N, cls] : cases) {
    auto fm = make(N, cls);
    std::vector<ClassSubset> enumerated;
    for (const auto& s : fm.enumerate())
      enumerated.insert(enumerated.end(), s.sets.begin(), s.sets.end());
    std::sort(enumerated.begin(), enumerated.end());
    CHECK(enumerated == brute_force(fm.cm()));
  }
}

TEST_CASE("enumerated family is intersection-closed and Ad-stable") {
  auto fm = make(4, "3");
  std::vector<ClassSubset> all;
  for (const auto& s : fm.enumerate())
    all.insert(all.end(), s.sets.begin(), s.sets.end());
  for (ClassSubset X : all)
    for (ClassSubset Y : all)
      CHECK(fm.is_closed(X & Y));
  // conjugating any member by any group element stays in its stratum
  for (const auto& s : fm.enumerate())
    for (ClassSubset X : s.sets)
      for (const Perm& g : all_perms(4)) {
        ClassSubset img = 0;
        for (int b = 0; b < fm.cm().size(); ++b)
          if (X >> b & 1) img |= 1ULL << fm.cm().ad(g, b);
        CHECK(std::find(s.sets.begin(), s.sets.end(), img) != s.sets.end());
      }
}

TEST_CASE("verify_flat") {
  auto fm3 = make(3, "2");
  CHECK(fm3.verify_flat(QVector::Constant(3, Rat(1))));  // theta
  QVector bad = QVector::Zero(3);
  bad(pair_bit(fm3.cm(), 1, 2)) = Rat(1);
  bad(pair_bit(fm3.cm(), 1, 3)) = Rat(1);
  CHECK(!fm3.verify_flat(bad));

  // the two-parameter family on the 3-cycles of S_4
  auto fm = make(4, "3");
  const auto& cm = fm.cm();
  auto c3 = [&](int x, int y, int z) {
    return cm.index_of(Perm::from_cycles(4, {{x, y, z}}));
  };
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    Rat lam = make_rat(static_cast<int>(rng() % 19) - 9, 1 + rng() % 5);
    Rat mu = make_rat(static_cast<int>(rng() % 19) - 9, 1 + rng() % 5);
    QVector phi = QVector::Zero(8);
    for (auto [x, y, z] : {std::array<int, 3>{1, 2, 3}, {1, 4, 2}, {1, 3, 4}, {2, 4, 3}})
      phi(c3(x, y, z)) = lam;
    for (auto [x, y, z] : {std::array<int, 3>{1, 3, 2}, {1, 2, 4}, {1, 4, 3}, {2, 3, 4}})
      phi(c3(x, y, z)) = mu;
    CHECK(fm.verify_flat(phi));
  }

  // every enumerated indicator is flat
  for (const auto& s : fm.enumerate())
    for (ClassSubset X : s.sets) CHECK(fm.verify_flat(fm.indicator(X)));
}

TEST_CASE("stratum modules match the published representation labels") {
  auto modOf = [](int N, const char* cls, int card) {
    auto fm = make(N, cls);
    for (const auto& s : fm.enumerate())
      if (s.cardinality == card) return fm.stratum_module(s);
    throw std::logic_error("stratum not found");
  };
  CHECK(modOf(3, "2", 1).label == "fund");
  CHECK(modOf(3, "3", 1).label == "sign");
  CHECK(modOf(4, "2", 3).label == "fund");
  CHECK(modOf(4, "2", 2).label == "2");
  CHECK(modOf(4, "2+2", 2).label == "2");
  CHECK(modOf(4, "3", 4).label == "sign");
  CHECK(modOf(4, "3", 2).label == "fund");
  CHECK(modOf(4, "4", 2).label == "2");
  CHECK(modOf(5, "2", 6).label == "fund");
  CHECK(modOf(5, "2+2", 5).label == "5bar");
  CHECK(modOf(5, "3", 8).label == "fund");
  CHECK(modOf(5, "3+2", 2).label == "fund+5");
  CHECK(modOf(5, "4", 10).label == "5bar");
  CHECK(modOf(5, "5", 12).label == "sign");

  auto m = modOf(4, "2", 2);
  CHECK(m.quotientedByTheta);  // the three pair-vectors sum to theta
  CHECK(m.dimension == 2);
}

TEST_CASE("submaximal 2-cycle strata are the theta_i family") {
  for (int N : {4, 5, 6}) {
    auto sets = FlatModuli::submaximal_2cycles(N);
    CHECK(static_cast<int>(sets.size()) == N);
    for (ClassSubset X : sets)
      CHECK(std::popcount(X) == (N - 1) * (N - 2) / 2);
  }
}
