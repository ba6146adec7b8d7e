#include "ncforms/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncf {

namespace {

void gen_partitions(int n, int maxPart, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxPart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

namespace {

// Beta-set formulation of the Murnaghan-Nakayama rule: removing a border
// strip of length r from lambda corresponds to replacing some beta-number b
// by b-r (which must be fresh and nonnegative); the height sign is the
// number of beta-numbers strictly between b-r and b.
long mn_rec(std::vector<int> beta, std::vector<int> mu,
            std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(beta, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = mu.front();
  std::vector<int> mu_rest(mu.begin() + 1, mu.end());
  long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > target && c < b) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    long sign = (between % 2 == 0) ? 1 : -1;
    total += sign * mn_rec(std::move(nb), mu_rest, memo);
  }
  memo[key] = total;
  return total;
}

std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) {
    int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    beta[i] = part + (len - 1 - i);
  }
  return beta;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  int n = 0;
  for (int p : lambda) n += p;
  std::vector<int> mu_clean;
  for (int p : mu)
    if (p >= 1) mu_clean.push_back(p);
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
  return mn_rec(beta_set(lambda, n), mu_clean, memo);
}

CharacterTable irreducible_characters(int N) {
  if (N < 1 || N > 8)
    throw std::out_of_range("irreducible_characters: N must be in 1..8");
  CharacterTable t;
  t.N = N;
  auto parts = partitions_of(N);
  for (const auto& mu : parts) {
    t.classes.push_back(CycleType{mu});
    t.sizes.push_back(class_size(N, CycleType{mu}));
  }
  t.irreducibles = parts;
  for (const auto& lambda : parts) {
    std::vector<long> row;
    for (const auto& mu : parts) row.push_back(mn_character(lambda, mu));
    t.chi.push_back(std::move(row));
  }
  return t;
}

int CharacterTable::class_index(const CycleType& c) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return static_cast<int>(i);
  throw std::invalid_argument("class_index: unknown class");
}

int CharacterTable::identity_class() const {
  return class_index(CycleType{std::vector<int>(N, 1)});
}

int CharacterTable::two_cycle_class() const {
  std::vector<int> parts(N - 1, 1);
  parts[0] = 2;
  return class_index(CycleType{parts});
}

long CharacterTable::dimension(int row) const {
  return chi[row][identity_class()];
}

std::vector<IrrepMultiplicity> decompose_character(
    const std::vector<Rat>& values, const CharacterTable& table) {
  if (values.size() != table.classes.size())
    throw std::invalid_argument("decompose_character: wrong number of classes");
  long order = factorial(table.N);
  std::vector<IrrepMultiplicity> out;
  std::vector<Rat> recon(values.size(), Rat(0));
  for (size_t r = 0; r < table.irreducibles.size(); ++r) {
    Rat inner = 0;
    for (size_t c = 0; c < table.classes.size(); ++c)
      inner += Rat(table.sizes[c]) * values[c] * Rat(table.chi[r][c]);
    inner /= Rat(order);
    if (inner == 0) continue;
    if (inner.get_den() != 1 || inner < 0)
      throw std::domain_error("decompose_character: not a character (m_" +
                              std::to_string(r) + " = " + rat_to_string(inner) + ")");
    long m = inner.get_num().get_si();
    out.push_back({table.irreducibles[r], m});
    for (size_t c = 0; c < table.classes.size(); ++c)
      recon[c] += inner * Rat(table.chi[r][c]);
  }
  for (size_t c = 0; c < values.size(); ++c)
    if (recon[c] != values[c])
      throw std::domain_error("decompose_character: reconstruction failed");
  return out;
}

std::string irrep_label(const Partition& lambda, const CharacterTable& table) {
  int row = -1;
  for (size_t r = 0; r < table.irreducibles.size(); ++r)
    if (table.irreducibles[r] == lambda) row = static_cast<int>(r);
  if (row < 0) throw std::invalid_argument("irrep_label: unknown partition");

  Partition trivial{table.N};
  Partition sign(table.N, 1);
  Partition fund;
  if (table.N >= 2) fund = Partition{table.N - 1, 1};
  if (lambda == trivial) return "triv";
  if (lambda == sign) return "sign";
  if (lambda == fund) return "fund";

  long dim = table.dimension(row);
  int c2 = table.two_cycle_class();
  bool bar = table.chi[row][c2] < 0;
  std::string label = std::to_string(dim) + (bar ? "bar" : "");

  // Flag labels that dimension and sign alone cannot pin down.
  for (size_t r = 0; r < table.irreducibles.size(); ++r) {
    if (static_cast<int>(r) == row) continue;
    const Partition& other = table.irreducibles[r];
    if (other == trivial || other == sign || other == fund) continue;
    if (table.dimension(r) == dim && (table.chi[r][c2] < 0) == bar) {
      std::string ps;
      for (int p : lambda) ps += (ps.empty() ? "" : ",") + std::to_string(p);
      return label + "[" + ps + "]?";
    }
  }
  return label;
}

std::string decomposition_label(const std::vector<IrrepMultiplicity>& dec,
                                const CharacterTable& table) {
  std::string s;
  for (const auto& [lambda, m] : dec) {
    for (long i = 0; i < m; ++i) {
      if (!s.empty()) s += '+';
      s += irrep_label(lambda, table);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace ncf
