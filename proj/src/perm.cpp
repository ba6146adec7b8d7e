#include "ncforms/perm.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncf {

Perm::Perm(int n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }

Perm::Perm(std::vector<int> images0) : images_(std::move(images0)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Perm: images not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      img[a - 1] = b - 1;
    }
  }
  return Perm(img);
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Perm(inv);
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = images_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "e";
  bool wide = size() > 9;
  std::string s;
  for (const auto& cyc : cycs) {
    s += '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k && wide) s += ',';
      s += std::to_string(cyc[k]);
    }
    s += ')';
  }
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(p.size());
  for (int i = 0; i < p.size(); ++i) img[i] = p.apply0(q.apply0(i));
  return Perm(img);
}

Perm conjugate(const Perm& g, const Perm& a) {
  return compose(g, compose(a, g.inverse()));
}

CycleType CycleType::of(const Perm& p) {
  std::vector<int> parts;
  int covered = 0;
  for (const auto& cyc : p.cycles()) {
    parts.push_back(static_cast<int>(cyc.size()));
    covered += static_cast<int>(cyc.size());
  }
  for (int i = covered; i < p.size(); ++i) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return CycleType{parts};
}

CycleType CycleType::parse(const std::string& s, int n) {
  std::vector<int> parts;
  int sum = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    int part = std::stoi(s.substr(pos, next - pos));
    if (part < 2) throw std::invalid_argument("cycle type parts must be >= 2: " + s);
    parts.push_back(part);
    sum += part;
    pos = next + 1;
  }
  if (sum > n) throw std::invalid_argument("cycle type exceeds N: " + s);
  for (int i = sum; i < n; ++i) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return CycleType{parts};
}

int CycleType::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool CycleType::is_identity() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
}

std::string CycleType::to_string() const {
  std::string s;
  for (int p : parts) {
    if (p == 1) continue;
    if (!s.empty()) s += '+';
    s += std::to_string(p);
  }
  if (s.empty()) return "1^" + std::to_string(n());
  return s;
}

namespace {

// Recursively build all permutations with the given multiset of nontrivial
// cycle lengths over the unused points. Canonical form: each cycle led by
// its smallest point, so every arrangement is produced exactly once.
void build_class(int N, const std::multiset<int>& lengths,
                 std::set<int>& unused, std::vector<std::vector<int>>& cycles,
                 std::vector<Perm>& out) {
  if (lengths.empty()) {
    out.push_back(Perm::from_cycles(N, cycles));
    return;
  }
  int lead = *unused.begin();
  unused.erase(unused.begin());
  std::vector<int> rest(unused.begin(), unused.end());
  // Either `lead` is a fixed point (only if there are enough points left),
  // or it leads a cycle of one of the available lengths.
  int needed = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (static_cast<int>(rest.size()) >= needed) {
    build_class(N, lengths, unused, cycles, out);
  }
  std::set<int> tried;
  for (int len : lengths) {
    if (tried.count(len)) continue;
    tried.insert(len);
    std::multiset<int> remaining = lengths;
    remaining.erase(remaining.find(len));
    // Choose the other len-1 points of the cycle, in every order.
    std::vector<int> idx(len - 1);
    std::vector<bool> used(rest.size(), false);
    std::vector<int> cyc(len);
    cyc[0] = lead;
    std::function<void(int)> rec = [&](int k) {
      if (k == len - 1) {
        cycles.push_back(cyc);
        for (int q : cyc)
          if (q != lead) unused.erase(q);
        build_class(N, remaining, unused, cycles, out);
        for (int q : cyc)
          if (q != lead) unused.insert(q);
        cycles.pop_back();
        return;
      }
      for (size_t m = 0; m < rest.size(); ++m) {
        if (used[m]) continue;
        used[m] = true;
        cyc[k + 1] = rest[m];
        rec(k + 1);
        used[m] = false;
      }
    };
    rec(0);
  }
  unused.insert(lead);
}

}  // namespace

std::vector<Perm> conjugacy_class(int N, const CycleType& t) {
  if (t.n() != N) throw std::invalid_argument("conjugacy_class: type not a partition of N");
  if (t.is_identity())
    throw std::invalid_argument("conjugacy_class: identity class not allowed");
  std::multiset<int> lengths;
  for (int p : t.parts)
    if (p > 1) lengths.insert(p);
  std::set<int> unused;
  for (int i = 1; i <= N; ++i) unused.insert(i);
  std::vector<std::vector<int>> cycles;
  std::vector<Perm> out;
  build_class(N, lengths, unused, cycles, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (static_cast<long>(out.size()) != class_size(N, t))
    throw std::logic_error("conjugacy_class: size mismatch against formula");
  return out;
}

long class_size(int N, const CycleType& t) {
  // N! / prod_m m^{k_m} k_m!, computed with arbitrary precision since N!
  // overflows long already for N = 21.
  std::map<int, int> mult;
  for (int p : t.parts) ++mult[p];
  mpz_class z = 1;
  for (const auto& [m, k] : mult) {
    for (int i = 0; i < k; ++i) z *= m;
    for (int i = 2; i <= k; ++i) z *= i;
  }
  mpz_class nf;
  mpz_fac_ui(nf.get_mpz_t(), N);
  mpz_class size = nf / z;
  if (!size.fits_slong_p()) throw std::overflow_error("class_size: too large");
  return size.get_si();
}

std::vector<Perm> generated_subgroup(const std::vector<Perm>& C, int N) {
  if (C.empty()) throw std::invalid_argument("generated_subgroup: empty generating set");
  std::set<Perm> seen;
  std::vector<Perm> frontier{Perm::identity(N)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& g : frontier) {
      for (const Perm& c : C) {
        Perm h = compose(g, c);
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool generates_group(const std::vector<Perm>& C, int N) {
  return static_cast<long>(generated_subgroup(C, N).size()) == factorial(N);
}

std::vector<Perm> all_perms(int N) {
  std::vector<int> img(N);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  out.reserve(factorial(N));
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace ncf
