#include "ncforms/theta_poly.hpp"

#include <stdexcept>

namespace ncf {

ThetaPoly ThetaPoly::constant(int nvars, const Rat& c) {
  ThetaPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

ThetaPoly ThetaPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("theta index out of range");
  ThetaPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

void ThetaPoly::add_term(const std::vector<int>& expo, const Rat& c) {
  if (c == 0) return;
  Rat& slot = terms_[expo];
  slot += c;
  if (slot == 0) terms_.erase(expo);
}

ThetaPoly& ThetaPoly::operator+=(const ThetaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ThetaPoly& ThetaPoly::operator-=(const ThetaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  ThetaPoly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e = e1;
      for (int k = 0; k < nvars_; ++k) e[k] += e2[k];
      out.add_term(e, c1 * c2);
    }
  return out;
}

ThetaPoly ThetaPoly::swapped(int i, int j) const {
  ThetaPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f = e;
    std::swap(f[i - 1], f[j - 1]);
    out.add_term(f, c);
  }
  return out;
}

ThetaPoly ThetaPoly::substituted(int i, int j) const {
  ThetaPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f = e;
    f[j - 1] += f[i - 1];
    f[i - 1] = 0;
    out.add_term(f, c);
  }
  return out;
}

ThetaPoly ThetaPoly::divided_difference(int i, int j) const {
  ThetaPoly num = *this - swapped(i, j);
  if (!num.substituted(i, j).is_zero())
    throw std::logic_error("divided_difference: numerator not divisible");
  // Per monomial c * theta_i^k * rest the quotient by (theta_i - theta_j)
  // contributes c * rest * sum_{t<k} theta_i^t theta_j^{k-1-t}; the
  // remainders sum to num|_{theta_i = theta_j} = 0.
  ThetaPoly out(nvars_);
  for (const auto& [e, c] : num.terms_) {
    int k = e[i - 1];
    for (int t = 0; t < k; ++t) {
      std::vector<int> f = e;
      f[i - 1] = t;
      f[j - 1] += k - 1 - t;
      out.add_term(f, c);
    }
  }
  return out;
}

std::string ThetaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(c);
    for (int k = 0; k < nvars_; ++k)
      if (e[k] > 0) {
        out += "*t" + std::to_string(k + 1);
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
      }
  }
  return out;
}

}  // namespace ncf
