#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "copol/checked_int.hpp"

namespace copol {

/// Sparse Laurent polynomial with exact integer coefficients, exponent
/// vectors ordered lexicographically. Exponents may be negative.
struct Laurent {
  std::map<std::vector<Int>, Int> terms;  // nonzero coefficients only

  static Laurent monomial(std::vector<Int> exps, Int coeff) {
    Laurent p;
    if (coeff != 0) p.terms.emplace(std::move(exps), coeff);
    return p;
  }

  void add_term(const std::vector<Int>& exps, Int coeff) {
    if (coeff == 0) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
      terms.emplace(exps, coeff);
      return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
  }

  bool empty() const { return terms.empty(); }

  Int coefficient(const std::vector<Int>& exps) const {
    auto it = terms.find(exps);
    return it == terms.end() ? 0 : it->second;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, checked_mul(c, -1));
    return out;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<Int> e(ea.size());
        if (ea.size() != eb.size()) throw std::invalid_argument("laurent variable count mismatch");
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
        out.add_term(e, checked_mul(ca, cb));
      }
    return out;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;
};

/// Exact division: returns q with num == q * den, requiring the divisor's
/// lex-leading coefficient to be a unit. A division that cannot clear the
/// remainder (an implementation bug upstream) throws.
inline Laurent divide_exact(const Laurent& num, const Laurent& den) {
  if (den.empty()) throw std::invalid_argument("laurent division by zero");
  const auto lead = std::prev(den.terms.end());
  if (lead->second != 1 && lead->second != -1)
    throw std::logic_error("laurent divisor leading coefficient must be a unit");
  Laurent q;
  Laurent r = num;
  long long guard = 0;
  while (!r.empty()) {
    if (++guard > 20'000'000)
      throw std::logic_error("laurent division left a nonzero remainder");
    const auto rl = std::prev(r.terms.end());
    if (rl->first.size() != lead->first.size())
      throw std::invalid_argument("laurent variable count mismatch");
    std::vector<Int> e(rl->first.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_sub(rl->first[i], lead->first[i]);
    const Int c = rl->second / lead->second;
    q.add_term(e, c);
    for (const auto& [de, dc] : den.terms) {
      std::vector<Int> ee(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) ee[i] = checked_add(e[i], de[i]);
      r.add_term(ee, checked_mul(-c, dc));
    }
  }
  return q;
}

}  // namespace copol
