#pragma once

#include <stdexcept>
#include <vector>

#include "copol/checked_int.hpp"

namespace copol {

namespace detail {

// Dense integer polynomials, ascending coefficients.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  poly_trim(out);
  return out;
}

// Exact division by a monic divisor; nonzero remainder throws.
inline Poly poly_div_exact(Poly num, const Poly& den) {
  if (den.empty() || den.back() != 1) throw std::logic_error("divisor must be monic");
  poly_trim(num);
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  Poly q(num.size() - den.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    Int c = num[shift + den.size() - 1];
    if (c == 0) continue;
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[shift + j] = checked_sub(num[shift + j], checked_mul(c, den[j]));
  }
  poly_trim(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace detail

/// N-th cyclotomic polynomial, ascending integer coefficients, computed as
/// (x^N - 1) / prod of the lower cyclotomics over the divisors of N.
inline std::vector<Int> cyclotomic_polynomial(Int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  detail::Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  detail::Poly den{1};
  for (Int d = 1; d < n; ++d)
    if (n % d == 0) den = detail::poly_mul(den, cyclotomic_polynomial(d));
  return detail::poly_div_exact(std::move(num), den);
}

/// Exact arithmetic in Z[x]/(Phi_N): elements are coefficient vectors in the
/// power basis 1, x, ..., x^{phi(N)-1}, with x a primitive N-th root of unity.
class CyclotomicField {
 public:
  explicit CyclotomicField(Int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    const std::size_t deg = phi_.size() - 1;
    // x^j mod Phi_N for 0 <= j < N
    std::vector<Int> cur(deg, 0);
    if (deg == 0) throw std::logic_error("cyclotomic polynomial of degree zero");
    cur[0] = 1;
    powers_.push_back(cur);
    for (Int j = 1; j < n; ++j) {
      std::vector<Int> next(deg, 0);
      Int top = cur[deg - 1];
      for (std::size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < deg; ++i)
          next[i] = checked_sub(next[i], checked_mul(top, phi_[i]));
      powers_.push_back(next);
      cur = next;
    }
  }

  Int order() const { return n_; }
  std::size_t degree() const { return phi_.size() - 1; }

  /// Reduces sum over j of counts[j] * x^j.
  std::vector<Int> reduce(const std::vector<Int>& counts) const {
    if (counts.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("count vector must have one slot per residue");
    std::vector<Int> out(degree(), 0);
    for (Int j = 0; j < n_; ++j) {
      Int c = counts[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const auto& pw = powers_[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_add(out[i], checked_mul(c, pw[i]));
    }
    return out;
  }

 private:
  Int n_;
  std::vector<Int> phi_;
  std::vector<std::vector<Int>> powers_;
};

}  // namespace copol
