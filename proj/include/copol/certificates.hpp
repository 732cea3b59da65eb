#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "copol/checked_int.hpp"

namespace copol {

/// Finite-difference tower of an integer polynomial sequence at a start
/// point. If f has degree <= d, then tower[j] = Delta^j f(start) > 0 for all
/// j in 0..d proves f(k) > 0 and strictly increasing for every k >= start:
/// the top difference is constant, so each lower level stays positive by
/// induction. The constancy of the top level and the vanishing of level d+1
/// are spot-checked numerically; the degree itself is a property of the
/// scanned constraint.
struct TailCertificate {
  Int start = 0;
  int degree = 0;
  std::vector<Int> tower;
  bool valid = false;

  std::string str() const {
    std::ostringstream os;
    os << "tail(k>=" << start << "): d^j=";
    for (std::size_t j = 0; j < tower.size(); ++j) os << (j ? "," : "") << tower[j];
    os << (valid ? " all>0" : " INVALID");
    return os.str();
  }
};

inline TailCertificate certify_tail_positive(const std::function<Int(Int)>& f, Int start, int degree) {
  TailCertificate cert;
  cert.start = start;
  cert.degree = degree;
  // full difference table over a window of degree+3 samples
  std::vector<std::vector<Int>> table;
  {
    std::vector<Int> row;
    for (int i = 0; i <= degree + 2; ++i) row.push_back(f(checked_add(start, i)));
    table.push_back(std::move(row));
  }
  for (int level = 1; level <= degree + 1; ++level) {
    const auto& prev = table.back();
    std::vector<Int> next;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(checked_sub(prev[i + 1], prev[i]));
    table.push_back(std::move(next));
  }
  for (int j = 0; j <= degree; ++j) cert.tower.push_back(table[static_cast<std::size_t>(j)][0]);
  // effective degree e: rows above it vanish on the window, rows up to it
  // start positive. degree is an upper bound supplied by the caller.
  auto row_zero = [&](int level) {
    for (Int v : table[static_cast<std::size_t>(level)])
      if (v != 0) return false;
    return true;
  };
  bool ok = row_zero(degree + 1);
  int e = degree;
  while (e >= 0 && row_zero(e)) --e;
  if (e < 0) ok = false;  // identically zero on the window is not positive
  for (int j = 0; ok && j <= e; ++j)
    if (cert.tower[static_cast<std::size_t>(j)] <= 0) ok = false;
  if (e >= 0) cert.tower.resize(static_cast<std::size_t>(e) + 1);  // drop vanishing top levels
  cert.valid = ok;
  return cert;
}

enum class DioConstraint { N2PlusNEq4, N2MinusNEq4, N2Eq5 };

inline const char* dio_name(DioConstraint c) {
  switch (c) {
    case DioConstraint::N2PlusNEq4: return "n^2+n=4";
    case DioConstraint::N2MinusNEq4: return "n^2-n=4";
    case DioConstraint::N2Eq5: return "n^2=5";
  }
  return "?";
}

struct DioResult {
  DioConstraint constraint = DioConstraint::N2Eq5;
  Int bound = 0;
  std::vector<Int> solutions;        // positive solutions up to bound, expected empty
  Int bracket_last_below = 0;        // last n with p(n) < target
  Int bracket_first_above = 0;       // first n with p(n) > target
  TailCertificate increasing_tail;   // p(n) - target positive and increasing past the bracket
  /// Empty for every positive n, not just up to the bound: the scan found
  /// nothing, the bracket is a consecutive pair, and the tail keeps growing.
  bool certified_empty() const {
    return solutions.empty() && bracket_first_above == bracket_last_below + 1 && increasing_tail.valid;
  }
  std::string certificate_str() const {
    std::ostringstream os;
    os << dio_name(constraint) << ": p(" << bracket_last_below << ")<target<p(" << bracket_first_above
       << "), " << increasing_tail.str();
    return os.str();
  }
};

/// All positive integer solutions up to bound, plus a bracketing certificate:
/// the polynomial passes the target strictly between consecutive integers and
/// keeps increasing, so no solution exists at any n, bounded or not.
inline DioResult diophantine_empty(DioConstraint c, Int bound) {
  if (bound < 1) throw std::invalid_argument("diophantine scan bound must be >= 1");
  auto p = [c](Int n) -> Int {
    switch (c) {
      case DioConstraint::N2PlusNEq4: return checked_add(checked_mul(n, n), n);
      case DioConstraint::N2MinusNEq4: return checked_sub(checked_mul(n, n), n);
      case DioConstraint::N2Eq5: return checked_mul(n, n);
    }
    return 0;
  };
  const Int target = (c == DioConstraint::N2Eq5) ? 5 : 4;
  DioResult res;
  res.constraint = c;
  res.bound = bound;
  for (Int n = 1; n <= bound; ++n)
    if (p(n) == target) res.solutions.push_back(n);
  Int last_below = 0, first_above = 0;
  for (Int n = 1;; ++n) {
    Int v = p(n);
    if (v < target) last_below = n;
    if (v > target) {
      first_above = n;
      break;
    }
    if (n > bound) break;
  }
  res.bracket_last_below = last_below;
  res.bracket_first_above = first_above;
  res.increasing_tail =
      certify_tail_positive([&](Int n) { return checked_sub(p(n), target); }, first_above, 2);
  return res;
}

}  // namespace copol
