#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "copol/checked_int.hpp"
#include "copol/cyclotomic.hpp"
#include "copol/irreps.hpp"
#include "copol/root_data.hpp"

namespace copol {

/// Diagonalized torus element exp(2*pi*i * direction / order) in the diagram's
/// exponent coordinates (one slot per circle or A1 factor, three per A2
/// factor). Each A2 block must sum to 0 mod order (determinant one).
struct TorusElement {
  std::vector<Int> direction;
  Int order = 1;

  void normalize() {
    if (order < 1) throw std::invalid_argument("torus element order must be positive");
    for (Int& d : direction) d = ((d % order) + order) % order;
  }
};

inline void check_element(const GroupType& g, const TorusElement& h) {
  if (h.order < 1) throw std::invalid_argument("torus element order must be positive");
  if (static_cast<int>(h.direction.size()) != g.e_size())
    throw std::invalid_argument("torus element coordinates do not match the diagram group");
  int pos = g.central_circle ? 1 : 0;
  for (auto f : g.factors) {
    if (f == SimpleFactor::A1) {
      pos += 1;
      continue;
    }
    Int s = checked_add(checked_add(h.direction[static_cast<std::size_t>(pos)],
                                    h.direction[static_cast<std::size_t>(pos) + 1]),
                        h.direction[static_cast<std::size_t>(pos) + 2]);
    if (((s % h.order) + h.order) % h.order != 0)
      throw std::invalid_argument("A2 block of a torus element must sum to 0 mod order");
    pos += 3;
  }
}

/// Exponent presentation of a weight against the diagonal entry slots:
/// [charge] [A1: m] [A2: (x+y, y, 0)], matching e_size(). The A2 triple is
/// well defined up to adding (1,1,1), which every valid element annihilates.
inline std::vector<Int> e_coords(const GroupType& g, const Weight& w) {
  check_weight(g, w);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(g.e_size()));
  if (g.central_circle) out.push_back(w.central_charge);
  int pos = 0;
  for (auto f : g.factors) {
    if (f == SimpleFactor::A1) {
      out.push_back(w.coords[static_cast<std::size_t>(pos)]);
      pos += 1;
    } else {
      Int x = w.coords[static_cast<std::size_t>(pos)], y = w.coords[static_cast<std::size_t>(pos) + 1];
      out.push_back(checked_add(x, y));
      out.push_back(y);
      out.push_back(0);
      pos += 2;
    }
  }
  return out;
}

enum class BoundMode { PaperBound, Exact };

inline const char* bound_mode_name(BoundMode m) { return m == BoundMode::PaperBound ? "paper" : "exact"; }

/// Outcome of a fixed-space computation. real_dim is an exact rational only
/// because one stated family bound carries a factor 4/3; Exact-mode results
/// are always integers.
struct FixedSpaceResult {
  BoundMode mode = BoundMode::Exact;
  Int complex_dim = 0;
  Rational real_dim = 0;
  std::optional<RationalDirection> witness;
};

/// Real dimension carried by the weights lying in the annihilator of dir
/// (dot product over full coordinates, central charge slot included).
inline FixedSpaceResult annihilator_fixed_dim(const WeightDiagram& diag, const RationalDirection& dir) {
  if (static_cast<int>(dir.numerators.size()) != diag.group.rank())
    throw std::invalid_argument("direction length does not match the diagram group rank");
  Int complex_count = 0;
  for (const auto& [w, m] : diag.entries)
    if (dot(full_coords(diag.group, w), dir.numerators) == 0) complex_count = checked_add(complex_count, m);
  FixedSpaceResult res;
  res.mode = BoundMode::Exact;
  res.complex_dim = complex_count;
  res.real_dim = diag.realify(complex_count);
  res.witness = dir;
  return res;
}

namespace detail {

inline std::vector<Int> cross3(const std::vector<Int>& a, const std::vector<Int>& b) {
  return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
          checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
          checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

inline bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Candidate annihilator normals: spans of <= rank-1 diagram weights,
// deduplicated as primitive sign-normalized covectors. Any annihilator
// achieving the maximum is spanned by weights it contains, so this
// enumeration is exhaustive; degenerate diagrams fall back to a search for a
// covector vanishing on at most one weight line.
inline std::set<RationalDirection> candidate_normals(const WeightDiagram& diag) {
  const int r = diag.group.rank();
  if (r != 2 && r != 3) throw std::invalid_argument("annihilator enumeration supports rank 2 and 3 only");
  std::vector<std::vector<Int>> pts;
  for (const auto& [w, m] : diag.entries) {
    auto v = full_coords(diag.group, w);
    if (!all_zero(v)) pts.push_back(std::move(v));
  }
  std::set<RationalDirection> normals;
  if (r == 2) {
    for (const auto& p : pts) normals.insert(make_direction({p[1], -p[0]}));
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto n = cross3(pts[i], pts[j]);
        if (!all_zero(n)) normals.insert(make_direction(std::move(n)));
      }
  }
  if (normals.empty()) {
    // all weights on one line (or none): search a small covector annihilating it
    std::vector<Int> base = pts.empty() ? std::vector<Int>(static_cast<std::size_t>(r), 0) : pts.front();
    const Int span = 3;
    std::vector<Int> idx(static_cast<std::size_t>(r), -span);
    while (true) {
      if (!all_zero(idx) && dot(idx, base) == 0) {
        normals.insert(make_direction(idx));
        break;
      }
      int k = 0;
      while (k < r && ++idx[static_cast<std::size_t>(k)] > span) {
        idx[static_cast<std::size_t>(k)] = -span;
        ++k;
      }
      if (k == r) break;
    }
  }
  return normals;
}

}  // namespace detail

/// Largest fixed-space dimension over circle subgroups of a maximal torus.
/// PaperBound reproduces the stated family bounds verbatim: 2 weight spaces x
/// max multiplicity x complex doubling for charged families, and the
/// hexagon/triangle shell estimate for uncharged A2, where the realification
/// branch carries the stated factor 4/3. Exact maximizes
/// annihilator_fixed_dim over every rational codimension-one annihilator,
/// with the lexicographically smallest witness direction.
inline FixedSpaceResult max_circle_fixed_dim(const WeightDiagram& diag, BoundMode mode) {
  if (diag.group.rank() < 2) throw std::invalid_argument("max_circle_fixed_dim needs group rank >= 2");
  FixedSpaceResult res;
  res.mode = mode;
  if (mode == BoundMode::PaperBound) {
    Rational bound;
    if (diag.group.central_circle) {
      bound = Rational(checked_mul(4, diag.max_multiplicity()));
    } else if (diag.group.factors == std::vector<SimpleFactor>{SimpleFactor::A2}) {
      if (!diag.highest) throw std::invalid_argument("paper bound needs the diagram's highest weight");
      Int a = diag.highest->coords[0], b = diag.highest->coords[1];
      if (a < b) std::swap(a, b);
      if (a == b) {
        bound = Rational(checked_mul(checked_add(a, 1), checked_add(a, 1)));
      } else {
        // 2b(b+1) + (4/3)(b+1)(a-b)
        Int num = checked_mul(6, checked_mul(b, checked_add(b, 1)));
        num = checked_add(num, checked_mul(4, checked_mul(checked_add(b, 1), checked_sub(a, b))));
        bound = Rational(num, 3);
      }
    } else {
      throw std::invalid_argument("no stated paper bound for this family");
    }
    Rational ambient = Rational(diag.real_dim());
    res.real_dim = bound < ambient ? bound : ambient;  // a fixed space never exceeds the ambient space
    res.complex_dim = -1;                              // not meaningful for a bound
    return res;
  }
  Int best = -1;
  RationalDirection best_dir;
  for (const auto& dir : detail::candidate_normals(diag)) {
    FixedSpaceResult r = annihilator_fixed_dim(diag, dir);
    if (r.complex_dim > best || (r.complex_dim == best && dir < best_dir)) {
      best = r.complex_dim;
      best_dir = dir;
    }
  }
  if (best < 0) {  // no candidate at all: only the zero weight can exist
    res.complex_dim = diag.complex_dim();
    res.real_dim = diag.real_dim();
    return res;
  }
  res.complex_dim = best;
  res.real_dim = diag.realify(best);
  res.witness = best_dir;
  return res;
}

/// Congruence-class sizes of <e(mu), direction> mod order; slot j is the
/// complex dimension of the zeta^j eigenspace of the element.
inline std::vector<Int> eigenspace_dims(const WeightDiagram& diag, TorusElement h) {
  h.normalize();
  check_element(diag.group, h);
  std::vector<Int> out(static_cast<std::size_t>(h.order), 0);
  for (const auto& [w, m] : diag.entries) {
    Int d = dot(e_coords(diag.group, w), h.direction);
    Int cls = ((d % h.order) + h.order) % h.order;
    out[static_cast<std::size_t>(cls)] = checked_add(out[static_cast<std::size_t>(cls)], m);
  }
  return out;
}

/// Fixed-space dimension under a finite-order torus element: the weights with
/// <e(mu), direction> = 0 mod order. For a real form the real fixed dimension
/// equals the complex fixed dimension of the complexification.
inline FixedSpaceResult element_fixed_dim(const WeightDiagram& diag, const TorusElement& h) {
  auto classes = eigenspace_dims(diag, h);
  FixedSpaceResult res;
  res.mode = BoundMode::Exact;
  res.complex_dim = classes[0];
  res.real_dim = diag.realify(classes[0]);
  return res;
}

/// Independent oracle: dim of the fixed space as the average of character
/// values over the cyclic group generated by h, evaluated exactly in
/// Z[x]/(Phi_N) with multiplicities taken from the Weyl character formula.
/// A non-integral or non-rational average signals a bug.
inline Int element_fixed_dim_oracle_from_character(const Laurent& chi, const GroupType& group,
                                                   Int central_charge, TorusElement h) {
  h.normalize();
  check_element(group, h);
  const Int n = h.order;
  CyclotomicField field(n);
  // residue class of each monomial under <e(mu), direction>
  std::vector<std::pair<Int, Int>> classes;  // (class, coefficient)
  classes.reserve(chi.terms.size());
  for (const auto& [exps, coeff] : chi.terms) {
    Weight w{exps, central_charge};
    Int d = dot(e_coords(group, w), h.direction);
    classes.emplace_back(((d % n) + n) % n, coeff);
  }
  std::vector<Int> total(field.degree(), 0);
  for (Int t = 0; t < n; ++t) {
    std::vector<Int> counts(static_cast<std::size_t>(n), 0);
    for (const auto& [cls, coeff] : classes) {
      Int j = (cls * t) % n;
      counts[static_cast<std::size_t>(j)] = checked_add(counts[static_cast<std::size_t>(j)], coeff);
    }
    auto red = field.reduce(counts);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] = checked_add(total[i], red[i]);
  }
  for (std::size_t i = 1; i < total.size(); ++i)
    if (total[i] != 0) throw std::logic_error("character average is not a rational integer");
  return exact_div(total[0], n);
}

inline Int element_fixed_dim_oracle(const IrrepDescriptor& rep, const TorusElement& h) {
  return element_fixed_dim_oracle_from_character(character_polynomial(rep), rep.group,
                                                 rep.highest_weight.central_charge, h);
}

enum class InvolutionClass { Swap, SwapConj, Conj };

/// Involution of the realified tensor space, kept with its sign for
/// reporting; only Swap's fixed dimension depends on the sign.
struct InvolutionKind {
  InvolutionClass kind = InvolutionClass::Swap;
  int sign = +1;
};

/// Closed-form real fixed dimensions on the realification of C^m (x) C^n:
/// Swap(+) -> n(n+1) (symmetric tensors), Swap(-) -> n(n-1) (skew),
/// SwapConj -> n^2 (Hermitean either sign), Conj -> mn (half of 2mn).
inline Int involution_fixed_dim(Int m, Int n, InvolutionKind w) {
  if (m < 1 || n < 1) throw std::invalid_argument("tensor factors must be positive");
  switch (w.kind) {
    case InvolutionClass::Swap:
      if (m != n) throw std::invalid_argument("swap involution needs a square tensor");
      return w.sign > 0 ? checked_mul(n, checked_add(n, 1)) : checked_mul(n, checked_sub(n, 1));
    case InvolutionClass::SwapConj:
      if (m != n) throw std::invalid_argument("swap-conjugation involution needs a square tensor");
      return checked_mul(n, n);
    case InvolutionClass::Conj:
      return checked_mul(m, n);
  }
  throw std::logic_error("unreachable");
}

}  // namespace copol
