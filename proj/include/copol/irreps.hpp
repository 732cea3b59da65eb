#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "copol/checked_int.hpp"
#include "copol/laurent.hpp"
#include "copol/root_data.hpp"

namespace copol {

/// Whether the real representation is a real form of the complex irreducible
/// (real dim = complex dim) or its realification (real dim = 2 x complex dim).
/// This is input data, not computed: the real form occurs only for the
/// self-conjugate A2 family with a == b and no circle, and any group with a
/// central circle is of complex type.
enum class Reality { RealForm, ComplexType };

struct IrrepDescriptor {
  GroupType group;
  Weight highest_weight;
  Reality reality = Reality::ComplexType;
};

inline void check_irrep(const IrrepDescriptor& r) {
  check_weight(r.group, r.highest_weight);
  if (!is_dominant(r.group, r.highest_weight))
    throw std::invalid_argument("highest weight must be dominant");
  if (r.group.central_circle && r.reality == Reality::RealForm)
    throw std::invalid_argument("a central circle forces complex type");
}

/// Finite multiset of weights with multiplicities plus realification metadata.
struct WeightDiagram {
  GroupType group;
  Reality reality = Reality::ComplexType;
  std::optional<Weight> highest;
  std::map<Weight, Int> entries;

  Int complex_dim() const {
    Int s = 0;
    for (const auto& [w, m] : entries) s = checked_add(s, m);
    return s;
  }
  Int real_dim() const {
    Int c = complex_dim();
    return reality == Reality::ComplexType ? checked_mul(2, c) : c;
  }
  Int realify(Int complex_count) const {
    return reality == Reality::ComplexType ? checked_mul(2, complex_count) : complex_count;
  }
  Int multiplicity(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
  Int max_multiplicity() const {
    Int m = 0;
    for (const auto& [w, c] : entries) m = std::max(m, c);
    return m;
  }
};

/// Complex dimension by the Weyl dimension formula: A1 factor with coordinate
/// c contributes c+1, an A2 factor with (a,b) contributes
/// (a+1)(b+1)(a+b+2)/2, the circle contributes 1, factors multiply.
inline Int weyl_dim(const IrrepDescriptor& rep) {
  check_irrep(rep);
  Int d = 1;
  int pos = 0;
  for (auto f : rep.group.factors) {
    if (f == SimpleFactor::A1) {
      Int c = rep.highest_weight.coords[static_cast<std::size_t>(pos)];
      d = checked_mul(d, checked_add(c, 1));
      pos += 1;
    } else {
      Int a = rep.highest_weight.coords[static_cast<std::size_t>(pos)];
      Int b = rep.highest_weight.coords[static_cast<std::size_t>(pos) + 1];
      Int t = checked_mul(checked_add(a, 1), checked_add(b, 1));
      t = checked_mul(t, checked_add(checked_add(a, b), 2));
      d = checked_mul(d, exact_div(t, 2));
      pos += 2;
    }
  }
  return d;
}

namespace detail {

// Dominant weights mu <= highest (difference in the positive root cone),
// enumerated per factor and combined.
inline std::vector<Weight> dominant_candidates(const IrrepDescriptor& rep) {
  const GroupType& g = rep.group;
  std::vector<std::vector<std::vector<Int>>> per_factor;  // factor -> list of coord blocks
  int pos = 0;
  for (auto f : g.factors) {
    std::vector<std::vector<Int>> blocks;
    if (f == SimpleFactor::A1) {
      Int m = rep.highest_weight.coords[static_cast<std::size_t>(pos)];
      for (Int c = 0; 2 * c <= m; ++c) blocks.push_back({m - 2 * c});
      pos += 1;
    } else {
      Int a = rep.highest_weight.coords[static_cast<std::size_t>(pos)];
      Int b = rep.highest_weight.coords[static_cast<std::size_t>(pos) + 1];
      Int cap = checked_add(a, b);
      for (Int c1 = 0; c1 <= cap; ++c1)
        for (Int c2 = 0; c2 <= cap; ++c2) {
          Int x = a - 2 * c1 + c2, y = b + c1 - 2 * c2;
          if (x >= 0 && y >= 0) blocks.push_back({x, y});
        }
      pos += 2;
    }
    per_factor.push_back(std::move(blocks));
  }
  std::vector<std::vector<Int>> combos{{}};
  for (const auto& blocks : per_factor) {
    std::vector<std::vector<Int>> next;
    for (const auto& head : combos)
      for (const auto& blk : blocks) {
        auto v = head;
        v.insert(v.end(), blk.begin(), blk.end());
        next.push_back(std::move(v));
      }
    combos = std::move(next);
  }
  std::vector<Weight> out;
  out.reserve(combos.size());
  for (auto& v : combos) out.push_back(Weight{std::move(v), rep.highest_weight.central_charge});
  return out;
}

}  // namespace detail

/// Full multiplicity map via the Freudenthal recursion, descending from the
/// highest weight by positive roots and closed under the Weyl group. The
/// recursion denominator is asserted positive away from the highest weight.
inline WeightDiagram freudenthal_diagram(const IrrepDescriptor& rep) {
  check_irrep(rep);
  const GroupType& g = rep.group;
  const Weight top = rep.highest_weight;
  const Weight rr = rho(g);
  const auto roots = positive_roots(g);

  auto add = [&](const Weight& a, const Weight& b, Int k) {
    Weight out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
      out.coords[i] = checked_add(out.coords[i], checked_mul(k, b.coords[i]));
    return out;
  };
  const Weight top_rho = add(top, rr, 1);
  const Int norm_top = ip6(g, top_rho, top_rho);

  std::map<Weight, Int> mult;  // dominant weights only; per-call memo
  std::map<Weight, char> in_set;
  for (const auto& cand : detail::dominant_candidates(rep)) in_set[cand] = 1;

  // Height order guarantees every weight needed on the right-hand side is
  // already computed.
  std::vector<std::pair<Int, Weight>> order;
  for (const auto& [cand, tag] : in_set) {
    Weight diff = add(top, cand, -1);
    auto cone = positive_root_cone_coords(g, diff);
    if (!cone) throw std::logic_error("dominant candidate outside root cone");
    Int h = 0;
    for (Int c : *cone) h = checked_add(h, c);
    order.emplace_back(h, cand);
  }
  std::sort(order.begin(), order.end());

  for (const auto& [height, mu] : order) {
    if (mu == top) {
      mult[mu] = 1;
      continue;
    }
    Int numer = 0;
    for (const auto& alpha : roots) {
      for (Int k = 1;; ++k) {
        Weight nu = add(mu, alpha, k);
        Weight diff = add(top, nu, -1);
        if (!positive_root_cone_coords(g, diff)) break;
        Weight dom = dominant_representative(g, Weight{nu.coords, 0});
        dom.central_charge = nu.central_charge;
        auto it = mult.find(dom);
        if (it != mult.end() && it->second > 0)
          numer = checked_add(numer, checked_mul(it->second, ip6(g, nu, alpha)));
      }
    }
    Weight mu_rho = add(mu, rr, 1);
    Int denom = checked_sub(norm_top, ip6(g, mu_rho, mu_rho));
    if (denom <= 0) throw std::logic_error("freudenthal denominator not positive");
    Int m = exact_div(checked_mul(2, numer), denom);
    if (m > 0) mult[mu] = m;
  }

  WeightDiagram diag;
  diag.group = g;
  diag.reality = rep.reality;
  diag.highest = top;
  for (const auto& [mu, m] : mult)
    for (const auto& w : weyl_orbit(g, mu)) diag.entries[w] = m;
  return diag;
}

/// Independent oracle: the Weyl character as an exact Laurent polynomial in
/// the fundamental-weight exponents (semisimple coordinates only; the central
/// charge is constant across an irreducible and is omitted). Coefficients are
/// the weight multiplicities; the defining division must be exact.
inline Laurent character_polynomial(const IrrepDescriptor& rep) {
  check_irrep(rep);
  const GroupType& g = rep.group;
  if (g.semisimple_rank() == 0) return Laurent::monomial({}, 1);
  const Weight rr = rho(g);
  Weight top_rho = rep.highest_weight;
  for (std::size_t i = 0; i < top_rho.coords.size(); ++i)
    top_rho.coords[i] = checked_add(top_rho.coords[i], 1);

  Laurent numer, denom;
  for (const auto& w : weyl_elements(g)) {
    numer.add_term(apply_weyl(g, w, top_rho).coords, w.sign);
    denom.add_term(apply_weyl(g, w, rr).coords, w.sign);
  }
  return divide_exact(numer, denom);
}

enum class ShellKind { Hexagon, Triangle, Point };

struct Shell {
  ShellKind kind = ShellKind::Point;
  int index = 0;
  Int multiplicity = 1;
  Int weight_count = 1;
};

struct ShellDecomposition {
  std::vector<Shell> shells;
  Int total() const {
    Int t = 0;
    for (const auto& s : shells) t = checked_add(t, checked_mul(s.multiplicity, s.weight_count));
    return t;
  }
};

/// Concentric-shell description of the A2 diagram with highest weight (a,b),
/// a >= b after applying the (a,b) -> (b,a) diagram symmetry: hexagons
/// H_0..H_{b-1} with multiplicity i+1 and 3(a+b)-6i weights, then triangles
/// with multiplicity b+1; the innermost triangle collapses to a point when
/// a-b is divisible by 3.
inline ShellDecomposition su3_shells(Int a, Int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative highest weight");
  if (a < b) std::swap(a, b);
  ShellDecomposition out;
  for (Int i = 0; i < b; ++i)
    out.shells.push_back(Shell{ShellKind::Hexagon, static_cast<int>(i), i + 1,
                               checked_sub(checked_mul(3, checked_add(a, b)), checked_mul(6, i))});
  const Int c = a - b;
  for (Int j = 0; 3 * j <= c; ++j) {
    Int side = c - 3 * j;
    if (side > 0)
      out.shells.push_back(Shell{ShellKind::Triangle, static_cast<int>(j), b + 1, checked_mul(3, side)});
    else
      out.shells.push_back(Shell{ShellKind::Point, static_cast<int>(j), b + 1, 1});
  }
  return out;
}

/// Weight diagram of C (x) C^m (x) C^n under U(1) x SU(2) x SU(2): the mn
/// weights (j,k), j in {m-1, m-3, ..., -(m-1)} and likewise k, multiplicity 1,
/// central charge 1 when charged.
inline WeightDiagram tensor_rep_diagram(Int m, Int n, bool charged) {
  if (m < 1 || n < 1) throw std::invalid_argument("tensor factors must be positive");
  WeightDiagram diag;
  diag.group = GroupType{{SimpleFactor::A1, SimpleFactor::A1}, charged};
  diag.reality = Reality::ComplexType;
  diag.highest = Weight{{m - 1, n - 1}, charged ? 1 : 0};
  for (Int j = m - 1; j >= -(m - 1); j -= 2)
    for (Int k = n - 1; k >= -(n - 1); k -= 2) diag.entries[Weight{{j, k}, charged ? 1 : 0}] = 1;
  return diag;
}

}  // namespace copol
