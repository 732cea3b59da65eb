#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "copol/checked_int.hpp"

namespace copol {

enum class SimpleFactor { A1, A2 };

inline int factor_rank(SimpleFactor f) { return f == SimpleFactor::A1 ? 1 : 2; }
inline Int factor_group_dim(SimpleFactor f) { return f == SimpleFactor::A1 ? 3 : 8; }
inline const char* factor_name(SimpleFactor f) { return f == SimpleFactor::A1 ? "A1" : "A2"; }

/// Product of A1/A2 simple factors with an optional central circle.
struct GroupType {
  std::vector<SimpleFactor> factors;
  bool central_circle = false;

  int semisimple_rank() const {
    int r = 0;
    for (auto f : factors) r += factor_rank(f);
    return r;
  }
  int rank() const { return semisimple_rank() + (central_circle ? 1 : 0); }
  Int dimension() const {
    Int d = central_circle ? 1 : 0;
    for (auto f : factors) d = checked_add(d, factor_group_dim(f));
    return d;
  }
  /// Length of the diagonal exponent presentation: 1 slot per circle or A1
  /// factor, 3 slots per A2 factor.
  int e_size() const {
    int n = central_circle ? 1 : 0;
    for (auto f : factors) n += (f == SimpleFactor::A1 ? 1 : 3);
    return n;
  }
  std::string name() const {
    std::string s = central_circle ? "U1" : "";
    for (auto f : factors) {
      if (!s.empty()) s += "x";
      s += factor_name(f);
    }
    return s.empty() ? "trivial" : s;
  }
  friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Integral weight in the fundamental-weight basis (one coordinate block per
/// simple factor) plus the central-circle charge, 0 when there is no circle.
struct Weight {
  std::vector<Int> coords;
  Int central_charge = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& x, const Weight& y) {
    if (x.central_charge != y.central_charge) return x.central_charge < y.central_charge;
    return x.coords < y.coords;
  }
};

inline void check_weight(const GroupType& g, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != g.semisimple_rank())
    throw std::invalid_argument("weight coordinate length does not match group rank");
  if (!g.central_circle && w.central_charge != 0)
    throw std::invalid_argument("nonzero central charge without a central circle");
}

/// Coordinates paired against RationalDirection covectors: the central charge
/// slot comes first when the group has a circle, then the factor blocks.
inline std::vector<Int> full_coords(const GroupType& g, const Weight& w) {
  check_weight(g, w);
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(g.rank()));
  if (g.central_circle) v.push_back(w.central_charge);
  v.insert(v.end(), w.coords.begin(), w.coords.end());
  return v;
}

/// Primitive sign-normalized integer covector. Pairs with full_coords(), so
/// its length is the group rank (charge slot first when a circle is present).
struct RationalDirection {
  std::vector<Int> numerators;
  bool reduced = false;

  void normalize() {
    Int g = 0;
    for (Int x : numerators) g = gcd_int(g, x);
    if (g == 0) throw std::invalid_argument("zero direction vector");
    for (Int& x : numerators) x /= g;
    for (Int x : numerators) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : numerators) y = -y;
      break;
    }
    reduced = true;
  }

  friend bool operator==(const RationalDirection&, const RationalDirection&) = default;
  friend bool operator<(const RationalDirection& a, const RationalDirection& b) {
    return a.numerators < b.numerators;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(numerators[i]);
    }
    return s + ")";
  }
};

inline RationalDirection make_direction(std::vector<Int> nums) {
  RationalDirection d{std::move(nums), false};
  d.normalize();
  return d;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline std::vector<std::vector<Int>> cartan_matrix(SimpleFactor f) {
  if (f == SimpleFactor::A1) return {{2}};
  return {{2, -1}, {-1, 2}};
}

/// <mu, alpha_i^vee> in the fundamental-weight basis: the i-th coordinate.
inline Int pairing(const GroupType& g, const Weight& mu, int coroot_index) {
  check_weight(g, mu);
  if (coroot_index < 0 || coroot_index >= g.semisimple_rank())
    throw std::out_of_range("coroot index out of range");
  return mu.coords[static_cast<std::size_t>(coroot_index)];
}

namespace detail {

// Offset of each factor's coordinate block.
inline std::vector<int> factor_offsets(const GroupType& g) {
  std::vector<int> off;
  int pos = 0;
  for (auto f : g.factors) {
    off.push_back(pos);
    pos += factor_rank(f);
  }
  return off;
}

}  // namespace detail

inline std::vector<Weight> simple_roots(const GroupType& g) {
  std::vector<Weight> roots;
  const int r = g.semisimple_rank();
  int pos = 0;
  for (auto f : g.factors) {
    auto cm = cartan_matrix(f);
    for (int i = 0; i < factor_rank(f); ++i) {
      Weight w{std::vector<Int>(static_cast<std::size_t>(r), 0), 0};
      for (int j = 0; j < factor_rank(f); ++j)
        w.coords[static_cast<std::size_t>(pos + j)] = cm[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      roots.push_back(std::move(w));
    }
    pos += factor_rank(f);
  }
  return roots;
}

/// Positive roots in fundamental-weight coordinates, central charge 0.
inline std::vector<Weight> positive_roots(const GroupType& g) {
  std::vector<Weight> roots;
  const int r = g.semisimple_rank();
  int pos = 0;
  for (auto f : g.factors) {
    auto put = [&](std::vector<Int> bloc) {
      Weight w{std::vector<Int>(static_cast<std::size_t>(r), 0), 0};
      for (std::size_t j = 0; j < bloc.size(); ++j) w.coords[static_cast<std::size_t>(pos) + j] = bloc[j];
      roots.push_back(std::move(w));
    };
    if (f == SimpleFactor::A1) {
      put({2});
    } else {
      put({2, -1});
      put({-1, 2});
      put({1, 1});
    }
    pos += factor_rank(f);
  }
  return roots;
}

inline Weight simple_reflection(const GroupType& g, int i, const Weight& mu) {
  Int c = pairing(g, mu, i);
  Weight out = mu;
  const Weight alpha = simple_roots(g)[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < out.coords.size(); ++j)
    out.coords[j] = checked_sub(out.coords[j], checked_mul(c, alpha.coords[j]));
  return out;
}

inline bool is_dominant(const GroupType& g, const Weight& mu) {
  check_weight(g, mu);
  return std::all_of(mu.coords.begin(), mu.coords.end(), [](Int c) { return c >= 0; });
}

inline Weight dominant_representative(const GroupType& g, Weight mu) {
  check_weight(g, mu);
  const auto roots = simple_roots(g);
  for (int guard = 0; guard < 100000; ++guard) {
    int neg = -1;
    for (int i = 0; i < g.semisimple_rank(); ++i)
      if (mu.coords[static_cast<std::size_t>(i)] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return mu;
    Int c = mu.coords[static_cast<std::size_t>(neg)];
    for (std::size_t j = 0; j < mu.coords.size(); ++j)
      mu.coords[j] = checked_sub(mu.coords[j], checked_mul(c, roots[static_cast<std::size_t>(neg)].coords[j]));
  }
  throw std::logic_error("dominant_representative did not terminate");
}

/// Orbit under the product Weyl group; the central charge is fixed.
inline std::set<Weight> weyl_orbit(const GroupType& g, const Weight& mu) {
  check_weight(g, mu);
  std::set<Weight> orbit{mu};
  std::vector<Weight> frontier{mu};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier)
      for (int i = 0; i < g.semisimple_rank(); ++i) {
        Weight img = simple_reflection(g, i, w);
        if (orbit.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return orbit;
}

/// 6x the Weyl-invariant form normalized so every root has squared length 2.
/// The factor 6 clears the A1 (1/2) and A2 (1/3) denominators, so all values
/// are integers; the central charge does not enter.
inline Int ip6(const GroupType& g, const Weight& a, const Weight& b) {
  check_weight(g, a);
  check_weight(g, b);
  Int s = 0;
  int pos = 0;
  for (auto f : g.factors) {
    if (f == SimpleFactor::A1) {
      s = checked_add(s, checked_mul(3, checked_mul(a.coords[static_cast<std::size_t>(pos)],
                                                    b.coords[static_cast<std::size_t>(pos)])));
      pos += 1;
    } else {
      Int x1 = a.coords[static_cast<std::size_t>(pos)], y1 = a.coords[static_cast<std::size_t>(pos) + 1];
      Int x2 = b.coords[static_cast<std::size_t>(pos)], y2 = b.coords[static_cast<std::size_t>(pos) + 1];
      // 6 * (2/3 x1x2 + 1/3 (x1y2 + y1x2) + 2/3 y1y2)
      Int t = checked_mul(4, checked_mul(x1, x2));
      t = checked_add(t, checked_mul(2, checked_mul(x1, y2)));
      t = checked_add(t, checked_mul(2, checked_mul(y1, x2)));
      t = checked_add(t, checked_mul(4, checked_mul(y1, y2)));
      s = checked_add(s, t);
      pos += 2;
    }
  }
  return s;
}

inline Weight rho(const GroupType& g) {
  return Weight{std::vector<Int>(static_cast<std::size_t>(g.semisimple_rank()), 1), 0};
}

/// Expresses diff as a nonnegative integer combination of simple roots,
/// returning the coefficients, or nullopt when diff is outside the cone.
inline std::optional<std::vector<Int>> positive_root_cone_coords(const GroupType& g, const Weight& diff) {
  check_weight(g, diff);
  std::vector<Int> c;
  int pos = 0;
  for (auto f : g.factors) {
    if (f == SimpleFactor::A1) {
      Int d = diff.coords[static_cast<std::size_t>(pos)];
      if (d % 2 != 0 || d < 0) return std::nullopt;
      c.push_back(d / 2);
      pos += 1;
    } else {
      Int dx = diff.coords[static_cast<std::size_t>(pos)], dy = diff.coords[static_cast<std::size_t>(pos) + 1];
      Int n1 = checked_add(checked_mul(2, dx), dy);
      Int n2 = checked_add(dx, checked_mul(2, dy));
      if (n1 % 3 != 0 || n2 % 3 != 0) return std::nullopt;
      Int c1 = n1 / 3, c2 = n2 / 3;
      if (c1 < 0 || c2 < 0) return std::nullopt;
      c.push_back(c1);
      c.push_back(c2);
      pos += 2;
    }
  }
  return c;
}

/// One Weyl group element of a product group: an index into the per-factor
/// element table for each factor, with det(w) attached.
struct WeylElement {
  std::vector<int> factor_index;
  int sign = 1;
};

namespace detail {

// Row-major 2x2 matrices of the six A2 Weyl elements in the fundamental-weight
// basis, with determinant signs.
struct A2Elt {
  std::array<Int, 4> m;
  int sign;
};
inline const std::array<A2Elt, 6>& a2_table() {
  static const std::array<A2Elt, 6> t = {{
      {{1, 0, 0, 1}, +1},    // id
      {{-1, 0, 1, 1}, -1},   // s1
      {{1, 1, 0, -1}, -1},   // s2
      {{-1, -1, 1, 0}, +1},  // s1 s2
      {{0, 1, -1, -1}, +1},  // s2 s1
      {{0, -1, -1, 0}, -1},  // longest element
  }};
  return t;
}

}  // namespace detail

inline std::vector<WeylElement> weyl_elements(const GroupType& g) {
  std::vector<WeylElement> out{{std::vector<int>{}, 1}};
  for (auto f : g.factors) {
    const int count = (f == SimpleFactor::A1) ? 2 : 6;
    std::vector<WeylElement> next;
    next.reserve(out.size() * static_cast<std::size_t>(count));
    for (const auto& e : out)
      for (int i = 0; i < count; ++i) {
        WeylElement e2 = e;
        e2.factor_index.push_back(i);
        int s;
        if (f == SimpleFactor::A1)
          s = (i == 0) ? 1 : -1;
        else
          s = detail::a2_table()[static_cast<std::size_t>(i)].sign;
        e2.sign *= s;
        next.push_back(std::move(e2));
      }
    out = std::move(next);
  }
  return out;
}

inline Weight apply_weyl(const GroupType& g, const WeylElement& e, const Weight& mu) {
  check_weight(g, mu);
  if (e.factor_index.size() != g.factors.size())
    throw std::invalid_argument("weyl element does not match group");
  Weight out = mu;
  int pos = 0;
  for (std::size_t k = 0; k < g.factors.size(); ++k) {
    if (g.factors[k] == SimpleFactor::A1) {
      if (e.factor_index[k] == 1)
        out.coords[static_cast<std::size_t>(pos)] = -out.coords[static_cast<std::size_t>(pos)];
      pos += 1;
    } else {
      const auto& m = detail::a2_table()[static_cast<std::size_t>(e.factor_index[k])].m;
      Int x = out.coords[static_cast<std::size_t>(pos)], y = out.coords[static_cast<std::size_t>(pos) + 1];
      out.coords[static_cast<std::size_t>(pos)] = checked_add(checked_mul(m[0], x), checked_mul(m[1], y));
      out.coords[static_cast<std::size_t>(pos) + 1] = checked_add(checked_mul(m[2], x), checked_mul(m[3], y));
      pos += 2;
    }
  }
  return out;
}

}  // namespace copol
