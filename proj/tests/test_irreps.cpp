#include "doctest.h"

#include "copol/irreps.hpp"

using namespace copol;

namespace {

const GroupType kA2{{SimpleFactor::A2}, false};

IrrepDescriptor su3(Int a, Int b, bool charged = false) {
  return IrrepDescriptor{GroupType{{SimpleFactor::A2}, charged},
                         Weight{{a, b}, charged ? Int(1) : Int(0)},
                         (!charged && a == b) ? Reality::RealForm : Reality::ComplexType};
}

// Multiplicity map read off the character polynomial (the independent path).
std::map<Weight, Int> character_map(const IrrepDescriptor& rep) {
  std::map<Weight, Int> out;
  for (const auto& [e, c] : character_polynomial(rep).terms)
    out[Weight{e, rep.highest_weight.central_charge}] = c;
  return out;
}

}  // namespace

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim(su3(1, 0)) == 3);
  CHECK(weyl_dim(su3(1, 1)) == 8);  // (a+1)^3 at a=1
  CHECK(weyl_dim(su3(0, 0)) == 1);
  CHECK(weyl_dim(su3(2, 0)) == 6);
  CHECK(weyl_dim(su3(8, 8)) == 729);
  // realified bookkeeping
  CHECK(freudenthal_diagram(su3(1, 0)).real_dim() == 6);
  CHECK(freudenthal_diagram(su3(1, 1)).real_dim() == 8);  // real form
  // A1 factor of coordinate m-1 has dimension m; factors multiply
  IrrepDescriptor pair{GroupType{{SimpleFactor::A1, SimpleFactor::A1}, true}, Weight{{1, 2}, 1},
                       Reality::ComplexType};
  CHECK(weyl_dim(pair) == 6);
  CHECK_THROWS_AS(weyl_dim(IrrepDescriptor{kA2, Weight{{-1, 0}, 0}, Reality::ComplexType}),
                  std::invalid_argument);
}

TEST_CASE("freudenthal diagram of the adjoint") {
  WeightDiagram d = freudenthal_diagram(su3(1, 1));
  CHECK(d.complex_dim() == 8);
  CHECK(d.multiplicity(Weight{{0, 0}, 0}) == 2);
  // zero-weight multiplicity agrees with the character constant term
  CHECK(character_polynomial(su3(1, 1)).coefficient({0, 0}) == 2);
  // six roots of multiplicity one
  int ones = 0;
  for (const auto& [w, m] : d.entries)
    if (m == 1) ++ones;
  CHECK(ones == 6);
}

TEST_CASE("minuscule representation has all multiplicities one") {
  WeightDiagram d = freudenthal_diagram(su3(1, 0));
  CHECK(d.entries.size() == 3);
  for (const auto& [w, m] : d.entries) CHECK(m == 1);
}

TEST_CASE("zero-weight multiplicity of pi_{a,a} is a+1") {
  for (Int a = 0; a <= 4; ++a)
    CHECK(freudenthal_diagram(su3(a, a)).multiplicity(Weight{{0, 0}, 0}) == a + 1);
}

TEST_CASE("character polynomial basics") {
  CHECK(character_polynomial(su3(0, 0)) == Laurent::monomial({0, 0}, 1));
  const Laurent c10 = character_polynomial(su3(1, 0));
  CHECK(c10.terms.size() == 3);
  for (const auto& [e, c] : c10.terms) CHECK(c == 1);
}

TEST_CASE("freudenthal and character agree as full maps") {
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; b <= 4; ++b) {
      IrrepDescriptor rep = su3(a, b);
      WeightDiagram d = freudenthal_diagram(rep);
      auto cm = character_map(rep);
      CHECK(d.entries == cm);
    }
}

TEST_CASE("diagram dimension equals the Weyl dimension formula") {
  for (Int a = 0; a <= 5; ++a)
    for (Int b = 0; b <= 5; ++b) CHECK(freudenthal_diagram(su3(a, b)).complex_dim() == weyl_dim(su3(a, b)));
}

TEST_CASE("diagrams are Weyl invariant and lie below the highest weight") {
  for (auto [a, b] : {std::pair<Int, Int>{3, 1}, {2, 2}, {4, 0}}) {
    IrrepDescriptor rep = su3(a, b);
    WeightDiagram d = freudenthal_diagram(rep);
    for (const auto& [w, m] : d.entries) {
      for (const auto& e : weyl_elements(kA2)) CHECK(d.multiplicity(apply_weyl(kA2, e, w)) == m);
      Weight diff{{rep.highest_weight.coords[0] - w.coords[0], rep.highest_weight.coords[1] - w.coords[1]}, 0};
      CHECK(positive_root_cone_coords(kA2, diff).has_value());
    }
    CHECK(d.multiplicity(rep.highest_weight) == 1);
  }
}

TEST_CASE("pi_{a,a} diagrams are symmetric under global negation") {
  for (Int a = 1; a <= 3; ++a) {
    WeightDiagram d = freudenthal_diagram(su3(a, a));
    for (const auto& [w, m] : d.entries) CHECK(d.multiplicity(Weight{{-w.coords[0], -w.coords[1]}, 0}) == m);
  }
}

TEST_CASE("su3 shells") {
  ShellDecomposition s11 = su3_shells(1, 1);
  REQUIRE(s11.shells.size() == 2);
  CHECK(s11.shells[0].kind == ShellKind::Hexagon);
  CHECK(s11.shells[0].multiplicity == 1);
  CHECK(s11.shells[0].weight_count == 6);
  CHECK(s11.shells[1].kind == ShellKind::Point);
  CHECK(s11.shells[1].multiplicity == 2);
  CHECK(s11.total() == 8);

  ShellDecomposition s10 = su3_shells(1, 0);
  REQUIRE(s10.shells.size() == 1);
  CHECK(s10.shells[0].kind == ShellKind::Triangle);
  CHECK(s10.shells[0].weight_count == 3);
  CHECK(s10.shells[0].multiplicity == 1);

  ShellDecomposition s30 = su3_shells(3, 0);
  REQUIRE(s30.shells.size() == 2);
  CHECK(s30.shells[0].kind == ShellKind::Triangle);
  CHECK(s30.shells[0].weight_count == 9);
  CHECK(s30.shells[1].kind == ShellKind::Point);
  CHECK(s30.total() == 10);
  CHECK(s30.total() == freudenthal_diagram(su3(3, 0)).complex_dim());

  CHECK_THROWS_AS(su3_shells(-1, 0), std::invalid_argument);
}

TEST_CASE("shell totals match the dimension formula") {
  for (Int a = 0; a <= 6; ++a)
    for (Int b = 0; b <= 6; ++b) CHECK(su3_shells(a, b).total() == weyl_dim(su3(std::max(a, b), std::min(a, b))));
}

TEST_CASE("shell multiplicities match the freudenthal diagram") {
  // multiset of multiplicities: shells give (count x mult) pairs
  for (auto [a, b] : {std::pair<Int, Int>{2, 1}, {3, 1}, {2, 2}}) {
    std::map<Int, Int> shell_hist;
    for (const auto& s : su3_shells(a, b).shells) shell_hist[s.multiplicity] += s.weight_count;
    std::map<Int, Int> diag_hist;
    for (const auto& [w, m] : freudenthal_diagram(su3(a, b)).entries) diag_hist[m] += 1;
    CHECK(shell_hist == diag_hist);
  }
}

TEST_CASE("tensor representation diagram") {
  WeightDiagram d22 = tensor_rep_diagram(2, 2, true);
  CHECK(d22.entries.size() == 4);
  for (Int j : {-1, 1})
    for (Int k : {-1, 1}) CHECK(d22.multiplicity(Weight{{j, k}, 1}) == 1);

  WeightDiagram d23 = tensor_rep_diagram(2, 3, true);
  CHECK(d23.complex_dim() == 6);
  CHECK(d23.real_dim() == 12);

  for (Int m = 1; m <= 6; ++m)
    for (Int n = 1; n <= 6; ++n) CHECK(tensor_rep_diagram(m, n, true).complex_dim() == m * n);

  CHECK_THROWS_AS(tensor_rep_diagram(0, 2, true), std::invalid_argument);
}

TEST_CASE("tensor diagram agrees with the freudenthal construction") {
  for (Int m = 1; m <= 4; ++m)
    for (Int n = 1; n <= 4; ++n) {
      IrrepDescriptor rep{GroupType{{SimpleFactor::A1, SimpleFactor::A1}, true}, Weight{{m - 1, n - 1}, 1},
                          Reality::ComplexType};
      CHECK(tensor_rep_diagram(m, n, true).entries == freudenthal_diagram(rep).entries);
    }
}

TEST_CASE("irrep validation") {
  CHECK_THROWS_AS(check_irrep(IrrepDescriptor{GroupType{{SimpleFactor::A2}, true}, Weight{{1, 1}, 1},
                                              Reality::RealForm}),
                  std::invalid_argument);
}
