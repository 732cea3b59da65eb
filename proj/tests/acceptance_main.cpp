// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "copol/copol.hpp"

using namespace copol;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

IrrepDescriptor su3(Int a, Int b, bool charged = false) {
  return IrrepDescriptor{GroupType{{SimpleFactor::A2}, charged},
                         Weight{{a, b}, charged ? Int(1) : Int(0)},
                         (!charged && a == b) ? Reality::RealForm : Reality::ComplexType};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

// --- criterion 1: freudenthal multiplicities == character coefficients -----
void criterion_oracle_equivalence(Criterion& c) {
  int reps = 0;
  Int largest = 0;
  for (Int a = 0; a <= 8; ++a)
    for (Int b = 0; b <= 8; ++b) {
      IrrepDescriptor rep = su3(a, b);
      WeightDiagram d = freudenthal_diagram(rep);
      std::map<Weight, Int> cm;
      for (const auto& [e, coeff] : character_polynomial(rep).terms) cm[Weight{e, 0}] = coeff;
      require(d.entries == cm, "oracle mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      largest = std::max(largest, d.complex_dim());
      ++reps;
    }
  require(largest == 729, "largest complex dimension should be 729");
  c.detail = std::to_string(reps) + " representations, largest complex dim 729, exact map equality";
}

// --- criterion 2: dimension consistency ------------------------------------
void criterion_dimension_consistency(Criterion& c) {
  for (Int a = 0; a <= 8; ++a)
    for (Int b = 0; b <= 8; ++b)
      require(freudenthal_diagram(su3(a, b)).complex_dim() == weyl_dim(su3(a, b)),
              "dimension mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (Int a = 0; a <= 6; ++a)
    for (Int b = 0; b <= 6; ++b)
      require(su3_shells(a, b).total() == weyl_dim(su3(std::max(a, b), std::min(a, b))),
              "shell total mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  c.detail = "sum of multiplicities == Weyl dimension for a,b <= 8; shell totals match for a,b <= 6";
}

// --- criterion 3: zero-weight multiplicity of pi_{a,a} ----------------------
void criterion_zero_weight(Criterion& c) {
  for (Int a = 0; a <= 6; ++a)
    require(freudenthal_diagram(su3(a, a)).multiplicity(Weight{{0, 0}, 0}) == a + 1,
            "zero-weight multiplicity of pi_{" + std::to_string(a) + "," + std::to_string(a) + "}");
  c.detail = "multiplicity a+1 verified for a <= 6";
}

// --- criterion 4: element fixed dim == cyclotomic character average --------
void criterion_fixed_space_dual_path(Criterion& c) {
  long checks = 0;
  for (Int a = 0; a <= 5; ++a)
    for (Int b = 0; b <= 5; ++b) {
      IrrepDescriptor rep = su3(a, b);
      WeightDiagram diag = freudenthal_diagram(rep);
      Laurent chi = character_polynomial(rep);
      for (Int order = 1; order <= 12; ++order)
        for (Int d1 = 0; d1 < order; ++d1)
          for (Int d2 = 0; d2 < order; ++d2) {
            Int d3 = ((-(d1 + d2)) % order + order) % order;
            TorusElement h{{d1, d2, d3}, order};
            Int direct = element_fixed_dim(diag, h).complex_dim;
            Int oracle = element_fixed_dim_oracle_from_character(chi, rep.group, 0, h);
            require(direct == oracle, "dual-path mismatch");
            ++checks;
          }
    }
  std::ostringstream os;
  os << checks << " (rep, element) pairs: a,b <= 5, every order N <= 12, every direction "
     << "(d1,d2,d3) in [0,N)^3 with d1+d2+d3 = 0 mod N";
  c.detail = os.str();
}

// --- criterion 5: involution closed forms vs explicit tensor bases ---------
struct RealTensor {
  Int m, n;
  std::size_t idx(Int i, Int j, int part) const {
    return static_cast<std::size_t>(((i * n) + j) * 2 + part);
  }
  std::size_t dim() const { return static_cast<std::size_t>(2 * m * n); }
};

std::vector<std::vector<Int>> involution_matrix(const RealTensor& t, InvolutionKind w) {
  std::vector<std::vector<Int>> mat(t.dim(), std::vector<Int>(t.dim(), 0));
  for (Int i = 0; i < t.m; ++i)
    for (Int j = 0; j < t.n; ++j)
      for (int part = 0; part < 2; ++part) {
        std::size_t from = t.idx(i, j, part);
        std::size_t to;
        Int sign = w.sign;
        switch (w.kind) {
          case InvolutionClass::Swap: to = t.idx(j, i, part); break;
          case InvolutionClass::SwapConj:
            to = t.idx(j, i, part);
            if (part == 1) sign = -sign;
            break;
          default:
            to = t.idx(i, j, part);
            if (part == 1) sign = -sign;
            break;
        }
        mat[to][from] = sign;
      }
  return mat;
}

Int matrix_fixed_dim(const std::vector<std::vector<Int>>& mat) {
  const std::size_t d = mat.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < d; ++k) s += mat[i][k] * mat[k][j];
      require(s == (i == j ? 1 : 0), "involution matrix does not square to the identity");
    }
  Int tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += mat[i][i];
  require((static_cast<Int>(d) + tr) % 2 == 0, "odd projector trace");
  return (static_cast<Int>(d) + tr) / 2;
}

void criterion_involutions(Criterion& c) {
  for (Int n = 1; n <= 8; ++n) {
    RealTensor t{n, n};
    require(matrix_fixed_dim(involution_matrix(t, {InvolutionClass::Swap, +1})) ==
                involution_fixed_dim(n, n, {InvolutionClass::Swap, +1}),
            "symmetric tensor count at n=" + std::to_string(n));
    require(matrix_fixed_dim(involution_matrix(t, {InvolutionClass::Swap, -1})) ==
                involution_fixed_dim(n, n, {InvolutionClass::Swap, -1}),
            "skew tensor count at n=" + std::to_string(n));
    require(matrix_fixed_dim(involution_matrix(t, {InvolutionClass::SwapConj, +1})) ==
                involution_fixed_dim(n, n, {InvolutionClass::SwapConj, +1}),
            "Hermitean tensor count at n=" + std::to_string(n));
  }
  for (Int m = 1; m <= 8; ++m)
    for (Int n = 1; n <= 8; ++n) {
      RealTensor t{m, n};
      require(matrix_fixed_dim(involution_matrix(t, {InvolutionClass::Conj, +1})) ==
                  involution_fixed_dim(m, n, {InvolutionClass::Conj, +1}),
              "conjugation count at " + std::to_string(m) + "x" + std::to_string(n));
    }
  c.detail = "symmetric/skew/Hermitean/conjugation bases counted for n <= 8 match the closed forms";
}

// --- criterion 6: diophantine exclusions ------------------------------------
void criterion_diophantine(Criterion& c) {
  for (auto cons : {DioConstraint::N2PlusNEq4, DioConstraint::N2MinusNEq4, DioConstraint::N2Eq5}) {
    DioResult r = diophantine_empty(cons, 1000000);
    require(r.solutions.empty(), std::string(dio_name(cons)) + " unexpectedly has a solution");
    require(r.certified_empty(), std::string(dio_name(cons)) + " lacks a certificate");
  }
  c.detail = "n^2+n=4, n^2-n=4, n^2=5 empty up to 10^6 with monotonicity certificates";
}

// --- criterion 7: case reproduction in paper-bound mode --------------------
void criterion_cases(Criterion& c) {
  require(case_ids().size() == 9, "expected the nine enumerated cases");
  for (const auto& id : case_ids()) {
    CaseReport rep = solve_case(id, BoundMode::PaperBound);
    require(rep.pass, id + " did not PASS");
  }
  auto conj = solve_case("c7-disc-conj", BoundMode::PaperBound);
  require(conj.survivors == std::vector<Survivor>{Survivor{"tensor", 2, 3, 12, false}},
          "c7-disc-conj survivors");
  auto c8 = solve_case("c8-conn", BoundMode::PaperBound);
  require(c8.survivors == std::vector<Survivor>{Survivor{"su3", 1, 0, 6, true},
                                                Survivor{"su3", 1, 1, 8, true}},
          "c8-conn inequality solutions");
  auto c9 = solve_case("c9-conn", BoundMode::PaperBound);
  require(c9.survivors == std::vector<Survivor>{Survivor{"su3", 1, 0, 6, true}}, "c9-conn solution");
  // c8-disc-inner: the exact fixed dimensions exceed 5 and satisfy the stated
  // lower bound at a = 2
  WeightDiagram d22 = freudenthal_diagram(su3(2, 2));
  Int vh2 = element_fixed_dim(d22, TorusElement{{2, 5, 5}, 6}).real_dim.as_integer();
  require(vh2 >= 9 && vh2 != 5, "c8-disc-inner exact value at a=2");
  WeightDiagram d44 = freudenthal_diagram(su3(4, 4));
  Int vh4 = element_fixed_dim(d44, TorusElement{{2, 5, 5}, 6}).real_dim.as_integer();
  require(vh4 > 5, "c8-disc-inner exact value at a=4");
  for (const auto& id : {"c7-conn", "c7-disc-swap", "c7-disc-swapconj", "c8-disc-outer",
                         "c8-disc-inner", "c9-disc"})
    require(solve_case(id, BoundMode::PaperBound).survivors.empty(), std::string(id) + " not empty");
  std::ostringstream os;
  os << "all nine case reports PASS; dim V^h = " << vh2 << " (a=2), " << vh4 << " (a=4)";
  c.detail = os.str();
}

// --- criterion 8: theorem aggregate -----------------------------------------
void criterion_theorem(Criterion& c) {
  TheoremReport rep = theorem_main(BoundMode::PaperBound);
  require(rep.all_pass, "aggregate did not PASS");
  require(rep.overall_survivors == std::vector<Survivor>{Survivor{"tensor", 2, 3, 12, false}},
          "aggregate survivors");
  c.detail = "exactly one surviving non-toric family: the (2,3) tensor reduction, real dim 12";
}

// --- criterion 9: exact-mode audit ------------------------------------------
void criterion_exact_audit(Criterion& c) {
  TheoremReport rep = theorem_main(BoundMode::Exact);
  TheoremReport rep2 = theorem_main(BoundMode::Exact);
  require(to_json(rep).dump() == to_json(rep2).dump(), "exact mode is not deterministic");
  for (const auto& d : rep.overall_discrepancies) {
    WeightDiagram diag;
    if (d.candidate.family == "tensor") {
      diag = tensor_rep_diagram(d.candidate.a, d.candidate.b, true);
    } else {
      const bool charged = d.case_id.rfind("c9", 0) == 0;
      diag = freudenthal_diagram(su3(d.candidate.a, d.candidate.b, charged));
    }
    FixedSpaceResult check = annihilator_fixed_dim(diag, d.witness);
    require(check.real_dim == Rational(d.exact_fixed_real), "witness does not reproduce the flagged value");
  }
  std::ostringstream os;
  os << rep.overall_discrepancies.size()
     << " discrepancy flags, each verified through annihilator_fixed_dim at its witness direction";
  c.detail = os.str();
}

// --- criterion 10: byte-identical CLI runs ----------------------------------
std::pair<int, std::string> capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion_determinism(Criterion& c) {
  const std::string cmd = std::string(COPOL_CLI_PATH) + " verify --mode paper --format json";
  auto [code1, out1] = capture(cmd);
  auto [code2, out2] = capture(cmd);
  require(code1 == 0 && code2 == 0, "verify did not exit 0");
  require(!out1.empty(), "verify printed nothing");
  require(out1 == out2, "consecutive runs differ");
  c.detail = "two consecutive `verify --mode paper --format json` runs are byte-identical";
}

}  // namespace

int main() {
  std::vector<Criterion> crits = {
      {1, "oracle-equivalence", false, 0, 10.0, ""},
      {2, "dimension-consistency", false, 0, 1.0, ""},
      {3, "zero-weight-multiplicity", false, 0, 10.0, ""},
      {4, "fixed-space-dual-path", false, 0, 60.0, ""},
      {5, "involution-closed-forms", false, 0, 10.0, ""},
      {6, "diophantine-exclusions", false, 0, 1.0, ""},
      {7, "case-reproduction-paper-mode", false, 0, 10.0, ""},
      {8, "theorem-aggregate", false, 0, 10.0, ""},
      {9, "exact-mode-audit", false, 0, 60.0, ""},
      {10, "verify-determinism", false, 0, 30.0, ""},
  };
  const std::vector<std::function<void(Criterion&)>> runners = {
      criterion_oracle_equivalence, criterion_dimension_consistency, criterion_zero_weight,
      criterion_fixed_space_dual_path, criterion_involutions, criterion_diophantine,
      criterion_cases, criterion_theorem, criterion_exact_audit, criterion_determinism,
  };

  bool all = true;
  for (std::size_t i = 0; i < crits.size(); ++i) {
    Criterion& c = crits[i];
    auto t0 = Clock::now();
    try {
      runners[i](c);
      c.pass = true;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.pass && c.limit_seconds > 0 && c.seconds > c.limit_seconds) {
      c.pass = false;
      c.detail += " [exceeded time limit]";
    }
    all = all && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << std::left
              << std::setw(32) << c.name << std::right << "  " << std::fixed << std::setprecision(2)
              << c.seconds << "s (limit " << c.limit_seconds << "s)  " << c.detail << "\n";
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT") << "\n";
  return all ? 0 : 1;
}
