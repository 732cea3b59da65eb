// Command-line entry point: run the case analysis, query weight diagrams and
// fixed-space dimensions, and print the axiom ledger.
//
// Exit codes: 0 all pass, 1 usage or internal error, 2 survivor mismatch
// against the baseline, 3 exact-mode discrepancy flags present (notice level,
// silence with --ignore-discrepancies).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "copol/copol.hpp"

namespace {

using namespace copol;

Int resolve_bound(Int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("COPOL_SCAN_BOUND")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw std::invalid_argument("COPOL_SCAN_BOUND is not an integer");
    }
  }
  return 50;
}

std::vector<Int> parse_csv(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

struct VerifyOptions {
  std::string case_id = "all";
  std::string mode = "paper";
  std::string format = "json";
  std::string baseline_path;
  Int bound = 0;
  bool ignore_discrepancies = false;
};

int run_verify(const VerifyOptions& opt) {
  const BoundMode mode = (opt.mode == "exact") ? BoundMode::Exact : BoundMode::PaperBound;
  EngineConfig cfg;
  cfg.scan_bound = resolve_bound(opt.bound);

  json baseline;
  bool have_baseline = false;
  if (!opt.baseline_path.empty()) {
    std::ifstream in(opt.baseline_path);
    if (!in) {
      std::cerr << "cannot open baseline file: " << opt.baseline_path << "\n";
      return 1;
    }
    try {
      in >> baseline;
    } catch (const std::exception& e) {
      std::cerr << "malformed baseline file: " << e.what() << "\n";
      return 1;
    }
    if (!baseline.is_object()) {
      std::cerr << "malformed baseline file: expected an object of case id -> survivors\n";
      return 1;
    }
    have_baseline = true;
  }

  std::vector<CaseReport> cases;
  if (opt.case_id == "all") {
    TheoremReport rep = theorem_main(mode, cfg);
    if (opt.format == "md")
      std::cout << markdown(rep);
    else
      std::cout << to_json(rep).dump(2) << "\n";
    cases = rep.cases;
  } else {
    CaseReport rep = solve_case(opt.case_id, mode, cfg);
    if (opt.format == "md")
      std::cout << markdown(rep);
    else
      std::cout << to_json(rep).dump(2) << "\n";
    cases.push_back(std::move(rep));
  }

  bool mismatch = false;
  bool flagged = false;
  for (const auto& c : cases) {
    if (!c.pass) mismatch = true;
    if (have_baseline && !matches_baseline(c, baseline)) mismatch = true;
    if (!c.discrepancies.empty()) flagged = true;
  }
  if (mismatch) return 2;
  if (flagged && !opt.ignore_discrepancies) return 3;
  return 0;
}

int run_mult(const std::string& group, std::vector<Int> coords, bool charged, bool shells) {
  IrrepDescriptor rep;
  if (group == "A2") {
    if (coords.size() != 2) throw std::invalid_argument("mult A2 needs two coordinates");
    rep = IrrepDescriptor{GroupType{{SimpleFactor::A2}, charged},
                          Weight{{coords[0], coords[1]}, charged ? Int(1) : Int(0)},
                          (!charged && coords[0] == coords[1]) ? Reality::RealForm : Reality::ComplexType};
  } else if (group == "A1") {
    if (coords.size() != 1) throw std::invalid_argument("mult A1 needs one coordinate");
    rep = IrrepDescriptor{GroupType{{SimpleFactor::A1}, charged},
                          Weight{{coords[0]}, charged ? Int(1) : Int(0)}, Reality::ComplexType};
  } else {
    throw std::invalid_argument("unknown group (use A1 or A2)");
  }
  WeightDiagram diag = freudenthal_diagram(rep);
  std::cout << "group " << rep.group.name() << " highest (";
  for (std::size_t i = 0; i < rep.highest_weight.coords.size(); ++i)
    std::cout << (i ? "," : "") << rep.highest_weight.coords[i];
  std::cout << ") reality " << (rep.reality == Reality::RealForm ? "real-form" : "complex")
            << " complex_dim " << diag.complex_dim() << " real_dim " << diag.real_dim() << "\n";
  for (const auto& [w, m] : diag.entries) {
    std::cout << "(";
    for (std::size_t i = 0; i < w.coords.size(); ++i) std::cout << (i ? "," : "") << w.coords[i];
    std::cout << ") " << m << "\n";
  }
  if (shells) {
    if (group != "A2") throw std::invalid_argument("--shells applies to A2 only");
    ShellDecomposition sd = su3_shells(coords[0], coords[1]);
    for (const auto& s : sd.shells) {
      const char* kind = s.kind == ShellKind::Hexagon ? "hexagon" : s.kind == ShellKind::Triangle ? "triangle" : "point";
      std::cout << kind << " " << s.index << " mult " << s.multiplicity << " weights " << s.weight_count
                << "\n";
    }
    std::cout << "shell_total " << sd.total() << "\n";
  }
  return 0;
}

WeightDiagram family_diagram(const std::vector<Int>& su3, const std::vector<Int>& tensor, bool charged) {
  if (!su3.empty()) {
    if (su3.size() != 2) throw std::invalid_argument("--su3 expects a,b");
    IrrepDescriptor rep{GroupType{{SimpleFactor::A2}, charged},
                        Weight{{su3[0], su3[1]}, charged ? Int(1) : Int(0)},
                        (!charged && su3[0] == su3[1]) ? Reality::RealForm : Reality::ComplexType};
    return freudenthal_diagram(rep);
  }
  if (tensor.size() != 2) throw std::invalid_argument("--tensor expects m,n");
  return tensor_rep_diagram(tensor[0], tensor[1], charged);
}

void print_fixed(const FixedSpaceResult& r) {
  std::cout << "mode " << bound_mode_name(r.mode);
  if (r.complex_dim >= 0) std::cout << " complex_dim " << r.complex_dim;
  std::cout << " real_dim " << r.real_dim.str();
  if (r.witness) std::cout << " witness " << r.witness->str();
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copolarity case-analysis verifier"};
  app.require_subcommand(1);
  int rc = 0;

  // verify
  auto opt = std::make_shared<VerifyOptions>();
  CLI::App* verify = app.add_subcommand("verify", "run proof cases and compare survivors to the baseline");
  verify->add_option("--case", opt->case_id, "case id (default: all)");
  verify->add_option("--mode", opt->mode, "paper|exact")->check(CLI::IsMember({"paper", "exact"}));
  verify->add_option("--format", opt->format, "json|md")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--baseline", opt->baseline_path, "baseline JSON file of expected survivors");
  verify->add_option("--bound", opt->bound, "scan bound (also COPOL_SCAN_BOUND)");
  verify->add_flag("--ignore-discrepancies", opt->ignore_discrepancies,
                   "exit 0 even when exact-mode flags are present");
  verify->callback([&rc, opt]() { rc = run_verify(*opt); });

  // mult
  auto mult_group = std::make_shared<std::string>();
  auto mult_coords = std::make_shared<std::vector<Int>>();
  auto mult_charged = std::make_shared<bool>(false);
  auto mult_shells = std::make_shared<bool>(false);
  CLI::App* mult = app.add_subcommand("mult", "print a weight diagram");
  mult->add_option("group", *mult_group, "A1|A2")->required();
  mult->add_option("coords", *mult_coords, "highest weight coordinates")->expected(1, 2);
  mult->add_flag("--charged", *mult_charged, "add a central circle with charge 1");
  mult->add_flag("--shells", *mult_shells, "print the shell decomposition (A2)");
  mult->callback([&rc, mult_group, mult_coords, mult_charged, mult_shells]() {
    rc = run_mult(*mult_group, *mult_coords, *mult_charged, *mult_shells);
  });

  // fixdim
  CLI::App* fixdim = app.add_subcommand("fixdim", "fixed-space dimension queries");
  fixdim->require_subcommand(1);
  struct FamilyOpts {
    std::vector<Int> su3, tensor;
    bool charged_su3 = false;
    bool uncharged_tensor = false;
    bool charged() const { return su3.empty() ? !uncharged_tensor : charged_su3; }
  };
  auto add_family = [](CLI::App* cmd, const std::shared_ptr<FamilyOpts>& fo) {
    cmd->add_option("--su3", fo->su3, "su3 family a,b")->delimiter(',');
    cmd->add_option("--tensor", fo->tensor, "tensor family m,n")->delimiter(',');
    cmd->add_flag("--charged", fo->charged_su3, "su3 family with central circle");
    cmd->add_flag("--uncharged", fo->uncharged_tensor, "tensor family without central circle");
  };

  auto line_fo = std::make_shared<FamilyOpts>();
  auto line_dir = std::make_shared<std::string>();
  CLI::App* line = fixdim->add_subcommand("line", "weights annihilated by a direction");
  add_family(line, line_fo);
  line->add_option("--dir", *line_dir, "covector, comma separated")->required();
  line->callback([&rc, line_fo, line_dir]() {
    WeightDiagram d = family_diagram(line_fo->su3, line_fo->tensor, line_fo->charged());
    print_fixed(annihilator_fixed_dim(d, make_direction(parse_csv(*line_dir))));
    rc = 0;
  });

  auto max_fo = std::make_shared<FamilyOpts>();
  auto max_mode = std::make_shared<std::string>("exact");
  CLI::App* maxc = fixdim->add_subcommand("max", "largest circle-subgroup fixed space");
  add_family(maxc, max_fo);
  maxc->add_option("--mode", *max_mode, "paper|exact")->check(CLI::IsMember({"paper", "exact"}));
  maxc->callback([&rc, max_fo, max_mode]() {
    WeightDiagram d = family_diagram(max_fo->su3, max_fo->tensor, max_fo->charged());
    print_fixed(max_circle_fixed_dim(d, *max_mode == "paper" ? BoundMode::PaperBound : BoundMode::Exact));
    rc = 0;
  });

  auto el_fo = std::make_shared<FamilyOpts>();
  auto el_dir = std::make_shared<std::string>();
  auto el_order = std::make_shared<Int>(1);
  CLI::App* element = fixdim->add_subcommand("element", "fixed space of a finite-order torus element");
  add_family(element, el_fo);
  element->add_option("--dir", *el_dir, "exponent direction, comma separated")->required();
  element->add_option("--order", *el_order, "element order")->required();
  element->callback([&rc, el_fo, el_dir, el_order]() {
    WeightDiagram d = family_diagram(el_fo->su3, el_fo->tensor, el_fo->charged());
    TorusElement h{parse_csv(*el_dir), *el_order};
    FixedSpaceResult r = element_fixed_dim(d, h);
    print_fixed(r);
    if (!el_fo->su3.empty()) {
      IrrepDescriptor rep{d.group, *d.highest, d.reality};
      std::cout << "oracle_complex_dim " << element_fixed_dim_oracle(rep, h) << "\n";
    }
    rc = 0;
  });

  auto inv_kind = std::make_shared<std::string>();
  auto inv_m = std::make_shared<Int>(0);
  auto inv_n = std::make_shared<Int>(0);
  CLI::App* inv = fixdim->add_subcommand("involution", "closed-form tensor involution fixed dimensions");
  inv->add_option("--kind", *inv_kind, "sym|skew|herm|conj")
      ->required()
      ->check(CLI::IsMember({"sym", "skew", "herm", "conj"}));
  inv->add_option("-n", *inv_n, "second factor dimension")->required();
  inv->add_option("-m", *inv_m, "first factor dimension (defaults to n)");
  inv->callback([&rc, inv_kind, inv_m, inv_n]() {
    Int m = *inv_m > 0 ? *inv_m : *inv_n;
    InvolutionKind k;
    if (*inv_kind == "sym") k = {InvolutionClass::Swap, +1};
    else if (*inv_kind == "skew") k = {InvolutionClass::Swap, -1};
    else if (*inv_kind == "herm") k = {InvolutionClass::SwapConj, +1};
    else k = {InvolutionClass::Conj, +1};
    std::cout << "real_dim " << involution_fixed_dim(m, *inv_n, k) << "\n";
    rc = 0;
  });

  // axioms
  auto ax_format = std::make_shared<std::string>("json");
  CLI::App* axioms = app.add_subcommand("axioms", "print the axiom ledger");
  axioms->add_option("--format", *ax_format, "json|md")->check(CLI::IsMember({"json", "md"}));
  axioms->callback([&rc, ax_format]() {
    if (*ax_format == "md") {
      for (const auto& a : axiom_ledger())
        std::cout << "- " << a.id << ": " << a.statement << " " << a.citation << "\n";
    } else {
      json arr = json::array();
      for (const auto& a : axiom_ledger()) arr.push_back(to_json(a));
      std::cout << arr.dump(2) << "\n";
    }
    rc = 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
