#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "copol/case_engine.hpp"

namespace copol {

using json = nlohmann::json;

// nlohmann's default object representation keeps keys sorted, and every value
// emitted here is an integer, string, boolean, array or object, so rendered
// reports are canonical: byte-identical across runs of the same configuration.

inline json to_json(const GroupType& g) {
  json factors = json::array();
  for (auto f : g.factors) factors.push_back(factor_name(f));
  return json{{"central_circle", g.central_circle},
              {"factors", factors},
              {"name", g.name()},
              {"total_dim", g.dimension()}};
}

inline json to_json(const Survivor& s) {
  if (s.family == "tensor")
    return json{{"family", s.family}, {"m", s.a}, {"n", s.b},
                {"polar_by_axiom", s.polar_by_axiom}, {"real_dim", s.real_dim}};
  return json{{"a", s.a}, {"b", s.b}, {"family", s.family},
              {"polar_by_axiom", s.polar_by_axiom}, {"real_dim", s.real_dim}};
}

inline json survivors_json(const std::vector<Survivor>& list) {
  json arr = json::array();
  for (const auto& s : list) arr.push_back(to_json(s));
  return arr;
}

inline json to_json(const CaseReport& rep) {
  json constraints = json::array();
  for (const auto& c : rep.constraints_applied) constraints.push_back(c);
  json axioms = json::array();
  for (const auto& a : rep.axioms_used) axioms.push_back(a);
  json discrepancies = json::array();
  for (const auto& d : rep.discrepancies) discrepancies.push_back(d.str());
  return json{{"case_id", rep.case_id},
              {"mode", bound_mode_name(rep.mode)},
              {"group", to_json(rep.group)},
              {"constraints_applied", constraints},
              {"survivors", survivors_json(rep.survivors)},
              {"axioms_used", axioms},
              {"discrepancies", discrepancies},
              {"status", rep.pass ? "PASS" : "MISMATCH"}};
}

inline json to_json(const TheoremReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) cases.push_back(to_json(c));
  json discrepancies = json::array();
  for (const auto& d : rep.overall_discrepancies) discrepancies.push_back(d.str());
  json axioms = json::array();
  for (const auto& a : rep.axioms_used) axioms.push_back(a);
  json notes = json::array();
  for (const auto& n : rep.notes) notes.push_back(n);
  return json{{"axioms_used", axioms},
              {"cases", cases},
              {"mode", bound_mode_name(rep.mode)},
              {"notes", notes},
              {"overall_discrepancies", discrepancies},
              {"overall_survivors", survivors_json(rep.overall_survivors)},
              {"status", rep.all_pass ? "PASS" : "MISMATCH"}};
}

inline json to_json(const Axiom& a) {
  return json{{"citation", a.citation}, {"id", a.id}, {"statement", a.statement}};
}

inline std::string markdown(const CaseReport& rep) {
  std::string out;
  out += "## " + rep.case_id + " (section " + rep.section + ") - " +
         (rep.pass ? "PASS" : "MISMATCH") + "\n\n";
  out += "- mode: " + std::string(bound_mode_name(rep.mode)) + "\n";
  out += "- group: " + rep.group.name() + " (dim " + std::to_string(rep.group.dimension()) + ")\n";
  out += "- search space: " + rep.search_space + "\n";
  out += "- constraints:\n";
  for (const auto& c : rep.constraints_applied) out += "    - " + c + "\n";
  out += "- survivors:";
  if (rep.survivors.empty()) out += " none";
  out += "\n";
  for (const auto& s : rep.survivors)
    out += "    - " + s.str() + " (real dim " + std::to_string(s.real_dim) + ")\n";
  out += "- axioms used:";
  if (rep.axioms_used.empty()) out += " none";
  out += "\n";
  for (const auto& a : rep.axioms_used) out += "    - " + a + "\n";
  if (!rep.discrepancies.empty()) {
    out += "- discrepancies:\n";
    for (const auto& d : rep.discrepancies) out += "    - " + d.str() + "\n";
  }
  return out;
}

inline std::string markdown(const TheoremReport& rep) {
  std::string out = "# case analysis, mode " + std::string(bound_mode_name(rep.mode)) + " - " +
                    (rep.all_pass ? "PASS" : "MISMATCH") + "\n\n";
  for (const auto& c : rep.cases) out += markdown(c) + "\n";
  out += "## aggregate\n\n";
  out += "- surviving non-polar families:";
  if (rep.overall_survivors.empty()) out += " none";
  out += "\n";
  for (const auto& s : rep.overall_survivors) out += "    - " + s.str() + "\n";
  if (!rep.overall_discrepancies.empty()) {
    out += "- flagged discrepancies:\n";
    for (const auto& d : rep.overall_discrepancies) out += "    - " + d.str() + "\n";
  }
  for (const auto& n : rep.notes) out += "- " + n + "\n";
  return out;
}

/// Baseline files map case ids to expected survivor arrays; the comparison is
/// structural (parsed values), never textual.
inline bool matches_baseline(const CaseReport& rep, const json& baseline) {
  if (!baseline.contains(rep.case_id)) return false;
  return survivors_json(rep.survivors) == baseline.at(rep.case_id);
}

}  // namespace copol
