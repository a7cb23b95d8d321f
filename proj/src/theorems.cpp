#include "ea/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ea/errors.hpp"

namespace ea {

using nlohmann::json;

namespace {

// A named clause of a conclusion.
struct Clause {
  std::string name;
  std::function<Outcome(ModelAnalysis&)> eval;
};

Clause prop(const std::string& name) {
  return {name, [name](ModelAnalysis& a) { return a.property(name); }};
}

Clause implies(const std::string& p, const std::string& q) {
  return {p + " => " + q, [p, q](ModelAnalysis& a) {
            const Outcome& rhs = a.property(q);
            return Outcome{truth_implies(a.truth_of(p), rhs.value), rhs.witness};
          }};
}

Clause iff(const std::string& p, const std::function<Truth(ModelAnalysis&)>& rhs, const std::string& rhs_name) {
  return {p + " <=> " + rhs_name, [p, rhs](ModelAnalysis& a) {
            return Outcome{truth_iff(a.truth_of(p), rhs(a)), nullptr};
          }};
}

std::function<Outcome(ModelAnalysis&)> conjunction(std::vector<Clause> clauses) {
  return [clauses = std::move(clauses)](ModelAnalysis& a) {
    Truth value = Truth::True;
    json failed = json::object();
    for (const auto& c : clauses) {
      Outcome o = c.eval(a);
      value = truth_and(value, o.value);
      if (o.value != Truth::True) {
        failed[c.name] = o.value == Truth::False ? json(false) : json("inconclusive");
        if (!o.witness.is_null()) failed[c.name + " witness"] = o.witness;
      }
    }
    return Outcome{value, failed.empty() ? json(nullptr) : json{{"failed", failed}}};
  };
}

std::function<Truth(ModelAnalysis&)> all(std::vector<std::string> names) {
  return [names = std::move(names)](ModelAnalysis& a) {
    Truth t = Truth::True;
    for (const auto& n : names) t = truth_and(t, a.truth_of(n));
    return t;
  };
}

std::vector<Theorem> build_registry() {
  std::vector<Theorem> r;
  r.push_back({"T1", "S-dominating implies S(E) bifull in E", all({"s_dominating"}),
               conjunction({prop("sharp_bifull")})});
  r.push_back({"T2", "sharply dominating lattice effect algebra implies S(E) bifull in E",
               all({"lattice", "sharply_dominating"}), conjunction({prop("sharp_bifull")})});
  r.push_back({"T3",
               "sharply orthocomplete and S-dominating implies S(E) complete OML bifull, C(E) complete Boolean "
               "bifull, centrally dominating and orthocomplete, atoms of an atomic C(E) join to 1",
               all({"sharply_orthocomplete", "s_dominating"}),
               conjunction({prop("sharp_complete_oml"), prop("sharp_bifull"), prop("center_complete_boolean"),
                            prop("center_bifull"), prop("centrally_dominating"), prop("centrally_orthocomplete"),
                            implies("center_atomic", "center_atoms_join_to_one")})});
  r.push_back({"T4", "sharply orthocomplete Archimedean atomic MV-effect algebra is complete",
               all({"sharply_orthocomplete", "archimedean", "atomic", "mv"}), conjunction({prop("complete")})});
  r.push_back({"T5",
               "Archimedean atomic lattice effect algebra: complete iff every atomic block is complete, and "
               "completeness forces every block complete",
               all({"lattice", "archimedean", "atomic"}),
               conjunction({iff(
                                "complete", [](ModelAnalysis& a) { return a.truth_of("atomic_blocks_complete"); },
                                "atomic_blocks_complete"),
                            implies("complete", "blocks_complete")})});
  r.push_back({"T6",
               "sharply orthocomplete lattice effect algebra: S(E) and C(E) as in T3, sharply, centrally and "
               "S-dominating, complete when Archimedean and atomic",
               all({"sharply_orthocomplete", "lattice"}),
               conjunction({prop("sharp_complete_oml"), prop("sharp_bifull"), prop("center_complete_boolean"),
                            prop("center_bifull"), prop("sharply_dominating"), prop("centrally_dominating"),
                            prop("s_dominating"),
                            {"archimedean and atomic => complete", [](ModelAnalysis& a) {
                               const Truth p = truth_and(a.truth_of("archimedean"), a.truth_of("atomic"));
                               return Outcome{truth_implies(p, a.truth_of("complete")), nullptr};
                             }}})});
  r.push_back({"T7", "atomic lattice effect algebra: complete iff Archimedean and sharply orthocomplete",
               all({"atomic", "lattice"}),
               conjunction({iff(
                   "complete",
                   [](ModelAnalysis& a) {
                     return truth_and(a.truth_of("archimedean"), a.truth_of("sharply_orthocomplete"));
                   },
                   "archimedean and sharply_orthocomplete")})});
  return r;
}

}  // namespace

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Vacuous: return "vacuous";
    case VerdictStatus::Counterexample: return "counterexample";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

VerdictStatus TheoremVerdict::status() const {
  if (premise == Truth::False) return VerdictStatus::Vacuous;
  if (premise == Truth::True && conclusion == Truth::True) return VerdictStatus::Pass;
  if (premise == Truth::True && conclusion == Truth::False) return VerdictStatus::Counterexample;
  return VerdictStatus::Inconclusive;
}

json TheoremVerdict::to_json() const {
  const auto tv = [](Truth t) { return t == Truth::Inconclusive ? json("inconclusive") : json(t == Truth::True); };
  json j = {{"theorem_id", theorem_id},
            {"premise", tv(premise)},
            {"conclusion", tv(conclusion)},
            {"status", status_name(status())}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

const std::vector<Theorem>& theorem_registry() {
  static const std::vector<Theorem> registry = build_registry();
  return registry;
}

const Theorem& find_theorem(const std::string& id) {
  const auto& r = theorem_registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const Theorem& t) { return t.id == id; });
  if (it == r.end()) throw std::out_of_range("unknown theorem: " + id);
  return *it;
}

TheoremVerdict evaluate(const Theorem& theorem, ModelAnalysis& analysis) {
  const auto start = std::chrono::steady_clock::now();
  TheoremVerdict v;
  v.theorem_id = theorem.id;
  v.model_id = analysis.model().model_id();
  v.premise = theorem.premise(analysis);

  // The conclusion is evaluated even for vacuous verdicts so the report
  // shows both sides.
  json detail;
  try {
    Outcome o = theorem.conclusion(analysis);
    v.conclusion = o.value;
    detail = std::move(o.witness);
  } catch (const BudgetExceeded& e) {
    v.conclusion = Truth::Inconclusive;
    detail = {{"error", e.what()}};
  } catch (const Error& e) {
    v.conclusion = Truth::False;
    detail = {{"error", e.what()}};
  }
  if (v.premise == Truth::True && v.conclusion == Truth::False) v.counterexample = detail.is_null() ? json::object() : detail;
  v.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

TheoremVerdict check_T1(ModelAnalysis& a) { return evaluate(find_theorem("T1"), a); }
TheoremVerdict check_T2(ModelAnalysis& a) { return evaluate(find_theorem("T2"), a); }
TheoremVerdict check_T3(ModelAnalysis& a) { return evaluate(find_theorem("T3"), a); }
TheoremVerdict check_T4(ModelAnalysis& a) { return evaluate(find_theorem("T4"), a); }
TheoremVerdict check_T5(ModelAnalysis& a) { return evaluate(find_theorem("T5"), a); }
TheoremVerdict check_T6(ModelAnalysis& a) { return evaluate(find_theorem("T6"), a); }
TheoremVerdict check_T7(ModelAnalysis& a) { return evaluate(find_theorem("T7"), a); }

}  // namespace ea
