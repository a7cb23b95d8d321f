#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ea/analysis.hpp"
#include "json.hpp"

namespace ea {

// A theorem is a premise and a conclusion over one analysed model.
struct Theorem {
  std::string id;
  std::string statement;
  std::function<Truth(ModelAnalysis&)> premise;
  // witness lists the failing conjuncts when the value is not True
  std::function<Outcome(ModelAnalysis&)> conclusion;
};

enum class VerdictStatus { Pass, Vacuous, Counterexample, Inconclusive };

const char* status_name(VerdictStatus s);

struct TheoremVerdict {
  std::string theorem_id;
  std::string model_id;
  Truth premise = Truth::False;
  Truth conclusion = Truth::False;
  // Present iff premise is True and conclusion is False.
  std::optional<nlohmann::json> counterexample;
  double elapsed_seconds = 0.0;

  VerdictStatus status() const;
  // Everything except the timing.
  nlohmann::json to_json() const;
};

const std::vector<Theorem>& theorem_registry();

// Throws std::out_of_range for unknown ids.
const Theorem& find_theorem(const std::string& id);

TheoremVerdict evaluate(const Theorem& theorem, ModelAnalysis& analysis);

TheoremVerdict check_T1(ModelAnalysis& a);
TheoremVerdict check_T2(ModelAnalysis& a);
TheoremVerdict check_T3(ModelAnalysis& a);
TheoremVerdict check_T4(ModelAnalysis& a);
TheoremVerdict check_T5(ModelAnalysis& a);
TheoremVerdict check_T6(ModelAnalysis& a);
TheoremVerdict check_T7(ModelAnalysis& a);

}  // namespace ea
