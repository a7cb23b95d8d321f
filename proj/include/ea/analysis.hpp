#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ea/completion.hpp"
#include "ea/model.hpp"
#include "ea/order.hpp"
#include "ea/substructure.hpp"
#include "json.hpp"

namespace ea {

struct AnalysisOptions {
  std::uint64_t family_budget = kDefaultFamilyBudget;
  SubsetCheckOptions subsets;
  std::size_t compact_limit = 10;
};

struct Outcome {
  Truth value = Truth::False;
  nlohmann::json witness;  // null when there is nothing to show
};

// Everything the property checkers and theorems need about one model,
// computed on demand and memoized. Not thread-safe; one instance per worker.
class ModelAnalysis {
 public:
  ModelAnalysis(EffectAlgebraModel model, AnalysisOptions options = {});

  const EffectAlgebraModel& model() const { return model_; }
  const OrderCache& cache() const { return cache_; }
  const AnalysisOptions& options() const { return options_; }
  const ElementSubset& sharp() const { return sharp_; }
  const ElementSubset& central() const { return central_; }

  // Empty for non-lattice models.
  const std::vector<ElementSubset>& blocks() const { return blocks_; }
  const std::optional<ElementSubset>& compatibility_center() const { return compat_center_; }

  // Throws std::out_of_range for unknown names.
  const Outcome& property(const std::string& name);
  Truth truth_of(const std::string& name) { return property(name).value; }

  static const std::vector<std::string>& property_names();

  // {"model_id", "size", "properties", "stats", "witnesses"}. An empty filter
  // selects every property.
  nlohmann::json report(const std::vector<std::string>& filter = {});

  // Lets tests swap in a deliberately broken checker.
  void override_property(const std::string& name, Outcome outcome) { memo_[name] = std::move(outcome); }

 private:
  EffectAlgebraModel model_;
  AnalysisOptions options_;
  OrderCache cache_;
  ElementSubset sharp_;
  ElementSubset central_;
  std::vector<ElementSubset> blocks_;
  std::optional<ElementSubset> compat_center_;
  std::map<std::string, Outcome> memo_;
};

nlohmann::json subset_json(const ElementSet& s, std::size_t n);
nlohmann::json family_json(const OrthogonalFamily& f);

}  // namespace ea
