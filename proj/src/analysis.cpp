#include "ea/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "ea/errors.hpp"

namespace ea {

using nlohmann::json;

json subset_json(const ElementSet& s, std::size_t n) {
  json arr = json::array();
  for (Element e : members_of(s, n)) arr.push_back(e);
  return arr;
}

json family_json(const OrthogonalFamily& f) {
  json obj = json::object();
  for (const auto& [e, k] : f.multiplicities) obj[std::to_string(e)] = k;
  return obj;
}

namespace {

using Checker = std::function<Outcome(ModelAnalysis&)>;

Outcome yes_no(bool b, json witness = nullptr) { return {truth(b), std::move(witness)}; }

json subset_check_json(const SubsetCheckResult& r, std::size_t n) {
  json w = {{"exhaustive", r.exhaustive}, {"subsets_checked", r.subsets_checked}};
  if (r.counterexample) {
    w["counterexample"] = subset_json(*r.counterexample, n);
    w["join_in_subset"] = r.join_in_g == kUndefined ? json(nullptr) : json(r.join_in_g);
    w["join_in_model"] = r.join_in_e == kUndefined ? json(nullptr) : json(r.join_in_e);
  }
  return w;
}

Outcome subset_outcome(const SubsetCheckResult& r, std::size_t n) { return {r.verdict, subset_check_json(r, n)}; }

Outcome orthocomplete_outcome(const OrthocompleteResult& r) {
  json w = {{"families", r.families}};
  if (r.counterexample) w["counterexample"] = family_json(*r.counterexample);
  if (r.dominating) w["dominating"] = family_json(*r.dominating);
  return {truth(r.holds), w};
}

Outcome domination_outcome(const DominationResult& r) {
  json w = nullptr;
  if (r.failure) w = {{"failure", *r.failure}};
  return {truth(r.holds), w};
}

// Checks over a subset that must first be a sub-effect algebra.
Outcome with_sub_effect_algebra(ModelAnalysis& a, const ElementSubset& g,
                                const std::function<SubsetCheckResult(const ElementSubset&)>& check) {
  if (!is_sub_effect_algebra(a.model(), g)) return {Truth::False, {{"error", "not a sub-effect algebra"}}};
  return subset_outcome(check(g), a.model().size());
}

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"lattice", [](ModelAnalysis& a) { return yes_no(a.cache().is_lattice); }},
      {"archimedean", [](ModelAnalysis& a) { return yes_no(is_archimedean(a.model(), a.cache())); }},
      {"atomic", [](ModelAnalysis& a) { return yes_no(is_atomic(a.model(), a.cache())); }},
      {"complete", [](ModelAnalysis& a) { return yes_no(is_complete(a.model(), a.cache())); }},
      {"compactly_generated",
       [](ModelAnalysis& a) {
         return yes_no(is_compactly_generated(a.model(), a.cache(), a.options().compact_limit));
       }},
      {"mv", [](ModelAnalysis& a) { return yes_no(a.cache().is_lattice && a.blocks().size() == 1); }},
      {"orthomodular",
       [](ModelAnalysis& a) { return yes_no(a.cache().is_lattice && a.sharp().count() == a.model().size()); }},
      {"boolean",
       [](ModelAnalysis& a) {
         return yes_no(a.truth_of("mv") == Truth::True && a.truth_of("orthomodular") == Truth::True);
       }},
      {"sharply_dominating",
       [](ModelAnalysis& a) { return domination_outcome(is_sharply_dominating(a.model(), a.cache())); }},
      {"s_dominating",
       [](ModelAnalysis& a) {
         const auto r = is_s_dominating(a.model(), a.cache());
         json w = nullptr;
         if (r.missing_meet) w = {{"missing_meet", {r.missing_meet->first, r.missing_meet->second}}};
         if (!r.sharply_dominating) w = {{"sharply_dominating", false}};
         return Outcome{truth(r.holds), w};
       }},
      {"centrally_dominating",
       [](ModelAnalysis& a) { return domination_outcome(is_centrally_dominating(a.model(), a.cache())); }},
      {"orthocomplete",
       [](ModelAnalysis& a) {
         return orthocomplete_outcome(is_orthocomplete(a.model(), a.cache(), a.options().family_budget));
       }},
      {"sharply_orthocomplete",
       [](ModelAnalysis& a) {
         return orthocomplete_outcome(
             is_dominated_orthocomplete(a.model(), a.cache(), a.sharp(), a.options().family_budget));
       }},
      {"centrally_orthocomplete",
       [](ModelAnalysis& a) {
         return orthocomplete_outcome(
             is_dominated_orthocomplete(a.model(), a.cache(), a.central(), a.options().family_budget));
       }},
      {"sharp_sub_effect_algebra",
       [](ModelAnalysis& a) { return yes_no(is_sub_effect_algebra(a.model(), a.sharp())); }},
      {"sharp_full",
       [](ModelAnalysis& a) {
         return with_sub_effect_algebra(a, a.sharp(), [&](const ElementSubset& g) {
           return is_full(a.model(), a.cache(), g, a.options().subsets);
         });
       }},
      {"sharp_bifull",
       [](ModelAnalysis& a) {
         return with_sub_effect_algebra(a, a.sharp(), [&](const ElementSubset& g) {
           return is_bifull(a.model(), a.cache(), g, a.options().subsets);
         });
       }},
      {"sharp_meet_bifull",
       [](ModelAnalysis& a) {
         return with_sub_effect_algebra(a, a.sharp(), [&](const ElementSubset& g) {
           return is_meet_bifull(a.model(), a.cache(), g, a.options().subsets);
         });
       }},
      {"center_bifull",
       [](ModelAnalysis& a) {
         return with_sub_effect_algebra(a, a.central(), [&](const ElementSubset& g) {
           return is_bifull(a.model(), a.cache(), g, a.options().subsets);
         });
       }},
      {"sharp_complete_oml",
       [](ModelAnalysis& a) {
         const auto& s = a.sharp().members;
         return yes_no(is_complete_subposet(a.cache(), s) && is_orthomodular_subposet(a.model(), a.cache(), s));
       }},
      {"center_complete_boolean",
       [](ModelAnalysis& a) {
         const auto& c = a.central().members;
         return yes_no(is_complete_subposet(a.cache(), c) && is_boolean_subposet(a.model(), a.cache(), c));
       }},
      {"center_atomic", [](ModelAnalysis& a) { return yes_no(is_atomic_subposet(a.cache(), a.central().members)); }},
      {"center_atoms_join_to_one",
       [](ModelAnalysis& a) {
         const auto atoms = atoms_within(a.cache(), a.central().members);
         const Element j = join_within(a.cache(), set_of(atoms), full_set(a.model().size()));
         json w = {{"atoms", atoms}, {"join", j == kUndefined ? json(nullptr) : json(j)}};
         return yes_no(j == a.model().one(), w);
       }},
      {"all_blocks_atomic",
       [](ModelAnalysis& a) {
         if (!a.cache().is_lattice) return Outcome{Truth::False, {{"error", "not a lattice"}}};
         return yes_no(std::all_of(a.blocks().begin(), a.blocks().end(), [&](const ElementSubset& b) {
           return is_atomic_subposet(a.cache(), b.members);
         }));
       }},
      {"blocks_complete",
       [](ModelAnalysis& a) {
         if (!a.cache().is_lattice) return Outcome{Truth::False, {{"error", "not a lattice"}}};
         return yes_no(std::all_of(a.blocks().begin(), a.blocks().end(), [&](const ElementSubset& b) {
           return is_complete_subposet(a.cache(), b.members);
         }));
       }},
      {"atomic_blocks_complete",
       [](ModelAnalysis& a) {
         if (!a.cache().is_lattice) return Outcome{Truth::False, {{"error", "not a lattice"}}};
         return yes_no(std::all_of(a.blocks().begin(), a.blocks().end(), [&](const ElementSubset& b) {
           return !is_atomic_subposet(a.cache(), b.members) || is_complete_subposet(a.cache(), b.members);
         }));
       }},
  };
  return table;
}

}  // namespace

ModelAnalysis::ModelAnalysis(EffectAlgebraModel model, AnalysisOptions options)
    : model_(std::move(model)), options_(options), cache_(build_order_cache(model_)) {
  sharp_ = sharp_elements(model_, cache_);
  central_ = ea::center(model_, cache_);
  if (cache_.is_lattice) {
    blocks_ = ea::blocks(model_, cache_);
    ElementSet b = full_set(model_.size());
    for (const auto& block : blocks_) b &= block.members;
    compat_center_ = make_subset(model_, b);
  }
  if (!is_subset(central_.members, sharp_.members)) throw InvariantViolation("C(E) is not contained in S(E)");
  for (Element w : sharp_.sorted()) {
    if (!sharp_.contains(model_.orthosupplement(w))) throw InvariantViolation("S(E) not closed under '");
  }
}

const std::vector<std::string>& ModelAnalysis::property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : checkers()) out.push_back(name);
    return out;
  }();
  return names;
}

const Outcome& ModelAnalysis::property(const std::string& name) {
  if (auto it = memo_.find(name); it != memo_.end()) return it->second;
  const auto& table = checkers();
  const auto entry = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == name; });
  if (entry == table.end()) throw std::out_of_range("unknown property: " + name);
  Outcome outcome;
  try {
    outcome = entry->second(*this);
  } catch (const BudgetExceeded& e) {
    outcome = {Truth::Inconclusive, {{"error", e.what()}}};
  } catch (const NotALattice& e) {
    outcome = {Truth::False, {{"error", e.what()}}};
  } catch (const NotSubEffectAlgebra& e) {
    outcome = {Truth::False, {{"error", e.what()}}};
  }
  return memo_[name] = std::move(outcome);
}

json ModelAnalysis::report(const std::vector<std::string>& filter) {
  const std::size_t n = model_.size();
  json props = json::object();
  json witnesses = json::object();
  for (const auto& name : filter.empty() ? property_names() : filter) {
    const Outcome& o = property(name);
    props[name] = o.value == Truth::Inconclusive ? json("inconclusive") : json(o.value == Truth::True);
    if (!o.witness.is_null()) witnesses[name] = o.witness;
  }

  unsigned max_ord = 0;
  for (std::size_t x = 1; x < n; ++x) max_ord = std::max(max_ord, cache_.ord[x]);
  json stats = {
      {"sharp_count", sharp_.count()},
      {"center_count", central_.count()},
      {"atom_count", cache_.atoms.size()},
      {"max_ord", max_ord},
      {"block_count", cache_.is_lattice ? json(blocks_.size()) : json(nullptr)},
      {"compatibility_center_count", compat_center_ ? json(compat_center_->count()) : json(nullptr)},
  };

  witnesses["sharp_elements"] = subset_json(sharp_.members, n);
  witnesses["center"] = subset_json(central_.members, n);
  witnesses["atoms"] = cache_.atoms;
  if (cache_.is_lattice) {
    json bl = json::array();
    for (const auto& b : blocks_) bl.push_back(subset_json(b.members, n));
    witnesses["blocks"] = bl;
    witnesses["compatibility_center"] = subset_json(compat_center_->members, n);
  }

  return {{"model_id", model_.model_id()},
          {"size", n},
          {"properties", props},
          {"stats", stats},
          {"witnesses", witnesses}};
}

}  // namespace ea
