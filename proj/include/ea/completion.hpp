#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ea/model.hpp"
#include "ea/order.hpp"
#include "ea/substructure.hpp"

namespace ea {

enum class DominationKind { SharpCover, SharpFloor, CentralCover };

const char* domination_kind_name(DominationKind k);

struct DominationWitness {
  Element x = 0;
  Element cover = 0;
  DominationKind kind = DominationKind::SharpCover;
};

// x̂: the meet of { w in S : x <= w }, required to exist in E, to lie in S and
// to equal the meet taken inside S. Empty when any of that fails.
std::optional<DominationWitness> sharp_cover(const EffectAlgebraModel& m, const OrderCache& cache,
                                             const ElementSubset& sharp, Element x);
// x̃: the dual, join of { w in S : w <= x }.
std::optional<DominationWitness> sharp_floor(const EffectAlgebraModel& m, const OrderCache& cache,
                                             const ElementSubset& sharp, Element x);
// c_x: as sharp_cover with C(E) in place of S(E).
std::optional<DominationWitness> central_cover(const EffectAlgebraModel& m, const OrderCache& cache,
                                               const ElementSubset& central, Element x);

struct DominationResult {
  bool holds = true;
  std::vector<DominationWitness> witnesses;
  std::optional<Element> failure;
};

// Also cross-checks that the floor x̃ exists for every x exactly when the
// cover does; disagreement raises InvariantViolation.
DominationResult is_sharply_dominating(const EffectAlgebraModel& m, const OrderCache& cache);

struct SDominationResult {
  bool holds = false;
  bool sharply_dominating = false;
  // (x, w) with w sharp and x ∧ w missing.
  std::optional<std::pair<Element, Element>> missing_meet;
};

// On success asserts that S(E) is an orthomodular lattice.
SDominationResult is_s_dominating(const EffectAlgebraModel& m, const OrderCache& cache);

DominationResult is_centrally_dominating(const EffectAlgebraModel& m, const OrderCache& cache);

// A multiset of nonzero elements whose total sum exists.
struct OrthogonalFamily {
  std::string model_id;
  std::map<Element, unsigned> multiplicities;

  std::vector<Element> occurrences() const;
  std::size_t total() const;
};

bool is_orthogonal(const EffectAlgebraModel& m, std::span<const Element> occurrences);
bool is_orthogonal(const EffectAlgebraModel& m, const OrderCache& cache, const OrthogonalFamily& family);

// Join of the sums of all sub-multisets, kUndefined when the join is missing
// or some partial sum is undefined. Empty family sums to 0.
Element family_sum(const EffectAlgebraModel& m, const OrderCache& cache, std::span<const Element> occurrences);
Element family_sum(const EffectAlgebraModel& m, const OrderCache& cache, const OrthogonalFamily& family);

inline constexpr std::uint64_t kDefaultFamilyBudget = 1'000'000;

// Depth-first over elements of `pool` (zero excluded) in increasing index,
// multiplicity bounded by ord(x), including the empty family. The visitor
// returns false to stop early. Throws BudgetExceeded once more than `budget`
// families would be produced.
std::uint64_t enumerate_orthogonal_families(const EffectAlgebraModel& m, const OrderCache& cache,
                                            const ElementSet& pool, std::uint64_t budget,
                                            const std::function<bool(const OrthogonalFamily&)>& visit);

struct OrthocompleteResult {
  bool holds = true;
  std::uint64_t families = 0;
  // Offending dominated family; for the dominated variants also the
  // dominating family.
  std::optional<OrthogonalFamily> counterexample;
  std::optional<OrthogonalFamily> dominating;
};

OrthocompleteResult is_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                     std::uint64_t budget = kDefaultFamilyBudget);

// Every family elementwise below an orthogonal family from `pool` (S(E) or
// C(E)) has a sum. Zero occurrences in the dominated family are dropped.
OrthocompleteResult is_dominated_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                               const ElementSubset& pool,
                                               std::uint64_t budget = kDefaultFamilyBudget);
OrthocompleteResult is_sharply_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                             std::uint64_t budget = kDefaultFamilyBudget);
OrthocompleteResult is_centrally_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                               std::uint64_t budget = kDefaultFamilyBudget);

// Finite models: complete iff the induced order is a lattice.
bool is_complete(const EffectAlgebraModel& m, const OrderCache& cache);

// a is compact iff whenever ⋁D exists and a <= ⋁D, some finite F ⊆ D has
// an existing join above a. Subsets D are enumerated exhaustively for models
// of at most `exhaustive_limit` elements; larger models use F = D.
ElementSubset compact_elements(const EffectAlgebraModel& m, const OrderCache& cache,
                               std::size_t exhaustive_limit = 10);
// Every element is the join of the compact elements below it.
bool is_compactly_generated(const EffectAlgebraModel& m, const OrderCache& cache,
                            std::size_t exhaustive_limit = 10);

}  // namespace ea
