#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ea/element_set.hpp"
#include "ea/model.hpp"
#include "ea/order.hpp"

namespace ea {

enum class Truth { False, True, Inconclusive };

inline Truth truth(bool b) { return b ? Truth::True : Truth::False; }
const char* truth_name(Truth t);

// Kleene three-valued connectives.
Truth truth_and(Truth a, Truth b);
Truth truth_or(Truth a, Truth b);
Truth truth_not(Truth a);
inline Truth truth_implies(Truth a, Truth b) { return truth_or(truth_not(a), b); }
Truth truth_iff(Truth a, Truth b);

struct ElementSubset {
  std::string model_id;
  ElementSet members;
  std::size_t universe = 0;

  bool contains(Element x) const { return members.test(x); }
  std::size_t count() const { return members.count(); }
  std::vector<Element> sorted() const { return members_of(members, universe); }
};

ElementSubset make_subset(const EffectAlgebraModel& m, const std::vector<Element>& elements);
ElementSubset make_subset(const EffectAlgebraModel& m, const ElementSet& members);

struct CompatibilityGraph {
  std::string model_id;
  std::size_t size = 0;
  std::vector<ElementSet> adjacency;  // reflexive and symmetric

  bool adjacent(Element x, Element y) const { return adjacency[x].test(y); }
};

// 1 ∈ s and, whenever x ⊕ y = z with two of x, y, z in s, all three are.
bool is_sub_effect_algebra(const EffectAlgebraModel& m, const ElementSubset& s);

// w with w ∧ w' = 0. When the meet does not exist the element is not sharp.
ElementSubset sharp_elements(const EffectAlgebraModel& m, const OrderCache& cache);

// x ∨ y = x ⊕ (y ⊖ (x ∧ y)). Lattice models only; throws NotALattice.
bool compatible(const EffectAlgebraModel& m, const OrderCache& cache, Element x, Element y);
CompatibilityGraph compatibility_graph(const EffectAlgebraModel& m, const OrderCache& cache);

// Bron–Kerbosch with pivoting over a reflexive adjacency relation (self loops
// are ignored). Cliques come back sorted lexicographically by member list.
std::vector<ElementSet> maximal_cliques(const std::vector<ElementSet>& adjacency, std::size_t n);

// Maximal sets of pairwise compatible elements; each is checked to be a
// sub-effect algebra and sub-lattice, and their union to cover E.
std::vector<ElementSubset> blocks(const EffectAlgebraModel& m, const OrderCache& cache);

// Intersection of all blocks.
ElementSubset compatibility_center(const EffectAlgebraModel& m, const OrderCache& cache);

// For every x: x ∧ c and x ∧ c' exist and x = (x ∧ c) ∨ (x ∧ c').
bool is_central(const EffectAlgebraModel& m, const OrderCache& cache, Element c);

// On lattice models also cross-checks C(E) = B(E) ∩ S(E) and the
// "z ∧ z' = 0 and z compatible with everything" description.
ElementSubset center(const EffectAlgebraModel& m, const OrderCache& cache);

// Join (meet) of d inside the subposet g. Throws SubsetMismatch when d ⊄ g.
Element join_in_sub(const OrderCache& cache, const ElementSubset& g, const ElementSubset& d);
Element meet_in_sub(const OrderCache& cache, const ElementSubset& g, const ElementSubset& d);

struct SubsetCheckOptions {
  std::size_t subset_cap = 16;
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
};

struct SubsetCheckResult {
  Truth verdict = Truth::True;
  bool exhaustive = true;
  std::uint64_t subsets_checked = 0;
  // The offending D, together with its joins in g and in E (kUndefined when
  // absent).
  std::optional<ElementSet> counterexample;
  Element join_in_g = kUndefined;
  Element join_in_e = kUndefined;
};

// Every D ⊆ g whose join exists in E has that join inside g.
SubsetCheckResult is_full(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSubset& g,
                          const SubsetCheckOptions& options = {});

// For every D ⊆ g: ⋁_g D exists iff ⋁_E D exists, and then they agree.
// Exhaustive when |g| <= subset_cap, otherwise sampled and at best
// Inconclusive. Throws NotSubEffectAlgebra.
SubsetCheckResult is_bifull(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSubset& g,
                            const SubsetCheckOptions& options = {});

// The same condition stated for meets.
SubsetCheckResult is_meet_bifull(const EffectAlgebraModel& m, const OrderCache& cache,
                                 const ElementSubset& g, const SubsetCheckOptions& options = {});

// Lattice-theoretic checks on a subposet with the inherited order.
bool is_lattice_subposet(const OrderCache& cache, const ElementSet& s);
// Finite, nonempty, bounded and pairwise joins exist.
bool is_complete_subposet(const OrderCache& cache, const ElementSet& s);
bool is_orthomodular_subposet(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSet& s);
bool is_boolean_subposet(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSet& s);
// Minimal elements of s \ {0}.
std::vector<Element> atoms_within(const OrderCache& cache, const ElementSet& s);
// Every nonzero member of s dominates an atom of s.
bool is_atomic_subposet(const OrderCache& cache, const ElementSet& s);

}  // namespace ea
