#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ea/model.hpp"

namespace ea {

// Isomorphism-invariant representative of a model. Renumberings always fix
// 0 -> 0 and 1 -> n-1.
//
// For n - 2 <= kBruteForceLimit the table is the lexicographically least over
// all (n-2)! renumberings. Above that, candidates are the leaves of an
// individualization-refinement search (colour refinement on the sum table,
// branching on the first non-singleton cell), and the least leaf table wins.
// Both searches are driven only by isomorphism-invariant data, so equal
// forms <=> isomorphic models in either regime.
struct CanonicalForm {
  std::size_t size = 0;
  std::vector<Element> table;
  // labeling[old] = new index of the renumbering that produced `table`.
  std::vector<Element> labeling;
  std::string iso_hash;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.size == b.size && a.table == b.table;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.size <=> b.size; c != 0) return c;
    return a.table <=> b.table;
  }
};

inline constexpr std::size_t kBruteForceLimit = 9;

CanonicalForm canonicalize(const EffectAlgebraModel& m);

// Lower-level entry point on a raw n×n table known to be a valid effect
// algebra with 0 at index 0 and 1 at index n-1. Used by the enumerator.
CanonicalForm canonicalize_table(std::span<const Element> table, std::size_t n);

// Relabels a model: element x becomes perm[x]. perm must fix 0 and n-1.
// Labels travel with their elements.
EffectAlgebraModel permute(const EffectAlgebraModel& m, std::span<const Element> perm);

// The model whose table is the canonical table (no labels).
EffectAlgebraModel model_from_canonical(const CanonicalForm& form);

}  // namespace ea
