#pragma once

#include <cstddef>
#include <vector>

#include "ea/element_set.hpp"
#include "ea/model.hpp"

namespace ea {

// Order-theoretic data derived once from a model. x <= y iff x ⊕ z = y for
// some z. Meets and joins are found by intersecting bound sets; every
// lattice question asked anywhere in the workbench goes through here.
struct OrderCache {
  std::size_t size = 0;
  std::vector<ElementSet> up;    // up[x] = { y : x <= y }
  std::vector<ElementSet> down;  // down[x] = { y : y <= x }
  std::vector<Element> minus;    // minus[y * n + x] = y ⊖ x, or kUndefined
  std::vector<Element> meet;
  std::vector<Element> join;
  std::vector<Element> atoms;
  std::vector<unsigned> ord;
  bool is_lattice = false;

  bool leq(Element x, Element y) const { return up[x].test(y); }
  Element meet_of(Element x, Element y) const { return meet[x * size + y]; }
  Element join_of(Element x, Element y) const { return join[x * size + y]; }
  Element minus_of(Element y, Element x) const { return minus[y * size + x]; }
};

OrderCache build_order_cache(const EffectAlgebraModel& m);

// Least element of `candidates`, i.e. the u in it with candidates ⊆ up[u].
Element least_of(const OrderCache& cache, const ElementSet& candidates);
Element greatest_of(const OrderCache& cache, const ElementSet& candidates);

// Upper (lower) bounds of `of` that lie in `within`. An empty `of` yields
// `within` itself.
ElementSet upper_bounds(const OrderCache& cache, const ElementSet& of, const ElementSet& within);
ElementSet lower_bounds(const OrderCache& cache, const ElementSet& of, const ElementSet& within);

// Join / meet of an arbitrary subset in the subposet `within`.
Element join_within(const OrderCache& cache, const ElementSet& of, const ElementSet& within);
Element meet_within(const OrderCache& cache, const ElementSet& of, const ElementSet& within);

// Greatest n with n·x defined. ord(0) is reported as 1.
unsigned ord_of(const EffectAlgebraModel& m, const OrderCache& cache, Element x);

std::vector<Element> atoms_of(const EffectAlgebraModel& m, const OrderCache& cache);

// Every nonzero element dominates an atom.
bool is_atomic(const EffectAlgebraModel& m, const OrderCache& cache);

// Iterated sums terminate for every element (always true for a finite model;
// computed, not assumed).
bool is_archimedean(const EffectAlgebraModel& m, const OrderCache& cache);

}  // namespace ea
