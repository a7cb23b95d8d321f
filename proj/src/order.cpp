#include "ea/order.hpp"

#include <string>

#include "ea/errors.hpp"

namespace ea {

namespace {

// Returns 0 when the iterated sum is still defined after n steps.
unsigned iterated_order(const EffectAlgebraModel& m, Element x) {
  if (x == 0) return 1;
  const std::size_t n = m.size();
  Element acc = x;
  unsigned k = 1;
  while (true) {
    const Element next = m.sum(acc, x);
    if (next == kUndefined) return k;
    acc = next;
    ++k;
    if (k >= n) return 0;
  }
}

}  // namespace

Element least_of(const OrderCache& cache, const ElementSet& candidates) {
  for (std::size_t u = 0; u < cache.size; ++u) {
    if (candidates.test(u) && is_subset(candidates, cache.up[u])) return static_cast<Element>(u);
  }
  return kUndefined;
}

Element greatest_of(const OrderCache& cache, const ElementSet& candidates) {
  for (std::size_t u = 0; u < cache.size; ++u) {
    if (candidates.test(u) && is_subset(candidates, cache.down[u])) return static_cast<Element>(u);
  }
  return kUndefined;
}

ElementSet upper_bounds(const OrderCache& cache, const ElementSet& of, const ElementSet& within) {
  ElementSet ub = within;
  for (std::size_t d = 0; d < cache.size; ++d) {
    if (of.test(d)) ub &= cache.up[d];
  }
  return ub;
}

ElementSet lower_bounds(const OrderCache& cache, const ElementSet& of, const ElementSet& within) {
  ElementSet lb = within;
  for (std::size_t d = 0; d < cache.size; ++d) {
    if (of.test(d)) lb &= cache.down[d];
  }
  return lb;
}

Element join_within(const OrderCache& cache, const ElementSet& of, const ElementSet& within) {
  return least_of(cache, upper_bounds(cache, of, within));
}

Element meet_within(const OrderCache& cache, const ElementSet& of, const ElementSet& within) {
  return greatest_of(cache, lower_bounds(cache, of, within));
}

OrderCache build_order_cache(const EffectAlgebraModel& m) {
  const std::size_t n = m.size();
  OrderCache c;
  c.size = n;
  c.up.assign(n, ElementSet{});
  c.down.assign(n, ElementSet{});
  c.minus.assign(n * n, kUndefined);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      const Element y = m.sum(static_cast<Element>(x), static_cast<Element>(z));
      if (y == kUndefined) continue;
      c.up[x].set(y);
      c.down[y].set(x);
      c.minus[y * n + x] = static_cast<Element>(z);
    }
  }

  const Element one = m.one();
  for (std::size_t x = 0; x < n; ++x) {
    if (!c.up[0].test(x) || !c.down[one].test(x)) {
      throw InvariantViolation("0 and 1 are not the bounds of the induced order");
    }
    for (std::size_t y = x + 1; y < n; ++y) {
      if (c.up[x].test(y) && c.up[y].test(x)) {
        throw InvariantViolation("induced order is not antisymmetric at " + std::to_string(x) + "," +
                                 std::to_string(y));
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      const bool forward = c.up[x].test(y);
      const bool reversed = c.up[m.orthosupplement(static_cast<Element>(y))].test(m.orthosupplement(static_cast<Element>(x)));
      if (forward != reversed) throw InvariantViolation("orthosupplement does not reverse the order");
    }
  }

  const ElementSet all = full_set(n);
  c.meet.assign(n * n, kUndefined);
  c.join.assign(n * n, kUndefined);
  c.is_lattice = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const Element mt = greatest_of(c, c.down[x] & c.down[y] & all);
      const Element jn = least_of(c, c.up[x] & c.up[y] & all);
      c.meet[x * n + y] = c.meet[y * n + x] = mt;
      c.join[x * n + y] = c.join[y * n + x] = jn;
      if (mt == kUndefined || jn == kUndefined) c.is_lattice = false;
    }
  }

  c.ord.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const unsigned k = iterated_order(m, static_cast<Element>(x));
    if (k == 0) throw InvariantViolation("iterated sum of a finite model did not terminate");
    c.ord[x] = k;
  }

  for (std::size_t x = 1; x < n; ++x) {
    ElementSet below = c.down[x];
    below.reset(0);
    below.reset(x);
    if (below.none()) c.atoms.push_back(static_cast<Element>(x));
  }
  return c;
}

unsigned ord_of(const EffectAlgebraModel& m, const OrderCache& cache, Element x) {
  (void)cache;
  const unsigned k = iterated_order(m, x);
  if (k == 0) throw InvariantViolation("ord exceeded n-1 for element " + std::to_string(x));
  return k;
}

std::vector<Element> atoms_of(const EffectAlgebraModel& m, const OrderCache& cache) {
  (void)m;
  return cache.atoms;
}

bool is_atomic(const EffectAlgebraModel& m, const OrderCache& cache) {
  const ElementSet atoms = set_of(cache.atoms);
  for (std::size_t x = 1; x < m.size(); ++x) {
    if ((cache.down[x] & atoms).none()) return false;
  }
  return true;
}

bool is_archimedean(const EffectAlgebraModel& m, const OrderCache& cache) {
  (void)cache;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (iterated_order(m, static_cast<Element>(x)) == 0) return false;
  }
  return true;
}

}  // namespace ea
