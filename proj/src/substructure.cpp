#include "ea/substructure.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ea/errors.hpp"

namespace ea {

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Inconclusive: return "inconclusive";
  }
  return "?";
}

Truth truth_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Inconclusive;
}

Truth truth_or(Truth a, Truth b) {
  if (a == Truth::True || b == Truth::True) return Truth::True;
  if (a == Truth::False && b == Truth::False) return Truth::False;
  return Truth::Inconclusive;
}

Truth truth_not(Truth a) {
  if (a == Truth::Inconclusive) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}

Truth truth_iff(Truth a, Truth b) {
  if (a == Truth::Inconclusive || b == Truth::Inconclusive) return Truth::Inconclusive;
  return truth(a == b);
}

ElementSubset make_subset(const EffectAlgebraModel& m, const std::vector<Element>& elements) {
  return make_subset(m, set_of(elements));
}

ElementSubset make_subset(const EffectAlgebraModel& m, const ElementSet& members) {
  ElementSubset s;
  s.model_id = m.model_id();
  s.members = members & full_set(m.size());
  s.universe = m.size();
  return s;
}

bool is_sub_effect_algebra(const EffectAlgebraModel& m, const ElementSubset& s) {
  if (!s.contains(m.one())) return false;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element z = m.sum(static_cast<Element>(x), static_cast<Element>(y));
      if (z == kUndefined) continue;
      const int inside = int(s.members.test(x)) + int(s.members.test(y)) + int(s.members.test(z));
      if (inside == 2) return false;
    }
  }
  return true;
}

ElementSubset sharp_elements(const EffectAlgebraModel& m, const OrderCache& cache) {
  ElementSet sharp;
  for (std::size_t w = 0; w < m.size(); ++w) {
    const auto e = static_cast<Element>(w);
    if (cache.meet_of(e, m.orthosupplement(e)) == 0) sharp.set(w);
  }
  return make_subset(m, sharp);
}

bool compatible(const EffectAlgebraModel& m, const OrderCache& cache, Element x, Element y) {
  if (!cache.is_lattice) throw NotALattice();
  const Element mt = cache.meet_of(x, y);
  const Element rest = cache.minus_of(y, mt);
  if (rest == kUndefined) throw InvariantViolation("y - (x meet y) undefined");
  const Element rhs = m.sum(x, rest);
  return rhs != kUndefined && rhs == cache.join_of(x, y);
}

CompatibilityGraph compatibility_graph(const EffectAlgebraModel& m, const OrderCache& cache) {
  if (!cache.is_lattice) throw NotALattice();
  const std::size_t n = m.size();
  CompatibilityGraph g;
  g.model_id = m.model_id();
  g.size = n;
  g.adjacency.assign(n, ElementSet{});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (compatible(m, cache, static_cast<Element>(x), static_cast<Element>(y))) g.adjacency[x].set(y);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    if (!g.adjacency[x].test(x) || !g.adjacency[x].test(m.orthosupplement(e)) || !g.adjacency[x].test(0) ||
        !g.adjacency[x].test(m.one())) {
      throw InvariantViolation("element " + std::to_string(x) + " not compatible with itself, x', 0 or 1");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (g.adjacency[x].test(y) != g.adjacency[y].test(x)) throw InvariantViolation("compatibility not symmetric");
    }
  }
  return g;
}

namespace {

void bron_kerbosch(const std::vector<ElementSet>& nbr, std::size_t n, ElementSet r, ElementSet p, ElementSet x,
                   std::vector<ElementSet>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  // Pivot: the vertex of P ∪ X with the most neighbours in P.
  const ElementSet px = p | x;
  std::size_t pivot = n;
  std::size_t best = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!px.test(u)) continue;
    const std::size_t c = (p & nbr[u]).count();
    if (pivot == n || c > best) {
      pivot = u;
      best = c;
    }
  }
  const ElementSet candidates = p & ~nbr[pivot];
  for (std::size_t v = 0; v < n; ++v) {
    if (!candidates.test(v)) continue;
    ElementSet r2 = r;
    r2.set(v);
    bron_kerbosch(nbr, n, r2, p & nbr[v], x & nbr[v], out);
    p.reset(v);
    x.set(v);
  }
}

bool lex_less(const ElementSet& a, const ElementSet& b, std::size_t n) {
  const auto ma = members_of(a, n);
  const auto mb = members_of(b, n);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace

std::vector<ElementSet> maximal_cliques(const std::vector<ElementSet>& adjacency, std::size_t n) {
  std::vector<ElementSet> nbr = adjacency;
  for (std::size_t v = 0; v < n; ++v) nbr[v].reset(v);
  std::vector<ElementSet> out;
  bron_kerbosch(nbr, n, ElementSet{}, full_set(n), ElementSet{}, out);
  std::sort(out.begin(), out.end(), [n](const ElementSet& a, const ElementSet& b) { return lex_less(a, b, n); });
  return out;
}

std::vector<ElementSubset> blocks(const EffectAlgebraModel& m, const OrderCache& cache) {
  const CompatibilityGraph g = compatibility_graph(m, cache);
  const std::size_t n = m.size();
  std::vector<ElementSubset> result;
  ElementSet covered;
  for (const ElementSet& clique : maximal_cliques(g.adjacency, n)) {
    ElementSubset block = make_subset(m, clique);
    if (!is_sub_effect_algebra(m, block)) throw InvariantViolation("block is not a sub-effect algebra");
    for (std::size_t x = 0; x < n; ++x) {
      if (!clique.test(x)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!clique.test(y)) continue;
        const auto ex = static_cast<Element>(x);
        const auto ey = static_cast<Element>(y);
        if (!clique.test(cache.meet_of(ex, ey)) || !clique.test(cache.join_of(ex, ey))) {
          throw InvariantViolation("block is not a sub-lattice");
        }
      }
    }
    covered |= clique;
    result.push_back(std::move(block));
  }
  if (covered != full_set(n)) throw InvariantViolation("blocks do not cover the model");
  return result;
}

ElementSubset compatibility_center(const EffectAlgebraModel& m, const OrderCache& cache) {
  ElementSet meet = full_set(m.size());
  for (const ElementSubset& b : blocks(m, cache)) meet &= b.members;
  return make_subset(m, meet);
}

bool is_central(const EffectAlgebraModel& m, const OrderCache& cache, Element c) {
  const Element cc = m.orthosupplement(c);
  for (std::size_t x = 0; x < m.size(); ++x) {
    const auto e = static_cast<Element>(x);
    const Element a = cache.meet_of(e, c);
    const Element b = cache.meet_of(e, cc);
    if (a == kUndefined || b == kUndefined) return false;
    if (cache.join_of(a, b) != e) return false;
  }
  return true;
}

ElementSubset center(const EffectAlgebraModel& m, const OrderCache& cache) {
  const std::size_t n = m.size();
  ElementSet central;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_central(m, cache, static_cast<Element>(c))) central.set(c);
  }
  if (cache.is_lattice) {
    const ElementSet sharp = sharp_elements(m, cache).members;
    const ElementSet compat = compatibility_center(m, cache).members;
    if (central != (sharp & compat)) throw InvariantViolation("C(E) != B(E) ∩ S(E)");
    const CompatibilityGraph g = compatibility_graph(m, cache);
    for (std::size_t z = 0; z < n; ++z) {
      const bool described = sharp.test(z) && g.adjacency[z] == full_set(n);
      if (described != central.test(z)) throw InvariantViolation("central element description mismatch");
    }
  }
  return make_subset(m, central);
}

Element join_in_sub(const OrderCache& cache, const ElementSubset& g, const ElementSubset& d) {
  if (!is_subset(d.members, g.members)) throw SubsetMismatch();
  return join_within(cache, d.members, g.members);
}

Element meet_in_sub(const OrderCache& cache, const ElementSubset& g, const ElementSubset& d) {
  if (!is_subset(d.members, g.members)) throw SubsetMismatch();
  return meet_within(cache, d.members, g.members);
}

namespace {

// Visits every subset of g (or a random sample above the cap) with its bound
// set in E already intersected. `ok(D, bounds)` returns false on violation.
using BoundVisitor = std::function<bool(const ElementSet&, const ElementSet&)>;

SubsetCheckResult sweep_subsets(const OrderCache& cache, const ElementSubset& g, const SubsetCheckOptions& options,
                                bool upper, const BoundVisitor& ok) {
  SubsetCheckResult result;
  const std::vector<Element> members = g.sorted();
  const ElementSet all = full_set(cache.size);
  const std::vector<ElementSet>& rel = upper ? cache.up : cache.down;

  if (members.size() <= options.subset_cap) {
    result.exhaustive = true;
    // Include/exclude each member in turn.
    std::function<bool(std::size_t, ElementSet, ElementSet)> dfs = [&](std::size_t i, ElementSet d,
                                                                       ElementSet bounds) -> bool {
      if (i == members.size()) {
        ++result.subsets_checked;
        if (!ok(d, bounds)) {
          result.verdict = Truth::False;
          result.counterexample = d;
          return false;
        }
        return true;
      }
      if (!dfs(i + 1, d, bounds)) return false;
      d.set(members[i]);
      return dfs(i + 1, d, bounds & rel[members[i]]);
    };
    dfs(0, ElementSet{}, all);
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    ElementSet d;
    ElementSet bounds = all;
    for (Element e : members) {
      if (rng() & 1U) {
        d.set(e);
        bounds &= rel[e];
      }
    }
    ++result.subsets_checked;
    if (!ok(d, bounds)) {
      result.verdict = Truth::False;
      result.counterexample = d;
      return result;
    }
  }
  result.verdict = Truth::Inconclusive;
  return result;
}

}  // namespace

SubsetCheckResult is_full(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSubset& g,
                          const SubsetCheckOptions& options) {
  if (!is_sub_effect_algebra(m, g)) throw NotSubEffectAlgebra();
  Element je = kUndefined;
  auto result = sweep_subsets(cache, g, options, true, [&](const ElementSet&, const ElementSet& ub) {
    je = least_of(cache, ub);
    return je == kUndefined || g.contains(je);
  });
  if (result.counterexample) result.join_in_e = je;
  return result;
}

namespace {

SubsetCheckResult bifull_impl(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSubset& g,
                              const SubsetCheckOptions& options, bool joins) {
  if (!is_sub_effect_algebra(m, g)) throw NotSubEffectAlgebra();
  Element je = kUndefined;
  Element jg = kUndefined;
  auto result = sweep_subsets(cache, g, options, joins, [&](const ElementSet&, const ElementSet& bounds) {
    if (joins) {
      je = least_of(cache, bounds);
      jg = least_of(cache, bounds & g.members);
    } else {
      je = greatest_of(cache, bounds);
      jg = greatest_of(cache, bounds & g.members);
    }
    return je == jg;
  });
  if (result.counterexample) {
    result.join_in_e = je;
    result.join_in_g = jg;
  }
  return result;
}

// Pairwise meet/join tables restricted to a subposet.
struct LocalLattice {
  std::vector<Element> members;
  std::vector<Element> meet;  // indexed by positions in members
  std::vector<Element> join;
  bool total = true;

  LocalLattice(const OrderCache& cache, const ElementSet& s) : members(members_of(s, cache.size)) {
    const std::size_t k = members.size();
    meet.assign(k * k, kUndefined);
    join.assign(k * k, kUndefined);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        ElementSet pair;
        pair.set(members[i]);
        pair.set(members[j]);
        const Element mt = meet_within(cache, pair, s);
        const Element jn = join_within(cache, pair, s);
        meet[i * k + j] = meet[j * k + i] = mt;
        join[i * k + j] = join[j * k + i] = jn;
        if (mt == kUndefined || jn == kUndefined) total = false;
      }
    }
  }

  std::size_t pos(Element e) const {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), e) - members.begin());
  }
  Element m(Element a, Element b) const { return meet[pos(a) * members.size() + pos(b)]; }
  Element j(Element a, Element b) const { return join[pos(a) * members.size() + pos(b)]; }
};

}  // namespace

SubsetCheckResult is_bifull(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSubset& g,
                            const SubsetCheckOptions& options) {
  return bifull_impl(m, cache, g, options, true);
}

SubsetCheckResult is_meet_bifull(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSubset& g,
                                 const SubsetCheckOptions& options) {
  return bifull_impl(m, cache, g, options, false);
}

bool is_lattice_subposet(const OrderCache& cache, const ElementSet& s) {
  if (s.none()) return false;
  return LocalLattice(cache, s).total;
}

bool is_complete_subposet(const OrderCache& cache, const ElementSet& s) {
  if (s.none()) return false;
  if (least_of(cache, s) == kUndefined || greatest_of(cache, s) == kUndefined) return false;
  return is_lattice_subposet(cache, s);
}

bool is_orthomodular_subposet(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSet& s) {
  if (!s.test(0) || !s.test(m.one())) return false;
  LocalLattice lat(cache, s);
  if (!lat.total) return false;
  for (Element x : lat.members) {
    const Element xc = m.orthosupplement(x);
    if (!s.test(xc)) return false;
    if (lat.m(x, xc) != 0 || lat.j(x, xc) != m.one()) return false;
  }
  for (Element x : lat.members) {
    for (Element y : lat.members) {
      if (!cache.leq(x, y)) continue;
      if (lat.j(x, lat.m(y, m.orthosupplement(x))) != y) return false;
    }
  }
  return true;
}

bool is_boolean_subposet(const EffectAlgebraModel& m, const OrderCache& cache, const ElementSet& s) {
  if (!is_orthomodular_subposet(m, cache, s)) return false;
  LocalLattice lat(cache, s);
  for (Element x : lat.members) {
    for (Element y : lat.members) {
      for (Element z : lat.members) {
        if (lat.m(x, lat.j(y, z)) != lat.j(lat.m(x, y), lat.m(x, z))) return false;
      }
    }
  }
  return true;
}

std::vector<Element> atoms_within(const OrderCache& cache, const ElementSet& s) {
  std::vector<Element> atoms;
  for (std::size_t x = 1; x < cache.size; ++x) {
    if (!s.test(x)) continue;
    ElementSet below = cache.down[x] & s;
    below.reset(0);
    below.reset(x);
    if (below.none()) atoms.push_back(static_cast<Element>(x));
  }
  return atoms;
}

bool is_atomic_subposet(const OrderCache& cache, const ElementSet& s) {
  const ElementSet atoms = set_of(atoms_within(cache, s));
  for (std::size_t x = 1; x < cache.size; ++x) {
    if (s.test(x) && (cache.down[x] & atoms).none()) return false;
  }
  return true;
}

}  // namespace ea
