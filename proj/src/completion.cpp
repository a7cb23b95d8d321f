#include "ea/completion.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ea/errors.hpp"

namespace ea {

const char* domination_kind_name(DominationKind k) {
  switch (k) {
    case DominationKind::SharpCover: return "sharp-cover";
    case DominationKind::SharpFloor: return "sharp-floor";
    case DominationKind::CentralCover: return "central-cover";
  }
  return "?";
}

namespace {

std::optional<DominationWitness> cover_in(const EffectAlgebraModel& m, const OrderCache& cache,
                                          const ElementSubset& sub, Element x, DominationKind kind) {
  const ElementSet above = cache.up[x] & sub.members;
  const Element in_e = meet_within(cache, above, full_set(m.size()));
  if (in_e == kUndefined || !sub.contains(in_e)) return std::nullopt;
  if (meet_within(cache, above, sub.members) != in_e) return std::nullopt;
  return DominationWitness{x, in_e, kind};
}

}  // namespace

std::optional<DominationWitness> sharp_cover(const EffectAlgebraModel& m, const OrderCache& cache,
                                             const ElementSubset& sharp, Element x) {
  return cover_in(m, cache, sharp, x, DominationKind::SharpCover);
}

std::optional<DominationWitness> sharp_floor(const EffectAlgebraModel& m, const OrderCache& cache,
                                             const ElementSubset& sharp, Element x) {
  const ElementSet below = cache.down[x] & sharp.members;
  const Element in_e = join_within(cache, below, full_set(m.size()));
  if (in_e == kUndefined || !sharp.contains(in_e)) return std::nullopt;
  if (join_within(cache, below, sharp.members) != in_e) return std::nullopt;
  return DominationWitness{x, in_e, DominationKind::SharpFloor};
}

std::optional<DominationWitness> central_cover(const EffectAlgebraModel& m, const OrderCache& cache,
                                               const ElementSubset& central, Element x) {
  return cover_in(m, cache, central, x, DominationKind::CentralCover);
}

DominationResult is_sharply_dominating(const EffectAlgebraModel& m, const OrderCache& cache) {
  const ElementSubset sharp = sharp_elements(m, cache);
  DominationResult result;
  bool floors_total = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto x = static_cast<Element>(i);
    const auto cover = sharp_cover(m, cache, sharp, x);
    const auto floor = sharp_floor(m, cache, sharp, x);
    if (cover) {
      result.witnesses.push_back(*cover);
    } else if (result.holds) {
      result.holds = false;
      result.failure = x;
    }
    if (!floor) floors_total = false;
    // De Morgan: the floor of x' is the orthosupplement of the cover of x.
    const auto dual = sharp_floor(m, cache, sharp, m.orthosupplement(x));
    if (cover.has_value() != dual.has_value() ||
        (cover && m.orthosupplement(cover->cover) != dual->cover)) {
      throw InvariantViolation("sharp cover and floor are not De Morgan dual at " + std::to_string(i));
    }
  }
  if (floors_total != result.holds) throw InvariantViolation("sharp covers and sharp floors disagree on totality");
  return result;
}

SDominationResult is_s_dominating(const EffectAlgebraModel& m, const OrderCache& cache) {
  SDominationResult result;
  result.sharply_dominating = is_sharply_dominating(m, cache).holds;
  const ElementSubset sharp = sharp_elements(m, cache);
  for (std::size_t x = 0; x < m.size() && !result.missing_meet; ++x) {
    for (Element w : sharp.sorted()) {
      if (cache.meet_of(static_cast<Element>(x), w) == kUndefined) {
        result.missing_meet = std::make_pair(static_cast<Element>(x), w);
        break;
      }
    }
  }
  result.holds = result.sharply_dominating && !result.missing_meet;
  if (result.holds) {
    if (!is_sub_effect_algebra(m, sharp)) throw InvariantViolation("S(E) of an S-dominating model is not a sub-effect algebra");
    if (!is_orthomodular_subposet(m, cache, sharp.members)) {
      throw InvariantViolation("S(E) of an S-dominating model is not an orthomodular lattice");
    }
  }
  return result;
}

DominationResult is_centrally_dominating(const EffectAlgebraModel& m, const OrderCache& cache) {
  const ElementSubset central = center(m, cache);
  DominationResult result;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto cover = central_cover(m, cache, central, static_cast<Element>(i));
    if (cover) {
      result.witnesses.push_back(*cover);
    } else if (result.holds) {
      result.holds = false;
      result.failure = static_cast<Element>(i);
    }
  }
  return result;
}

std::vector<Element> OrthogonalFamily::occurrences() const {
  std::vector<Element> out;
  for (const auto& [e, k] : multiplicities) out.insert(out.end(), k, e);
  return out;
}

std::size_t OrthogonalFamily::total() const {
  std::size_t t = 0;
  for (const auto& [e, k] : multiplicities) t += k;
  return t;
}

bool is_orthogonal(const EffectAlgebraModel& m, std::span<const Element> occurrences) {
  Element acc = 0;
  for (Element x : occurrences) {
    acc = m.sum(acc, x);
    if (acc == kUndefined) return false;
  }
  return true;
}

bool is_orthogonal(const EffectAlgebraModel& m, const OrderCache& cache, const OrthogonalFamily& family) {
  for (const auto& [e, k] : family.multiplicities) {
    if (e == 0 || k == 0 || k > cache.ord[e]) return false;
  }
  const auto occ = family.occurrences();
  return is_orthogonal(m, occ);
}

Element family_sum(const EffectAlgebraModel& m, const OrderCache& cache, std::span<const Element> occurrences) {
  const std::size_t n = m.size();
  ElementSet partial;
  partial.set(0);
  for (Element x : occurrences) {
    ElementSet next = partial;
    for (std::size_t r = 0; r < n; ++r) {
      if (!partial.test(r)) continue;
      const Element s = m.sum(static_cast<Element>(r), x);
      if (s == kUndefined) return kUndefined;
      next.set(s);
    }
    partial = next;
  }
  return join_within(cache, partial, full_set(n));
}

Element family_sum(const EffectAlgebraModel& m, const OrderCache& cache, const OrthogonalFamily& family) {
  const auto occ = family.occurrences();
  return family_sum(m, cache, occ);
}

std::uint64_t enumerate_orthogonal_families(const EffectAlgebraModel& m, const OrderCache& cache,
                                            const ElementSet& pool, std::uint64_t budget,
                                            const std::function<bool(const OrthogonalFamily&)>& visit) {
  std::vector<Element> elems = members_of(pool, m.size());
  elems.erase(std::remove(elems.begin(), elems.end(), Element{0}), elems.end());

  OrthogonalFamily family;
  family.model_id = m.model_id();
  std::uint64_t produced = 0;
  bool stopped = false;

  std::function<void(std::size_t, Element)> dfs = [&](std::size_t i, Element acc) {
    if (stopped) return;
    if (i == elems.size()) {
      if (++produced > budget) throw BudgetExceeded(budget);
      if (!visit(family)) stopped = true;
      return;
    }
    dfs(i + 1, acc);
    const Element x = elems[i];
    Element running = acc;
    for (unsigned k = 1; k <= cache.ord[x] && !stopped; ++k) {
      running = m.sum(running, x);
      if (running == kUndefined) break;
      family.multiplicities[x] = k;
      dfs(i + 1, running);
    }
    family.multiplicities.erase(x);
  };
  dfs(0, 0);
  return produced;
}

OrthocompleteResult is_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache, std::uint64_t budget) {
  OrthocompleteResult result;
  result.families = enumerate_orthogonal_families(m, cache, full_set(m.size()), budget, [&](const OrthogonalFamily& f) {
    if (family_sum(m, cache, f) == kUndefined) {
      result.holds = false;
      result.counterexample = f;
      return false;
    }
    return true;
  });
  return result;
}

OrthocompleteResult is_dominated_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                               const ElementSubset& pool, std::uint64_t budget) {
  OrthocompleteResult result;
  std::set<std::vector<Element>> seen;
  std::uint64_t work = 0;

  result.families = enumerate_orthogonal_families(m, cache, pool.members, budget, [&](const OrthogonalFamily& w) {
    // For each distinct dominating element, choose a multiset (with repetition)
    // of elements below it, one per occurrence.
    std::vector<std::pair<Element, unsigned>> slots(w.multiplicities.begin(), w.multiplicities.end());
    std::vector<std::vector<Element>> below;
    for (const auto& [e, k] : slots) below.push_back(members_of(cache.down[e], m.size()));

    std::vector<Element> chosen;
    bool failed = false;
    std::function<void(std::size_t, std::size_t, unsigned)> choose =
        [&](std::size_t slot, std::size_t start, unsigned left) {
          if (failed) return;
          if (slot == slots.size()) {
            std::vector<Element> key;
            for (Element e : chosen) {
              if (e != 0) key.push_back(e);
            }
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) return;
            if (++work > budget) throw BudgetExceeded(budget);
            if (family_sum(m, cache, key) == kUndefined) {
              failed = true;
              OrthogonalFamily x;
              x.model_id = m.model_id();
              for (Element e : key) ++x.multiplicities[e];
              result.counterexample = x;
              result.dominating = w;
            }
            return;
          }
          if (left == 0) {
            const std::size_t next = slot + 1;
            choose(next, 0, next < slots.size() ? slots[next].second : 0);
            return;
          }
          const auto& options = below[slot];
          for (std::size_t i = start; i < options.size() && !failed; ++i) {
            chosen.push_back(options[i]);
            choose(slot, i, left - 1);
            chosen.pop_back();
          }
        };
    choose(0, 0, slots.empty() ? 0 : slots[0].second);
    if (failed) {
      result.holds = false;
      return false;
    }
    return true;
  });
  return result;
}

OrthocompleteResult is_sharply_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                             std::uint64_t budget) {
  return is_dominated_orthocomplete(m, cache, sharp_elements(m, cache), budget);
}

OrthocompleteResult is_centrally_orthocomplete(const EffectAlgebraModel& m, const OrderCache& cache,
                                               std::uint64_t budget) {
  return is_dominated_orthocomplete(m, cache, center(m, cache), budget);
}

bool is_complete(const EffectAlgebraModel& m, const OrderCache& cache) {
  (void)m;
  return cache.is_lattice;
}

ElementSubset compact_elements(const EffectAlgebraModel& m, const OrderCache& cache, std::size_t exhaustive_limit) {
  const std::size_t n = m.size();
  const ElementSet all = full_set(n);
  if (n > exhaustive_limit) {
    // Every D is finite, so F = D witnesses compactness of everything below ⋁D.
    return make_subset(m, all);
  }
  ElementSet compact = all;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const auto to_set = [n](std::uint64_t mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.set(i);
    }
    return s;
  };
  for (std::uint64_t d = 0; d < subsets; ++d) {
    const Element top = join_within(cache, to_set(d), all);
    if (top == kUndefined) continue;
    const ElementSet need = cache.down[top];
    ElementSet covered;
    // Submasks of D by increasing cardinality; stops once every a <= ⋁D is
    // below the join of some F.
    const int size = std::popcount(d);
    for (int card = 0; card <= size && !is_subset(need, covered); ++card) {
      for (std::uint64_t f = d;; f = (f - 1) & d) {
        if (std::popcount(f) == card) {
          const Element jf = join_within(cache, to_set(f), all);
          if (jf != kUndefined) covered |= cache.down[jf];
        }
        if (f == 0) break;
      }
    }
    compact &= ~(need & ~covered);
  }
  return make_subset(m, compact);
}

bool is_compactly_generated(const EffectAlgebraModel& m, const OrderCache& cache, std::size_t exhaustive_limit) {
  const ElementSubset compact = compact_elements(m, cache, exhaustive_limit);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (join_within(cache, cache.down[x] & compact.members, full_set(m.size())) != x) return false;
  }
  return true;
}

}  // namespace ea
