#include "ea/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ea/errors.hpp"

namespace ea {

namespace {

using Table = std::span<const Element>;

// Relabeled table under labeling (old -> new).
std::vector<Element> relabel(Table t, std::size_t n, const std::vector<Element>& labeling) {
  std::vector<Element> out(n * n, kUndefined);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = t[x * n + y];
      out[labeling[x] * n + labeling[y]] = v == kUndefined ? kUndefined : labeling[v];
    }
  }
  return out;
}

CanonicalForm brute_force(Table t, std::size_t n) {
  // order[i] = old element placed at new index i.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<Element> inv(n);
  std::vector<Element> best;
  std::vector<Element> best_labeling;

  do {
    for (std::size_t i = 0; i < n; ++i) inv[order[i]] = static_cast<Element>(i);
    if (best.empty()) {
      best = relabel(t, n, inv);
      best_labeling = inv;
      continue;
    }
    // Compare row-major against the incumbent, bailing out on the first
    // larger entry.
    int cmp = 0;
    for (std::size_t a = 0; a < n && cmp == 0; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Element v = t[order[a] * n + order[b]];
        const Element mapped = v == kUndefined ? kUndefined : inv[v];
        const Element cur = best[a * n + b];
        if (mapped != cur) {
          cmp = mapped < cur ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) {
      best = relabel(t, n, inv);
      best_labeling = inv;
    }
  } while (n > 2 && std::next_permutation(order.begin() + 1, order.end() - 1));

  CanonicalForm f;
  f.size = n;
  f.table = std::move(best);
  f.labeling = std::move(best_labeling);
  return f;
}

// Colour refinement: repeatedly split classes by the multiset of
// (colour of y, colour of x ⊕ y). The old colour leads each signature, so
// the cell order only ever refines.
std::vector<int> refine(Table t, std::size_t n, std::vector<int> colour) {
  std::size_t classes = 0;
  {
    auto sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(n);
      for (std::size_t y = 0; y < n; ++y) {
        const Element v = t[x * n + y];
        pairs.emplace_back(colour[y], v == kUndefined ? -1 : colour[v]);
      }
      std::sort(pairs.begin(), pairs.end());
      sig[x].push_back(colour[x]);
      for (const auto& [a, b] : pairs) {
        sig[x].push_back(a);
        sig[x].push_back(b);
      }
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, v] : rank) v = r++;
    for (std::size_t x = 0; x < n; ++x) colour[x] = rank[sig[x]];
    if (rank.size() == classes) return colour;
    classes = rank.size();
  }
}

struct IrSearch {
  Table t;
  std::size_t n;
  std::vector<Element> best;
  std::vector<Element> best_labeling;
  std::vector<Element> first;
  std::vector<Element> first_inverse;  // new -> old for the first leaf
  std::vector<Element> first_path;
  std::vector<std::vector<Element>> automorphisms;
  std::vector<Element> path;

  // Orbits of the automorphisms found so far that fix the current path.
  std::vector<std::size_t> orbits() const {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms) {
      const bool fixes = std::all_of(path.begin(), path.end(), [&](Element v) { return g[v] == v; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n; ++x) parent[find(x)] = find(g[x]);
    }
    for (std::size_t x = 0; x < n; ++x) parent[x] = find(x);
    return parent;
  }

  // Returns the depth to unwind to, or -1 to carry on.
  int run(std::vector<int> colour) {
    colour = refine(t, n, std::move(colour));
    std::vector<int> count(n, 0);
    for (int c : colour) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) return leaf(colour);

    const int depth = static_cast<int>(path.size());
    std::vector<Element> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      if (!tried.empty()) {
        const auto orbit = orbits();
        if (std::any_of(tried.begin(), tried.end(), [&](Element u) { return orbit[u] == orbit[v]; })) continue;
      }
      tried.push_back(static_cast<Element>(v));
      std::vector<int> next(n);
      for (std::size_t x = 0; x < n; ++x) next[x] = 2 * colour[x] + (colour[x] == target && x != v ? 1 : 0);
      path.push_back(static_cast<Element>(v));
      const int jump = run(std::move(next));
      path.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  int leaf(const std::vector<int>& colour) {
    std::vector<Element> labeling(n);
    for (std::size_t x = 0; x < n; ++x) labeling[x] = static_cast<Element>(colour[x]);
    auto table = relabel(t, n, labeling);
    if (first.empty()) {
      first = table;
      first_inverse.assign(n, 0);
      for (std::size_t x = 0; x < n; ++x) first_inverse[labeling[x]] = static_cast<Element>(x);
      first_path = path;
      best = std::move(table);
      best_labeling = std::move(labeling);
      return -1;
    }
    if (table == first) {
      // old x -> first leaf's element with the same new label
      std::vector<Element> g(n);
      for (std::size_t x = 0; x < n; ++x) g[x] = first_inverse[labeling[x]];
      automorphisms.push_back(std::move(g));
      std::size_t i = 0;
      while (i < path.size() && i < first_path.size() && path[i] == first_path[i]) ++i;
      return static_cast<int>(i);
    }
    if (table < best) {
      best = std::move(table);
      best_labeling = std::move(labeling);
    }
    return -1;
  }
};

CanonicalForm individualize_refine(Table t, std::size_t n) {
  std::vector<int> colour(n, 1);
  colour[0] = 0;
  colour[n - 1] = 2;
  IrSearch search{t, n, {}, {}, {}, {}, {}, {}, {}};
  search.run(std::move(colour));
  CanonicalForm f;
  f.size = n;
  f.table = std::move(search.best);
  f.labeling = std::move(search.best_labeling);
  return f;
}

}  // namespace

CanonicalForm canonicalize_table(std::span<const Element> table, std::size_t n) {
  CanonicalForm f = n - 2 <= kBruteForceLimit ? brute_force(table, n) : individualize_refine(table, n);
  if (f.labeling[0] != 0 || f.labeling[n - 1] != n - 1) throw InvariantViolation("canonical labeling moved 0 or 1");
  f.iso_hash = fnv1a_hex(f.table, n);
  return f;
}

CanonicalForm canonicalize(const EffectAlgebraModel& m) { return canonicalize_table(m.table(), m.size()); }

EffectAlgebraModel permute(const EffectAlgebraModel& m, std::span<const Element> perm) {
  const std::size_t n = m.size();
  if (perm.size() != n || perm[0] != 0 || perm[n - 1] != n - 1) throw ShapeError("permutation must fix 0 and 1");
  RawTable raw;
  raw.zero = 0;
  raw.one = static_cast<std::int64_t>(n - 1);
  raw.sum.assign(n, std::vector<std::optional<std::int64_t>>(n));
  if (!m.labels().empty()) raw.labels.assign(n, "");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = m.sum(static_cast<Element>(x), static_cast<Element>(y));
      if (v != kUndefined) raw.sum[perm[x]][perm[y]] = perm[v];
    }
    if (!m.labels().empty()) raw.labels[perm[x]] = m.labels()[x];
  }
  return validate_or_throw(raw);
}

EffectAlgebraModel model_from_canonical(const CanonicalForm& form) {
  const std::size_t n = form.size;
  RawTable raw;
  raw.zero = 0;
  raw.one = static_cast<std::int64_t>(n - 1);
  raw.sum.assign(n, std::vector<std::optional<std::int64_t>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = form.table[x * n + y];
      if (v != kUndefined) raw.sum[x][y] = v;
    }
  }
  return validate_or_throw(raw);
}

}  // namespace ea
