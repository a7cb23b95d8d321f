#include "ea/enumerate.hpp"

#include <set>
#include <utility>

#include <omp.h>

#include "ea/errors.hpp"

namespace ea {

namespace {

constexpr Element kUnknown = kUndefined - 1;

class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(n), s_(n * n, kUnknown), used_(n) {
    const auto one = static_cast<Element>(n - 1);
    for (std::size_t x = 0; x < n; ++x) {
      put(0, static_cast<Element>(x), static_cast<Element>(x));
      if (x != 0) put(one, static_cast<Element>(x), kUndefined);
    }
    for (std::size_t x = 0; x < n; ++x) used_[x].set(at(static_cast<Element>(x), 0));
    for (std::size_t i = 1; i + 1 < n; ++i) {
      for (std::size_t j = i; j + 1 < n; ++j) vars_.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
    }
  }

  std::size_t variable_count() const { return vars_.size(); }

  // Candidate values for variable k in the current state, in search order.
  std::vector<Element> candidates(std::size_t k) const {
    const auto [i, j] = vars_[k];
    const auto one = static_cast<Element>(n_ - 1);
    std::vector<Element> out;
    const bool needs_one = static_cast<std::size_t>(j) + 2 == n_ && !used_[i].test(one);
    if (!needs_one) out.push_back(kUndefined);
    for (std::size_t v = 1; v < n_; ++v) {
      if (needs_one && v != one) continue;
      if (used_[i].test(v) || used_[j].test(v)) continue;
      out.push_back(static_cast<Element>(v));
    }
    return out;
  }

  // Assigns variable k; returns false (and leaves the assignment in place
  // for the caller to undo) when an associativity triple fails.
  bool assign(std::size_t k, Element v) {
    const auto [i, j] = vars_[k];
    put(i, j, v);
    if (v != kUndefined) {
      used_[i].set(v);
      used_[j].set(v);
    }
    return consistent(i, j);
  }

  void undo(std::size_t k, Element v) {
    const auto [i, j] = vars_[k];
    put(i, j, kUnknown);
    if (v != kUndefined) {
      used_[i].reset(v);
      used_[j].reset(v);
    }
  }

  const std::vector<Element>& table() const { return s_; }

 private:
  Element at(Element a, Element b) const { return s_[a * n_ + b]; }

  void put(Element a, Element b, Element v) {
    s_[a * n_ + b] = v;
    s_[b * n_ + a] = v;
  }

  // (a ⊕ b) ⊕ c versus a ⊕ (b ⊕ c); undetermined triples pass.
  bool triple(Element a, Element b, Element c) const {
    const Element ab = at(a, b);
    if (ab == kUnknown) return true;
    const Element lhs = ab == kUndefined ? kUndefined : at(ab, c);
    if (lhs == kUnknown) return true;
    const Element bc = at(b, c);
    if (bc == kUnknown) return true;
    const Element rhs = bc == kUndefined ? kUndefined : at(a, bc);
    if (rhs == kUnknown) return true;
    return lhs == rhs;
  }

  // Every triple that reads entry {i, j} in one of its four lookups.
  bool consistent(Element i, Element j) const {
    const auto N = static_cast<Element>(n_);
    for (Element c = 0; c < N; ++c) {
      if (!triple(i, j, c) || !triple(j, i, c)) return false;
      if (!triple(c, i, j) || !triple(c, j, i)) return false;
    }
    for (Element a = 0; a < N; ++a) {
      for (Element b = 0; b < N; ++b) {
        const Element v = at(a, b);
        if (v == i && !triple(a, b, j)) return false;
        if (v == j && !triple(a, b, i)) return false;
        if (v == j && !triple(i, a, b)) return false;
        if (v == i && !triple(j, a, b)) return false;
      }
    }
    return true;
  }

  std::size_t n_;
  std::vector<Element> s_;
  std::vector<ElementSet> used_;  // values already present in each row
  std::vector<std::pair<Element, Element>> vars_;
};

using FormSet = std::set<CanonicalForm>;

void search_from(TableSearch& search, std::size_t k, std::size_t n, FormSet& found, EnumerationStats& stats) {
  ++stats.search_nodes;
  if (k == search.variable_count()) {
    ++stats.labeled_models;
    found.insert(canonicalize_table(search.table(), n));
    return;
  }
  for (Element v : search.candidates(k)) {
    if (search.assign(k, v)) search_from(search, k + 1, n, found, stats);
    search.undo(k, v);
  }
}

// Consistent assignments to the first `depth` variables.
void collect_prefixes(TableSearch& search, std::size_t k, std::size_t depth, std::vector<Element>& prefix,
                      std::vector<std::vector<Element>>& out) {
  if (k == depth) {
    out.push_back(prefix);
    return;
  }
  for (Element v : search.candidates(k)) {
    if (search.assign(k, v)) {
      prefix.push_back(v);
      collect_prefixes(search, k + 1, depth, prefix, out);
      prefix.pop_back();
    }
    search.undo(k, v);
  }
}

void check_size(std::size_t size, bool allow_long) {
  if (size < 2) throw SizeLimit("enumeration needs size >= 2");
  const std::size_t limit = allow_long ? kLongMaxEnumerationSize : kDefaultMaxEnumerationSize;
  if (size > limit) {
    throw SizeLimit("enumeration size " + std::to_string(size) + " exceeds " + std::to_string(limit) +
                    (allow_long ? "" : " (pass --long for sizes 7-8)"));
  }
}

std::vector<CanonicalForm> finish(const FormSet& found) {
  std::vector<CanonicalForm> out(found.begin(), found.end());
  for (const auto& f : out) {
    // Round-trips through validate(); throws if the search emitted garbage.
    (void)model_from_canonical(f);
  }
  return out;
}

}  // namespace

std::vector<CanonicalForm> enumerate_models_serial(std::size_t size, EnumerationStats* stats) {
  check_size(size, true);
  TableSearch search(size);
  FormSet found;
  EnumerationStats local;
  search_from(search, 0, size, found, local);
  if (stats) *stats = local;
  return finish(found);
}

std::vector<CanonicalForm> enumerate_models(const EnumerationOptions& options, EnumerationStats* stats) {
  const std::size_t n = options.size;
  check_size(n, options.allow_long);

  // Split on the whole first row of the free block.
  std::vector<std::vector<Element>> prefixes;
  {
    TableSearch root(n);
    std::vector<Element> prefix;
    const std::size_t depth = std::min<std::size_t>(root.variable_count(), n > 2 ? n - 2 : 0);
    collect_prefixes(root, 0, depth, prefix, prefixes);
  }

  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
  std::vector<FormSet> partial(prefixes.size());
  std::vector<EnumerationStats> partial_stats(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    TableSearch search(n);
    const auto& prefix = prefixes[p];
    for (std::size_t k = 0; k < prefix.size(); ++k) (void)search.assign(k, prefix[k]);
    search_from(search, prefix.size(), n, partial[p], partial_stats[p]);
  }

  // Deterministic merge.
  FormSet found;
  EnumerationStats total;
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    found.insert(partial[p].begin(), partial[p].end());
    total.labeled_models += partial_stats[p].labeled_models;
    total.search_nodes += partial_stats[p].search_nodes;
  }
  if (stats) *stats = total;
  return finish(found);
}

std::size_t enumerate_models(const EnumerationOptions& options,
                             const std::function<void(const EffectAlgebraModel&, const CanonicalForm&)>& emit) {
  const auto forms = enumerate_models(options);
  for (const auto& f : forms) emit(model_from_canonical(f), f);
  return forms.size();
}

}  // namespace ea
