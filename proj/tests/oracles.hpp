#pragma once
// Slow, independent re-implementations used only as test oracles. They read
// nothing but the sum table.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "ea/model.hpp"

namespace oracle {

using ea::Element;
using ea::kUndefined;
using Table = std::vector<std::vector<int>>;  // -1 = undefined

inline Table table_of(const ea::EffectAlgebraModel& m) {
  const std::size_t n = m.size();
  Table t(n, std::vector<int>(n, -1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = m.sum(static_cast<Element>(x), static_cast<Element>(y));
      if (v != kUndefined) t[x][y] = v;
    }
  }
  return t;
}

inline bool leq(const Table& t, int x, int y) {
  for (std::size_t z = 0; z < t.size(); ++z) {
    if (t[x][z] == y) return true;
  }
  return false;
}

// Greatest lower bound by scanning every candidate; -1 when missing.
inline int meet(const Table& t, int x, int y) {
  const int n = static_cast<int>(t.size());
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq(t, z, x) || !leq(t, z, y)) continue;
    bool greatest = true;
    for (int w = 0; w < n && greatest; ++w) {
      if (leq(t, w, x) && leq(t, w, y) && !leq(t, w, z)) greatest = false;
    }
    if (greatest) best = z;
  }
  return best;
}

inline int join(const Table& t, int x, int y) {
  const int n = static_cast<int>(t.size());
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq(t, x, z) || !leq(t, y, z)) continue;
    bool least = true;
    for (int w = 0; w < n && least; ++w) {
      if (leq(t, x, w) && leq(t, y, w) && !leq(t, z, w)) least = false;
    }
    if (least) best = z;
  }
  return best;
}

inline bool is_lattice(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (meet(t, x, y) < 0 || join(t, x, y) < 0) return false;
    }
  }
  return true;
}

inline int complement(const Table& t, int x) {
  const int one = static_cast<int>(t.size()) - 1;
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (t[x][y] == one) return static_cast<int>(y);
  }
  return -1;
}

inline std::vector<int> sharp(const Table& t) {
  std::vector<int> out;
  for (int w = 0; w < static_cast<int>(t.size()); ++w) {
    if (meet(t, w, complement(t, w)) == 0) out.push_back(w);
  }
  return out;
}

// p is principal: x, y <= p and x ⊕ y defined imply x ⊕ y <= p.
inline bool principal(const Table& t, int p) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (leq(t, x, p) && leq(t, y, p) && t[x][y] >= 0 && !leq(t, t[x][y], p)) return false;
    }
  }
  return true;
}

// Central: c and c' principal and every x splits as x1 ⊕ x2 with x1 <= c,
// x2 <= c'.
inline std::vector<int> center(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    const int cc = complement(t, c);
    if (!principal(t, c) || !principal(t, cc)) continue;
    bool splits = true;
    for (int x = 0; x < n && splits; ++x) {
      bool found = false;
      for (int a = 0; a < n && !found; ++a) {
        for (int b = 0; b < n && !found; ++b) {
          found = leq(t, a, c) && leq(t, b, cc) && t[a][b] == x;
        }
      }
      splits = found;
    }
    if (splits) out.push_back(c);
  }
  return out;
}

// x, y compatible: x = a ⊕ b, y = b ⊕ c with a ⊕ b ⊕ c defined.
inline bool compatible(const Table& t, int x, int y) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t[a][b] != x) continue;
      for (int c = 0; c < n; ++c) {
        if (t[b][c] == y && t[x][c] >= 0) return true;
      }
    }
  }
  return false;
}

// Maximal pairwise-compatible subsets by scanning all 2^n subsets, as sorted
// member lists in lexicographic order.
inline std::vector<std::vector<int>> blocks(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<bool>> comp(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) comp[x][y] = compatible(t, x, y);
  }
  const auto clique = [&](unsigned long mask) {
    for (int x = 0; x < n; ++x) {
      if (!(mask >> x & 1)) continue;
      for (int y = 0; y < n; ++y) {
        if ((mask >> y & 1) && !comp[x][y]) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (!clique(mask)) continue;
    bool maximal = true;
    for (int z = 0; z < n && maximal; ++z) {
      if (!(mask >> z & 1) && clique(mask | 1UL << z)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> members;
    for (int x = 0; x < n; ++x) {
      if (mask >> x & 1) members.push_back(x);
    }
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Axioms straight from the definition, with 0 = index 0 and 1 = n-1.
inline bool satisfies_axioms(const Table& t) {
  const int n = static_cast<int>(t.size());
  const int one = n - 1;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (t[x][y] != t[y][x]) return false;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t[a][b] < 0) continue;
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] < 0) continue;
        if (t[b][c] < 0 || t[a][t[b][c]] != t[t[a][b]][c]) return false;
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y) count += t[x][y] == one;
    if (count != 1) return false;
    if (x != 0 && t[one][x] >= 0) return false;
  }
  return true;
}

inline bool isomorphic(const Table& a, const Table& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        const int v = a[x][y];
        ok = b[p[x]][p[y]] == (v < 0 ? -1 : p[v]);
      }
    }
    if (ok) return true;
  } while (n > 2 && std::next_permutation(p.begin() + 1, p.end() - 1));
  return false;
}

// Generate-and-filter: rows of 0 and 1 are forced, every middle entry ranges
// over {undefined, 0, ..., n-1}; survivors are deduplicated up to isomorphism.
inline std::vector<Table> enumerate(int n) {
  const int one = n - 1;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < one; ++i) {
    for (int j = i; j < one; ++j) cells.emplace_back(i, j);
  }
  Table t(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
  std::vector<Table> classes;
  std::vector<int> value(cells.size(), -1);
  while (true) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      t[cells[k].first][cells[k].second] = t[cells[k].second][cells[k].first] = value[k];
    }
    if (satisfies_axioms(t)) {
      const bool seen = std::any_of(classes.begin(), classes.end(), [&](const Table& c) { return isomorphic(c, t); });
      if (!seen) classes.push_back(t);
    }
    std::size_t k = 0;
    while (k < cells.size() && value[k] == one) value[k++] = -1;
    if (k == cells.size()) break;
    ++value[k];
  }
  return classes;
}

// Every ordered orthogonal tuple of nonzero sharp elements, every choice of
// x_i <= w_i: the iterated sum of the x_i must exist.
inline bool sharply_orthocomplete(const Table& t) {
  const auto s = sharp(t);
  const int n = static_cast<int>(t.size());
  bool ok = true;
  std::vector<int> ws;
  const auto check_choices = [&](auto&& self, std::size_t i, int acc) -> void {
    if (!ok) return;
    if (i == ws.size()) return;
    for (int x = 0; x < n; ++x) {
      if (!leq(t, x, ws[i])) continue;
      const int next = t[acc][x];
      if (next < 0) {
        ok = false;
        return;
      }
      self(self, i + 1, next);
    }
  };
  const auto grow = [&](auto&& self, int acc) -> void {
    if (!ok) return;
    check_choices(check_choices, 0, 0);
    for (int w : s) {
      if (w == 0 || t[acc][w] < 0) continue;
      ws.push_back(w);
      self(self, t[acc][w]);
      ws.pop_back();
    }
  };
  grow(grow, 0);
  return ok;
}

}  // namespace oracle
