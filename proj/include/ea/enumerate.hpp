#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ea/canonical.hpp"
#include "ea/model.hpp"

namespace ea {

inline constexpr std::size_t kDefaultMaxEnumerationSize = 6;
inline constexpr std::size_t kLongMaxEnumerationSize = 8;

struct EnumerationOptions {
  std::size_t size = 0;
  // Unlocks sizes 7 and 8.
  bool allow_long = false;
  // 0 leaves the OpenMP default in place.
  int workers = 0;
};

struct EnumerationStats {
  std::uint64_t labeled_models = 0;
  std::uint64_t search_nodes = 0;
};

// Backtracking over the upper triangle of the sum table (row-major), with
// (Ei) by construction, (Eiii) and cancellation checked per entry, and (Eii)
// checked on every triple as soon as its entries are known. Every complete
// table is canonicalized; one representative per isomorphism class comes back
// in ascending canonical order, independent of the worker count.
//
// Throws SizeLimit when size exceeds the allowed maximum.
std::vector<CanonicalForm> enumerate_models(const EnumerationOptions& options, EnumerationStats* stats = nullptr);

// Same search on one thread, no branch splitting. Reference for the parallel
// kernel.
std::vector<CanonicalForm> enumerate_models_serial(std::size_t size, EnumerationStats* stats = nullptr);

// Streams representatives to `emit` in canonical order and returns their
// number.
std::size_t enumerate_models(const EnumerationOptions& options,
                             const std::function<void(const EffectAlgebraModel&, const CanonicalForm&)>& emit);

}  // namespace ea
