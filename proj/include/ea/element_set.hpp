#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ea {

using Element = std::uint16_t;

// Marks an undefined entry of a partial table. Never a valid index.
inline constexpr Element kUndefined = std::numeric_limits<Element>::max();

inline constexpr std::size_t kMaxElements = 256;

using ElementSet = std::bitset<kMaxElements>;

inline std::vector<Element> members_of(const ElementSet& set, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (set.test(i)) out.push_back(static_cast<Element>(i));
  }
  return out;
}

inline ElementSet set_of(const std::vector<Element>& elements) {
  ElementSet s;
  for (Element e : elements) s.set(e);
  return s;
}

inline ElementSet full_set(std::size_t n) {
  ElementSet s;
  for (std::size_t i = 0; i < n; ++i) s.set(i);
  return s;
}

// a ⊆ b
inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return (a & ~b).none();
}

}  // namespace ea
