#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ea/model.hpp"

namespace ea {

// {0, a, 2a, ..., ka = 1} with ia ⊕ ja = (i+j)a when i + j <= k.
EffectAlgebraModel chain(std::size_t k);

// Subsets of a k-set under disjoint union; 1 <= k <= 4.
EffectAlgebraModel boolean(std::size_t k);

// Glues the zeros and ones of the components together; no sums across
// components except with 0. Needs at least two components of size >= 3.
EffectAlgebraModel horizontal_sum(std::span<const EffectAlgebraModel> components);

inline constexpr std::size_t kDefaultProductCap = 256;

// Componentwise sum, defined iff defined in every coordinate.
EffectAlgebraModel product(std::span<const EffectAlgebraModel> factors, std::size_t cap = kDefaultProductCap);

// Parsed form of "chain:4", "boolean:2", "hsum(r,r,...)", "prod(r,r,...)",
// "file:path".
struct ModelRecipe {
  enum class Kind { Chain, Boolean, HorizontalSum, Product, Literal };
  Kind kind = Kind::Chain;
  std::size_t parameter = 0;
  std::vector<ModelRecipe> components;
  std::string file;

  std::string to_string() const;
};

// Throws RecipeError on syntax errors.
ModelRecipe parse_recipe(std::string_view text);

// Relative literal paths resolve against `base`.
EffectAlgebraModel expand_recipe(const ModelRecipe& recipe, const std::filesystem::path& base = {},
                                 std::size_t product_cap = kDefaultProductCap);

inline EffectAlgebraModel build_recipe(std::string_view text, const std::filesystem::path& base = {}) {
  return expand_recipe(parse_recipe(text), base);
}

}  // namespace ea
