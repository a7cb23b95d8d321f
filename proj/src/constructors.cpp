#include "ea/constructors.hpp"

#include <cctype>

#include "ea/errors.hpp"
#include "ea/model_io.hpp"

namespace ea {

namespace {

RawTable empty_raw(std::size_t n) {
  RawTable raw;
  raw.zero = 0;
  raw.one = static_cast<std::int64_t>(n - 1);
  raw.sum.assign(n, std::vector<std::optional<std::int64_t>>(n));
  return raw;
}

}  // namespace

EffectAlgebraModel chain(std::size_t k) {
  if (k < 1) throw SizeLimit("chain needs k >= 1");
  if (k + 1 > kMaxElements) throw SizeLimit("chain too large");
  const std::size_t n = k + 1;
  RawTable raw = empty_raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j <= k; ++j) raw.sum[i][j] = static_cast<std::int64_t>(i + j);
    if (i == 0) {
      raw.labels.push_back("0");
    } else if (i == k) {
      raw.labels.push_back("1");
    } else {
      raw.labels.push_back(i == 1 ? std::string("a") : std::to_string(i) + "a");
    }
  }
  return validate_or_throw(raw);
}

EffectAlgebraModel boolean(std::size_t k) {
  if (k < 1) throw SizeLimit("boolean(0) would identify 0 and 1");
  if (k > 4) throw SizeLimit("boolean supports k <= 4");
  const std::size_t n = std::size_t{1} << k;
  RawTable raw = empty_raw(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & b) == 0) raw.sum[a][b] = static_cast<std::int64_t>(a | b);
    }
    std::string label;
    if (a == 0) {
      label = "0";
    } else if (a == n - 1) {
      label = "1";
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (a >> i & 1U) label += static_cast<char>('p' + i);
      }
    }
    raw.labels.push_back(label);
  }
  return validate_or_throw(raw);
}

EffectAlgebraModel horizontal_sum(std::span<const EffectAlgebraModel> components) {
  if (components.size() < 2) throw ComponentTooSmall("horizontal sum needs at least two components");
  std::size_t n = 2;
  for (const auto& c : components) {
    if (c.size() < 3) throw ComponentTooSmall("horizontal sum components must have at least 3 elements");
    n += c.size() - 2;
  }
  if (n > kMaxElements) throw SizeLimit("horizontal sum too large");

  RawTable raw = empty_raw(n);
  raw.labels.assign(n, "");
  raw.labels[0] = "0";
  raw.labels[n - 1] = "1";
  std::size_t offset = 1;
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const auto& c = components[ci];
    const std::size_t cn = c.size();
    // Component element -> global index.
    const auto global = [&](std::size_t e) -> std::size_t {
      if (e == 0) return 0;
      if (e == cn - 1) return n - 1;
      return offset + e - 1;
    };
    for (std::size_t x = 0; x < cn; ++x) {
      for (std::size_t y = 0; y < cn; ++y) {
        const Element v = c.sum(static_cast<Element>(x), static_cast<Element>(y));
        if (v != kUndefined) raw.sum[global(x)][global(y)] = static_cast<std::int64_t>(global(v));
      }
    }
    for (std::size_t e = 1; e + 1 < cn; ++e) {
      raw.labels[global(e)] = std::to_string(ci + 1) + "." + c.label(static_cast<Element>(e));
    }
    offset += cn - 2;
  }
  return validate_or_throw(raw);
}

EffectAlgebraModel product(std::span<const EffectAlgebraModel> factors, std::size_t cap) {
  if (factors.empty()) throw SizeLimit("product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    if (n > cap || n > kMaxElements) throw SizeLimit("product exceeds size cap of " + std::to_string(cap));
  }
  // Mixed radix, first factor most significant: (0,...,0) -> 0 and
  // (1,...,1) -> n-1.
  const auto decode = [&](std::size_t idx) {
    std::vector<Element> coords(factors.size());
    for (std::size_t f = factors.size(); f-- > 0;) {
      coords[f] = static_cast<Element>(idx % factors[f].size());
      idx /= factors[f].size();
    }
    return coords;
  };
  const auto encode = [&](const std::vector<Element>& coords) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) idx = idx * factors[f].size() + coords[f];
    return idx;
  };

  RawTable raw = empty_raw(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = decode(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = decode(b);
      std::vector<Element> cs(factors.size());
      bool defined = true;
      for (std::size_t f = 0; f < factors.size() && defined; ++f) {
        cs[f] = factors[f].sum(ca[f], cb[f]);
        defined = cs[f] != kUndefined;
      }
      if (defined) raw.sum[a][b] = static_cast<std::int64_t>(encode(cs));
    }
    std::string label = "(";
    for (std::size_t f = 0; f < factors.size(); ++f) label += (f ? "," : "") + factors[f].label(ca[f]);
    raw.labels.push_back(label + ")");
  }
  return validate_or_throw(raw);
}

std::string ModelRecipe::to_string() const {
  switch (kind) {
    case Kind::Chain: return "chain:" + std::to_string(parameter);
    case Kind::Boolean: return "boolean:" + std::to_string(parameter);
    case Kind::Literal: return "file:" + file;
    case Kind::HorizontalSum:
    case Kind::Product: {
      std::string out = kind == Kind::HorizontalSum ? "hsum(" : "prod(";
      for (std::size_t i = 0; i < components.size(); ++i) out += (i ? "," : "") + components[i].to_string();
      return out + ")";
    }
  }
  return {};
}

namespace {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  ModelRecipe parse_all() {
    ModelRecipe r = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return r;
  }

 private:
  ModelRecipe parse() {
    skip_space();
    const std::string word = identifier();
    ModelRecipe r;
    if (word == "chain" || word == "boolean") {
      expect(':');
      r.kind = word == "chain" ? ModelRecipe::Kind::Chain : ModelRecipe::Kind::Boolean;
      r.parameter = number();
    } else if (word == "hsum" || word == "prod") {
      r.kind = word == "hsum" ? ModelRecipe::Kind::HorizontalSum : ModelRecipe::Kind::Product;
      expect('(');
      r.components.push_back(parse());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        r.components.push_back(parse());
        skip_space();
      }
      expect(')');
    } else if (word == "file") {
      expect(':');
      r.kind = ModelRecipe::Kind::Literal;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      r.file = std::string(text_.substr(start, pos_ - start));
      if (r.file.empty()) fail("empty file path");
    } else {
      fail("unknown recipe kind '" + word + "'");
    }
    return r;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a recipe name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 100000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw RecipeError("recipe '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ModelRecipe parse_recipe(std::string_view text) { return RecipeParser(text).parse_all(); }

EffectAlgebraModel expand_recipe(const ModelRecipe& recipe, const std::filesystem::path& base,
                                 std::size_t product_cap) {
  switch (recipe.kind) {
    case ModelRecipe::Kind::Chain: return chain(recipe.parameter);
    case ModelRecipe::Kind::Boolean: return boolean(recipe.parameter);
    case ModelRecipe::Kind::Literal: {
      std::filesystem::path p(recipe.file);
      if (p.is_relative() && !base.empty()) p = base / p;
      return validate_or_throw(read_model_file(p));
    }
    case ModelRecipe::Kind::HorizontalSum:
    case ModelRecipe::Kind::Product: {
      std::vector<EffectAlgebraModel> parts;
      for (const auto& c : recipe.components) parts.push_back(expand_recipe(c, base, product_cap));
      return recipe.kind == ModelRecipe::Kind::HorizontalSum ? horizontal_sum(parts) : product(parts, product_cap);
    }
  }
  throw RecipeError("unknown recipe kind");
}

}  // namespace ea
