#include "ea/model.hpp"

#include <cstdio>
#include <sstream>

#include "ea/errors.hpp"

namespace ea {

namespace {

constexpr std::int64_t kRawUndefined = -1;

ValidationError shape_error(std::string message, std::vector<std::int64_t> witness = {}) {
  ValidationError e;
  e.kind = ValidationError::Kind::Shape;
  e.witness = std::move(witness);
  e.message = std::move(message);
  return e;
}

ValidationError axiom_error(Axiom a, std::vector<std::int64_t> witness, std::string message) {
  ValidationError e;
  e.kind = ValidationError::Kind::Axiom;
  e.axiom = a;
  e.witness = std::move(witness);
  e.message = std::move(message);
  return e;
}

// Flattened raw table with kRawUndefined for missing entries.
struct Dense {
  std::size_t n = 0;
  std::vector<std::int64_t> t;

  std::int64_t at(std::int64_t x, std::int64_t y) const {
    if (x == kRawUndefined || y == kRawUndefined) return kRawUndefined;
    return t[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
  }
};

std::vector<ValidationError> check_shape(const RawTable& raw) {
  std::vector<ValidationError> errors;
  const std::size_t n = raw.sum.size();
  if (n < 2) {
    errors.push_back(shape_error("table must have at least two elements"));
    return errors;
  }
  if (n > kMaxElements) {
    errors.push_back(shape_error("table exceeds " + std::to_string(kMaxElements) + " elements"));
    return errors;
  }
  const auto in_range = [n](std::int64_t v) { return v >= 0 && v < static_cast<std::int64_t>(n); };
  if (!in_range(raw.zero)) errors.push_back(shape_error("zero out of range", {raw.zero}));
  if (!in_range(raw.one)) errors.push_back(shape_error("one out of range", {raw.one}));
  if (raw.zero == raw.one) errors.push_back(shape_error("zero and one must be distinct", {raw.zero}));
  if (!raw.labels.empty() && raw.labels.size() != n) {
    errors.push_back(shape_error("labels must list exactly one string per element"));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (raw.sum[x].size() != n) {
      errors.push_back(shape_error("row " + std::to_string(x) + " has wrong length",
                                   {static_cast<std::int64_t>(x)}));
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) {
      const auto& v = raw.sum[x][y];
      if (v && !in_range(*v)) {
        errors.push_back(shape_error("entry out of range",
                                     {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)}));
      }
    }
  }
  return errors;
}

std::string show(std::int64_t v) { return v == kRawUndefined ? "undefined" : std::to_string(v); }

}  // namespace

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Ei: return "Ei";
    case Axiom::Eii: return "Eii";
    case Axiom::Eiii: return "Eiii";
    case Axiom::Eiv: return "Eiv";
  }
  return "?";
}

std::string describe(const ValidationError& e) {
  std::ostringstream out;
  if (e.kind == ValidationError::Kind::Shape) {
    out << "ShapeError";
  } else {
    out << "AxiomViolation(" << axiom_name(*e.axiom) << ")";
  }
  if (!e.witness.empty()) {
    out << " [";
    for (std::size_t i = 0; i < e.witness.size(); ++i) out << (i ? "," : "") << e.witness[i];
    out << "]";
  }
  out << ": " << e.message;
  return out.str();
}

std::string fnv1a_hex(const std::vector<Element>& data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  mix(n & 0xFF);
  mix((n >> 8) & 0xFF);
  for (Element e : data) {
    mix(e & 0xFF);
    mix(e >> 8);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ValidationResult validate(const RawTable& raw) {
  ValidationResult result;
  result.errors = check_shape(raw);
  if (!result.errors.empty()) return result;

  const std::size_t n = raw.sum.size();
  Dense d;
  d.n = n;
  d.t.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) d.t[x * n + y] = raw.sum[x][y].value_or(kRawUndefined);
  }
  const auto N = static_cast<std::int64_t>(n);
  const std::int64_t one = raw.one;
  const std::int64_t zero = raw.zero;

  // (Ei) commutativity, one report per unordered pair.
  for (std::int64_t x = 0; x < N; ++x) {
    for (std::int64_t y = x + 1; y < N; ++y) {
      if (d.at(x, y) != d.at(y, x)) {
        result.errors.push_back(axiom_error(
            Axiom::Ei, {x, y},
            "x+y = " + show(d.at(x, y)) + " but y+x = " + show(d.at(y, x))));
      }
    }
  }

  // (Eii) associativity by full triple scan.
  for (std::int64_t x = 0; x < N; ++x) {
    for (std::int64_t y = 0; y < N; ++y) {
      const std::int64_t xy = d.at(x, y);
      for (std::int64_t z = 0; z < N; ++z) {
        const std::int64_t lhs = d.at(xy, z);
        const std::int64_t rhs = d.at(x, d.at(y, z));
        if (lhs != rhs) {
          result.errors.push_back(axiom_error(
              Axiom::Eii, {x, y, z},
              "(x+y)+z = " + show(lhs) + " but x+(y+z) = " + show(rhs)));
        }
      }
    }
  }

  // (Eiii) unique orthosupplement.
  for (std::int64_t x = 0; x < N; ++x) {
    std::vector<std::int64_t> witness{x};
    for (std::int64_t y = 0; y < N; ++y) {
      if (d.at(x, y) == one) witness.push_back(y);
    }
    if (witness.size() != 2) {
      result.errors.push_back(axiom_error(
          Axiom::Eiii, witness,
          std::to_string(witness.size() - 1) + " elements y satisfy x+y = 1"));
    }
  }

  // (Eiv) 1 + x defined only for x = 0.
  for (std::int64_t x = 0; x < N; ++x) {
    if (x != zero && d.at(one, x) != kRawUndefined) {
      result.errors.push_back(axiom_error(Axiom::Eiv, {x}, "1+x is defined for nonzero x"));
    }
  }

  if (!result.errors.empty()) return result;

  // Renumber: zero -> 0, one -> n-1, others keep their relative order.
  std::vector<Element> to_new(n);
  std::vector<std::int64_t> to_old;
  to_old.push_back(zero);
  for (std::int64_t x = 0; x < N; ++x) {
    if (x != zero && x != one) to_old.push_back(x);
  }
  to_old.push_back(one);
  for (std::size_t i = 0; i < n; ++i) to_new[static_cast<std::size_t>(to_old[i])] = static_cast<Element>(i);

  std::vector<Element> table(n * n, kUndefined);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = d.at(to_old[i], to_old[j]);
      if (v != kRawUndefined) table[i * n + j] = to_new[static_cast<std::size_t>(v)];
    }
  }
  std::vector<std::string> labels;
  if (!raw.labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(raw.labels[static_cast<std::size_t>(to_old[i])]);
  }
  result.model.emplace(EffectAlgebraModel(n, std::move(table), std::move(labels)));
  return result;
}

EffectAlgebraModel::EffectAlgebraModel(std::size_t n, std::vector<Element> table,
                                       std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), complement_(n, kUndefined), labels_(std::move(labels)) {
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (sum(static_cast<Element>(x), static_cast<Element>(y)) == one()) complement_[x] = static_cast<Element>(y);
    }
  }
  // Consequences of the axioms; a failure here means validate() is wrong.
  for (std::size_t x = 0; x < n_; ++x) {
    const auto e = static_cast<Element>(x);
    if (sum(e, 0) != e) throw InvariantViolation("x+0 != x for x = " + std::to_string(x));
    if (complement_[complement_[x]] != e) throw InvariantViolation("x'' != x for x = " + std::to_string(x));
    std::vector<bool> seen(n_, false);
    for (std::size_t y = 0; y < n_; ++y) {
      const Element v = sum(e, static_cast<Element>(y));
      if (v == kUndefined) continue;
      if (seen[v]) throw InvariantViolation("cancellation fails in row " + std::to_string(x));
      seen[v] = true;
    }
  }
  model_id_ = fnv1a_hex(table_, n_);
}

Element EffectAlgebraModel::minus(Element y, Element x) const {
  for (std::size_t z = 0; z < n_; ++z) {
    if (sum(x, static_cast<Element>(z)) == y) return static_cast<Element>(z);
  }
  return kUndefined;
}

std::string EffectAlgebraModel::label(Element x) const {
  if (!labels_.empty()) return labels_[x];
  if (x == 0) return "0";
  if (x == one()) return "1";
  return "e" + std::to_string(x);
}

RawTable EffectAlgebraModel::to_raw() const {
  RawTable raw;
  raw.zero = 0;
  raw.one = static_cast<std::int64_t>(n_ - 1);
  raw.labels = labels_;
  raw.sum.assign(n_, std::vector<std::optional<std::int64_t>>(n_));
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      const Element v = table_[x * n_ + y];
      if (v != kUndefined) raw.sum[x][y] = v;
    }
  }
  return raw;
}

EffectAlgebraModel validate_or_throw(const RawTable& raw) {
  auto result = validate(raw);
  if (result.ok()) return std::move(*result.model);
  std::string message = "invalid effect algebra table";
  for (std::size_t i = 0; i < result.errors.size() && i < 3; ++i) {
    message += "; " + describe(result.errors[i]);
  }
  throw ShapeError(message);
}

}  // namespace ea
