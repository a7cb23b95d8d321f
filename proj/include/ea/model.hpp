#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ea/element_set.hpp"

namespace ea {

// Unvalidated input: a square table of optional indices plus the designated
// zero and one. Indices are kept wide so that out-of-range input can be
// reported instead of silently truncated.
struct RawTable {
  std::int64_t zero = 0;
  std::int64_t one = 0;
  std::vector<std::vector<std::optional<std::int64_t>>> sum;
  std::vector<std::string> labels;
};

enum class Axiom { Ei, Eii, Eiii, Eiv };

const char* axiom_name(Axiom a);

struct ValidationError {
  enum class Kind { Shape, Axiom };
  Kind kind = Kind::Shape;
  std::optional<Axiom> axiom;
  // Indices refer to the raw table as given, before renumbering.
  std::vector<std::int64_t> witness;
  std::string message;
};

class EffectAlgebraModel;

struct ValidationResult;

// Checks (Ei)-(Eiv) exhaustively and reports every violation. On success the
// model is renumbered so that zero is 0 and one is n-1; the relative order of
// the remaining elements is preserved.
ValidationResult validate(const RawTable& raw);

// A finite effect algebra given by its partial addition table. Immutable and
// only obtainable through validate(), so every instance satisfies the axioms.
class EffectAlgebraModel {
 public:
  std::size_t size() const { return n_; }
  Element zero() const { return 0; }
  Element one() const { return static_cast<Element>(n_ - 1); }

  Element sum(Element x, Element y) const { return table_[x * n_ + y]; }
  bool defined(Element x, Element y) const { return sum(x, y) != kUndefined; }

  // The unique y with x ⊕ y = 1.
  Element orthosupplement(Element x) const { return complement_[x]; }

  // The unique z with x ⊕ z = y, found by scanning row x.
  Element minus(Element y, Element x) const;

  const std::vector<Element>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element x) const;

  // FNV-1a over the (renumbered) table; labels do not contribute.
  const std::string& model_id() const { return model_id_; }

  RawTable to_raw() const;

  friend bool operator==(const EffectAlgebraModel& a, const EffectAlgebraModel& b) {
    return a.n_ == b.n_ && a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  friend ValidationResult validate(const RawTable& raw);
  EffectAlgebraModel(std::size_t n, std::vector<Element> table, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> complement_;
  std::vector<std::string> labels_;
  std::string model_id_;
};

struct ValidationResult {
  std::optional<EffectAlgebraModel> model;
  std::vector<ValidationError> errors;

  bool ok() const { return model.has_value(); }
};

// Validates and throws ShapeError carrying the first few messages on failure.
// For constructors whose output is valid by construction.
EffectAlgebraModel validate_or_throw(const RawTable& raw);

std::string describe(const ValidationError& e);

std::string fnv1a_hex(const std::vector<Element>& data, std::size_t n);

}  // namespace ea
