#include <gtest/gtest.h>

#include "ea/errors.hpp"
#include "ea/model_io.hpp"
#include "support.hpp"

using namespace ea;
using testing_support::raw;

namespace {

std::set<std::string> axioms_named(const ValidationResult& r) {
  std::set<std::string> out;
  for (const auto& e : r.errors) {
    if (e.axiom) out.insert(axiom_name(*e.axiom));
  }
  return out;
}

}  // namespace

TEST(Validate, ThreeChain) {
  const auto r = validate(raw({{0, 1, 2}, {1, 2, -1}, {2, -1, -1}}));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.model->size(), 3u);
  EXPECT_EQ(r.model->orthosupplement(1), 1);
}

TEST(Validate, EachAxiomAlone) {
  const std::map<std::string, std::vector<std::vector<int>>> broken = {
      {"Ei", {{0, 1, 2, 3}, {1, -1, 3, -1}, {2, -1, 3, -1}, {3, -1, -1, -1}}},
      {"Eii", {{0, 1, 2, 3}, {1, -1, 3, -1}, {2, 3, 0, -1}, {3, -1, -1, -1}}},
      {"Eiii", {{0, 1, 2, 3}, {1, -1, -1, -1}, {2, -1, -1, -1}, {3, -1, -1, -1}}},
      {"Eiv", {{0, 1, 2, 3}, {1, -1, 3, -1}, {2, 3, 0, 1}, {3, -1, 1, -1}}},
  };
  for (const auto& [axiom, table] : broken) {
    const auto r = validate(raw(table));
    EXPECT_FALSE(r.ok()) << axiom;
    EXPECT_EQ(axioms_named(r), std::set<std::string>{axiom});
  }
}

TEST(Validate, CyclicGroupBreaksOnlyZeroOneLaw) {
  const auto r = validate(raw({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  EXPECT_EQ(axioms_named(r), std::set<std::string>{"Eiv"});
  ASSERT_FALSE(r.errors.empty());
  EXPECT_EQ(r.errors.front().witness, std::vector<std::int64_t>{1});
}

TEST(Validate, ReportsEveryViolation) {
  const auto r = validate(raw({{0, 1, 2, 3}, {1, -1, 3, -1}, {2, -1, -1, -1}, {3, 1, -1, -1}}));
  EXPECT_GE(r.errors.size(), 3u);
  EXPECT_EQ(axioms_named(r), (std::set<std::string>{"Ei", "Eii", "Eiii", "Eiv"}));
}

TEST(Validate, ShapeErrors) {
  EXPECT_FALSE(validate(raw({{0}})).ok());
  auto r = raw({{0, 1}, {1, -1}});
  r.one = 0;
  EXPECT_EQ(validate(r).errors.front().kind, ValidationError::Kind::Shape);
  r = raw({{0, 1}, {1, 5}});
  EXPECT_EQ(validate(r).errors.front().kind, ValidationError::Kind::Shape);
  r = raw({{0, 1}, {1}});
  EXPECT_EQ(validate(r).errors.front().kind, ValidationError::Kind::Shape);
  r = raw({{0, 1}, {1, -1}});
  r.labels = {"z"};
  EXPECT_FALSE(validate(r).ok());
}

TEST(Validate, RenumbersZeroAndOne) {
  // 0 and 1 stored at indices 2 and 0.
  RawTable r;
  r.zero = 2;
  r.one = 0;
  r.labels = {"one", "a", "zero"};
  r.sum = {{std::nullopt, std::nullopt, 0}, {std::nullopt, 0, 1}, {0, 1, 2}};
  const auto m = validate_or_throw(r);
  EXPECT_EQ(m.label(0), "zero");
  EXPECT_EQ(m.label(2), "one");
  EXPECT_EQ(m.sum(1, 1), 2);
}

TEST(Validate, ThrowingVariant) {
  EXPECT_THROW(validate_or_throw(raw({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})), Error);
}

TEST(Model, MinusAndDefaults) {
  const auto m = chain(4);
  EXPECT_EQ(m.minus(4, 1), 3);
  EXPECT_EQ(m.minus(1, 3), kUndefined);
  const auto plain = validate_or_throw(raw({{0, 1, 2}, {1, 2, -1}, {2, -1, -1}}));
  EXPECT_EQ(plain.label(0), "0");
  EXPECT_EQ(plain.label(1), "e1");
  EXPECT_EQ(plain.label(2), "1");
}

TEST(ModelIo, RoundTripIsByteIdentical) {
  for (const auto& m : testing_support::corpus()) {
    const std::string text = serialize_model(m);
    const auto again = validate_or_throw(parse_model_json(text));
    EXPECT_EQ(again, m);
    EXPECT_EQ(serialize_model(again), text);
  }
}

TEST(ModelIo, RejectsMalformedFiles) {
  EXPECT_THROW(parse_model_json("{"), ShapeError);
  EXPECT_THROW(parse_model_json("[]"), ShapeError);
  EXPECT_THROW(parse_model_json(R"({"ea_version": 2, "size": 2, "zero": 0, "one": 1, "sum": [[0,1],[1,null]]})"),
               ShapeError);
  EXPECT_THROW(parse_model_json(R"({"ea_version": 1, "size": 3, "zero": 0, "one": 1, "sum": [[0,1],[1,null]]})"),
               ShapeError);
  EXPECT_THROW(parse_model_json(R"({"ea_version": 1, "size": 2, "zero": 0, "one": 1, "sum": [[0,"x"],[1,null]]})"),
               ShapeError);
  EXPECT_THROW(read_model_file("/nonexistent/model.json"), ShapeError);
}

TEST(ModelIo, ModelIdIgnoresLabels) {
  auto r = chain(3).to_raw();
  r.labels.clear();
  EXPECT_EQ(validate_or_throw(r).model_id(), chain(3).model_id());
}
