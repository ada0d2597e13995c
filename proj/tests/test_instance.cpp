#include <doctest.h>

#include <cmath>

#include "knapsack/instance.hpp"

using namespace knapsack;

TEST_CASE("parse reads header and items") {
  const auto inst = parse_instance("2 10\n3 5\n4 7\n");
  CHECK(inst.capacity == 10);
  REQUIRE(inst.items.size() == 2);
  CHECK(inst.items[0] == Item{3, 5});
  CHECK(inst.items[1] == Item{4, 7});
}

TEST_CASE("parse keeps items heavier than the capacity") {
  const auto inst = parse_instance("1 5\n6 1\n");
  REQUIRE(inst.items.size() == 1);
  CHECK(inst.items[0].weight == 6);
}

TEST_CASE("parse skips comments") {
  const auto inst = parse_instance("# header follows\n1 5\n# item\n2 3\n");
  CHECK(inst.items.size() == 1);
}

TEST_CASE("parse rejects bad input with a line number") {
  CHECK_THROWS_AS(parse_instance("2 10\n3 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("2 10\n3 1\n"), ParseError);  // too few items
  CHECK_THROWS_AS(parse_instance("1 10\n0 1\n"), ParseError);
  try {
    parse_instance("2 10\n3 5\nx y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("format and parse round trip") {
  Instance inst{{{1.5, 2.25}, {3, 4}}, 7.5};
  const auto back = parse_instance(format_instance(inst));
  CHECK(back.items == inst.items);
  CHECK(back.capacity == inst.capacity);
}

TEST_CASE("preprocess drops heavy items") {
  const auto out = preprocess(Instance{{{3, 5}, {11, 100}}, 10}, 0.5);
  REQUIRE(out.items.size() == 1);
  CHECK(out.items[0] == Item{3, 5});
}

TEST_CASE("preprocess drops tiny profits") {
  const auto out = preprocess(Instance{{{1, 100}, {1, 0.01}}, 10}, 0.1);
  REQUIRE(out.items.size() == 1);
  CHECK(out.items[0].profit == 100);
}

TEST_CASE("preprocess of empty instance is empty") {
  CHECK(preprocess(Instance{{}, 5}, 0.1).items.empty());
  CHECK_THROWS(preprocess(Instance{{}, 5}, 1.5));
}

TEST_CASE("group_by_profit rescales into [1,2)") {
  const auto groups = group_by_profit(Instance{{{1, 1.5}, {1, 3}, {1, 6}}, 10});
  REQUIRE(groups.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(groups[j].exponent == j);
    REQUIRE(groups[j].items.size() == 1);
    CHECK(groups[j].items[0].profit == 1.5);
    CHECK(groups[j].scale() == doctest::Approx(std::exp2(j)));
  }
}

TEST_CASE("group_by_profit boundary convention") {
  const auto one = group_by_profit(Instance{{{1, 1}, {2, 1}}, 10});
  CHECK(one.size() == 1);
  const auto split = group_by_profit(Instance{{{1, 1}, {1, 2}}, 10});
  REQUIRE(split.size() == 2);
  CHECK(split[0].exponent == 0);
  CHECK(split[1].exponent == 1);
  CHECK(split[1].items[0].profit == 1.0);
}

TEST_CASE("clamp_epsilon") {
  CHECK(clamp_epsilon(0.1) == 0.1);
  CHECK(clamp_epsilon(0.9) == kMaxEpsilon);
  CHECK_THROWS(clamp_epsilon(0.0));
  CHECK_THROWS(clamp_epsilon(-1.0));
}
