#include "barylab/json_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace barylab;
using barylab::testing::q;
using barylab::testing::vec;
namespace jio = barylab::json_io;

TEST(JsonIo, RationalPairs) {
  EXPECT_EQ(jio::to_json(q(-2, 6)).dump(), "[-1,3]");
  EXPECT_EQ(jio::rational_from_json(jio::json::parse("[4,-6]")), q(-2, 3));
  EXPECT_EQ(jio::rational_from_json(jio::json::parse("7")), Rational(7));
  EXPECT_EQ(jio::rational_from_json(jio::json::parse("\"5/10\"")), q(1, 2));
}

TEST(JsonIo, BigIntegersBecomeStrings) {
  const Rational tiny = dyadic(100);
  const jio::json j = jio::to_json(tiny);
  EXPECT_EQ(j[0], 1);
  EXPECT_TRUE(j[1].is_string());
  EXPECT_EQ(j[1].get<std::string>(), "1267650600228229401496703205376");
  EXPECT_EQ(jio::rational_from_json(j), tiny);
}

TEST(JsonIo, PolytopeRoundTrip) {
  const Polytope tri({vec({0, 0}), vec({q(1, 3), 0}), vec({0, q(-5, 2)})});
  const Polytope back = jio::polytope_from_json(jio::parse(jio::to_json(tri).dump()));
  EXPECT_EQ(back.vertices(), tri.vertices());
}

TEST(JsonIo, MeasureRoundTrip) {
  const DiscreteMeasure mu({vec({1}), vec({q(1, 6)})}, {q(1, 5), q(4, 5)});
  const DiscreteMeasure back = jio::measure_from_json(jio::parse(jio::to_json(mu).dump()));
  EXPECT_EQ(back.atoms(), mu.atoms());
  EXPECT_EQ(back.weights(), mu.weights());
}

TEST(JsonIo, ReportShape) {
  const CharacterizationReport r = characterize(barylab::testing::segment01(), vec({q(1, 3)}));
  const jio::json j = jio::to_json(r);
  EXPECT_TRUE(j.at("relint").get<bool>());
  EXPECT_TRUE(j.at("condition_ii").get<bool>());
  EXPECT_TRUE(j.at("agrees").get<bool>());
  EXPECT_EQ(j.at("alpha_max_per_vertex").size(), 2u);
  EXPECT_EQ(jio::to_json(ProlongationResult{true, Rational(0), std::nullopt}), "inf");
}

TEST(JsonIo, MalformedInputIsAnInputError) {
  EXPECT_THROW(jio::parse("{\"vertices\": [[1, 2]"), InputError);
  EXPECT_THROW(jio::polytope_from_json(jio::parse("{\"points\": []}")), InputError);
  EXPECT_THROW(jio::polytope_from_json(jio::parse("{\"dim\": 3, \"vertices\": [[1, 2]]}")), InputError);
  EXPECT_THROW(jio::polytope_from_json(jio::parse("{\"vertices\": []}")), InputError);
  EXPECT_THROW(jio::rational_from_json(jio::parse("[1, 0]")), InputError);
  EXPECT_THROW(jio::rational_from_json(jio::parse("[1, 2, 3]")), InputError);
  EXPECT_THROW(jio::rational_from_json(jio::parse("1.5")), InputError);
  EXPECT_THROW(jio::measure_from_json(jio::parse("{\"atoms\": [[0]], \"weights\": [[1, 2]]}")), InputError);
}
