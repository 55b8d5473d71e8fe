#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace gtpoly;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const parse_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParsesEntryForms) {
  auto inst = parse_instance(R"({"ring": "Z[i]", "matrix": [[1, [1, 1]], ["1+i", 0]]})");
  EXPECT_EQ(inst.ring_kind(), RingKind::gaussian);
  EXPECT_EQ(inst.matrix_over<Gaussian>().to_string(), fixture::golden_matrix().to_string());
  auto t = parse_instance(R"({"ring": "Z", "matrix": [[1, 2]], "torsion_at_empty": [2], "name": "x"})");
  EXPECT_TRUE(t.has_empty_torsion());
  EXPECT_EQ(t.name, "x");
  auto big = parse_instance(R"({"matrix": [["123456789012345678901234567890"]]})");
  EXPECT_EQ(big.matrix_over<Integers>()(0, 0).re(), mpz_class("123456789012345678901234567890"));
}

TEST(Io, SyntaxErrorHasLineAndColumn) {
  auto msg = error_of("{\n  \"ring\": \"Z\",\n  \"matrix\": [[1, 2,]]\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Io, SemanticErrorsAreLocated) {
  auto ragged = error_of("{\"matrix\": [[1, 2],\n [3]]}");
  EXPECT_NE(ragged.find("line 2"), std::string::npos) << ragged;
  EXPECT_NE(ragged.find("/matrix/1"), std::string::npos) << ragged;

  auto bad_entry = error_of("{\"ring\": \"Z\",\n\"matrix\": [[1, [1, 1]]]}");
  EXPECT_NE(bad_entry.find("line 2"), std::string::npos) << bad_entry;
  EXPECT_NE(bad_entry.find("/matrix/0/1"), std::string::npos) << bad_entry;

  auto symbol = error_of(R"({"ring": "Z[w]", "matrix": [["1+i"]]})");
  EXPECT_NE(symbol.find("line 1"), std::string::npos) << symbol;

  EXPECT_NE(error_of(R"({"ring": "Q", "matrix": [[1]]})").find("/ring"), std::string::npos);
  EXPECT_NE(error_of(R"({"matrix": []})").find("/matrix"), std::string::npos);
  EXPECT_NE(error_of("[1, 2]").find("object"), std::string::npos);
}

TEST(Io, PolynomialRoundTrips) {
  auto t = tutte_numeric(fixture::golden());
  EXPECT_EQ(int_poly2_from_json(json::parse(to_json(t).dump())), t);
  IntPoly p(std::vector<mpz_class>{1, -7, 0, 3});
  EXPECT_EQ(int_poly_from_json(json::parse(to_json(p).dump())), p);
  auto g = grothendieck_tutte(fixture::golden());
  EXPECT_EQ(gt_poly_from_json<Gaussian>(json::parse(to_json(g).dump())), g);
}

TEST(Io, SeriesAndPosetRoundTrips) {
  auto h = face_module_hilbert(fixture::golden());
  EXPECT_EQ(hilbert_from_json(json::parse(to_json(h).dump())), h);
  auto p = build_poset(fixture::golden());
  EXPECT_EQ(poset_from_json<Gaussian>(json::parse(to_json(p).dump())), p);
  auto q = build_poset(fixture::torsion_example());
  EXPECT_EQ(poset_from_json<Integers>(json::parse(to_json(q).dump())), q);
}

TEST(Io, RandomRoundTrips) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    auto m = random_instance<Eisenstein>(rng, {3, 4, 2, 0.4}).matroid();
    auto g = grothendieck_tutte(m);
    EXPECT_EQ(gt_poly_from_json<Eisenstein>(json::parse(to_json(g).dump())), g);
    if (poset_node_count(m) > 2000) continue;
    auto p = build_poset(m);
    EXPECT_EQ(poset_from_json<Eisenstein>(json::parse(to_json(p).dump())), p);
  }
}
