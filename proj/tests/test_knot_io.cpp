#include <doctest.h>

#include <random>

#include "ribbon/alex_module.hpp"
#include "ribbon/error.hpp"
#include "ribbon/knot_io.hpp"
#include "support.hpp"

using namespace ribbon;

TEST_CASE("seifert validation") {
  CHECK_NOTHROW(validate_seifert(IntMatrix::from_rows({{-1, 1}, {0, -1}})));
  CHECK_THROWS_AS(validate_seifert(IntMatrix::from_rows({{1, 1}, {1, 1}})), InvalidInput);
  CHECK_THROWS_AS(validate_seifert(IntMatrix::from_rows({{1, 2, 3}})), InvalidInput);
  CHECK_THROWS_AS(validate_seifert(IntMatrix::from_rows({{0, 2}, {0, 0}})), InvalidInput);
  CHECK(kn_seifert(4).V() == IntMatrix::from_rows({{4, 2}, {1, 0}}));
  CHECK(block_sum(kn_seifert(0), kn_seifert(1)).size() == 4);
}

TEST_CASE("matrix json") {
  const IntMatrix m = parse_matrix_json("[[3, 2], [1, 0]]");
  CHECK(m == IntMatrix::from_rows({{3, 2}, {1, 0}}));
  CHECK(matrix_json(m) == "[[3,2],[1,0]]");
  CHECK(parse_matrix_json(matrix_json(m)) == m);
  CHECK(parse_matrix_json("[[\"123456789012345678901234567890\", 0], [0, 1]]")(0, 0) ==
        mpz_class("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_matrix_json("[[1, 2], [3]]"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix_json("[[1.5]]"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix_json("not json"), InvalidInput);
}

TEST_CASE("braid words") {
  const BraidWord w = parse_braid("-1 -1 -1");
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{-1, -1, -1});
  CHECK(parse_braid("1 2", 5).strands == 5);
  CHECK_THROWS_AS(parse_braid("1 2", 2), InvalidInput);
  CHECK_THROWS_AS(parse_braid("0"), InvalidInput);
  CHECK_THROWS_AS(parse_braid("1 x"), InvalidInput);
  CHECK(closure_is_knot(w));
  CHECK_FALSE(closure_is_knot(parse_braid("1 1")));
  CHECK_THROWS_AS(braid_to_seifert(parse_braid("1 1")), InvalidInput);
  CHECK(gamma_braid(1) == w);
  CHECK(gamma_braid(2).letters == std::vector<int>{-2, -1, -1, -2, -2, -1});
  CHECK(gamma_braid(2).strands == 3);
}

TEST_CASE("braid seifert matrices") {
  CHECK(doteq_equal(alexander_polynomial(braid_to_seifert(parse_braid("-1 -1 -1"))), LaurentPoly::parse("t^2-t+1")));
  // Figure eight.
  CHECK(doteq_equal(alexander_polynomial(braid_to_seifert(parse_braid("1 -2 1 -2"))), LaurentPoly::parse("t^2-3*t+1")));
  CHECK(braid_to_seifert(parse_braid("1 2")).size() == 0);
  for (int k = 1; k <= 4; ++k) {
    const SeifertMatrix V = braid_to_seifert(gamma_braid(k));
    CHECK(V.size() == 2 * k);
    // (t^{2k+1} + 1) / (t + 1)
    std::vector<mpz_class> c;
    for (int i = 0; i <= 2 * k; ++i) c.push_back(i % 2 ? -1 : 1);
    CHECK(doteq_equal(alexander_polynomial(V), LaurentPoly(0, c)));
  }
}

TEST_CASE("burau agrees with seifert route") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord w = testing_support::random_knot_braid(rng);
    CHECK(doteq_equal(alexander_via_burau(w), alexander_polynomial(braid_to_seifert(w))));
  }
}

TEST_CASE("genus one metabolizers") {
  const auto m = genus1_metabolizers(kn_seifert(3));
  REQUIRE(m.size() == 2);
  CHECK(m[0] == Metabolizer{0, 1});
  CHECK(m[1] == Metabolizer{1, -1});
  CHECK(genus1_metabolizers(validate_seifert(IntMatrix::from_rows({{1, 1}, {0, 1}}))).empty());
  for (long n = -10; n <= 10; ++n) {
    const SeifertMatrix V = kn_seifert(n);
    for (const auto& v : genus1_metabolizers(V)) {
      const mpz_class q = V(0, 0) * v.a * v.a + (V(0, 1) + V(1, 0)) * v.a * v.b + V(1, 1) * v.b * v.b;
      CHECK(q == 0);
    }
  }
}
