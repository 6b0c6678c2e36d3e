#include <doctest.h>

#include <random>

#include "ribbon/alex_module.hpp"
#include "ribbon/error.hpp"
#include "support.hpp"

using namespace ribbon;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("alexander polynomial of the family") {
  for (long n = -12; n <= 12; ++n) CHECK(alexander_polynomial(kn_seifert(n)) == P("-2*t^2+5*t-2"));
  CHECK(kn_delta() == P("t-2") * P("2*t-1"));
  CHECK(alexander_polynomial(SeifertMatrix{}) == LaurentPoly(1));
}

TEST_CASE("alexander polynomial invariants") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const SeifertMatrix V = testing_support::random_seifert(rng, 1 + trial % 3, 2);
    const LaurentPoly d = alexander_polynomial(V);
    CHECK(d.eval(1) == 1);
    CHECK(doteq_equal(d, d.conj()));
    const mpz_class m = abs(d.eval(-1).get_num());
    CHECK(mpz_odd_p(m.get_mpz_t()));
  }
}

TEST_CASE("module zero test") {
  const AlexanderPresentation Pn(kn_seifert(1));
  CHECK(Pn.is_zero({P("0"), P("0")}));
  CHECK_FALSE(Pn.is_zero({P("1"), P("0")}));
  CHECK(Pn.is_zero({P("t-2"), P("0")}));
  CHECK(Pn.is_zero(Pn.relations().apply({P("t^3-1"), P("5")})));
  CHECK(Pn.equal({P("t"), P("0")}, {P("2"), P("0")}));
}

TEST_CASE("module type dichotomy") {
  for (long n = -12; n <= 12; ++n) {
    CAPTURE(n);
    const ModuleFacts f = module_type(kn_seifert(n));
    CHECK(f.kind == (n % 3 == 0 ? ModuleKind::SplitT2T1 : ModuleKind::CyclicT2T1));
    CHECK(f.generators.size() == (n % 3 == 0 ? 2u : 1u));
  }
  CHECK(module_type(validate_seifert(IntMatrix::from_rows({{1, 1}, {0, 1}}))).kind == ModuleKind::Other);
  CHECK(kind_from_name(kind_name(ModuleKind::SplitT2T1)) == ModuleKind::SplitT2T1);
}

TEST_CASE("generator relations") {
  for (long n = -9; n <= 9; ++n) {
    const ModuleFacts f = module_type(kn_seifert(n));
    const auto& Pn = f.presentation;
    if (f.kind == ModuleKind::SplitT2T1) {
      CHECK(Pn.is_zero(scale(P("t-2"), f.generators[0])));
      CHECK(Pn.is_zero(scale(P("2*t-1"), f.generators[1])));
    } else {
      CHECK_FALSE(Pn.is_zero(scale(P("t-2"), f.generators[0])));
      CHECK_FALSE(Pn.is_zero(scale(P("2*t-1"), f.generators[0])));
      CHECK(Pn.is_zero(scale(kn_delta(), f.generators[0])));
      // The generator spans the standard basis.
      CHECK(Pn.in_span({P("1"), P("0")}, f.generators));
      CHECK(Pn.in_span({P("0"), P("1")}, f.generators));
    }
  }
}

TEST_CASE("lagrangians") {
  for (long n = -6; n <= 6; ++n) {
    CAPTURE(n);
    const ModuleFacts f = module_type(kn_seifert(n));
    const auto L = lagrangian_set(f);
    REQUIRE(L.size() == 2);
    CHECK(L[0].factor == LagFactor::TMinus2);
    CHECK(L[1].factor == LagFactor::TwoTMinus1);
    CHECK(lagrangians_distinct(f, L[0], L[1]));
    CHECK(f.presentation.is_zero(scale(factor_poly(L[0].factor), L[0].generator)));
    CHECK(f.presentation.is_zero(scale(factor_poly(L[1].factor), L[1].generator)));
  }
  CHECK(lagrangian_label(LagFactor::TMinus2) == "P1");
  CHECK(factor_from_name(factor_name(LagFactor::TwoTMinus1)) == LagFactor::TwoTMinus1);
}

TEST_CASE("ext of linear pairs") {
  CHECK(ext1_linear_pair(P("t-2"), P("2*t-1")).str() == "Z/3");
  CHECK(ext1_linear_pair(P("t-2"), P("t-3")).is_trivial());
  CHECK(ext1_linear_pair(P("2*t-1"), P("2*t+1")).is_trivial());
  CHECK(ext1_linear_pair(P("t-2"), P("3*t-1")).str() == "Z/5");
  CHECK_THROWS_AS(ext1_linear_pair(P("t-2"), P("t-2")), InvalidInput);
  CHECK_THROWS_AS(ext1_linear_pair(P("t^2-2"), P("t-2")), InvalidInput);
}

TEST_CASE("metabolizers map to lagrangians") {
  for (long n = -12; n <= 12; ++n) {
    CAPTURE(n);
    const SeifertMatrix V = kn_seifert(n);
    const ModuleFacts f = module_type(V);
    const auto mets = genus1_metabolizers(V);
    REQUIRE(mets.size() == 2);
    std::vector<LagFactor> got;
    for (const auto& m : mets) got.push_back(metabolizer_image(V, m, f).factor);
    CHECK(got[0] != got[1]);
    CHECK(metabolizer_image(V, {0, 1}, f).factor == LagFactor::TMinus2);
  }
  const SeifertMatrix V = kn_seifert(3);
  CHECK_THROWS_AS(metabolizer_image(V, {1, 0}, module_type(V)), InvalidInput);
}
