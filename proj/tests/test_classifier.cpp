#include <doctest.h>

#include "ribbon/classifier.hpp"
#include "ribbon/error.hpp"

using namespace ribbon;

TEST_CASE("derivative parsing") {
  CHECK(parse_derivative("unknot").kind == DerivativeKind::Unknot);
  CHECK(parse_derivative("unknown").kind == DerivativeKind::Unknown);
  const Derivative d = parse_derivative("braid:-1 -1 -1");
  CHECK(d.kind == DerivativeKind::Braid);
  CHECK(d.braid == gamma_braid(1));
  CHECK(d.str() == "braid:-1 -1 -1");
  CHECK_THROWS_AS(parse_derivative("braid:1 1"), InvalidInput);
  CHECK_THROWS_AS(parse_derivative("trefoil"), InvalidInput);
}

TEST_CASE("family derivative data") {
  CHECK(kn_derivatives(0).p2.kind == DerivativeKind::Unknot);
  CHECK(kn_derivatives(-3).p2.kind == DerivativeKind::Unknot);
  CHECK(kn_derivatives(6).p2.braid == gamma_braid(2));
  CHECK(kn_derivatives(-9).p2.braid == gamma_braid(2));
  CHECK(kn_derivatives(-6).p2.braid == gamma_braid(1));
  CHECK(kn_derivatives(4).p2.kind == DerivativeKind::Unknown);
  for (long n = -10; n <= 10; ++n) CHECK(kn_derivatives(n).p1.kind == DerivativeKind::Unknot);
}

TEST_CASE("disc counts") {
  auto count = [](long n, DerivativeSpec d) {
    const auto r = classify_knot(kn_seifert(n), d);
    return std::pair{r.disc_count_min, r.disc_count_max};
  };
  using C = std::pair<int, int>;
  CHECK(count(0, {Derivative::unknot(), Derivative::unknot()}) == C{2, 2});
  CHECK(count(3, {Derivative::unknot(), Derivative::from_braid(gamma_braid(1))}) == C{1, 1});
  CHECK(count(1, {Derivative::unknot(), Derivative::unknown()}) == C{1, 2});
  CHECK(count(1, {}) == C{0, 2});
  for (long k = -3; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(count(3 * k, kn_derivatives(3 * k)) == (k == 0 || k == -1 ? C{2, 2} : C{1, 1}));
  }
  CHECK(count(-1, kn_derivatives(-1)) == C{2, 2});
  CHECK(count(-2, kn_derivatives(-2)) == C{2, 2});
}

TEST_CASE("verdict details") {
  const auto r = classify_knot(kn_seifert(3), kn_derivatives(3), "kn:3");
  REQUIRE(r.verdicts.size() == 2);
  CHECK(r.kind == ModuleKind::SplitT2T1);
  CHECK(r.verdicts[0].lagrangian.factor == LagFactor::TMinus2);
  CHECK(r.verdicts[0].metabolizer == Metabolizer{0, 1});
  CHECK(r.verdicts[0].status == VerdictStatus::DiscExists);
  CHECK(r.verdicts[1].status == VerdictStatus::Obstructed);
  REQUIRE(r.verdicts[1].rho0);
  CHECK(r.verdicts[1].rho0->sign == Rho0Sign::Positive);
  CHECK(r.disc_count_max <= 2);
}

TEST_CASE("adding derivative data never widens the bounds") {
  const std::vector<Derivative> options{Derivative::unknown(), Derivative::unknot(),
                                        Derivative::from_braid(gamma_braid(1)),
                                        Derivative::from_braid(parse_braid("1 -2 1 -2"))};
  for (long n : {-3L, 3L, 1L}) {
    const auto base = classify_knot(kn_seifert(n), {});
    for (const auto& a : options)
      for (const auto& b : options) {
        const auto r = classify_knot(kn_seifert(n), {a, b});
        CHECK(r.disc_count_min >= base.disc_count_min);
        CHECK(r.disc_count_max <= base.disc_count_max);
        CHECK(r.disc_count_min <= r.disc_count_max);
      }
  }
}

TEST_CASE("alexander polynomial obstruction") {
  const auto r = classify_knot(validate_seifert(IntMatrix::from_rows({{1, 1}, {0, 1}})), {});
  CHECK(r.verdicts.empty());
  CHECK(r.disc_count_min == 0);
  CHECK(r.disc_count_max == 0);
  CHECK(report_render(r, ReportFormat::Text).find("not G-homotopy ribbon: Alexander polynomial obstruction") !=
        std::string::npos);
  CHECK_THROWS_AS(classify_knot(block_sum(kn_seifert(0), kn_seifert(0)), {}), InvalidInput);
}

TEST_CASE("report serialization") {
  const auto r0 = classify_knot(kn_seifert(0), kn_derivatives(0), "kn:0");
  const auto j = report_json(r0);
  CHECK(j["disc_count"]["min"] == 2);
  CHECK(j["disc_count"]["max"] == 2);
  for (long n : {-6L, -1L, 0L, 1L, 3L}) {
    const auto r = classify_knot(kn_seifert(n), kn_derivatives(n), "kn:" + std::to_string(n));
    CHECK(report_parse(report_render(r, ReportFormat::Json)) == r);
    CHECK(report_render(r, ReportFormat::Json) == report_render(r, ReportFormat::Json));
  }
  CHECK_THROWS_AS(report_parse("{"), InvalidInput);
  CHECK_THROWS_AS(report_parse("{}"), InvalidInput);
}
