#include <doctest.h>

#include <random>

#include "ribbon/error.hpp"
#include "ribbon/exact_linalg.hpp"

using namespace ribbon;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int range) {
  IntMatrix A(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
  return A;
}

bool unimodular(const IntMatrix& U) {
  const mpz_class d = U.determinant();
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(IntMatrix::from_rows({{1, 2}, {3, 4}}).determinant() == -2);
  CHECK(IntMatrix::from_rows({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}).determinant() == -2);
  CHECK(IntMatrix::identity(5).determinant() == 1);
  CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
}

TEST_CASE("smith normal form of diag(2,3)") {
  const auto A = IntMatrix::from_rows({{2, 0}, {0, 3}});
  const auto r = snf(A);
  CHECK(r.S == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  CHECK(r.U * A * r.W == r.S);
  CHECK(r.rank == 2);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + rng() % 8, c = 1 + rng() % 8;
    const IntMatrix A = random_matrix(rng, r, c, 9);
    const SnfResult s = snf(A);
    REQUIRE(s.U * A * s.W == s.S);
    CHECK(s.S.is_diagonal());
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.W));
    const int k = std::min(r, c);
    for (int i = 0; i < k; ++i) CHECK(sgn(s.S(i, i)) >= 0);
    for (int i = 0; i + 1 < k; ++i) {
      if (s.S(i, i) == 0) {
        CHECK(s.S(i + 1, i + 1) == 0);
      } else {
        CHECK(mpz_divisible_p(s.S(i + 1, i + 1).get_mpz_t(), s.S(i, i).get_mpz_t()));
      }
    }
  }
}

TEST_CASE("abelian groups") {
  CHECK(finite_quotient_group(IntMatrix::from_rows({{3}})).str() == "Z/3");
  CHECK(finite_quotient_group(IntMatrix::from_rows({{2, 0}, {0, 3}})).str() == "Z/6");
  CHECK(finite_quotient_group(IntMatrix::from_rows({{1}})).is_trivial());
  const auto g = finite_quotient_group(IntMatrix::from_rows({{2, 0}, {0, 0}}));
  CHECK(g.free_rank == 1);
  CHECK(g.order() == 0);
  CHECK(finite_quotient_group(IntMatrix::from_rows({{2, 0}, {0, 4}})).order() == 8);
}

TEST_CASE("integer solve") {
  const auto A = IntMatrix::from_rows({{2, 0}, {0, 3}});
  auto x = solve_integer(A, {4, 9});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_integer(A, {1, 0}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix B = random_matrix(rng, 4, 3, 5);
    std::vector<mpz_class> y = {static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3,
                                static_cast<long>(rng() % 7) - 3};
    const auto b = B.apply(y);
    auto z = solve_integer(B, b);
    REQUIRE(z);
    CHECK(B.apply(*z) == b);
  }
}

TEST_CASE("hermitian signature") {
  HermitianIntervalMatrix H(2);
  H.set_diag(0, Interval(0L));
  H.set_diag(1, Interval(0L));
  H.set(0, 1, ComplexInterval(Interval(0L), Interval(1L)));
  CHECK(hermitian_signature(H) == 0);

  HermitianIntervalMatrix D(3);
  D.set_diag(0, Interval(2L));
  D.set_diag(1, Interval(mpq_class(1, 3)));
  D.set_diag(2, Interval(-5L));
  CHECK(hermitian_signature(D) == 1);

  HermitianIntervalMatrix S(1);
  S.set_diag(0, Interval(mpq_class(-1, 10), mpq_class(1, 10)));
  CHECK_FALSE(hermitian_signature(S));
  CHECK_THROWS_AS(hermitian_signature_certified([&](int) { return S; }, 64, 256), CertificationError);
}

TEST_CASE("real root isolation") {
  // 2x - 5 has its root at 5/2, outside (-2, 2).
  CHECK(isolate_real_roots(QPoly(std::vector<mpq_class>{-5, 2}), -2, 2).roots.empty());
  const auto r = isolate_real_roots(QPoly(std::vector<mpq_class>{-2, 0, 1}), -2, 2).roots;
  REQUIRE(r.size() == 2);
  CHECK(r[0].iv.hi() <= 0);
  CHECK(r[1].iv.lo() >= 0);
  auto root = r[1];
  refine_root(root, mpq_class(1, 1000000));
  CHECK(root.iv.width() <= mpq_class(1, 1000000));
  CHECK(root.iv.lo() * root.iv.lo() < 2);
  CHECK(root.iv.hi() * root.iv.hi() > 2);
  // (x - 1)^2 (x + 1): an exact double root and a simple root.
  const QPoly q = QPoly(std::vector<mpq_class>{-1, 1}) * QPoly(std::vector<mpq_class>{-1, 1}) * QPoly(std::vector<mpq_class>{1, 1});
  const auto s = isolate_real_roots(q, -2, 2).roots;
  REQUIRE(s.size() == 2);
  CHECK(s[0].iv.contains(-1));
  CHECK(s[1].iv.contains(1));
  CHECK(s[1].multiplicity == 2);
  // Roots at the endpoints are excluded.
  CHECK(isolate_real_roots(QPoly(std::vector<mpq_class>{-4, 0, 1}), -2, 2).roots.empty());
}
