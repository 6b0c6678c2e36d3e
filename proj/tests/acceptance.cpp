#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ribbon/blanchfield.hpp"
#include "ribbon/classifier.hpp"
#include "ribbon/error.hpp"
#include "support.hpp"

using namespace ribbon;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (ok) why << s;
    ok = false;
  }
  void expect(bool cond, const std::string& s) {
    if (!cond) fail(s);
  }
};

using Check = std::function<void(Outcome&)>;

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

void alexander(Outcome& o) {
  for (long n = -6; n <= 6; ++n) {
    const LaurentPoly d = alexander_polynomial(kn_seifert(n));
    o.expect(d.doteq_canonical() == (P("t-2") * P("2*t-1")).doteq_canonical(), "n=" + std::to_string(n) + " gives " + d.str());
    o.expect(doteq_equal(d, kn_delta()), "n=" + std::to_string(n) + " not doteq (t-2)(2t-1)");
  }
}

void module_dichotomy(Outcome& o) {
  for (long n = -12; n <= 12; ++n) {
    const ModuleKind want = n % 3 == 0 ? ModuleKind::SplitT2T1 : ModuleKind::CyclicT2T1;
    const ModuleKind got = module_type(kn_seifert(n)).kind;
    o.expect(got == want, "n=" + std::to_string(n) + " is " + kind_name(got));
  }
}

void ext_computation(Outcome& o) {
  const AbelianGroup g = ext1_linear_pair(P("t-2"), P("2*t-1"));
  o.expect(g.free_rank == 0 && g.torsion == std::vector<mpz_class>{3}, "Ext = " + g.str());
  o.expect(resultant(P("t-2"), P("2*t-1")) == 3, "resultant is not 3");
}

void blanchfield_isometry(Outcome& o) {
  const LaurentPoly t1 = P("t-1");
  for (long n : {1L, 2L}) {
    const SeifertMatrix V = kn_seifert(n);
    const ModuleFacts f = module_type(V);
    if (f.kind != ModuleKind::CyclicT2T1) {
      o.fail("module not cyclic");
      return;
    }
    const BlanchfieldForm B = blanchfield_matrix(V);
    const ModElt& g = f.generators[0];
    const long x = n % 3;
    const auto expect = FractionModRing::from_fraction(LaurentPoly(-x) * t1 * t1, kn_delta());
    const auto got = bl_pair(B, g, g);
    o.expect(got == expect, "n=" + std::to_string(n) + ": " + got.str() + " vs " + expect.str());
  }
}

void lagrangians(Outcome& o) {
  for (long n = -6; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const SeifertMatrix V = kn_seifert(n);
    const ModuleFacts f = module_type(V);
    const auto L = lagrangian_set(f);
    if (L.size() != 2) {
      o.fail(tag + std::to_string(L.size()) + " lagrangians");
      continue;
    }
    o.expect(lagrangians_distinct(f, L[0], L[1]), tag + "lagrangians coincide");
    const BlanchfieldForm B = blanchfield_matrix(V);
    o.expect(bl_vanishes_on(B, L[0]) && bl_vanishes_on(B, L[1]), tag + "form does not vanish");
    o.expect(!bl_pair(B, L[0].generator, L[1].generator).is_zero(), tag + "cross pairing vanishes");
  }
}

void negative_braids(Outcome& o) {
  for (int k = 1; k <= 4; ++k) {
    const std::string tag = "k=" + std::to_string(k) + ": ";
    const SeifertMatrix V = braid_to_seifert(gamma_braid(k));
    const SignatureFunction sf = signature_function(V);
    for (int v : sf.arc_values) o.expect(v >= 0, tag + "negative arc value");
    o.expect(signature_at(V, mpq_class(1, 2)) > 0, tag + "signature at 1/2 not positive");
    const Rho0Result r = rho0_of(sf);
    o.expect(r.sign == Rho0Sign::Positive && r.enclosure.positive(), tag + "rho0 " + rho0_sign_name(r.sign));
  }
}

std::string count_str(const ClassificationReport& r) {
  return "[" + std::to_string(r.disc_count_min) + "," + std::to_string(r.disc_count_max) + "]";
}

void family_counts(Outcome& o) {
  for (long k = -3; k <= 3; ++k) {
    const auto r = classify_knot(kn_seifert(3 * k), kn_derivatives(3 * k));
    const bool two = k == 0 || k == -1;
    const bool ok = two ? (r.disc_count_min == 2 && r.disc_count_max == 2)
                        : (r.disc_count_min == 1 && r.disc_count_max == 1);
    o.expect(ok, "k=" + std::to_string(k) + " gives " + count_str(r));
  }
}

void both_unknotted(Outcome& o) {
  for (long n : {-1L, -2L}) {
    const auto r = classify_knot(kn_seifert(n), {Derivative::unknot(), Derivative::unknot()});
    o.expect(r.disc_count_min == 2 && r.disc_count_max == 2, "n=" + std::to_string(n) + " gives " + count_str(r));
  }
}

void oracle(Outcome& o) {
  std::mt19937 rng(20261014);
  int mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const SeifertMatrix V = testing_support::random_seifert(rng, 1 + trial % 3, 2);
    const LaurentPoly d = alexander_polynomial(V);
    int checked = 0;
    while (checked < 200) {
      const mpq_class s = testing_support::random_s(rng);
      if (is_jump_point(d, s)) continue;
      const auto f = testing_support::float_signature(V, s.get_d());
      if (f.min_abs_eigenvalue < 1e-9) continue;
      if (signature_at(V, s) != f.value) ++mismatches;
      ++checked;
    }
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " signature mismatches");
  int bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord w = testing_support::random_knot_braid(rng);
    if (!doteq_equal(alexander_via_burau(w), alexander_polynomial(braid_to_seifert(w)))) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " Burau mismatches");
}

bool unimodular(const IntMatrix& U) {
  const mpz_class d = U.determinant();
  return d == 1 || d == -1;
}

void invariants(Outcome& o) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const SeifertMatrix V = testing_support::random_seifert(rng, 1 + trial % 3, 2);
    const LaurentPoly d = alexander_polynomial(V);
    o.expect(doteq_equal(d, d.conj()), "Delta not palindromic: " + d.str());
    o.expect(d.eval(1) == 1, "Delta(1) != 1: " + d.str());
    const mpz_class m = abs(d.eval(-1).get_num());
    o.expect(mpz_odd_p(m.get_mpz_t()), "|Delta(-1)| even: " + d.str());
    if (trial < 15) {
      const SignatureFunction sf = signature_function(V);
      const size_t n = sf.arc_values.size();
      for (size_t i = 0; i < n; ++i) {
        o.expect(sf.arc_values[i] % 2 == 0, "odd signature value");
        o.expect(sf.arc_values[i] == sf.arc_values[n - 1 - i], "signature not symmetric");
      }
      o.expect(sf.arc_values.front() == 0, "signature nonzero near s = 0");
    }
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + rng() % 8, c = 1 + rng() % 8;
    IntMatrix A(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) A(i, j) = static_cast<long>(rng() % 19) - 9;
    const SnfResult s = snf(A);
    o.expect(s.U * A * s.W == s.S && s.S.is_diagonal(), "SNF does not factor A");
    o.expect(unimodular(s.U) && unimodular(s.W), "SNF factors not unimodular");
    for (int i = 0; i + 1 < std::min(r, c); ++i) {
      const mpz_class &a = s.S(i, i), &b = s.S(i + 1, i + 1);
      o.expect(a == 0 ? b == 0 : mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0, "SNF chain broken");
    }
  }
  const std::vector<SeifertMatrix> knots{braid_to_seifert(gamma_braid(1)), braid_to_seifert(gamma_braid(2)),
                                         braid_to_seifert(parse_braid("1 -2 1 -2")), kn_seifert(2),
                                         braid_to_seifert(parse_braid("1 1 1"))};
  for (size_t i = 0; i < knots.size(); ++i)
    for (size_t j = i; j < knots.size(); ++j) {
      const Interval sum = rho0(knots[i]).enclosure + rho0(knots[j]).enclosure;
      const Interval both = rho0(block_sum(knots[i], knots[j])).enclosure;
      o.expect(both.lo() <= sum.hi() && sum.lo() <= both.hi(), "rho0 not additive");
    }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Check run;
  };
  const std::vector<Criterion> criteria{
      {1, "Alexander polynomial of K_n, n in [-6,6]", 1, alexander},
      {2, "module split iff 3 | n, n in [-12,12]", 1, module_dichotomy},
      {3, "Ext(t-2, 2t-1) = Z/3 and resultant 3", 1, ext_computation},
      {4, "Blanchfield self pairing for n = 1, 2", 1, blanchfield_isometry},
      {5, "two distinct isotropic lagrangians, n in [-6,6]", 5, lagrangians},
      {6, "negative braid signatures and rho0 > 0, k = 1..4", 120, negative_braids},
      {7, "disc counts for K_3k, k in [-3,3]", 120, family_counts},
      {8, "disc counts for n = -1, -2 with unknotted derivatives", 5, both_unknotted},
      {9, "signature and Burau oracles", 60, oracle},
      {10, "invariant suite", 30, invariants},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit_s) o.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(c.limit_s) + " s");
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << dt << " s)";
    if (!o.ok) std::cout << ": " << o.why.str();
    std::cout << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
