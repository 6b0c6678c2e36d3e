#include "ribbon/lt_signature.hpp"

#include <algorithm>
#include <future>

#include "ribbon/alex_module.hpp"
#include "ribbon/error.hpp"

namespace ribbon {

namespace {

long euler_phi(long q) {
  long result = q;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    result -= result / p;
  }
  if (q > 1) result -= result / q;
  return result;
}

void check_s(const mpq_class& s) {
  if (s <= 0 || s >= 1) throw InvalidInput("s must lie in the open interval (0, 1), got " + s.get_str());
}

mpq_class dyadic(int bits) { return mpq_class(mpz_class(1), mpz_class(1) << bits); }

// s-interval of the jump belonging to an x-root, x = 2cos(2 pi s).
Interval s_enclosure(IsolatedRoot& r, int bits) {
  refine_root(r, dyadic(bits));
  return acos_over_2pi(r.iv * Interval(mpq_class(1, 2)), bits);
}

Interval mirror(const Interval& iv) { return Interval(1 - iv.hi(), 1 - iv.lo()); }

}  // namespace

bool is_jump_point(const LaurentPoly& delta, const mpq_class& s) {
  mpq_class r = s;
  r.canonicalize();
  const mpz_class& q = r.get_den();
  if (!q.fits_slong_p()) return false;
  if (delta.is_zero()) return true;
  const long qq = q.get_si();
  if (euler_phi(qq) > delta.width()) return false;
  return (delta.shifted_to_poly() % cyclotomic(static_cast<int>(qq))).is_zero();
}

HermitianIntervalMatrix lt_matrix(const SeifertMatrix& V, const mpq_class& s, int bits) {
  const int n = V.size();
  const Interval c = cos_2pi(s, bits), sn = sin_2pi(s, bits);
  const Interval one_minus_c = Interval(1L) - c;
  HermitianIntervalMatrix H(n);
  for (int i = 0; i < n; ++i) {
    H.set_diag(i, one_minus_c * Interval(mpq_class(2 * V(i, i))));
    for (int j = i + 1; j < n; ++j) {
      const mpq_class sym(V(i, j) + V(j, i)), skew(V(j, i) - V(i, j));
      H.set(i, j, ComplexInterval(one_minus_c * Interval(sym), sn * Interval(skew)));
    }
  }
  return H;
}

int signature_at(const SeifertMatrix& V, const mpq_class& s, PrecisionBudget budget) {
  check_s(s);
  if (V.size() == 0) return 0;
  if (is_jump_point(alexander_polynomial(V), s)) throw InvalidInput("at a jump point: s = " + s.get_str());
  return hermitian_signature_certified([&](int bits) { return lt_matrix(V, s, bits); }, budget.start_bits,
                                       std::max(budget.start_bits, budget.max_bits));
}

double SignatureFunction::value_at(const mpq_class& s) const {
  size_t arc = 0;
  for (size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i].contains(s)) return (arc_values[i] + arc_values[i + 1]) / 2.0;
    if (jumps[i].hi() < s) arc = i + 1;
  }
  return arc_values[arc];
}

SignatureFunction signature_function(const SeifertMatrix& V, PrecisionBudget budget) {
  SignatureFunction sf;
  if (V.size() == 0) {
    sf.arc_values = {0};
    sf.arc_samples = {mpq_class(1, 2)};
    return sf;
  }
  const LaurentPoly delta = alexander_polynomial(V);
  RootIsolation iso = isolate_real_roots(symmetric_reduce(delta), -2, 2);
  sf.x_roots = iso.roots;
  std::reverse(sf.x_roots.begin(), sf.x_roots.end());  // decreasing x is increasing s

  std::vector<Interval> half;
  const int max_bits = std::max(budget.start_bits, budget.max_bits);
  for (int bits = budget.start_bits;; bits *= 2) {
    if (bits > max_bits) throw CertificationError("cannot separate the jump points");
    half.clear();
    for (auto& r : sf.x_roots) half.push_back(s_enclosure(r, bits));
    bool separated = true;
    for (size_t i = 0; i < half.size() && separated; ++i) {
      if (i == 0 && sgn(half[i].lo()) <= 0) separated = false;
      if (i + 1 < half.size() && half[i].hi() >= half[i + 1].lo()) separated = false;
      if (i + 1 == half.size() && half[i].hi() >= mpq_class(1, 2)) separated = false;
    }
    if (separated) break;
  }

  // One sample per arc of [0, 1/2]; the last arc contains 1/2.
  std::vector<mpq_class> samples;
  for (size_t i = 0; i < half.size(); ++i) {
    mpq_class left = i == 0 ? mpq_class(0) : half[i - 1].hi();
    samples.push_back((left + half[i].lo()) / 2);
  }
  samples.push_back(mpq_class(1, 2));

  std::vector<std::future<int>> tasks;
  for (const auto& s : samples)
    tasks.push_back(std::async(std::launch::async, [&V, s, budget] { return signature_at(V, s, budget); }));
  std::vector<int> values;
  for (auto& t : tasks) values.push_back(t.get());

  sf.jumps = half;
  for (auto it = half.rbegin(); it != half.rend(); ++it) sf.jumps.push_back(mirror(*it));
  sf.arc_values = values;
  sf.arc_samples = samples;
  for (int i = static_cast<int>(values.size()) - 2; i >= 0; --i) {
    sf.arc_values.push_back(values[i]);
    sf.arc_samples.push_back(1 - samples[i]);
  }
  return sf;
}

std::string rho0_sign_name(Rho0Sign s) {
  switch (s) {
    case Rho0Sign::Positive:
      return "positive";
    case Rho0Sign::Negative:
      return "negative";
    case Rho0Sign::Zero:
      return "zero";
    case Rho0Sign::Undetermined:
      break;
  }
  return "undetermined";
}

Rho0Sign rho0_sign_from_name(const std::string& s) {
  if (s == "positive") return Rho0Sign::Positive;
  if (s == "negative") return Rho0Sign::Negative;
  if (s == "zero") return Rho0Sign::Zero;
  if (s == "undetermined") return Rho0Sign::Undetermined;
  throw InvalidInput("unknown rho0 sign '" + s + "'");
}

Rho0Result rho0_of(SignatureFunction sf, PrecisionBudget budget) {
  if (std::all_of(sf.arc_values.begin(), sf.arc_values.end(), [](int v) { return v == 0; }))
    return {Interval(0L), Rho0Sign::Zero};
  Interval total;
  const int max_bits = std::max(budget.start_bits, budget.max_bits);
  for (int bits = budget.start_bits; bits <= max_bits; bits *= 2) {
    std::vector<Interval> bounds{Interval(0L)};
    std::vector<Interval> half;
    for (auto& r : sf.x_roots) half.push_back(s_enclosure(r, bits));
    bounds.insert(bounds.end(), half.begin(), half.end());
    for (auto it = half.rbegin(); it != half.rend(); ++it) bounds.push_back(mirror(*it));
    bounds.push_back(Interval(1L));
    total = Interval(0L);
    for (size_t i = 0; i < sf.arc_values.size(); ++i)
      total += Interval(static_cast<long>(sf.arc_values[i])) * (bounds[i + 1] - bounds[i]);
    if (total.positive()) return {total, Rho0Sign::Positive};
    if (total.negative()) return {total, Rho0Sign::Negative};
  }
  return {total, Rho0Sign::Undetermined};
}

Rho0Result rho0(const SeifertMatrix& V, PrecisionBudget budget) {
  return rho0_of(signature_function(V, budget), budget);
}

nlohmann::json signature_json(const SignatureFunction& sf) {
  nlohmann::json j;
  j["jumps"] = nlohmann::json::array();
  for (const auto& iv : sf.jumps) j["jumps"].push_back({iv.lo().get_d(), iv.hi().get_d()});
  j["arcs"] = nlohmann::json::array();
  for (size_t i = 0; i < sf.arc_values.size(); ++i) {
    double lo = i == 0 ? 0.0 : sf.jumps[i - 1].hi().get_d();
    double hi = i == sf.jumps.size() ? 1.0 : sf.jumps[i].lo().get_d();
    j["arcs"].push_back({{"s_interval", {lo, hi}}, {"value", sf.arc_values[i]}});
  }
  return j;
}

}  // namespace ribbon
