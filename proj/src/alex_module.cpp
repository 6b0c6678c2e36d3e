#include "ribbon/alex_module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ribbon/error.hpp"

namespace ribbon {

LaurentPoly alexander_polynomial(const SeifertMatrix& V) {
  if (V.size() == 0) return 1;
  LaurentPoly d = LaurentMatrix::linear(V.V(), V.V().transpose()).determinant();
  d = d.shift(-d.low_exp());
  if (d.eval(1) < 0) d = -d;
  return d;
}

LaurentPoly kn_delta() { return LaurentPoly(0, {2, -5, 2}); }

AlexanderPresentation::AlexanderPresentation(const SeifertMatrix& V)
    : A_(LaurentMatrix::linear(V.V().transpose(), V.V())) {
  if (A_.rows() > 0) {
    det_ = A_.determinant();
    adj_ = A_.adjugate();
  }
}

bool AlexanderPresentation::is_zero(const ModElt& x) const {
  if (static_cast<int>(x.size()) != size()) throw InvalidInput("module element has the wrong length");
  if (is_zero_vector(x)) return true;
  // A y = x has the solution y = adj(A) x / det over Q(t); the module has
  // no Z-torsion, so rational solvability is integral solvability.
  LaurentVector y = adj_.apply(x);
  for (const auto& c : y)
    if (!exact_divide(c, det_)) return false;
  return true;
}

namespace {

int vector_low(const LaurentVector& v, int fallback) {
  int lo = fallback;
  bool any = false;
  for (const auto& p : v)
    if (!p.is_zero()) {
      lo = any ? std::min(lo, p.low_exp()) : p.low_exp();
      any = true;
    }
  return lo;
}

int vector_high(const LaurentVector& v, int fallback) {
  int hi = fallback;
  bool any = false;
  for (const auto& p : v)
    if (!p.is_zero()) {
      hi = any ? std::max(hi, p.high_exp()) : p.high_exp();
      any = true;
    }
  return hi;
}

int vector_width(const LaurentVector& v) {
  if (is_zero_vector(v)) return 0;
  return vector_high(v, 0) - vector_low(v, 0);
}

}  // namespace

int AlexanderPresentation::window_for(const ModElt& x, const std::vector<ModElt>& gens) const {
  int w = vector_width(x);
  for (const auto& g : gens) w = std::max(w, vector_width(g));
  return det_.width() + w + 2;
}

bool AlexanderPresentation::in_span(const ModElt& x, const std::vector<ModElt>& gens) const {
  const int n = size();
  if (n == 0 || is_zero(x)) return true;
  const int W = window_for(x, gens);
  const int span = 2 * W + 1;

  std::vector<LaurentVector> cols_src = gens;
  for (int j = 0; j < n; ++j) {
    LaurentVector c(n);
    for (int i = 0; i < n; ++i) c[i] = A_(i, j);
    cols_src.push_back(std::move(c));
  }
  int lo = vector_low(x, 0), hi = vector_high(x, 0);
  for (const auto& c : cols_src) {
    if (is_zero_vector(c)) continue;
    lo = std::min(lo, vector_low(c, 0) - W);
    hi = std::max(hi, vector_high(c, 0) + W);
  }
  const int exps = hi - lo + 1;
  IntMatrix M(n * exps, static_cast<int>(cols_src.size()) * span);
  for (size_t k = 0; k < cols_src.size(); ++k)
    for (int e = -W; e <= W; ++e) {
      const int col = static_cast<int>(k) * span + (e + W);
      for (int i = 0; i < n; ++i) {
        const LaurentPoly& p = cols_src[k][i];
        for (int d = p.low_exp(); !p.is_zero() && d <= p.high_exp(); ++d) M(i * exps + (d + e - lo), col) = p.coeff(d);
      }
    }
  std::vector<mpz_class> b(n * exps);
  for (int i = 0; i < n; ++i)
    for (int d = x[i].low_exp(); !x[i].is_zero() && d <= x[i].high_exp(); ++d) b[i * exps + (d - lo)] = x[i].coeff(d);
  return solve_integer(M, b).has_value();
}

std::string kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::CyclicT2T1:
      return "cyclic";
    case ModuleKind::SplitT2T1:
      return "split";
    case ModuleKind::Other:
      break;
  }
  return "other";
}

ModuleKind kind_from_name(const std::string& s) {
  if (s == "cyclic") return ModuleKind::CyclicT2T1;
  if (s == "split") return ModuleKind::SplitT2T1;
  if (s == "other") return ModuleKind::Other;
  throw InvalidInput("unknown module kind '" + s + "'");
}

LaurentPoly factor_poly(LagFactor f) {
  return f == LagFactor::TMinus2 ? LaurentPoly(0, {-2, 1}) : LaurentPoly(0, {-1, 2});
}

std::string factor_name(LagFactor f) { return f == LagFactor::TMinus2 ? "t-2" : "2*t-1"; }

LagFactor factor_from_name(const std::string& s) {
  if (s == "t-2") return LagFactor::TMinus2;
  if (s == "2*t-1") return LagFactor::TwoTMinus1;
  throw InvalidInput("unknown lagrangian factor '" + s + "'");
}

std::string lagrangian_label(LagFactor f) { return f == LagFactor::TMinus2 ? "P1" : "P2"; }

namespace {

// Visits coefficient vectors of length `len` with entries in [-c, c] in
// order of increasing L1 norm; stops when `visit` returns true.
bool enumerate_by_norm(int len, int c, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> v(len, 0);
  std::function<bool(int, int)> rec = [&](int pos, int left) -> bool {
    if (pos == len) return left == 0 && visit(v);
    if (left > c * (len - pos)) return false;
    for (int a = std::min(c, left); a >= 0; --a) {
      for (int s : {1, -1}) {
        if (a == 0 && s < 0) continue;
        v[pos] = s * a;
        if (rec(pos + 1, left - a)) return true;
      }
    }
    v[pos] = 0;
    return false;
  };
  for (int norm = 1; norm <= c * len; ++norm)
    if (rec(0, norm)) return true;
  return false;
}

ModElt to_element(const std::vector<int>& v, int n, int w) {
  ModElt x(n);
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> cs(w + 1);
    for (int d = 0; d <= w; ++d) cs[d] = v[i * (w + 1) + d];
    x[i] = LaurentPoly(0, std::move(cs));
  }
  return x;
}

ModElt unit_vector(int n, int i) {
  ModElt e(n);
  e[i] = 1;
  return e;
}

}  // namespace

ModuleFacts module_type(const SeifertMatrix& V, GeneratorSearchBound bound) {
  ModuleFacts f;
  f.delta = alexander_polynomial(V);
  f.presentation = AlexanderPresentation(V);
  if (!doteq_equal(f.delta, kn_delta())) return f;

  const auto& P = f.presentation;
  const int n = P.size();
  // First elementary ideal: the (n-1)-minors, i.e. entries of adj(A);
  // reduce mod (3, t-2) by evaluating at t = -1.
  const LaurentMatrix adj = P.relations().adjugate();
  bool all_zero = true;
  for (int i = 0; i < n && all_zero; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class v = adj(i, j).eval(-1).get_num();
      if (v % 3 != 0) {
        all_zero = false;
        break;
      }
    }
  f.kind = all_zero ? ModuleKind::SplitT2T1 : ModuleKind::CyclicT2T1;

  const LaurentPoly a = factor_poly(LagFactor::TMinus2), b = factor_poly(LagFactor::TwoTMinus1);
  const int len = n * (bound.max_width + 1);
  std::vector<ModElt> us, vs;
  bool ok = enumerate_by_norm(len, bound.max_coeff, [&](const std::vector<int>& c) {
    ++f.candidates_tried;
    ModElt g = to_element(c, n, bound.max_width);
    bool killed_a = P.is_zero(scale(a, g));
    bool killed_b = P.is_zero(scale(b, g));
    if (f.kind == ModuleKind::CyclicT2T1) {
      if (killed_a || killed_b) return false;
      for (int i = 0; i < n; ++i)
        if (!P.in_span(unit_vector(n, i), {g})) return false;
      f.generators = {g};
      return true;
    }
    if (killed_a == killed_b) return false;  // zero, or neither side
    auto& mine = killed_a ? us : vs;
    const auto& other = killed_a ? vs : us;
    mine.push_back(g);
    for (const auto& h : other) {
      std::vector<ModElt> pair = killed_a ? std::vector<ModElt>{g, h} : std::vector<ModElt>{h, g};
      bool spans = true;
      for (int i = 0; i < n && spans; ++i) spans = P.in_span(unit_vector(n, i), pair);
      if (spans) {
        f.generators = pair;
        return true;
      }
    }
    return false;
  });
  if (!ok)
    throw InvalidInput("generator search failed (entries of width <= " + std::to_string(bound.max_width) +
                       ", coefficients in [-" + std::to_string(bound.max_coeff) + ", " +
                       std::to_string(bound.max_coeff) + "])");
  return f;
}

std::vector<Lagrangian> lagrangian_set(const ModuleFacts& facts) {
  switch (facts.kind) {
    case ModuleKind::CyclicT2T1: {
      const ModElt& g = facts.generators.at(0);
      // (2t-1)g is killed by t-2 and (t-2)g by 2t-1.
      return {{scale(factor_poly(LagFactor::TwoTMinus1), g), LagFactor::TMinus2},
              {scale(factor_poly(LagFactor::TMinus2), g), LagFactor::TwoTMinus1}};
    }
    case ModuleKind::SplitT2T1:
      return {{facts.generators.at(0), LagFactor::TMinus2}, {facts.generators.at(1), LagFactor::TwoTMinus1}};
    case ModuleKind::Other:
      break;
  }
  return {};
}

bool lagrangians_distinct(const ModuleFacts& facts, const Lagrangian& a, const Lagrangian& b) {
  const auto& P = facts.presentation;
  if (P.is_zero(a.generator) || P.is_zero(b.generator)) return false;
  if (a.factor == b.factor) return false;
  return !P.equal(a.generator, b.generator);
}

AbelianGroup ext1_linear_pair(const LaurentPoly& f0, const LaurentPoly& g0) {
  if (f0.is_zero() || g0.is_zero() || f0.width() != 1 || g0.width() != 1)
    throw InvalidInput("ext1_linear_pair needs two linear polynomials");
  const LaurentPoly f = f0.shift(-f0.low_exp()), g = g0.shift(-g0.low_exp());
  if (f.content() != 1 || g.content() != 1) throw InvalidInput("ext1_linear_pair needs primitive polynomials");
  if (resultant(f, g) == 0) throw InvalidInput("Ext group infinite (shared factor)");
  // Relations on the basis {1, t}, one column per polynomial.
  IntMatrix rel(2, 2);
  rel(0, 0) = f.coeff(0);
  rel(1, 0) = f.coeff(1);
  rel(0, 1) = g.coeff(0);
  rel(1, 1) = g.coeff(1);
  AbelianGroup grp = finite_quotient_group(rel);
  // Z[t]/(f, g) is cyclic of order |Res|; inverting t kills the primes
  // dividing the coefficients of f.
  const mpz_class ab = f.coeff(0) * f.coeff(1);
  mpz_class order = grp.order(), common;
  while ((common = gcd(order, ab)) > 1) order /= common;
  AbelianGroup out;
  if (order > 1) out.torsion.push_back(order);
  return out;
}

ModElt metabolizer_vector(const SeifertMatrix& V, const Metabolizer& m) {
  if (V.size() != 2) throw InvalidInput("metabolizers need a 2x2 Seifert matrix");
  ModElt x(2);
  x[0] = mpz_class(V(0, 0) * m.a + V(0, 1) * m.b);
  x[1] = mpz_class(V(1, 0) * m.a + V(1, 1) * m.b);
  return x;
}

Lagrangian metabolizer_image(const SeifertMatrix& V, const Metabolizer& m, const ModuleFacts& facts) {
  if (facts.kind == ModuleKind::Other) throw InvalidInput("metabolizer_image needs a cyclic or split module");
  ModElt x = metabolizer_vector(V, m);
  mpz_class q = m.a * x[0].coeff(0) + m.b * x[1].coeff(0);
  if (q != 0) throw InvalidInput("vector " + m.str() + " is not isotropic for the Seifert form");
  const auto& P = facts.presentation;
  if (!P.is_zero(x)) {
    for (const auto& L : lagrangian_set(facts))
      if (P.is_zero(scale(factor_poly(L.factor), x))) return L;
  }
  throw InvalidInput("metabolizer does not represent a lagrangian");
}

}  // namespace ribbon
