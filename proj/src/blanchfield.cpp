#include "ribbon/blanchfield.hpp"

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

QPoly to_qpoly(const LaurentPoly& p) { return p.shifted_to_poly(); }

// t^-1 mod D, from D = d0 + t h.
QPoly t_inverse(const QPoly& D) {
  const mpq_class d0 = D.coeff(0);
  std::vector<mpq_class> h(D.coeffs().begin() + 1, D.coeffs().end());
  return QPoly(std::move(h)) * mpq_class(-1 / d0);
}

QPoly x_power(int k) { return QPoly::monomial(1, k); }

// Residue of the Laurent polynomial p modulo D in Q[t]/(D).
QPoly residue(const LaurentPoly& p, const QPoly& D) {
  if (p.is_zero()) return {};
  QPoly r = to_qpoly(p) % D;
  int m = p.low_exp();
  if (m > 0) {
    r = (r * (x_power(m) % D)) % D;
  } else if (m < 0) {
    QPoly inv = t_inverse(D), acc(1);
    for (int i = 0; i < -m; ++i) acc = (acc * inv) % D;
    r = (r * acc) % D;
  }
  return r;
}

}  // namespace

FractionModRing::FractionModRing(QPoly label, QPoly den) {
  if (den.degree() <= 0) {
    den_ = QPoly(1);
    return;
  }
  QPoly L = label % den;
  if (L.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = gcd(L, den);
  if (g.degree() > 0) {
    QPoly gp = g.primitive();
    den = divmod(den, gp).first;
    L = divmod(L, gp).first;
  }
  if (sgn(den.leading()) < 0) {
    den = -den;
    L = -L;
  }
  if (den.degree() <= 0) {
    den_ = QPoly(1);
    return;
  }
  num_ = L % den;
  den_ = std::move(den);
}

FractionModRing FractionModRing::from_fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InvalidInput("fraction with zero denominator");
  if (den.content() != 1) throw InvalidInput("fraction denominators must be primitive: " + den.str());
  LaurentPoly n = num.shift(-den.low_exp());
  QPoly D = to_qpoly(den);
  return FractionModRing(residue(n, D), D);
}

LaurentPoly FractionModRing::den() const {
  std::vector<mpz_class> cs;
  for (const auto& c : den_.coeffs()) cs.push_back(c.get_num());
  return LaurentPoly(0, std::move(cs));
}

FractionModRing FractionModRing::conj() const {
  if (is_zero()) return {};
  const int d = den_.degree();
  // conj(L)/conj(D) = t^d conj(L) / D*, with D* the reversed polynomial.
  QPoly label = num_.reversed() * x_power(d - num_.degree());
  return FractionModRing(label, den_.reversed());
}

FractionModRing operator+(const FractionModRing& a, const FractionModRing& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FractionModRing(a.num_ + b.num_, a.den_);
  return FractionModRing(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FractionModRing operator*(const LaurentPoly& p, const FractionModRing& a) {
  if (a.is_zero() || p.is_zero()) return {};
  return FractionModRing(residue(p, a.den_) * a.num_, a.den_);
}

std::string FractionModRing::str() const {
  if (is_zero()) return "0 / 1 (mod Z[t^±1])";
  return num_.str("t") + " / " + den().str() + " (mod Z[t^±1])";
}

BlanchfieldForm blanchfield_matrix(const SeifertMatrix& V) {
  BlanchfieldForm B;
  B.size = V.size();
  if (B.size == 0) return B;
  AlexanderPresentation P(V);
  const LaurentMatrix adj = P.relations().adjugate();
  const LaurentPoly t_minus_1(0, {-1, 1});
  B.entries.assign(B.size, std::vector<FractionModRing>(B.size));
  for (int i = 0; i < B.size; ++i)
    for (int j = 0; j < B.size; ++j) B.entries[i][j] = FractionModRing::from_fraction(t_minus_1 * adj(i, j), P.det());
  return B;
}

bool is_hermitian(const BlanchfieldForm& B) {
  for (int i = 0; i < B.size; ++i)
    for (int j = i; j < B.size; ++j)
      if (!(B(i, j) == B(j, i).conj())) return false;
  return true;
}

FractionModRing bl_pair(const BlanchfieldForm& B, const ModElt& v, const ModElt& w) {
  if (static_cast<int>(v.size()) != B.size || static_cast<int>(w.size()) != B.size)
    throw InvalidInput("bl_pair: element length does not match the form");
  FractionModRing acc;
  for (int i = 0; i < B.size; ++i) {
    if (v[i].is_zero()) continue;
    const LaurentPoly vi = v[i].conj();
    for (int j = 0; j < B.size; ++j) {
      if (w[j].is_zero()) continue;
      acc = acc + (vi * w[j]) * B(i, j);
    }
  }
  return acc;
}

bool bl_vanishes_on(const BlanchfieldForm& B, const Lagrangian& L) {
  if (B.size == 0) return true;
  return bl_pair(B, L.generator, L.generator).is_zero();
}

}  // namespace ribbon
