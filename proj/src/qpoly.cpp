#include "ribbon/qpoly.hpp"

#include <ostream>
#include <stdexcept>

namespace ribbon {

namespace {

std::string term_string(const mpq_class& c, int deg, bool first, const char* var) {
  std::string out;
  mpq_class a = abs(c);
  if (sgn(c) < 0) {
    out += "-";
  } else if (!first) {
    out += "+";
  }
  bool unit = (a == 1);
  if (!unit || deg == 0) out += a.get_str();
  if (deg != 0) {
    if (!unit) out += "*";
    out += var;
    if (deg != 1) out += "^" + std::to_string(deg);
  }
  return out;
}

}  // namespace

QPoly::QPoly(const mpq_class& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const mpq_class& c, int deg) {
  if (deg < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  std::vector<mpq_class> v(deg + 1);
  v[deg] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return c_[d];
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / leading();
  return *this * inv;
}

QPoly QPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_class n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(l, g);
  scale.canonicalize();
  if (sgn(leading()) < 0) scale = -scale;
  return *this * scale;
}

bool QPoly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

QPoly QPoly::reversed() const { return QPoly(std::vector<mpq_class>(c_.rbegin(), c_.rend())); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(r));
}

std::string QPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    if (sgn(c_[d]) == 0) continue;
    out += term_string(c_[d], d, out.empty(), var);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("QPoly division by zero");
  std::vector<mpq_class> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<mpq_class> q(a.degree() - db + 1);
  mpq_class inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    mpq_class f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<QPoly> out;
  QPoly f = p.monic();
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(fp, a).first;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

QPoly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  // x^n - 1 = prod_{d | n} Phi_d.
  QPoly result = QPoly::monomial(1, n) - QPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) result = divmod(result, cyclotomic(d)).first;
  }
  return result;
}

}  // namespace ribbon
