#include "ribbon/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ribbon/error.hpp"
#include "ribbon/exact_linalg.hpp"

namespace ribbon {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(mpz_class(c)) {}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int low_exp, std::vector<mpz_class> coeffs)
    : low_exp_(low_exp), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exp) { return LaurentPoly(exp, {c}); }

void LaurentPoly::canonicalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_exp_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_exp_ = 0;
}

mpz_class LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < low_exp_ || exp > high_exp()) return 0;
  return coeffs_[exp - low_exp_];
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::conj() const {
  if (is_zero()) return {};
  return LaurentPoly(-high_exp(), std::vector<mpz_class>(coeffs_.rbegin(), coeffs_.rend()));
}

LaurentPoly LaurentPoly::shift(int k) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.low_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::doteq_canonical() const {
  if (is_zero()) return {};
  LaurentPoly r = shift(-low_exp_);
  if (sgn(r.leading()) < 0) r = -r;
  return r;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  if (is_zero()) return 0;
  if (sgn(x) == 0 && low_exp_ < 0) throw InvalidInput("Laurent polynomial evaluated at 0");
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  if (low_exp_ != 0) {
    mpq_class p = 1;
    mpq_class base = low_exp_ > 0 ? x : mpq_class(1 / x);
    for (int i = 0; i < std::abs(low_exp_); ++i) p *= base;
    acc *= p;
  }
  return acc;
}

QPoly LaurentPoly::shifted_to_poly() const {
  std::vector<mpq_class> v(coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_exp_, o.low_exp_);
  int hi = std::max(high_exp(), o.high_exp());
  std::vector<mpz_class> r(hi - lo + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) r[low_exp_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[o.low_exp_ - lo + i] += o.coeffs_[i];
  low_exp_ = lo;
  coeffs_ = std::move(r);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.low_exp_ + b.low_exp_, std::move(r));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high_exp(); e >= low_exp_; --e) {
    const mpz_class& c = coeffs_[e - low_exp_];
    if (sgn(c) == 0) continue;
    mpz_class a = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (a != 1 || e == 0) out += a.get_str();
    if (e != 0) {
      if (a != 1) out += "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly acc;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * LaurentPoly(sign);
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }

  std::string digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int exponent() {
    skip();
    bool paren = false;
    if (pos_ < s_.size() && peek() == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    int sign = 1;
    if (pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    std::string d = digits();
    if (d.empty()) fail("missing exponent");
    skip();
    if (paren) {
      if (pos_ == s_.size() || peek() != ')') fail("missing ')'");
      ++pos_;
    }
    return sign * std::stoi(d);
  }

  LaurentPoly term() {
    mpz_class c = 1;
    bool have_coeff = false;
    std::string d = digits();
    if (!d.empty()) {
      c = mpz_class(d);
      have_coeff = true;
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip();
      } else if (pos_ == s_.size() || peek() != 't') {
        return LaurentPoly(c);
      }
    }
    if (pos_ < s_.size() && peek() == 't') {
      ++pos_;
      skip();
      int e = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        e = exponent();
      }
      return LaurentPoly::monomial(c, e);
    }
    if (!have_coeff) fail("expected a term");
    return LaurentPoly(c);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return TermParser(text).parse(); }

bool doteq_equal(const LaurentPoly& p, const LaurentPoly& q) {
  return p.doteq_canonical() == q.doteq_canonical();
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly();
  if (p.width() < q.width()) return std::nullopt;
  // Long division from the top on the shifted ordinary polynomials.
  std::vector<mpz_class> r = p.coeffs();
  const auto& d = q.coeffs();
  int dq = q.width();
  std::vector<mpz_class> quot(p.width() - dq + 1);
  for (int i = p.width(); i >= dq; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), q.leading().get_mpz_t())) return std::nullopt;
    mpz_class f = r[i] / q.leading();
    quot[i - dq] = f;
    for (int j = 0; j <= dq; ++j) r[i - dq + j] -= f * d[j];
  }
  for (int i = 0; i < dq; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  return LaurentPoly(p.low_exp() - q.low_exp(), std::move(quot));
}

mpz_class resultant(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant undefined for zero polynomial");
  const int m = p.width();
  const int n = q.width();
  if (m == 0 && n == 0) return 1;
  // Sylvester matrix of the shifted ordinary polynomials.
  const int size = m + n;
  IntMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s(r, r + j) = p.coeffs()[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s(n + r, r + j) = q.coeffs()[n - j];
  return abs(s.determinant());
}

CircleValue eval_circle(const LaurentPoly& p, const mpq_class& s, int precision) {
  if (precision < 1) throw InvalidInput("eval_circle: precision must be positive");
  if (p.is_zero()) return {Interval(0L), Interval(0L)};
  mpz_class total = 0;
  for (const auto& c : p.coeffs()) total += abs(c);
  int guard = static_cast<int>(mpz_sizeinbase(total.get_mpz_t(), 2)) + 8;
  const mpq_class target(mpz_class(1), mpz_class(1) << precision);
  for (int bits = precision + guard;; bits *= 2) {
    Interval re(0L), im(0L);
    for (int e = p.low_exp(); e <= p.high_exp(); ++e) {
      const mpz_class c = p.coeff(e);
      if (sgn(c) == 0) continue;
      mpq_class angle = s * e;
      const Interval cq{mpq_class(c)};
      re += cq * cos_2pi(angle, bits);
      im += cq * sin_2pi(angle, bits);
    }
    if (re.width() <= target && im.width() <= target) return {re, im};
  }
}

QPoly symmetric_reduce(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidInput("not palindromic up to units: zero polynomial");
  const auto& c = p.coeffs();
  const int w = p.width();
  for (int i = 0; i <= w; ++i)
    if (c[i] != c[w - i]) throw InvalidInput("not palindromic up to units: " + p.str());
  if (w % 2 != 0) throw InvalidInput("not palindromic up to units (odd width): " + p.str());
  const int d = w / 2;
  // t^j + t^-j = T_j(x) with T_0 = 2, T_1 = x, T_{j+1} = x T_j - T_{j-1}.
  QPoly q(mpq_class(c[d]));
  QPoly prev(2), cur = QPoly::x();
  for (int j = 1; j <= d; ++j) {
    q += cur * mpq_class(c[d + j]);
    QPoly next = QPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

}  // namespace ribbon
