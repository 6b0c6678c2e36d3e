#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/interval.hpp"
#include "ribbon/qpoly.hpp"

namespace ribbon {

/// Integer Laurent polynomial sum_k coeffs[k] * t^(low_exp + k).
///
/// Always stored canonically: the zero polynomial has no coefficients and
/// low_exp 0; otherwise the first and last coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);                  // NOLINT
  LaurentPoly(const mpz_class& c);      // NOLINT
  LaurentPoly(int low_exp, std::vector<mpz_class> coeffs);

  static LaurentPoly monomial(const mpz_class& c, int exp);
  static LaurentPoly t() { return monomial(1, 1); }
  /// Parses the text form, e.g. "2*t^2-5*t+2" or "t^-1-2".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  int low_exp() const { return low_exp_; }
  int high_exp() const { return low_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high_exp - low_exp; 0 for monomials and for zero.
  int width() const { return is_zero() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int exp) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& trailing() const { return coeffs_.front(); }
  mpz_class content() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// p(t^-1).
  LaurentPoly conj() const;
  /// t^k * p.
  LaurentPoly shift(int k) const;
  /// The canonical representative of the class of p up to units +-t^k:
  /// lowest exponent 0 and positive leading coefficient.
  LaurentPoly doteq_canonical() const;

  mpq_class eval(const mpq_class& x) const;
  /// Coefficients as an ordinary polynomial after shifting the lowest term to t^0.
  QPoly shifted_to_poly() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_exp_ == b.low_exp_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  void canonicalize();

  int low_exp_ = 0;
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// True iff p = +-t^k q for some integer k.
bool doteq_equal(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient p / q in Z[t^+-1], or nullopt when q does not divide p.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q);

/// |Res(p, q)| of the ordinary-polynomial representatives. Throws
/// InvalidInput for a zero argument.
mpz_class resultant(const LaurentPoly& p, const LaurentPoly& q);

/// Enclosure of p(e^{2 pi i s}).
struct CircleValue {
  Interval re;
  Interval im;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  mpq_class width() const { return std::max(re.width(), im.width()); }
};

/// Certified enclosure of p(e^{2 pi i s}) whose real and imaginary parts
/// each have width at most 2^-precision.
CircleValue eval_circle(const LaurentPoly& p, const mpq_class& s, int precision);

/// For p with p(t) = t^{2d} p(t^-1) after shifting (even width 2d), returns
/// the integer polynomial q with q(t + t^-1) = t^-d p(t) (p shifted so its
/// lowest exponent is 0). Throws InvalidInput otherwise.
QPoly symmetric_reduce(const LaurentPoly& p);

}  // namespace ribbon
