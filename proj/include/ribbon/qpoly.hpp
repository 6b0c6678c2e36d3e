#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ribbon {

/// Ordinary polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed; zero is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const mpq_class& c);  // NOLINT
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly monomial(const mpq_class& c, int deg);
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int d) const;
  const mpq_class& leading() const { return c_.back(); }

  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const { return sgn(eval(x)); }
  QPoly derivative() const;
  QPoly monic() const;
  /// Scaled to integer coefficients with content 1 and positive leading coefficient.
  QPoly primitive() const;
  bool has_integer_coeffs() const;
  /// Coefficients reversed: x^deg p(1/x).
  QPoly reversed() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string str(const char* var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
inline QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Yun square-free decomposition: returns (a_1, a_2, ...) with
/// p = c * prod a_i^i, each a_i square-free and monic, pairwise coprime.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// Cyclotomic polynomial Phi_n.
QPoly cyclotomic(int n);

}  // namespace ribbon
