#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ribbon {

/// Closed rational interval [lo, hi]. All arithmetic is exact on the
/// endpoints; `round_out` snaps the endpoints outward to a dyadic grid so
/// long computations keep bounded bit sizes.
class Interval {
 public:
  Interval() = default;
  Interval(const mpq_class& point) : lo_(point), hi_(point) {}  // NOLINT
  Interval(long point) : lo_(point), hi_(point) {}              // NOLINT
  Interval(const mpq_class& lo, const mpq_class& hi);

  const mpq_class& lo() const { return lo_; }
  const mpq_class& hi() const { return hi_; }
  mpq_class width() const { return hi_ - lo_; }
  mpq_class midpoint() const { return (lo_ + hi_) / 2; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const mpq_class& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool positive() const { return sgn(lo_) > 0; }
  bool negative() const { return sgn(hi_) < 0; }
  // +1 / -1 when the sign is certified, 0 otherwise.
  int certified_sign() const { return positive() ? 1 : (negative() ? -1 : 0); }

  /// Smallest absolute value over the interval (0 if it straddles 0).
  mpq_class mignitude() const;
  /// Largest absolute value over the interval.
  mpq_class magnitude() const;

  Interval& round_out(int bits);

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  // Requires b to exclude zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval hull(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  std::string str() const;

 private:
  mpq_class lo_;
  mpq_class hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& x);

struct ComplexInterval {
  Interval re;
  Interval im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  ComplexInterval(const Interval& r) : re(r), im(0L) {}  // NOLINT

  ComplexInterval conj() const { return {re, -im}; }
  /// Enclosure of |z|^2.
  Interval norm_sq() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  ComplexInterval& round_out(int bits) {
    re.round_out(bits);
    im.round_out(bits);
    return *this;
  }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const Interval& b);

// Certified transcendental enclosures backed by MPFR directed rounding.
// `bits` is the working precision; enclosure widths are O(2^-bits).
Interval pi_enclosure(int bits);
Interval cos_2pi(const mpq_class& s, int bits);
Interval sin_2pi(const mpq_class& s, int bits);
/// Enclosure of arccos(x)/(2 pi) for every x in `x` (requires x within [-1, 1]).
Interval acos_over_2pi(const Interval& x, int bits);

}  // namespace ribbon
