#include "ribbon/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ribbon {

namespace {

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(int bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpq_class to_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

mpq_class floor_dyadic(const mpq_class& x, int bits) {
  mpz_class scaled = x.get_num();
  scaled <<= bits;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  mpq_class r(f, mpz_class(1) << bits);
  r.canonicalize();
  return r;
}

mpq_class ceil_dyadic(const mpq_class& x, int bits) {
  mpz_class scaled = x.get_num();
  scaled <<= bits;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  mpq_class r(c, mpz_class(1) << bits);
  r.canonicalize();
  return r;
}

// cos(2 pi s) for s in [0, 1/2], where cos(2 pi .) is decreasing.
Interval cos_2pi_half(const mpq_class& s, int bits) {
  Mpfr pi_lo(bits), pi_hi(bits), x_lo(bits), x_hi(bits), c(bits);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpq_class two_s = 2 * s;
  mpfr_mul_q(x_lo.get(), pi_lo.get(), two_s.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(x_hi.get(), pi_hi.get(), two_s.get_mpq_t(), MPFR_RNDU);

  mpq_class upper = 1;
  if (mpfr_sgn(x_lo.get()) > 0) {
    mpfr_cos(c.get(), x_lo.get(), MPFR_RNDU);
    upper = std::min(mpq_class(1), c.to_q());
  }
  mpq_class lower = -1;
  if (mpfr_cmp(x_hi.get(), pi_lo.get()) < 0) {
    mpfr_cos(c.get(), x_hi.get(), MPFR_RNDD);
    lower = std::max(mpq_class(-1), c.to_q());
  }
  return Interval(lower, upper);
}

mpq_class frac(const mpq_class& s) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return s - f;
}

}  // namespace

Interval::Interval(const mpq_class& lo, const mpq_class& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

mpq_class Interval::mignitude() const {
  if (contains_zero()) return 0;
  return positive() ? lo_ : mpq_class(-hi_);
}

mpq_class Interval::magnitude() const { return std::max(abs(lo_), abs(hi_)); }

Interval& Interval::round_out(int bits) {
  if (lo_.get_den() != 1 || hi_.get_den() != 1) {
    lo_ = floor_dyadic(lo_, bits);
    hi_ = ceil_dyadic(hi_, bits);
  }
  return *this;
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  mpq_class lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  mpq_class a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval division by an interval containing 0");
  return a * Interval(1 / b.hi_, 1 / b.lo_);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::string Interval::str() const {
  return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.str(); }

Interval ComplexInterval::norm_sq() const {
  auto sq = [](const Interval& x) {
    mpq_class m = x.mignitude(), M = x.magnitude();
    return Interval(m * m, M * M);
  };
  return sq(re) + sq(im);
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const ComplexInterval& a, const Interval& b) {
  return {a.re * b, a.im * b};
}

Interval pi_enclosure(int bits) {
  Mpfr lo(bits), hi(bits);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(lo.to_q(), hi.to_q());
}

Interval cos_2pi(const mpq_class& s, int bits) {
  mpq_class r = frac(s);
  // Exact values at multiples of a quarter turn.
  const mpq_class quarter = 4 * r;
  if (quarter.get_den() == 1) {
    long q = quarter.get_num().get_si();
    static const long table[4] = {1, 0, -1, 0};
    return Interval(table[q]);
  }
  if (r > mpq_class(1, 2)) r = 1 - r;
  return cos_2pi_half(r, bits);
}

Interval sin_2pi(const mpq_class& s, int bits) {
  return cos_2pi(mpq_class(1, 4) - s, bits);
}

Interval acos_over_2pi(const Interval& x, int bits) {
  if (x.lo() < -1 || x.hi() > 1) throw std::domain_error("acos_over_2pi: argument outside [-1, 1]");
  Mpfr a(bits), b(bits), pi_lo(bits), pi_hi(bits), q(bits);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(pi_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(pi_hi.get(), pi_hi.get(), 1, MPFR_RNDU);

  // arccos is decreasing: the upper end of x gives the lower angle.
  mpfr_set_q(q.get(), x.hi().get_mpq_t(), MPFR_RNDU);
  if (mpfr_cmp_si(q.get(), 1) > 0) mpfr_set_si(q.get(), 1, MPFR_RNDN);
  mpfr_acos(a.get(), q.get(), MPFR_RNDD);
  mpfr_div(a.get(), a.get(), pi_hi.get(), MPFR_RNDD);

  mpfr_set_q(q.get(), x.lo().get_mpq_t(), MPFR_RNDD);
  if (mpfr_cmp_si(q.get(), -1) < 0) mpfr_set_si(q.get(), -1, MPFR_RNDN);
  mpfr_acos(b.get(), q.get(), MPFR_RNDU);
  mpfr_div(b.get(), b.get(), pi_lo.get(), MPFR_RNDU);

  mpq_class lo = std::max(mpq_class(0), a.to_q());
  mpq_class hi = std::min(mpq_class(1, 2), b.to_q());
  return Interval(lo, hi);
}

}  // namespace ribbon
