#include "ribbon/exact_linalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ribbon/error.hpp"

namespace ribbon {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols()) throw InvalidInput("ragged matrix rows");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

mpz_class IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(m(k, k)) == 0) {
      int p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  IntMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  IntMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<mpz_class> y(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << (*this)(r, c).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.str(); }

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, int dst, int src, const mpz_class& q) {
  for (int c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, int dst, int src, const mpz_class& q) {
  for (int r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace

SnfResult snf(const IntMatrix& A) {
  const int m = A.rows(), n = A.cols();
  IntMatrix M = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix W = IntMatrix::identity(n);
  int rank = 0;
  for (int k = 0; k < std::min(m, n); ++k) {
    bool found = false;
    while (true) {
      int pr = -1, pc = -1;
      for (int i = k; i < m; ++i)
        for (int j = k; j < n; ++j)
          if (sgn(M(i, j)) != 0 && (pr < 0 || mpz_cmpabs(M(i, j).get_mpz_t(), M(pr, pc).get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr < 0) break;
      found = true;
      swap_rows(M, k, pr);
      swap_rows(U, k, pr);
      swap_cols(M, k, pc);
      swap_cols(W, k, pc);

      bool clean = true;
      for (int i = k + 1; i < m; ++i) {
        if (sgn(M(i, k)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M(i, k).get_mpz_t(), M(k, k).get_mpz_t());
        row_axpy(M, i, k, q);
        row_axpy(U, i, k, q);
        if (sgn(M(i, k)) != 0) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (sgn(M(k, j)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M(k, j).get_mpz_t(), M(k, k).get_mpz_t());
        col_axpy(M, j, k, q);
        col_axpy(W, j, k, q);
        if (sgn(M(k, j)) != 0) clean = false;
      }
      if (!clean) continue;

      int bad = -1;
      for (int i = k + 1; i < m && bad < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (!mpz_divisible_p(M(i, j).get_mpz_t(), M(k, k).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(M, k, bad, -1);
      row_axpy(U, k, bad, -1);
    }
    if (!found) break;
    if (sgn(M(k, k)) < 0) {
      for (int c = 0; c < n; ++c) M(k, c) = -M(k, c);
      for (int c = 0; c < m; ++c) U(k, c) = -U(k, c);
    }
    ++rank;
  }
  return {std::move(M), std::move(U), std::move(W), rank};
}

mpz_class AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  mpz_class o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::str() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank == 1) add("Z");
  if (free_rank > 1) add("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) add("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

AbelianGroup finite_quotient_group(const IntMatrix& rel) {
  AbelianGroup g;
  if (rel.cols() == 0) {
    g.free_rank = rel.rows();
    return g;
  }
  SnfResult r = snf(rel);
  for (int i = 0; i < rel.rows(); ++i) {
    mpz_class d = i < rel.cols() ? r.S(i, i) : mpz_class(0);
    if (sgn(d) == 0) {
      ++g.free_rank;
    } else if (d > 1) {
      g.torsion.push_back(d);
    }
  }
  return g;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& A, const std::vector<mpz_class>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  SnfResult r = snf(A);
  std::vector<mpz_class> c = r.U.apply(b);
  std::vector<mpz_class> y(A.cols());
  for (int i = 0; i < A.rows(); ++i) {
    if (i < r.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), r.S(i, i).get_mpz_t())) return std::nullopt;
      y[i] = c[i] / r.S(i, i);
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return r.W.apply(y);
}

HermitianIntervalMatrix::HermitianIntervalMatrix(int n)
    : n_(n), diag_(n, Interval(0L)), upper_(static_cast<size_t>(n) * (n > 0 ? n - 1 : 0) / 2) {}

int HermitianIntervalMatrix::upper_index(int i, int j) const {
  // row-major strict upper triangle
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void HermitianIntervalMatrix::set(int i, int j, const ComplexInterval& v) {
  if (i == j) throw std::invalid_argument("use set_diag for diagonal entries");
  if (i < j) {
    upper_[upper_index(i, j)] = v;
  } else {
    upper_[upper_index(j, i)] = v.conj();
  }
}

ComplexInterval HermitianIntervalMatrix::get(int i, int j) const {
  if (i == j) return ComplexInterval(diag_[i]);
  if (i < j) return upper_[upper_index(i, j)];
  return upper_[upper_index(j, i)].conj();
}

namespace {

mpq_class magnitude(const ComplexInterval& z) { return z.re.magnitude() + z.im.magnitude(); }

}  // namespace

std::optional<int> hermitian_signature(const HermitianIntervalMatrix& H, int bits) {
  const int n = H.size();
  std::vector<std::vector<ComplexInterval>> a(n, std::vector<ComplexInterval>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = H.get(i, j);

  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  const mpq_class alpha(16, 25);
  int signature = 0;

  while (!active.empty()) {
    int best = -1;
    mpq_class best_mig = 0, max_off = 0;
    for (int i : active) {
      mpq_class mig = a[i][i].re.mignitude();
      if (best < 0 || mig > best_mig) {
        best = i;
        best_mig = mig;
      }
      for (int j : active)
        if (j != i) max_off = std::max(max_off, magnitude(a[i][j]));
    }

    int p = -1, q = -1;
    Interval det;
    if (sgn(best_mig) > 0 && best_mig >= alpha * max_off) {
      p = best;
    } else {
      // 2x2 pivot on the pair with the largest certified off-diagonal.
      mpq_class best_lo = -1;
      for (size_t x = 0; x < active.size(); ++x)
        for (size_t y = x + 1; y < active.size(); ++y) {
          int i = active[x], j = active[y];
          Interval d = a[i][i].re * a[j][j].re - a[i][j].norm_sq();
          if (d.certified_sign() == 0) continue;
          mpq_class lo = a[i][j].norm_sq().lo();
          if (lo > best_lo) {
            best_lo = lo;
            p = i;
            q = j;
            det = d;
          }
        }
      if (p < 0) {
        if (sgn(best_mig) > 0) {
          p = best;
        } else {
          return std::nullopt;
        }
      }
    }

    std::vector<int> rest;
    for (int i : active)
      if (i != p && i != q) rest.push_back(i);

    if (q < 0) {
      const Interval d = a[p][p].re;
      signature += d.certified_sign();
      const Interval inv = Interval(1L) / d;
      for (size_t x = 0; x < rest.size(); ++x) {
        int i = rest[x];
        a[i][i].re -= a[i][p].norm_sq() * inv;
        a[i][i].re.round_out(bits);
        a[i][i].im = Interval(0L);
        for (size_t y = x + 1; y < rest.size(); ++y) {
          int j = rest[y];
          a[i][j] = a[i][j] - a[i][p] * a[p][j] * inv;
          a[i][j].round_out(bits);
          a[j][i] = a[i][j].conj();
        }
      }
    } else {
      if (det.certified_sign() > 0) {
        signature += 2 * (a[p][p].re + a[q][q].re).certified_sign();
      }
      const Interval inv = Interval(1L) / det;
      const Interval& ap = a[p][p].re;
      const Interval& cq = a[q][q].re;
      const ComplexInterval b = a[p][q];
      auto update = [&](int i, int j) {
        ComplexInterval t = a[i][p] * cq * a[p][j] - a[i][p] * b * a[q][j] - a[i][q] * b.conj() * a[p][j] +
                            a[i][q] * ap * a[q][j];
        return t * inv;
      };
      for (size_t x = 0; x < rest.size(); ++x) {
        int i = rest[x];
        for (size_t y = x; y < rest.size(); ++y) {
          int j = rest[y];
          ComplexInterval v = a[i][j] - update(i, j);
          v.round_out(bits);
          if (i == j) {
            a[i][i] = ComplexInterval(v.re);
          } else {
            a[i][j] = v;
            a[j][i] = v.conj();
          }
        }
      }
    }
    active = std::move(rest);
  }
  return signature;
}

int hermitian_signature_certified(const std::function<HermitianIntervalMatrix(int)>& enclose, int start_bits,
                                  int max_bits) {
  for (int bits = start_bits; bits <= max_bits; bits *= 2) {
    HermitianIntervalMatrix H = enclose(bits);
    if (auto s = hermitian_signature(H, bits + 16)) return *s;
  }
  throw CertificationError("cannot certify (possible singularity)");
}

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& s) {
  std::vector<QPoly> seq{s, s.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  return seq;
}

int variations(const std::vector<QPoly>& seq, const mpq_class& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

QPoly strip_root(const QPoly& f, const mpq_class& r) {
  if (sgn(f.eval(r)) != 0) return f;
  return divmod(f, QPoly::x() - QPoly(r)).first;
}

}  // namespace

RootIsolation isolate_real_roots(const QPoly& q, const mpq_class& lo, const mpq_class& hi) {
  RootIsolation out;
  if (q.is_zero()) throw InvalidInput("isolate_real_roots: zero polynomial");
  if (q.degree() <= 0 || lo >= hi) return out;

  std::vector<QPoly> factors = squarefree_decomposition(q);
  QPoly s(1);
  for (auto& f : factors) {
    f = strip_root(strip_root(f, lo), hi);
    s = s * f;
  }
  if (s.degree() <= 0) return out;

  const auto seq = sturm_sequence(s);
  std::vector<Interval> found;
  std::function<void(const mpq_class&, const mpq_class&, int, int)> split =
      [&](const mpq_class& a, const mpq_class& b, int va, int vb) {
        int count = va - vb;
        if (count <= 0) return;
        if (count == 1) {
          found.emplace_back(a, b);
          return;
        }
        mpq_class m = (a + b) / 2;
        if (s.sign_at(m) != 0) {
          int vm = variations(seq, m);
          split(a, m, va, vm);
          split(m, b, vm, vb);
          return;
        }
        mpq_class delta = (b - a) / 4;
        while (s.sign_at(m - delta) == 0 || s.sign_at(m + delta) == 0 ||
               variations(seq, m - delta) - variations(seq, m + delta) != 1)
          delta /= 2;
        int vl = variations(seq, m - delta), vr = variations(seq, m + delta);
        split(a, m - delta, va, vl);
        found.emplace_back(m);
        split(m + delta, b, vr, vb);
      };
  split(lo, hi, variations(seq, lo), variations(seq, hi));

  for (const auto& iv : found) {
    IsolatedRoot r;
    r.iv = iv;
    for (size_t i = 0; i < factors.size(); ++i) {
      const QPoly& f = factors[i];
      if (f.degree() <= 0) continue;
      bool here = iv.is_point() ? f.sign_at(iv.lo()) == 0 : f.sign_at(iv.lo()) * f.sign_at(iv.hi()) < 0;
      if (here) {
        r.multiplicity = static_cast<int>(i) + 1;
        r.factor = f;
        break;
      }
    }
    if (r.factor.is_zero()) throw std::logic_error("isolate_real_roots: root without a factor");
    out.roots.push_back(std::move(r));
  }
  return out;
}

void refine_root(IsolatedRoot& r, const mpq_class& width) {
  if (sgn(width) <= 0) throw std::invalid_argument("refine_root: width must be positive");
  while (!r.iv.is_point() && r.iv.width() > width) {
    mpq_class a = r.iv.lo(), b = r.iv.hi();
    mpq_class m = (a + b) / 2;
    int sm = r.factor.sign_at(m);
    if (sm == 0) {
      r.iv = Interval(m);
    } else if (r.factor.sign_at(a) * sm < 0) {
      r.iv = Interval(a, m);
    } else {
      r.iv = Interval(m, b);
    }
  }
}

}  // namespace ribbon
