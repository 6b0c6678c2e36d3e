#include "ribbon/laurent_matrix.hpp"

#include <stdexcept>

namespace ribbon {

LaurentMatrix LaurentMatrix::linear(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("linear pencil shape mismatch");
  LaurentMatrix m(A.rows(), A.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) m(r, c) = LaurentPoly(0, {-B(r, c), A(r, c)});
  return m;
}

LaurentMatrix LaurentMatrix::constant(const IntMatrix& A) {
  LaurentMatrix m(A.rows(), A.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) m(r, c) = LaurentPoly(A(r, c));
  return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

LaurentMatrix LaurentMatrix::conj() const {
  LaurentMatrix t = *this;
  for (auto& p : t.a_) p = p.conj();
  return t;
}

LaurentPoly LaurentMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  LaurentMatrix m = *this;
  LaurentPoly prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto q = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        m(i, j) = *q;
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return m(n - 1, n - 1) * LaurentPoly(sign);
}

LaurentMatrix LaurentMatrix::adjugate() const {
  if (rows_ != cols_) throw std::invalid_argument("adjugate of a non-square matrix");
  const int n = rows_;
  LaurentMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = (*this)(r, c);
        }
        ++rr;
      }
      LaurentPoly d = minor.determinant();
      adj(j, i) = (i + j) % 2 ? -d : d;
    }
  return adj;
}

LaurentVector LaurentMatrix::apply(const LaurentVector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  LaurentVector y(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

LaurentVector scale(const LaurentPoly& p, const LaurentVector& v) {
  LaurentVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = p * v[i];
  return r;
}

LaurentVector add(const LaurentVector& a, const LaurentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  LaurentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LaurentVector sub(const LaurentVector& a, const LaurentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  LaurentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_vector(const LaurentVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

std::string vector_str(const LaurentVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace ribbon
