#pragma once

#include <string>
#include <vector>

#include "ribbon/exact_linalg.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

using LaurentVector = std::vector<LaurentPoly>;

/// Square or rectangular matrix over Z[t^+-1].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  /// t * A - B. Requires equal shapes.
  static LaurentMatrix linear(const IntMatrix& A, const IntMatrix& B);
  static LaurentMatrix constant(const IntMatrix& A);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const LaurentPoly& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  LaurentMatrix transpose() const;
  LaurentMatrix conj() const;
  LaurentPoly determinant() const;
  /// adj(A) with A * adj(A) = det(A) * I.
  LaurentMatrix adjugate() const;
  LaurentVector apply(const LaurentVector& x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> a_;
};

LaurentVector scale(const LaurentPoly& p, const LaurentVector& v);
LaurentVector add(const LaurentVector& a, const LaurentVector& b);
LaurentVector sub(const LaurentVector& a, const LaurentVector& b);
bool is_zero_vector(const LaurentVector& v);
std::string vector_str(const LaurentVector& v);

}  // namespace ribbon
