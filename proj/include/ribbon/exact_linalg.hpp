#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/interval.hpp"
#include "ribbon/qpoly.hpp"

namespace ribbon {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  /// Rows must all have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  mpz_class& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;
  /// Fraction-free Gaussian elimination. Requires a square matrix.
  mpz_class determinant() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix W;
  /// Number of nonzero diagonal entries.
  int rank = 0;
};

/// Smith normal form S = U * A * W, U and W unimodular, diagonal entries
/// nonnegative with s_1 | s_2 | ... (zeros last).
SnfResult snf(const IntMatrix& A);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // d_1 | d_2 | ..., each > 1

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Order of a finite group; 0 when free_rank > 0.
  mpz_class order() const;
  std::string str() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Group with one generator per row of `rel` and the columns of `rel` as relations.
AbelianGroup finite_quotient_group(const IntMatrix& rel);

/// An integer solution x of A x = b, or nullopt if none exists.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& A, const std::vector<mpz_class>& b);

/// Hermitian matrix of interval enclosures; only the real diagonal and the
/// strict upper triangle are stored, so Hermitian symmetry holds by construction.
class HermitianIntervalMatrix {
 public:
  HermitianIntervalMatrix() = default;
  explicit HermitianIntervalMatrix(int n);

  int size() const { return n_; }
  const Interval& diag(int i) const { return diag_[i]; }
  void set_diag(int i, Interval v) { diag_[i] = std::move(v); }
  /// Sets entry (i, j); entry (j, i) becomes its conjugate. Requires i != j.
  void set(int i, int j, const ComplexInterval& v);
  ComplexInterval get(int i, int j) const;

 private:
  int upper_index(int i, int j) const;
  int n_ = 0;
  std::vector<Interval> diag_;
  std::vector<ComplexInterval> upper_;
};

/// Signature of every Hermitian matrix enclosed by H, when a pivoted
/// LDL* decomposition certifies all pivot signs; nullopt otherwise.
/// `bits` is the dyadic grid used to keep intermediate endpoints small.
std::optional<int> hermitian_signature(const HermitianIntervalMatrix& H, int bits = 256);

/// Calls `enclose(bits)` with bits = start_bits, 2*start_bits, ... up to
/// max_bits until the signature is certified. Throws CertificationError
/// "cannot certify (possible singularity)" when the budget runs out.
int hermitian_signature_certified(const std::function<HermitianIntervalMatrix(int)>& enclose,
                                  int start_bits = 64, int max_bits = 4096);

struct IsolatedRoot {
  /// Either a single exact rational root or an interval (lo, hi) with
  /// non-root endpoints containing exactly one root.
  Interval iv;
  int multiplicity = 1;
  /// Square-free factor of the input that has this root and changes sign across iv.
  QPoly factor;
};

struct RootIsolation {
  std::vector<IsolatedRoot> roots;  // sorted, pairwise disjoint
};

/// Sturm isolation of the distinct real roots of q in the open interval (lo, hi).
RootIsolation isolate_real_roots(const QPoly& q, const mpq_class& lo, const mpq_class& hi);

/// Bisects until the width of r.iv is at most `width`.
void refine_root(IsolatedRoot& r, const mpq_class& width);

}  // namespace ribbon
