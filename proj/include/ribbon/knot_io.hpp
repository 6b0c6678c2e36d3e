#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/exact_linalg.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

/// Square integer matrix V of even size with det(V - V^T) = 1.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // the unknot
  const IntMatrix& V() const { return v_; }
  int size() const { return v_.rows(); }
  int genus() const { return v_.rows() / 2; }
  const mpz_class& operator()(int r, int c) const { return v_(r, c); }
  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

 private:
  friend SeifertMatrix validate_seifert(const IntMatrix& V);
  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {}
  IntMatrix v_;
};

/// Throws InvalidInput "not a Seifert matrix: <reason>".
SeifertMatrix validate_seifert(const IntMatrix& V);

/// ((n, 2), (1, 0)).
SeifertMatrix kn_seifert(long n);

/// Block-diagonal sum, the Seifert matrix of a connected sum.
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  std::string str() const;
};

/// Checks letter bounds; throws InvalidInput.
void validate_braid(const BraidWord& w);
/// Whitespace-separated signed integers; strands defaults to max|letter| + 1.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
/// True when the closure has a single component.
bool closure_is_knot(const BraidWord& w);

/// (s_k^-1 ... s_1^-1)(s_1^-1 ... s_k^-1)(s_k^-1 ... s_1^-1) on k+1 strands.
BraidWord gamma_braid(int k);

/// Seifert matrix of the surface built by Seifert's algorithm on the closed
/// braid diagram: one disc per strand, one band per letter.
SeifertMatrix braid_to_seifert(const BraidWord& w);

/// Alexander polynomial from the reduced Burau representation, as the
/// canonical representative up to units.
LaurentPoly alexander_via_burau(const BraidWord& w);

/// Primitive isotropic vector of a genus-1 Seifert form, first nonzero entry positive.
struct Metabolizer {
  mpz_class a;
  mpz_class b;
  friend bool operator==(const Metabolizer&, const Metabolizer&) = default;
  friend auto operator<=>(const Metabolizer& x, const Metabolizer& y) {
    if (x.a != y.a) return x.a < y.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.b != y.b) return x.b < y.b ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  std::string str() const { return "(" + a.get_str() + "," + b.get_str() + ")"; }
};

/// All isotropic lines of v^T V v for a 2x2 Seifert matrix, sorted.
std::vector<Metabolizer> genus1_metabolizers(const SeifertMatrix& V);

/// JSON array of integer arrays.
IntMatrix parse_matrix_json(std::string_view text);
std::string matrix_json(const IntMatrix& m);

}  // namespace ribbon
