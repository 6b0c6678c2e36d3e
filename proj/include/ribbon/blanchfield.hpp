#pragma once

#include <string>
#include <vector>

#include "ribbon/alex_module.hpp"

namespace ribbon {

/// An element num/den of Q(t)/Z[t^+-1].
///
/// den is primitive with lowest exponent 0 and positive leading coefficient.
/// num is the residue label in Q[t]/(den) of degree below deg den, coprime
/// to den. For primitive den the ring Z[t^+-1]/(den) embeds in Q[t]/(den),
/// so the label determines the class. Zero is num = 0, den = 1.
class FractionModRing {
 public:
  FractionModRing() : den_(1) {}
  /// num / den for Laurent num and den, den primitive up to units.
  static FractionModRing from_fraction(const LaurentPoly& num, const LaurentPoly& den);

  const QPoly& num() const { return num_; }
  const QPoly& den_poly() const { return den_; }
  LaurentPoly den() const;
  bool is_zero() const { return num_.is_zero(); }

  /// Image under t -> t^-1.
  FractionModRing conj() const;

  friend FractionModRing operator+(const FractionModRing& a, const FractionModRing& b);
  friend FractionModRing operator-(const FractionModRing& a) { return FractionModRing(-a.num_, a.den_); }
  friend FractionModRing operator-(const FractionModRing& a, const FractionModRing& b) { return a + (-b); }
  friend FractionModRing operator*(const LaurentPoly& p, const FractionModRing& a);
  friend bool operator==(const FractionModRing& a, const FractionModRing& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num / den (mod Z[t^±1])"
  std::string str() const;

 private:
  FractionModRing(QPoly label, QPoly den);
  QPoly num_;
  QPoly den_;
};

struct BlanchfieldForm {
  int size = 0;
  /// B(i, j) = ((t-1) (tV^T - V)^-1)(i, j).
  std::vector<std::vector<FractionModRing>> entries;
  const FractionModRing& operator()(int i, int j) const { return entries[i][j]; }
};

BlanchfieldForm blanchfield_matrix(const SeifertMatrix& V);
bool is_hermitian(const BlanchfieldForm& B);

/// conj(v)^T B w: conjugate-linear in v, linear in w.
FractionModRing bl_pair(const BlanchfieldForm& B, const ModElt& v, const ModElt& w);

bool bl_vanishes_on(const BlanchfieldForm& B, const Lagrangian& L);

}  // namespace ribbon
