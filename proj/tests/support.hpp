#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <random>

#include "ribbon/classifier.hpp"

namespace testing_support {

using namespace ribbon;

// S + E with S symmetric and E the standard skew part, then a random
// signed permutation congruence P V P^T.
inline SeifertMatrix random_seifert(std::mt19937& rng, int genus, int range) {
  const int n = 2 * genus;
  std::uniform_int_distribution<int> coeff(-range, range);
  IntMatrix V(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int c = coeff(rng);
      V(i, j) = c;
      V(j, i) = c;
    }
  for (int g = 0; g < genus; ++g) V(2 * g, 2 * g + 1) += 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sign(n);
  for (auto& s : sign) s = rng() % 2 ? 1 : -1;
  IntMatrix W(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) W(i, j) = sign[i] * sign[j] * V(perm[i], perm[j]);
  return validate_seifert(W);
}

inline BraidWord random_knot_braid(std::mt19937& rng) {
  for (;;) {
    BraidWord w;
    w.strands = 2 + static_cast<int>(rng() % 3);
    const int len = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (w.strands - 1));
      w.letters.push_back(rng() % 2 ? g : -g);
    }
    if (closure_is_knot(w)) return w;
  }
}

struct FloatSignature {
  int value = 0;
  double min_abs_eigenvalue = 0;
};

// Eigenvalue count of (1 - w) V + (1 - conj w) V^T in double precision.
inline FloatSignature float_signature(const SeifertMatrix& V, double s) {
  const int n = V.size();
  const std::complex<double> w = std::polar(1.0, 2 * M_PI * s);
  Eigen::MatrixXcd H(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H(i, j) = (1.0 - w) * V(i, j).get_d() + (1.0 - std::conj(w)) * V(j, i).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  FloatSignature out;
  out.min_abs_eigenvalue = INFINITY;
  for (int i = 0; i < n; ++i) {
    const double e = es.eigenvalues()(i);
    out.value += e > 0 ? 1 : -1;
    out.min_abs_eigenvalue = std::min(out.min_abs_eigenvalue, std::abs(e));
  }
  return out;
}

inline mpq_class random_s(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(1, 999999);
  mpq_class s(num(rng), 1000000);
  s.canonicalize();
  return s;
}

}  // namespace testing_support
