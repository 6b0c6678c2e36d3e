#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ribbon/exact_linalg.hpp"
#include "ribbon/knot_io.hpp"

namespace ribbon {

struct PrecisionBudget {
  int start_bits = 64;
  int max_bits = 4096;
};

/// True when e^{2 pi i s} is a root of delta, decided exactly: for s = p/q in
/// lowest terms this happens iff the cyclotomic polynomial Phi_q divides delta.
bool is_jump_point(const LaurentPoly& delta, const mpq_class& s);

/// Enclosure of (1-w)V + (1-conj w)V^T at w = e^{2 pi i s}.
HermitianIntervalMatrix lt_matrix(const SeifertMatrix& V, const mpq_class& s, int bits);

/// Levine-Tristram signature at s in (0, 1). Throws InvalidInput at a jump
/// point and CertificationError when the budget runs out.
int signature_at(const SeifertMatrix& V, const mpq_class& s, PrecisionBudget budget = {});

/// Piecewise constant signature function on the circle, s in [0, 1).
struct SignatureFunction {
  /// x = 2cos(2 pi s) roots of the symmetrized Alexander polynomial, one per
  /// jump in (0, 1/2), ordered by increasing s.
  std::vector<IsolatedRoot> x_roots;
  /// Isolating s-intervals of all jumps in (0, 1), sorted and disjoint.
  std::vector<Interval> jumps;
  /// One value per open arc: jumps.size() + 1 entries, from s = 0 to s = 1.
  std::vector<int> arc_values;
  /// Point at which each arc value was certified.
  std::vector<mpq_class> arc_samples;

  /// Value at a non-jump s; at a jump the average of the one-sided limits.
  double value_at(const mpq_class& s) const;
};

SignatureFunction signature_function(const SeifertMatrix& V, PrecisionBudget budget = {});

enum class Rho0Sign { Positive, Negative, Zero, Undetermined };
std::string rho0_sign_name(Rho0Sign s);
Rho0Sign rho0_sign_from_name(const std::string& s);

struct Rho0Result {
  /// Encloses the integral of the signature function, circle of total measure 1.
  Interval enclosure;
  Rho0Sign sign = Rho0Sign::Undetermined;
  friend bool operator==(const Rho0Result&, const Rho0Result&) = default;
};

Rho0Result rho0(const SeifertMatrix& V, PrecisionBudget budget = {});
Rho0Result rho0_of(SignatureFunction sf, PrecisionBudget budget = {});

/// {"jumps": [[lo, hi], ...], "arcs": [{"s_interval": [lo, hi], "value": v}, ...]}
nlohmann::json signature_json(const SignatureFunction& sf);

}  // namespace ribbon
