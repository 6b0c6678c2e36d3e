#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/exact_linalg.hpp"
#include "ribbon/knot_io.hpp"
#include "ribbon/laurent_matrix.hpp"

namespace ribbon {

/// Coordinates with respect to the presentation generators.
using ModElt = LaurentVector;

/// det(tV - V^T) with lowest exponent 0 and value +1 at t = 1.
LaurentPoly alexander_polynomial(const SeifertMatrix& V);

/// (t-2)(2t-1) = 2t^2-5t+2.
LaurentPoly kn_delta();

/// The module Z[t^+-1]^n / A Z[t^+-1]^n with A = tV^T - V, so the relations
/// are the rows of tV - V^T. Determinant and adjugate are cached.
class AlexanderPresentation {
 public:
  AlexanderPresentation() = default;
  explicit AlexanderPresentation(const SeifertMatrix& V);

  int size() const { return A_.rows(); }
  const LaurentMatrix& relations() const { return A_; }
  const LaurentPoly& det() const { return det_; }

  /// Exact: x lies in the image of A over Z[t^+-1].
  bool is_zero(const ModElt& x) const;
  bool equal(const ModElt& x, const ModElt& y) const { return is_zero(sub(x, y)); }

  /// Searches for Laurent coefficients p_i on the window [-W, W] with
  /// x - sum p_i g_i in the image of A. A true answer is a certificate;
  /// false means no witness exists on the window.
  bool in_span(const ModElt& x, const std::vector<ModElt>& gens) const;
  /// The window W used for the operands above.
  int window_for(const ModElt& x, const std::vector<ModElt>& gens) const;

 private:
  LaurentMatrix A_;
  LaurentMatrix adj_;
  LaurentPoly det_ = 1;
};

enum class ModuleKind { CyclicT2T1, SplitT2T1, Other };
std::string kind_name(ModuleKind k);
ModuleKind kind_from_name(const std::string& s);

struct ModuleFacts {
  LaurentPoly delta;
  ModuleKind kind = ModuleKind::Other;
  /// Cyclic: {g}. Split: {u, v} with (t-2)u = 0 and (2t-1)v = 0.
  std::vector<ModElt> generators;
  AlexanderPresentation presentation;
  /// Number of candidates examined by the generator search.
  long candidates_tried = 0;
};

/// Coefficient bound and width used by the generator search.
struct GeneratorSearchBound {
  int max_coeff = 4;
  int max_width = 2;
};

ModuleFacts module_type(const SeifertMatrix& V, GeneratorSearchBound bound = {});

enum class LagFactor { TMinus2, TwoTMinus1 };
LaurentPoly factor_poly(LagFactor f);
std::string factor_name(LagFactor f);
LagFactor factor_from_name(const std::string& s);
/// P1 for the t-2 side, P2 for the 2t-1 side.
std::string lagrangian_label(LagFactor f);

struct Lagrangian {
  ModElt generator;
  /// The linear factor that annihilates the generator.
  LagFactor factor = LagFactor::TMinus2;
  friend bool operator==(const Lagrangian&, const Lagrangian&) = default;
};

/// Empty for kind Other; otherwise {P1, P2} in that order.
std::vector<Lagrangian> lagrangian_set(const ModuleFacts& facts);

/// Nonzero generators killed by different factors span different
/// submodules: the module has no Z-torsion and 3 = (2t-1) - 2(t-2).
bool lagrangians_distinct(const ModuleFacts& facts, const Lagrangian& a, const Lagrangian& b);

/// Z[t^+-1]/(f, g) for linear f and g.
AbelianGroup ext1_linear_pair(const LaurentPoly& f, const LaurentPoly& g);

/// The image V m in presentation coordinates.
ModElt metabolizer_vector(const SeifertMatrix& V, const Metabolizer& m);

/// The lagrangian of `facts` containing V m.
Lagrangian metabolizer_image(const SeifertMatrix& V, const Metabolizer& m, const ModuleFacts& facts);

}  // namespace ribbon
