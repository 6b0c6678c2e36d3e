#include "ribbon/knot_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ribbon/error.hpp"
#include "ribbon/laurent_matrix.hpp"

namespace ribbon {

SeifertMatrix validate_seifert(const IntMatrix& V) {
  if (!V.is_square()) throw InvalidInput("not a Seifert matrix: not square");
  if (V.rows() % 2 != 0) throw InvalidInput("not a Seifert matrix: odd size " + std::to_string(V.rows()));
  mpz_class d = (V - V.transpose()).determinant();
  if (d != 1) throw InvalidInput("not a Seifert matrix: det(V - V^T) = " + d.get_str() + ", expected 1");
  return SeifertMatrix(V);
}

SeifertMatrix kn_seifert(long n) { return validate_seifert(IntMatrix::from_rows({{n, 2}, {1, 0}})); }

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const int n = a.size(), m = b.size();
  IntMatrix s(n + m, n + m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s(r, c) = a(r, c);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) s(n + r, n + c) = b(r, c);
  return validate_seifert(s);
}

std::string BraidWord::str() const {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(letters[i]);
  }
  return out;
}

void validate_braid(const BraidWord& w) {
  if (w.strands < 1) throw InvalidInput("braid needs at least one strand");
  for (int l : w.letters) {
    if (l == 0) throw InvalidInput("braid letter 0 is not a generator");
    if (std::abs(l) >= w.strands)
      throw InvalidInput("braid letter " + std::to_string(l) + " out of range for " + std::to_string(w.strands) +
                         " strands");
  }
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw InvalidInput("bad braid letter '" + tok + "'");
    w.letters.push_back(v);
  }
  int max_letter = 0;
  for (int l : w.letters) max_letter = std::max(max_letter, std::abs(l));
  w.strands = strands ? *strands : max_letter + 1;
  validate_braid(w);
  return w;
}

bool closure_is_knot(const BraidWord& w) {
  validate_braid(w);
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  int x = 0, steps = 0;
  do {
    x = perm[x];
    ++steps;
  } while (x != 0);
  return steps == w.strands;
}

BraidWord gamma_braid(int k) {
  if (k < 1) throw InvalidInput("gamma_k needs k >= 1");
  BraidWord w;
  w.strands = k + 1;
  for (int i = k; i >= 1; --i) w.letters.push_back(-i);
  for (int i = 1; i <= k; ++i) w.letters.push_back(-i);
  for (int i = k; i >= 1; --i) w.letters.push_back(-i);
  return w;
}

namespace {

void require_knot(const BraidWord& w) {
  if (!closure_is_knot(w)) throw InvalidInput("closure is a link, not a knot");
}

}  // namespace

SeifertMatrix braid_to_seifert(const BraidWord& w) {
  require_knot(w);
  struct Loop {
    int gen;
    int lo;  // heights of the two bands it runs through
    int hi;
  };
  const auto& L = w.letters;
  std::vector<Loop> loops;
  for (int g = 1; g < w.strands; ++g) {
    int prev = -1;
    for (int h = 0; h < static_cast<int>(L.size()); ++h) {
      if (std::abs(L[h]) != g) continue;
      if (prev >= 0) loops.push_back({g, prev, h});
      prev = h;
    }
  }
  auto sign = [&](int h) { return L[h] > 0 ? 1 : -1; };
  const int n = static_cast<int>(loops.size());
  IntMatrix V(n, n);
  for (int a = 0; a < n; ++a) {
    const Loop& x = loops[a];
    V(a, a) = -(sign(x.lo) + sign(x.hi)) / 2;
    for (int b = 0; b < n; ++b) {
      const Loop& y = loops[b];
      if (y.gen == x.gen && y.lo == x.hi) {
        // consecutive loops between the same discs meet at one band
        if (sign(x.hi) > 0) {
          V(a, b) = 1;
        } else {
          V(b, a) = -1;
        }
      }
      if (y.gen == x.gen + 1) {
        if (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) V(a, b) = 1;
        if (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi) V(a, b) = -1;
      }
    }
  }
  return validate_seifert(V);
}

namespace {

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

LaurentMatrix burau_generator(int m, int gen, bool inverse) {
  LaurentMatrix s(m, m);
  for (int i = 0; i < m; ++i) s(i, i) = 1;
  const int r = gen - 1;
  s(r, r) = LaurentPoly::monomial(-1, 1);
  if (r > 0) s(r, r - 1) = LaurentPoly::t();
  if (r + 1 < m) s(r, r + 1) = 1;
  if (!inverse) return s;
  // det = -t, a unit
  LaurentMatrix adj = s.adjugate();
  LaurentPoly inv_det = LaurentPoly::monomial(-1, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) adj(i, j) *= inv_det;
  return adj;
}

}  // namespace

LaurentPoly alexander_via_burau(const BraidWord& w) {
  require_knot(w);
  const int m = w.strands - 1;
  if (m == 0) return 1;
  LaurentMatrix B(m, m);
  for (int i = 0; i < m; ++i) B(i, i) = 1;
  for (int l : w.letters) B = multiply(B, burau_generator(m, std::abs(l), l < 0));
  LaurentMatrix IB(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) IB(i, j) = (i == j ? LaurentPoly(1) : LaurentPoly()) - B(i, j);
  LaurentPoly num = IB.determinant() * LaurentPoly(0, {1, -1});
  // 1 - t^n
  std::vector<mpz_class> den(w.strands + 1);
  den[0] = 1;
  den[w.strands] = -1;
  auto q = exact_divide(num, LaurentPoly(0, den));
  if (!q) throw std::logic_error("Burau determinant not divisible by 1 - t^n");
  return q->doteq_canonical();
}

namespace {

Metabolizer normalized(mpz_class a, mpz_class b) {
  mpz_class g = gcd(a, b);
  a /= g;
  b /= g;
  if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

}  // namespace

std::vector<Metabolizer> genus1_metabolizers(const SeifertMatrix& S) {
  if (S.size() != 2) throw InvalidInput("genus1_metabolizers needs a 2x2 Seifert matrix");
  const mpz_class A = S(0, 0), B = S(0, 1) + S(1, 0), C = S(1, 1);
  if (sgn(A) == 0 && sgn(B) == 0 && sgn(C) == 0) throw InvalidInput("Seifert form is identically zero");
  std::vector<Metabolizer> out;
  const mpz_class D = B * B - 4 * A * C;
  if (sgn(D) < 0 || !mpz_perfect_square_p(D.get_mpz_t())) return out;
  const mpz_class r = sqrt(D);
  if (sgn(A) == 0) {
    // y (B x + C y) = 0
    out.push_back(normalized(1, 0));
    if (sgn(B) != 0) out.push_back(normalized(C, -B));
  } else {
    // x / y = (-B +- r) / (2A)
    out.push_back(normalized(-B + r, 2 * A));
    if (sgn(r) != 0) out.push_back(normalized(-B - r, 2 * A));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidInput("matrix JSON must be an array of integer arrays");
  const int n = static_cast<int>(j.size());
  if (n == 0) return {};
  if (!j[0].is_array()) throw InvalidInput("matrix JSON must be an array of integer arrays");
  const int m = static_cast<int>(j[0].size());
  IntMatrix M(n, m);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != m) throw InvalidInput("matrix rows have unequal length");
    for (int c = 0; c < m; ++c) {
      const auto& e = j[r][c];
      if (e.is_number_integer()) {
        M(r, c) = mpz_class(std::to_string(e.get<long long>()));
      } else if (e.is_string()) {
        try {
          M(r, c) = mpz_class(e.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw InvalidInput("matrix entry is not an integer");
        }
      } else {
        throw InvalidInput("matrix entry is not an integer");
      }
    }
  }
  return M;
}

std::string matrix_json(const IntMatrix& m) { return m.str(); }

}  // namespace ribbon
