#include "ribbon/classifier.hpp"

#include <future>
#include <sstream>

#include "ribbon/error.hpp"

namespace ribbon {

std::string Derivative::str() const {
  switch (kind) {
    case DerivativeKind::Unknot:
      return "unknot";
    case DerivativeKind::Braid:
      return "braid:" + braid.str();
    case DerivativeKind::Unknown:
      break;
  }
  return "unknown";
}

Derivative parse_derivative(const std::string& text, std::optional<int> strands) {
  if (text == "unknot") return Derivative::unknot();
  if (text == "unknown") return Derivative::unknown();
  if (text.rfind("braid:", 0) == 0) {
    BraidWord w = parse_braid(text.substr(6), strands);
    if (!closure_is_knot(w)) throw InvalidInput("derivative braid '" + w.str() + "': closure is a link, not a knot");
    return Derivative::from_braid(std::move(w));
  }
  throw InvalidInput("derivative must be unknot, unknown or braid:<letters>, got '" + text + "'");
}

DerivativeSpec kn_derivatives(long n) {
  DerivativeSpec d;
  d.p1 = Derivative::unknot();
  if (n % 3 == 0) {
    const long k = n / 3;
    if (k == 0 || k == -1) {
      d.p2 = Derivative::unknot();
    } else if (k > 0) {
      d.p2 = Derivative::from_braid(gamma_braid(static_cast<int>(k)));
    } else {
      d.p2 = Derivative::from_braid(gamma_braid(static_cast<int>(-k - 1)));
    }
  } else if (n == -1 || n == -2) {
    d.p2 = Derivative::unknot();
  }
  return d;
}

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::DiscExists:
      return "disc_exists";
    case VerdictStatus::Obstructed:
      return "obstructed";
    case VerdictStatus::Unknown:
      break;
  }
  return "unknown";
}

VerdictStatus status_from_name(const std::string& s) {
  if (s == "disc_exists") return VerdictStatus::DiscExists;
  if (s == "obstructed") return VerdictStatus::Obstructed;
  if (s == "unknown") return VerdictStatus::Unknown;
  throw InvalidInput("unknown verdict status '" + s + "'");
}

namespace {

const char* kNoDiscSummary = "not G-homotopy ribbon: Alexander polynomial obstruction";

LagrangianVerdict judge(const Lagrangian& L, const Metabolizer& m, const Derivative& d, PrecisionBudget budget) {
  LagrangianVerdict v;
  v.lagrangian = L;
  v.metabolizer = m;
  v.derivative = d;
  switch (d.kind) {
    case DerivativeKind::Unknot:
      v.status = VerdictStatus::DiscExists;
      v.derivative_delta = LaurentPoly(1);
      v.note = "derivative is unknotted; Delta(J) = 1 construction";
      break;
    case DerivativeKind::Braid: {
      const SeifertMatrix S = braid_to_seifert(d.braid);
      LaurentPoly dj = alexander_polynomial(S);
      v.derivative_delta = dj;
      if (doteq_equal(dj, 1)) {
        v.status = VerdictStatus::DiscExists;
        v.note = "Delta(J) = 1 construction";
        break;
      }
      Rho0Result r = rho0(S, budget);
      v.rho0 = r;
      if (r.sign == Rho0Sign::Positive || r.sign == Rho0Sign::Negative) {
        v.status = VerdictStatus::Obstructed;
        v.note = "rho0(J) certified " + rho0_sign_name(r.sign) + "; no slice disc induces this lagrangian";
      } else {
        v.status = VerdictStatus::Unknown;
        v.note = "rho0(J) not certified nonzero and Delta(J) != 1";
      }
      break;
    }
    case DerivativeKind::Unknown:
      v.status = VerdictStatus::Unknown;
      v.note = "no derivative data; the group ring Ext condition is not evaluated";
      break;
  }
  return v;
}

}  // namespace

ClassificationReport classify_knot(const SeifertMatrix& V, const DerivativeSpec& derivs,
                                   const std::string& input_description, PrecisionBudget budget) {
  if (V.size() != 2)
    throw InvalidInput("classify_knot accepts genus-1 (2x2) Seifert matrices only, got size " +
                       std::to_string(V.size()));
  ClassificationReport r;
  r.input = input_description;
  r.seifert = V.V();
  r.delta = alexander_polynomial(V);
  if (!doteq_equal(r.delta, kn_delta())) {
    r.summary = kNoDiscSummary;
    return r;
  }

  const ModuleFacts facts = module_type(V);
  r.kind = facts.kind;
  const auto lags = lagrangian_set(facts);
  std::vector<std::optional<Metabolizer>> met(lags.size());
  for (const auto& m : genus1_metabolizers(V)) {
    const Lagrangian L = metabolizer_image(V, m, facts);
    for (size_t i = 0; i < lags.size(); ++i)
      if (lags[i].factor == L.factor && !met[i]) met[i] = m;
  }

  std::vector<std::future<LagrangianVerdict>> branches;
  for (size_t i = 0; i < lags.size(); ++i) {
    if (!met[i]) throw InvalidInput("no metabolizer represents lagrangian " + lagrangian_label(lags[i].factor));
    const Derivative& d = derivs.for_factor(lags[i].factor);
    branches.push_back(std::async(std::launch::async, judge, lags[i], *met[i], d, budget));
  }
  for (auto& b : branches) r.verdicts.push_back(b.get());

  int exists = 0, obstructed = 0;
  for (const auto& v : r.verdicts) {
    if (v.status == VerdictStatus::DiscExists) ++exists;
    if (v.status == VerdictStatus::Obstructed) ++obstructed;
  }
  r.disc_count_min = exists;
  r.disc_count_max = 2 - obstructed;
  std::ostringstream s;
  if (r.disc_count_min == r.disc_count_max) {
    s << "exactly " << r.disc_count_min << " G-homotopy ribbon disc" << (r.disc_count_min == 1 ? "" : "s");
  } else {
    s << "between " << r.disc_count_min << " and " << r.disc_count_max << " G-homotopy ribbon discs";
  }
  s << " up to isotopy rel boundary";
  r.summary = s.str();
  return r;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class int_from_json(const ojson& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw InvalidInput("expected an integer in report JSON");
}

ojson derivative_json(const Derivative& d) {
  ojson j;
  switch (d.kind) {
    case DerivativeKind::Unknot:
      j["kind"] = "unknot";
      break;
    case DerivativeKind::Braid:
      j["kind"] = "braid";
      j["strands"] = d.braid.strands;
      j["word"] = d.braid.str();
      break;
    case DerivativeKind::Unknown:
      j["kind"] = "unknown";
      break;
  }
  return j;
}

Derivative derivative_from_json(const ojson& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "braid") return parse_derivative("braid:" + j.at("word").get<std::string>(), j.at("strands").get<int>());
  return parse_derivative(kind);
}

}  // namespace

nlohmann::ordered_json report_json(const ClassificationReport& r) {
  ojson j;
  j["input"] = r.input;
  ojson m = ojson::array();
  for (int i = 0; i < r.seifert.rows(); ++i) {
    ojson row = ojson::array();
    for (int c = 0; c < r.seifert.cols(); ++c) row.push_back(int_json(r.seifert(i, c)));
    m.push_back(row);
  }
  j["seifert"] = m;
  j["alexander_polynomial"] = r.delta.str();
  j["module_kind"] = kind_name(r.kind);
  j["verdicts"] = ojson::array();
  for (const auto& v : r.verdicts) {
    ojson e;
    e["lagrangian"] = lagrangian_label(v.lagrangian.factor);
    e["annihilator"] = factor_name(v.lagrangian.factor);
    ojson gen = ojson::array();
    for (const auto& p : v.lagrangian.generator) gen.push_back(p.str());
    e["generator"] = gen;
    e["metabolizer"] = {int_json(v.metabolizer.a), int_json(v.metabolizer.b)};
    e["derivative"] = derivative_json(v.derivative);
    e["status"] = status_name(v.status);
    e["note"] = v.note;
    if (v.derivative_delta) e["derivative_alexander_polynomial"] = v.derivative_delta->str();
    if (v.rho0) {
      e["rho0"] = {{"lo", v.rho0->enclosure.lo().get_str()},
                   {"hi", v.rho0->enclosure.hi().get_str()},
                   {"approx", v.rho0->enclosure.midpoint().get_d()},
                   {"sign", rho0_sign_name(v.rho0->sign)}};
    }
    j["verdicts"].push_back(e);
  }
  j["disc_count"] = {{"min", r.disc_count_min}, {"max", r.disc_count_max}};
  j["summary"] = r.summary;
  return j;
}

std::string report_render(const ClassificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(r).dump(2) + "\n";
  std::ostringstream os;
  if (!r.input.empty()) os << "input: " << r.input << "\n";
  os << "seifert matrix: " << r.seifert.str() << "\n";
  os << "alexander polynomial: " << r.delta.str() << "\n";
  if (r.verdicts.empty()) {
    os << r.summary << "\n";
    os << "disc count: [" << r.disc_count_min << ", " << r.disc_count_max << "]\n";
    return os.str();
  }
  os << "alexander module: " << kind_name(r.kind) << "\n";
  for (const auto& v : r.verdicts) {
    os << lagrangian_label(v.lagrangian.factor) << " = <" << vector_str(v.lagrangian.generator) << ">, killed by "
       << factor_name(v.lagrangian.factor) << "\n";
    os << "  metabolizer " << v.metabolizer.str() << ", derivative " << v.derivative.str() << "\n";
    if (v.derivative_delta) os << "  derivative alexander polynomial: " << v.derivative_delta->str() << "\n";
    if (v.rho0)
      os << "  rho0 in [" << v.rho0->enclosure.lo().get_d() << ", " << v.rho0->enclosure.hi().get_d() << "] ("
         << rho0_sign_name(v.rho0->sign) << ")\n";
    os << "  " << status_name(v.status) << ": " << v.note << "\n";
  }
  os << "disc count: [" << r.disc_count_min << ", " << r.disc_count_max << "]\n";
  os << r.summary << "\n";
  return os.str();
}

ClassificationReport report_parse(const std::string& json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    ClassificationReport r;
    r.input = j.at("input").get<std::string>();
    const auto& m = j.at("seifert");
    if (!m.empty()) {
      r.seifert = IntMatrix(static_cast<int>(m.size()), static_cast<int>(m[0].size()));
      for (int i = 0; i < r.seifert.rows(); ++i)
        for (int c = 0; c < r.seifert.cols(); ++c) r.seifert(i, c) = int_from_json(m[i][c]);
    }
    r.delta = LaurentPoly::parse(j.at("alexander_polynomial").get<std::string>());
    r.kind = kind_from_name(j.at("module_kind").get<std::string>());
    for (const auto& e : j.at("verdicts")) {
      LagrangianVerdict v;
      v.lagrangian.factor = factor_from_name(e.at("annihilator").get<std::string>());
      for (const auto& p : e.at("generator")) v.lagrangian.generator.push_back(LaurentPoly::parse(p.get<std::string>()));
      v.metabolizer = {int_from_json(e.at("metabolizer")[0]), int_from_json(e.at("metabolizer")[1])};
      v.derivative = derivative_from_json(e.at("derivative"));
      v.status = status_from_name(e.at("status").get<std::string>());
      v.note = e.at("note").get<std::string>();
      if (e.contains("derivative_alexander_polynomial"))
        v.derivative_delta = LaurentPoly::parse(e["derivative_alexander_polynomial"].get<std::string>());
      if (e.contains("rho0")) {
        const auto& q = e["rho0"];
        v.rho0 = Rho0Result{Interval(mpq_class(q.at("lo").get<std::string>()), mpq_class(q.at("hi").get<std::string>())),
                            rho0_sign_from_name(q.at("sign").get<std::string>())};
      }
      r.verdicts.push_back(std::move(v));
    }
    r.disc_count_min = j.at("disc_count").at("min").get<int>();
    r.disc_count_max = j.at("disc_count").at("max").get<int>();
    r.summary = j.at("summary").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

}  // namespace ribbon
