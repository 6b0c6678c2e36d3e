#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ribbon/blanchfield.hpp"
#include "ribbon/classifier.hpp"
#include "ribbon/error.hpp"

using namespace ribbon;
using ojson = nlohmann::ordered_json;

namespace {

struct Input {
  std::string description;
  SeifertMatrix V;
  std::optional<BraidWord> braid;
  std::optional<long> kn;
};

struct Options {
  bool json = false;
  int precision_bits = 64;
  std::optional<int> strands;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("bad " + what + ": '" + s + "'");
}

Input resolve(const std::string& arg, const Options& opt) {
  Input in;
  in.description = arg;
  if (arg.rfind("kn:", 0) == 0) {
    in.kn = parse_long(arg.substr(3), "kn index");
    in.V = kn_seifert(*in.kn);
    return in;
  }
  std::string text = arg;
  if (arg.rfind("gamma:", 0) == 0) {
    const long k = parse_long(arg.substr(6), "gamma index");
    if (k < 1 || k > 64) throw InvalidInput("gamma index must lie in [1, 64]");
    in.braid = gamma_braid(static_cast<int>(k));
  } else {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream f(arg);
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    text = trim(text);
    if (text.empty()) throw InvalidInput("empty input");
    if (text.front() == '[') {
      in.V = validate_seifert(parse_matrix_json(text));
      return in;
    }
    in.braid = parse_braid(text, opt.strands);
  }
  if (!closure_is_knot(*in.braid)) throw InvalidInput("braid closure is a link, not a knot");
  in.V = braid_to_seifert(*in.braid);
  return in;
}

PrecisionBudget budget(const Options& opt) {
  if (opt.precision_bits < 8 || opt.precision_bits > 4096)
    throw InvalidInput("--precision-bits must lie in [8, 4096]");
  return {opt.precision_bits, 4096};
}

ojson vector_json(const ModElt& v) {
  ojson j = ojson::array();
  for (const auto& p : v) j.push_back(p.str());
  return j;
}

void emit(const Options& opt, const ojson& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_alex(const Input& in, const Options& opt) {
  const LaurentPoly d = alexander_polynomial(in.V);
  ojson j{{"input", in.description}, {"alexander_polynomial", d.str()}};
  std::string text = d.str() + "\n";
  if (in.braid) {
    const LaurentPoly b = alexander_via_burau(*in.braid);
    j["burau"] = b.str();
    text += "burau: " + b.str() + "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_module_type(const Input& in, const Options& opt) {
  const ModuleFacts f = module_type(in.V);
  ojson gens = ojson::array();
  std::string text = kind_name(f.kind) + "\n";
  for (const auto& g : f.generators) {
    gens.push_back(vector_json(g));
    text += "generator " + vector_str(g) + "\n";
  }
  emit(opt, {{"input", in.description}, {"alexander_polynomial", f.delta.str()}, {"kind", kind_name(f.kind)},
             {"generators", gens}, {"candidates_tried", f.candidates_tried}},
       text);
  return 0;
}

int cmd_lagrangians(const Input& in, const Options& opt) {
  const ModuleFacts f = module_type(in.V);
  const auto lags = lagrangian_set(f);
  const BlanchfieldForm B = blanchfield_matrix(in.V);
  std::vector<std::pair<Metabolizer, LagFactor>> mets;
  if (in.V.size() == 2)
    for (const auto& m : genus1_metabolizers(in.V)) mets.emplace_back(m, metabolizer_image(in.V, m, f).factor);
  ojson arr = ojson::array();
  std::ostringstream os;
  for (const auto& L : lags) {
    ojson e{{"label", lagrangian_label(L.factor)}, {"annihilator", factor_name(L.factor)},
            {"generator", vector_json(L.generator)}, {"isotropic", bl_vanishes_on(B, L)}};
    os << lagrangian_label(L.factor) << " = <" << vector_str(L.generator) << ">, killed by " << factor_name(L.factor);
    ojson ms = ojson::array();
    for (const auto& [m, fac] : mets)
      if (fac == L.factor) {
        ms.push_back({m.a.get_si(), m.b.get_si()});
        os << ", metabolizer " << m.str();
      }
    e["metabolizers"] = ms;
    os << "\n";
    arr.push_back(e);
  }
  emit(opt, {{"input", in.description}, {"kind", kind_name(f.kind)}, {"lagrangians", arr}}, os.str());
  return 0;
}

int cmd_blanchfield(const Input& in, const Options& opt) {
  const BlanchfieldForm B = blanchfield_matrix(in.V);
  ojson rows = ojson::array();
  std::ostringstream os;
  for (int i = 0; i < B.size; ++i) {
    ojson row = ojson::array();
    for (int c = 0; c < B.size; ++c) {
      row.push_back(B(i, c).str());
      os << "B(" << i << "," << c << ") = " << B(i, c).str() << "\n";
    }
    rows.push_back(row);
  }
  const bool herm = is_hermitian(B);
  os << "hermitian: " << (herm ? "yes" : "no") << "\n";
  emit(opt, {{"input", in.description}, {"entries", rows}, {"hermitian", herm}}, os.str());
  return 0;
}

int cmd_signature(const Input& in, const Options& opt, const std::string& plot) {
  const SignatureFunction sf = signature_function(in.V, budget(opt));
  const nlohmann::json sj = signature_json(sf);
  if (!plot.empty()) {
    std::ofstream f(plot);
    if (!f) throw InvalidInput("cannot write " + plot);
    f << sj.dump(2) << "\n";
  }
  std::ostringstream os;
  for (size_t i = 0; i < sf.arc_values.size(); ++i) {
    const double lo = i == 0 ? 0.0 : sf.jumps[i - 1].hi().get_d();
    const double hi = i == sf.jumps.size() ? 1.0 : sf.jumps[i].lo().get_d();
    os << "s in (" << lo << ", " << hi << "): " << sf.arc_values[i] << "\n";
  }
  ojson j{{"input", in.description}};
  j["jumps"] = sj["jumps"];
  j["arcs"] = sj["arcs"];
  emit(opt, j, os.str());
  return 0;
}

int cmd_rho0(const Input& in, const Options& opt) {
  const Rho0Result r = rho0(in.V, budget(opt));
  std::ostringstream os;
  os << "rho0 = " << r.enclosure.midpoint().get_d() << " in [" << r.enclosure.lo().get_str() << ", "
     << r.enclosure.hi().get_str() << "] (" << rho0_sign_name(r.sign) << ")\n";
  emit(opt,
       {{"input", in.description},
        {"lo", r.enclosure.lo().get_str()},
        {"hi", r.enclosure.hi().get_str()},
        {"approx", r.enclosure.midpoint().get_d()},
        {"sign", rho0_sign_name(r.sign)}},
       os.str());
  if (r.sign == Rho0Sign::Undetermined) {
    std::cerr << "error: cannot certify the sign of rho0 within the precision cap\n";
    return 2;
  }
  return 0;
}

int cmd_classify(const Input& in, const Options& opt, const std::vector<std::string>& derivs) {
  DerivativeSpec spec = in.kn ? kn_derivatives(*in.kn) : DerivativeSpec{};
  bool set1 = false, set2 = false;
  for (const auto& d : derivs) {
    const auto eq = d.find('=');
    if (eq == std::string::npos) throw InvalidInput("--derivative expects P1=<spec> or P2=<spec>, got '" + d + "'");
    const std::string slot = d.substr(0, eq);
    bool& seen = slot == "P1" ? set1 : set2;
    if (slot != "P1" && slot != "P2") throw InvalidInput("unknown lagrangian '" + slot + "', expected P1 or P2");
    if (seen) throw InvalidInput("more than one derivative given for " + slot);
    seen = true;
    (slot == "P1" ? spec.p1 : spec.p2) = parse_derivative(d.substr(eq + 1), opt.strands);
  }
  const ClassificationReport r = classify_knot(in.V, spec, in.description, budget(opt));
  std::cout << report_render(r, opt.json ? ReportFormat::Json : ReportFormat::Text);
  return 0;
}

int cmd_kn(long n, const Options& opt) {
  const SeifertMatrix V = kn_seifert(n);
  const std::string m = matrix_json(V.V());
  emit(opt, {{"n", n}, {"seifert", nlohmann::ordered_json::parse(m)}}, m + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander module, Blanchfield and signature computations for G-homotopy ribbon discs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--precision-bits", opt.precision_bits, "Starting precision in bits (cap 4096)");
  int strands = 0;
  app.add_option("--strands", strands, "Strand count for braid input");

  std::string input;
  auto add_input_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("input", input, "Seifert matrix JSON, file, braid word, kn:N or gamma:k")->required();
    return c;
  };
  auto* alex = add_input_cmd("alex", "Alexander polynomial");
  auto* mtype = add_input_cmd("module-type", "Alexander module type");
  auto* lags = add_input_cmd("lagrangians", "Lagrangians of the Blanchfield form");
  auto* bl = add_input_cmd("blanchfield", "Blanchfield pairing matrix");
  auto* sig = add_input_cmd("signature", "Levine-Tristram signature function");
  std::string plot;
  sig->add_option("--plot-json", plot, "Write plot data to this file");
  auto* rho = add_input_cmd("rho0", "Integral of the signature function");
  auto* cls = add_input_cmd("classify", "Count G-homotopy ribbon discs");
  std::vector<std::string> derivs;
  cls->add_option("--derivative", derivs, "P1=<unknot|unknown|braid:letters>, repeatable");
  auto* kn = app.add_subcommand("kn", "Seifert matrix of K_n");
  long n = 0;
  kn->add_option("n", n, "family index")->required()->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (strands != 0) opt.strands = strands;

  try {
    if (kn->parsed()) return cmd_kn(n, opt);
    budget(opt);
    const Input in = resolve(input, opt);
    if (alex->parsed()) return cmd_alex(in, opt);
    if (mtype->parsed()) return cmd_module_type(in, opt);
    if (lags->parsed()) return cmd_lagrangians(in, opt);
    if (bl->parsed()) return cmd_blanchfield(in, opt);
    if (sig->parsed()) return cmd_signature(in, opt, plot);
    if (rho->parsed()) return cmd_rho0(in, opt);
    if (cls->parsed()) return cmd_classify(in, opt, derivs);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
