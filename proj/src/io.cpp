#include "fcancel/io.hpp"

#include <fstream>
#include <sstream>

namespace fcancel {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const Error& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  throw Error(Errc::Parse, "expected a rational string, got " + j.dump());
}

Nat nat_from_json(const Json& j) {
  const Rat x = rat_from_json(j);
  if (x.get_den() != 1 || x < 0) throw Error(Errc::Parse, "expected a non-negative integer, got " + j.dump());
  return x.get_num();
}

Json to_json(const Rat& x) { return to_string(x); }

Json to_json(const ReportedReal& x) { return Json{{"value", x.value}, {"digits", x.digits}}; }

ReportedReal reported_from_json(const Json& j) {
  try {
    return {j.at("value").get<std::string>(), j.at("digits").get<unsigned>()};
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Json to_json(const CancellationCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["psi_k"] = to_string(c.psi_k);
  j["bound_k"] = c.bound_k ? Json(to_string(*c.bound_k)) : Json(nullptr);
  j["divides"] = c.divides;
  j["log_ratio_per_k"] = to_json(c.log_ratio_per_k);
  j["asymptotic_constant"] = c.asymptotic_constant ? to_json(*c.asymptotic_constant) : Json(nullptr);
  return j;
}

CancellationCertificate certificate_from_json(const Json& j) {
  try {
    CancellationCertificate c;
    c.k = j.at("k").get<unsigned long>();
    c.psi_k = nat_from_json(j.at("psi_k"));
    if (!j.at("bound_k").is_null()) c.bound_k = nat_from_json(j.at("bound_k"));
    c.divides = j.at("divides").get<bool>();
    c.log_ratio_per_k = reported_from_json(j.at("log_ratio_per_k"));
    if (!j.at("asymptotic_constant").is_null()) c.asymptotic_constant = reported_from_json(j.at("asymptotic_constant"));
    return c;
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Json to_json(const UniPoly& f) {
  Json j = Json::array();
  for (const Rat& c : f.coeffs()) j.push_back(to_string(c));
  return j;
}

Json to_json(const MatQ& a) {
  Json j = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(i, c)));
    j.push_back(row);
  }
  return j;
}

MatQ matrix_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("matrix")) throw Error(Errc::Parse, "object has no \"matrix\" member");
    return matrix_from_json(j.at("matrix"));
  }
  if (!j.is_array() || j.empty()) throw Error(Errc::Parse, "matrix must be a non-empty array of rows");
  std::vector<VecQ> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw Error(Errc::Parse, "matrix row must be an array");
    VecQ r;
    for (const Json& x : row) r.push_back(rat_from_json(x));
    rows.push_back(std::move(r));
  }
  const MatQ a = MatQ::from_rows(rows);
  if (!a.is_square()) throw Error(Errc::Parse, "matrix must be square");
  return a;
}

Json to_json(const SpectralData& sd) {
  Json j;
  Json eig = Json::array();
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i)
    eig.push_back(Json{{"value", to_string(sd.eigenvalues[i])}, {"minpoly_multiplicity", sd.minpoly_mults[i]}});
  j["eigenvalues"] = eig;
  j["r_max"] = sd.r_max;
  j["char_poly"] = to_json(sd.char_poly);
  j["min_poly"] = to_json(sd.min_poly);
  Json blocks = Json::array();
  for (const JordanBlock& b : sd.blocks) blocks.push_back(Json{{"eigenvalue", to_string(b.eigenvalue)}, {"size", b.size}});
  j["blocks"] = blocks;
  j["jordan_T"] = to_json(sd.jordan_T);
  j["jordan_T_inv"] = to_json(sd.jordan_T_inv);
  j["t1"] = to_string(sd.t1);
  j["t2"] = to_string(sd.t2);
  j["b"] = to_string(sd.b);
  return j;
}

Json to_json(const FuchsianSystem& sys) {
  Json j;
  j["m"] = sys.m;
  Json g = Json::array();
  for (const Rat& x : sys.gammas) g.push_back(to_string(x));
  j["gammas"] = g;
  Json r = Json::array();
  for (const MatQ& a : sys.residues) r.push_back(to_json(a));
  j["residues"] = r;
  j["augmented"] = sys.augmented;
  return j;
}

FuchsianSystem system_from_json(const Json& j) {
  try {
    std::vector<Rat> gammas;
    for (const Json& x : j.at("gammas")) gammas.push_back(rat_from_json(x));
    std::vector<MatQ> residues;
    for (const Json& x : j.at("residues")) residues.push_back(matrix_from_json(x));
    const bool augmented = j.value("augmented", false);
    unsigned m = 0;
    if (j.contains("m")) {
      m = j.at("m").get<unsigned>();
    } else if (!residues.empty()) {
      m = static_cast<unsigned>(residues.front().size()) - (augmented ? 1 : 0);
    }
    return FuchsianSystem::make(m, std::move(gammas), std::move(residues), augmented);
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

HyperParams params_from_json(const Json& j) {
  try {
    std::vector<Rat> alpha, beta;
    for (const Json& x : j.at("alpha")) alpha.push_back(rat_from_json(x));
    for (const Json& x : j.at("beta")) beta.push_back(rat_from_json(x));
    return HyperParams::make(std::move(alpha), std::move(beta));
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

namespace {

Json rat_array(const std::vector<Rat>& xs) {
  Json j = Json::array();
  for (const Rat& x : xs) j.push_back(to_string(x));
  return j;
}

Json nat_array(const std::vector<Nat>& xs) {
  Json j = Json::array();
  for (const Nat& x : xs) j.push_back(to_string(x));
  return j;
}

}  // namespace

Json to_json(const HyperParams& p) { return Json{{"alpha", rat_array(p.alpha)}, {"beta", rat_array(p.beta)}}; }

Json to_json(const SeriesQ& f) { return rat_array(f.coeffs()); }

Json to_json(const SpectralForms& f) {
  Json j;
  j["sigma_alpha"] = rat_array(f.sigma_alpha);
  j["sigma_beta"] = rat_array(f.sigma_beta);
  j["gamma"] = to_string(f.gamma);
  j["A1"] = to_json(f.A1);
  j["A2"] = to_json(f.A2);
  j["T"] = to_json(f.T);
  j["T_inv"] = to_json(f.T_inv);
  j["a"] = rat_array(f.a);
  j["B1"] = to_json(f.B1);
  j["B2"] = to_json(f.B2);
  return j;
}

Json to_json(const Lemma11Report& r) {
  Json j;
  j["a"] = to_string(r.a);
  j["b"] = to_string(r.b);
  j["gamma_zero"] = r.gamma_zero;
  j["inner_psi"] = to_string(r.inner_psi);
  j["inner_bound"] = to_string(r.inner_bound);
  j["inner_divides"] = r.inner_divides;
  j["outer"] = to_json(r.outer);
  return j;
}

Json to_json(const GClassEstimate& g) {
  Json j;
  j["radius"] = 1;
  j["q1"] = to_string(g.q1);
  j["q2"] = to_string(g.q2);
  j["b"] = to_string(g.b);
  j["b_js"] = nat_array(g.b_js);
  j["rho_sum"] = to_string(g.rho_sum);
  j["Phi"] = to_json(g.Phi);
  return j;
}

Json to_json(const WronskianReport& w) {
  Json j;
  j["sigma1_alpha"] = to_string(w.sigma1_alpha);
  j["sigma1_beta"] = to_string(w.sigma1_beta);
  j["trace_matches"] = w.trace_matches;
  j["derived_exponents"] = Json::array({to_string(w.e0), to_string(w.e1)});
  j["derived_solves"] = w.derived_solves;
  j["printed_exponents"] = Json::array({to_string(w.printed_e0), to_string(w.printed_e1)});
  j["printed_solves"] = w.printed_solves;
  return j;
}

Json to_json(const ConditionsReport& c) {
  Json j;
  j["linear"] = c.linear;
  j["belyi"] = c.belyi;
  j["kummer"] = c.kummer;
  j["two_gamma"] = c.two_gamma;
  j["all"] = c.all();
  j["diagnostics"] = c.diagnostics;
  return j;
}

Json to_json(const Theorem6Report& r) {
  Json j;
  j["conditions"] = to_json(r.conditions);
  j["b0"] = to_string(r.b0);
  j["H"] = to_string(r.H);
  j["Phi"] = to_json(r.Phi);
  j["C0"] = to_json(r.C0);
  j["log_C0"] = to_json(r.log_C0);
  j["eta0"] = r.eta0 ? to_json(*r.eta0) : Json(nullptr);
  j["xi"] = to_string(r.xi);
  j["epsilon"] = to_string(r.epsilon);
  j["margin"] = Json{{"lo", to_json(r.margin_lo)}, {"hi", to_json(r.margin_hi)}};
  Json verdict;
  verdict["decided"] = r.decided;
  verdict["irrational"] = r.irrational;
  verdict["measure_exponent"] = r.measure_exponent ? to_json(*r.measure_exponent) : Json(nullptr);
  verdict["eta_admissible"] = r.eta_admissible ? Json(*r.eta_admissible) : Json(nullptr);
  j["verdict"] = verdict;
  return j;
}

}  // namespace fcancel
