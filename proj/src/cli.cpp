#include "qsusy/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qsusy/ground_state.hpp"
#include "qsusy/qspecial.hpp"
#include "qsusy/spectra.hpp"
#include "qsusy/susy.hpp"

namespace qsusy::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_q_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--q: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("--q: empty list");
  return out;
}

Rational parse_one_q(const std::string& text) {
  auto v = parse_q_list(text);
  if (v.size() != 1) throw UsageError("--q: expected a single rational");
  return v.front();
}

double parse_real(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text).get_d();
  } catch (const DomainError&) {
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": cannot parse '" + text + "'");
}

nlohmann::json q_strings(const std::vector<Rational>& qs) {
  auto out = nlohmann::json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

std::vector<ModelKind> kinds_from(const std::string& text, bool allow_undeformed) {
  if (text == "all") {
    if (allow_undeformed) return {ModelKind::undeformed, ModelKind::spiridonov, ModelKind::td};
    return {ModelKind::spiridonov, ModelKind::td};
  }
  try {
    const ModelKind k = parse_model_kind(text);
    if (!allow_undeformed && k == ModelKind::undeformed) throw UsageError("--kind: superoscillator lists exist only for deformed kinds");
    return {k};
  } catch (const DomainError& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
}

Superpotential parse_w(const std::string& text) {
  try {
    return Superpotential::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--w: ") + e.what());
  }
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json float_sum_json(const std::string& function, const nlohmann::json& params, const FloatSum& s) {
  return {{"function", function}, {"parameters", params}, {"mode", "float"}, {"value", decimal(s.value)},
          {"terms_used", s.terms_used}, {"converged", s.converged}};
}

// ---- command bodies

struct Options {
  std::string kind = "all";
  std::string w = "-x";
  std::string q;
  bool intertwining = false;
  int m_max = 50;
  int order = 40;
  std::string branch = "both";
  std::string function = "checks";
  std::string z = "1/10";
  std::string p;
  std::string mode = "float";
  int terms = 20;
  int dim = 32;
  int n = -1;
  int m = -1;
  std::string interval = "0,1";
  int n_max = 5;
};

struct Outcome {
  nlohmann::json inputs = nlohmann::json::object();
  Report report;
  nlohmann::json data = nullptr;
};

Outcome cmd_verify_susy(const Options& o) {
  Outcome r;
  const Superpotential w = parse_w(o.w);
  const std::vector<Rational> qs = o.q.empty() ? std::vector<Rational>{} : parse_q_list(o.q);
  r.inputs = {{"kind", o.kind}, {"w", w.to_string()}, {"q", q_strings(qs)}, {"intertwining", o.intertwining}};
  for (ModelKind k : kinds_from(o.kind, true)) {
    const SusyModel m = build_model(k, w);
    append(r.report, verify_susy_algebra(m, qs));
    if (o.intertwining) {
      append(r.report, verify_intertwining(m));
      append(r.report, verify_displayed_products(m));
    }
  }
  return r;
}

Outcome cmd_verify_heisenberg(const Options& o) {
  Outcome r;
  const std::vector<Rational> qs =
      o.q.empty() ? std::vector<Rational>{Rational(1, 2), Rational(3, 5), Rational(5, 3), Rational(2)} : parse_q_list(o.q);
  if (o.m_max < 0) throw UsageError("--m-max must be >= 0");
  for (const auto& q : qs)
    if (q <= 0 || q == 1) throw UsageError("--q: reconstruction needs q > 0 and q != 1, got " + to_string(q));
  r.inputs = {{"q", q_strings(qs)}, {"m_max", o.m_max}};
  for (const auto& q : qs) {
    Report part = heisenberg_reconstruction(q, o.m_max);
    for (auto& c : part) c.id += "@q=" + to_string(q);
    append(r.report, part);
  }
  return r;
}

Outcome cmd_superoscillator(const Options& o) {
  Outcome r;
  const std::vector<Rational> qs = o.q.empty() ? default_q_values() : parse_q_list(o.q);
  r.inputs = {{"kind", o.kind}, {"q", q_strings(qs)}};
  for (ModelKind k : kinds_from(o.kind, false)) append(r.report, superoscillator_identity_suite(k, qs));
  return r;
}

nlohmann::json solution_json(const ZeroModeSolution& sol, const std::optional<Rational>& q0) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= sol.coeffs.order(); ++k) {
    nlohmann::json c = {{"degree", k}, {"symbolic", sol.coeffs[k].to_string()}};
    if (q0) c["value"] = sol.coeffs[k].eval(*q0).to_string();
    coeffs.push_back(c);
  }
  nlohmann::json out = {{"branch", to_string(sol.branch)}, {"c0", "C0"}, {"coefficients", coeffs}};
  out["q"] = q0 ? nlohmann::json(to_string(*q0)) : nlohmann::json(nullptr);
  if (q0) {
    try {
      const NormalizabilityResult n = classify_normalizability(sol, *q0);
      out["classification"] = to_string(n.kind);
      out["trend"] = n.trend;
      if (!n.note.empty()) out["classification_note"] = n.note;
    } catch (const DomainError& e) {
      out["classification"] = nullptr;
      out["classification_note"] = e.what();
    }
  } else {
    out["classification"] = nullptr;
  }
  return out;
}

Outcome cmd_ground_state(const Options& o) {
  Outcome r;
  if (o.order < 0) throw UsageError("--order must be >= 0");
  std::optional<Rational> q0;
  if (!o.q.empty()) {
    q0 = parse_one_q(o.q);
    if (*q0 <= 0) throw UsageError("--q must be positive");
  }
  std::vector<Branch> branches;
  if (o.branch == "both") {
    branches = {Branch::f, Branch::f_tilde};
  } else {
    try {
      branches = {parse_branch(o.branch)};
    } catch (const DomainError& e) {
      throw UsageError(std::string("--branch: ") + e.what());
    }
  }
  r.inputs = {{"order", o.order}, {"branch", o.branch}, {"q", q0 ? nlohmann::json(to_string(*q0)) : nlohmann::json(nullptr)}};
  const SusyModel m = td_superoscillator();
  r.data = nlohmann::json::array();
  for (Branch b : branches) {
    const ZeroModeSolution sol = solve_zero_mode(b, o.order);
    bool ok = true;
    for (int k = 0; 2 * k <= o.order; ++k) ok = ok && sol.coeffs[2 * k] == closed_form_coefficient(b, k);
    r.report.push_back(make_check("ground_state.closed_form." + to_string(b), "Eq. 28", ok, "recurrence vs closed form"));
    append(r.report, verify_annihilation(sol, m));
    r.data.push_back(solution_json(sol, q0));
  }
  return r;
}

Outcome cmd_td_gaussian(const Options& o) {
  Outcome r;
  if (o.order < 0) throw UsageError("--order must be >= 0");
  std::optional<Rational> q0;
  if (!o.q.empty()) q0 = parse_one_q(o.q);
  r.inputs = {{"order", o.order}, {"q", q0 ? nlohmann::json(to_string(*q0)) : nlohmann::json(nullptr)}};
  const QSeries g = td_gaussian(o.order);
  const ZeroModeSolution f = solve_zero_mode(Branch::f, o.order);
  r.report.push_back(make_check("ground_state.td_gaussian_record", "Eq. 36", equal_through_common_order(g, f.coeffs),
                                "TD-exponent record differs from the recurrence solution"));
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= g.order(); ++k) {
    nlohmann::json c = {{"degree", k}, {"symbolic", g[k].to_string()}};
    if (q0) c["value"] = g[k].eval(*q0).to_string();
    coeffs.push_back(c);
  }
  r.data = {{"coefficients", coeffs}};
  return r;
}

Outcome cmd_specfun(const Options& o) {
  Outcome r;
  if (o.function == "checks") {
    r.inputs = {{"function", o.function}};
    append(r.report, td_analysis_checks());
    append(r.report, hypergeometric_checks());
    return r;
  }
  const Rational z = [&] {
    try {
      return parse_rational(o.z);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--z: ") + e.what());
    }
  }();
  const Rational q = o.q.empty() ? Rational(9, 10) : parse_one_q(o.q);
  std::optional<Rational> p;
  if (!o.p.empty()) {
    try {
      p = parse_rational(o.p);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--p: ") + e.what());
    }
  }
  if (o.mode != "float" && o.mode != "exact") throw UsageError("--mode must be float or exact");
  if (q <= 0) throw UsageError("--q must be positive");
  nlohmann::json params = {{"z", to_string(z)}, {"q", to_string(q)}};
  if (p) params["p"] = to_string(*p);
  r.inputs = {{"function", o.function}, {"mode", o.mode}, {"parameters", params}, {"terms", o.terms}};

  auto record = [&](const std::string& id, const std::string& ref, const nlohmann::json& value, bool converged,
                    const std::string& note) {
    r.data = value;
    r.report.push_back(make_check("specfun." + id, ref, converged, note));
  };
  auto record_sum = [&](const std::string& id, const std::string& ref, const FloatSum& s) {
    record(id, ref, float_sum_json(id, params, s), s.converged,
           "max_terms reached; last term magnitude " + decimal(s.last_term));
  };

  try {
    if (o.mode == "exact") {
      if (o.terms < 1) throw UsageError("--terms must be >= 1");
      Rational value(0);
      std::string ref;
      if (o.function == "td_exp") {
        const QSeries e = td_exp(QLaurent(Scalar(z)), o.terms - 1);
        for (int n = 0; n < o.terms; ++n) value += e[n].eval(q).re();
        ref = "Eq. 34";
      } else if (o.function == "pq_exp" || o.function == "q_exp") {
        const Rational pp = o.function == "q_exp" ? 1 / q : p.value_or(Rational(2));
        TwinPhiSpec<Rational> s{{{Rational(1), Rational(0)}}, {{Rational(0), Rational(1)}}, pp, q, (pp - q) * z};
        value = twin_phi_partial(s, o.terms);
        ref = o.function == "q_exp" ? "Eq. 46" : "Eq. 45";
      } else {
        throw UsageError("--function: exact mode supports td_exp, pq_exp, q_exp");
      }
      record(o.function, ref,
             {{"function", o.function}, {"parameters", params}, {"mode", "exact"}, {"value", to_string(value)},
              {"terms_used", o.terms}, {"converged", nullptr}},
             true, "");
      return r;
    }
    const double zd = z.get_d(), qd = q.get_d();
    if (o.function == "td_exp") {
      const FloatSum s = td_exp_sum(zd, qd);
      record_sum("td_exp", "Eq. 34", s);
    } else if (o.function == "pq_exp") {
      const double pd = p ? p->get_d() : 2.0;
      const FloatSum s = pq_exp(zd, pd, qd);
      record_sum("pq_exp", "Eq. 37", s);
    } else if (o.function == "q_exp") {
      const FloatSum s = twin_phi(pq_exp_as_twin_phi(zd, 1 / qd, qd));
      record_sum("q_exp", "Eq. 46", s);
    } else if (o.function == "twin_phi") {
      const double pd = p ? p->get_d() : 2.0;
      const FloatSum s = twin_phi(pq_exp_as_twin_phi(zd, pd, qd));
      record_sum("twin_phi", "Eq. 45", s);
    } else if (o.function == "bibasic_td") {
      const double pd = p ? p->get_d() : 1 - 1e-6;
      const FloatSum s = bibasic_F(td_exp_as_bibasic(zd, pd, qd));
      record_sum("bibasic_td", "Eq. 49", s);
    } else {
      throw UsageError("--function must be one of checks, td_exp, pq_exp, q_exp, twin_phi, bibasic_td");
    }
  } catch (const SeriesPoleError& e) {
    r.report.push_back(make_check("specfun." + o.function, "Eq. 38", false, e.what()));
  } catch (const UsageError&) {
    throw;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return r;
}

Outcome cmd_spectrum(const Options& o) {
  Outcome r;
  const std::vector<Rational> qs = o.q.empty() ? std::vector<Rational>{Rational(1, 2), Rational(2)} : parse_q_list(o.q);
  if (o.dim < 3) throw UsageError("--dim must be >= 3");
  r.inputs = {{"dim", o.dim}, {"q", q_strings(qs)}};
  for (const auto& q : qs) append(r.report, verify_fock_algebra(o.dim, q));
  nlohmann::json levels = nlohmann::json::array();
  for (int n = 0; n < std::min(o.dim, 10); ++n) {
    nlohmann::json l = {{"n", n}, {"energy", td_energy(n).to_string()}};
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& q : qs) vals[to_string(q)] = td_energy(n).eval(q).to_string();
    l["values"] = vals;
    levels.push_back(l);
  }
  r.data = {{"levels", levels}};
  return r;
}

Outcome cmd_degeneracy(const Options& o) {
  Outcome r;
  const auto comma = o.interval.find(',');
  if (comma == std::string::npos) throw UsageError("--interval expects lo,hi");
  const double lo = parse_real(o.interval.substr(0, comma), "--interval");
  const double hi = parse_real(o.interval.substr(comma + 1), "--interval");
  try {
    if (o.n >= 0 || o.m >= 0) {
      if (o.n < 0 || o.m < 0) throw UsageError("--n and --m go together");
      r.inputs = {{"n", o.n}, {"m", o.m}, {"interval", {decimal(lo), decimal(hi)}}};
      const auto root = find_degeneracy(o.n, o.m, lo, hi);
      const std::string id = "degeneracy.pair_" + std::to_string(o.n) + "_" + std::to_string(o.m);
      if (root) {
        r.data = to_json(*root);
        r.report.push_back(make_measured_check(id, "Sec. 2.1", root->residual < 1e-10,
                                               "residual " + decimal(root->residual)));
      } else {
        r.data = nullptr;
        r.report.push_back({id, "Sec. 2.1", Status::informational, "no sign change on the scan grid"});
      }
      return r;
    }
    r.inputs = {{"n_max", o.n_max}, {"interval", {decimal(lo), decimal(hi)}}};
    const auto roots = scan_degeneracies(o.n_max, lo, hi);
    r.data = nlohmann::json::array();
    for (const auto& root : roots) {
      r.data.push_back(to_json(root));
      const std::string id = "degeneracy.pair_" + std::to_string(root.n) + "_" + std::to_string(root.m) + "@" +
                             to_json(root)["q_root"].get<std::string>();
      const bool ok = root.residual < 1e-10 && root.pairwise_only;
      r.report.push_back(make_measured_check(id, "Sec. 2.1", ok,
                                             "residual " + decimal(root.residual) +
                                                 (root.pairwise_only ? "" : "; a third level coincides")));
    }
    if (roots.empty()) r.report.push_back({"degeneracy.scan", "Sec. 2.1", Status::informational, "no roots found"});
  } catch (const UsageError&) {
    throw;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return r;
}

Report q1_degeneration_checks() {
  Report out;
  // Deformed models at q = 1 against the undeformed construction, per superpotential.
  for (const char* w_text : {"-x", "x", "x^3-x"}) {
    const Superpotential w = Superpotential::parse(w_text);
    const SusyModel und = build_model(ModelKind::undeformed, w);
    for (ModelKind k : {ModelKind::spiridonov, ModelKind::td}) {
      const SusyModel m = build_model(k, w);
      const bool ok = m.lower.at_one() == und.lower && m.raise.at_one() == und.raise && m.H.at_one() == und.H &&
                      m.Q.at_one() == und.Q && m.Qdag.at_one() == und.Qdag;
      out.push_back(make_check("q1." + to_string(k) + ".model[W=" + w.to_string() + "]", "Sec. 1.1", ok,
                               "components differ at q = 1"));
    }
  }
  return out;
}

Outcome cmd_all(const Options& o) {
  Outcome r;
  Options d = o;
  r.inputs = {{"order", 80}, {"m_max", d.m_max}};
  for (const char* w : {"-x", "x", "x^3-x"}) {
    d.w = w;
    d.kind = "all";
    d.intertwining = true;
    d.q = "3/5";
    append(r.report, cmd_verify_susy(d).report);
  }
  d.q.clear();
  append(r.report, scaling_operator_checks());
  append(r.report, cmd_superoscillator(d).report);
  append(r.report, cmd_verify_heisenberg(d).report);
  append(r.report, ground_state_checks(80));
  append(r.report, td_analysis_checks());
  append(r.report, hypergeometric_checks());
  append(r.report, spectra_checks());
  append(r.report, q1_degeneration_checks());
  r.data = {{"coverage", coverage_manifest(r.report)}};
  return r;
}

std::string render_text(const nlohmann::json& doc) {
  std::ostringstream os;
  for (const auto& e : doc["results"]) {
    os << e["status"].get<std::string>() << "  " << e["id"].get<std::string>() << "  [" << e["paper_ref"].get<std::string>()
       << "]";
    if (!e["detail"].is_null()) os << "  " << e["detail"].get<std::string>();
    os << "\n";
  }
  const auto& s = doc["summary"];
  os << "passed " << s["passed"] << ", failed " << s["failed"] << ", informational " << s["informational"] << "\n";
  return os.str();
}

}  // namespace

nlohmann::json make_document(const std::string& command, const nlohmann::json& inputs, const Report& report,
                             const nlohmann::json& data) {
  nlohmann::json results = nlohmann::json::array();
  int passed = 0, failed = 0, info = 0;
  for (const auto& c : report) {
    results.push_back({{"id", c.id},
                       {"paper_ref", c.ref},
                       {"status", to_string(c.status)},
                       {"detail", c.residual ? nlohmann::json(*c.residual) : nlohmann::json(nullptr)}});
    (c.status == Status::pass ? passed : c.status == Status::fail ? failed : info) += 1;
  }
  nlohmann::json doc = {{"schema", "1"},
                        {"command", command},
                        {"inputs", inputs},
                        {"results", results},
                        {"summary", {{"passed", passed}, {"failed", failed}, {"informational", info}}}};
  if (!data.is_null()) doc["data"] = data;
  return doc;
}

nlohmann::json coverage_manifest(const Report& report) {
  std::set<int> eqs;
  std::set<std::string> sections;
  for (const auto& c : report) {
    // refs look like "Eq. 11", "Sec. 2.3", or "Sec. 2.2 / Eq. 11"
    std::stringstream ss(c.ref);
    std::string part;
    while (std::getline(ss, part, '/')) {
      const auto b = part.find_first_not_of(' ');
      const auto e = part.find_last_not_of(' ');
      if (b == std::string::npos) continue;
      part = part.substr(b, e - b + 1);
      if (part.rfind("Eq. ", 0) == 0) eqs.insert(std::stoi(part.substr(4)));
      else if (part.rfind("Sec. ", 0) == 0) sections.insert(part.substr(5));
    }
  }
  return {{"equations", std::vector<int>(eqs.begin(), eqs.end())},
          {"sections", std::vector<std::string>(sections.begin(), sections.end())}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-deformed supersymmetric quantum mechanics"};
  app.require_subcommand(1);
  Options o;
  std::string output, format = "json";
  app.add_option("--output", output, "write the report to this file instead of stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto add_common = [&](CLI::App* s) {
    s->add_option("--output", output, "write the report to this file instead of stdout");
    s->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* susy = app.add_subcommand("verify-susy", "q-SUSY algebra for a model");
  susy->add_option("--kind", o.kind, "undeformed, spiridonov, td or all");
  susy->add_option("--w", o.w, "polynomial superpotential, e.g. -x or x^3-x");
  susy->add_option("--q", o.q, "comma-separated rationals for a numeric cross-check");
  susy->add_flag("--intertwining", o.intertwining, "also check intertwining and the displayed bilinears");
  add_common(susy);

  auto* heis = app.add_subcommand("verify-heisenberg", "reconstruction of X and P from the TD ladder");
  heis->add_option("--q", o.q, "comma-separated rationals (q != 1)");
  heis->add_option("--m-max", o.m_max, "highest monomial degree checked");
  add_common(heis);

  auto* osc = app.add_subcommand("superoscillator", "displayed superoscillator identity lists");
  osc->add_option("--kind", o.kind, "spiridonov, td or all");
  osc->add_option("--q", o.q, "comma-separated rationals for numeric cross-checks");
  add_common(osc);

  auto* gs = app.add_subcommand("ground-state", "zero modes of the TD superoscillator");
  gs->add_option("--order", o.order, "highest degree");
  gs->add_option("--q", o.q, "rational q for numeric coefficients and classification");
  gs->add_option("--branch", o.branch, "f, f_tilde or both");
  add_common(gs);

  auto* tg = app.add_subcommand("td-gaussian", "ground state as a TD-exponent series");
  tg->add_option("--order", o.order, "highest degree");
  tg->add_option("--q", o.q, "rational q for numeric coefficients");
  add_common(tg);

  auto* sf = app.add_subcommand("specfun", "TD-analysis and hypergeometric evaluators");
  sf->add_option("--function", o.function, "checks, td_exp, pq_exp, q_exp, twin_phi, bibasic_td");
  sf->add_option("--z", o.z, "argument as a rational");
  sf->add_option("--q", o.q, "base q as a rational");
  sf->add_option("--p", o.p, "base p as a rational");
  sf->add_option("--mode", o.mode, "float or exact");
  sf->add_option("--terms", o.terms, "number of terms in exact mode");
  add_common(sf);

  auto* sp = app.add_subcommand("spectrum", "Fock ladder relations and energy levels");
  sp->add_option("--dim", o.dim, "matrix cutoff");
  sp->add_option("--q", o.q, "comma-separated rationals");
  add_common(sp);

  auto* dg = app.add_subcommand("degeneracy", "accidental pairwise level degeneracies");
  dg->add_option("--n", o.n, "first level");
  dg->add_option("--m", o.m, "second level");
  dg->add_option("--interval", o.interval, "lo,hi inside (0,1) or (1,inf)");
  dg->add_option("--n-max", o.n_max, "scan all pairs n < m <= n_max when --n/--m are absent");
  add_common(dg);

  auto* all = app.add_subcommand("all", "every suite, with a coverage manifest");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome result;
  try {
    if (command == "verify-susy") result = cmd_verify_susy(o);
    else if (command == "verify-heisenberg") result = cmd_verify_heisenberg(o);
    else if (command == "superoscillator") result = cmd_superoscillator(o);
    else if (command == "ground-state") result = cmd_ground_state(o);
    else if (command == "td-gaussian") result = cmd_td_gaussian(o);
    else if (command == "specfun") result = cmd_specfun(o);
    else if (command == "spectrum") result = cmd_spectrum(o);
    else if (command == "degeneracy") result = cmd_degeneracy(o);
    else result = cmd_all(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const nlohmann::json doc = make_document(command, result.inputs, result.report, result.data);
  const std::string text = format == "json" ? doc.dump(2) + "\n" : render_text(doc);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  return all_passed(result.report) ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qsusy"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qsusy::cli
