// Thin JSON-string bridge; the Python package decodes with json.loads.
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsusy/cli.hpp"
#include "qsusy/ground_state.hpp"
#include "qsusy/spectra.hpp"
#include "qsusy/susy.hpp"

namespace py = pybind11;
using namespace qsusy;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-deformed supersymmetric quantum mechanics";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  m.def("susy_checks", [](const std::string& kind, const std::string& w, const std::vector<std::string>& q) {
    const SusyModel model = build_model(parse_model_kind(kind), Superpotential::parse(w));
    Report r = verify_susy_algebra(model, parse_all(q));
    append(r, verify_intertwining(model));
    return dump(to_json(r));
  }, py::arg("kind"), py::arg("w") = "-x", py::arg("q") = std::vector<std::string>{});

  m.def("heisenberg_checks", [](const std::string& q, int m_max) {
    return dump(to_json(heisenberg_reconstruction(parse_rational(q), m_max)));
  }, py::arg("q"), py::arg("m_max") = 50);

  m.def("zero_mode", [](const std::string& branch, int order) {
    const ZeroModeSolution s = solve_zero_mode(parse_branch(branch), order);
    std::vector<std::string> out;
    for (const auto& c : s.coeffs.coefficients()) out.push_back(c.to_string());
    return out;
  }, py::arg("branch") = "f", py::arg("order") = 40);

  m.def("zero_mode_at", [](const std::string& branch, int order, const std::string& q) {
    const ScalarSeries s = eval_series(solve_zero_mode(parse_branch(branch), order).coeffs, parse_rational(q));
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) out.push_back(c.to_string());
    return out;
  }, py::arg("branch"), py::arg("order"), py::arg("q"));

  m.def("classify_normalizability", [](const std::string& branch, int order, const std::string& q) {
    const auto r = classify_normalizability(solve_zero_mode(parse_branch(branch), order), parse_rational(q));
    return py::make_tuple(to_string(r.kind), r.trend, r.note);
  }, py::arg("branch"), py::arg("order"), py::arg("q"));

  m.def("td_energy", [](int n) { return td_energy(n).to_string(); });

  m.def("td_exp_value", &td_exp_value, py::arg("z"), py::arg("q"));
  m.def("pq_exp", [](double z, double p, double q) {
    const FloatSum s = pq_exp(z, p, q);
    return py::make_tuple(s.value, s.terms_used, s.converged);
  }, py::arg("z"), py::arg("p"), py::arg("q"));

  m.def("find_degeneracy", [](int n, int mm, double lo, double hi) -> py::object {
    const auto r = find_degeneracy(n, mm, lo, hi);
    if (!r) return py::none();
    return py::str(dump(to_json(*r)));
  }, py::arg("n"), py::arg("m"), py::arg("lo") = 0.0, py::arg("hi") = 1.0);

  m.def("scan_degeneracies", [](int n_max, double lo, double hi) {
    auto arr = nlohmann::json::array();
    for (const auto& r : scan_degeneracies(n_max, lo, hi)) arr.push_back(to_json(r));
    return dump(arr);
  }, py::arg("n_max") = 5, py::arg("lo") = 0.0, py::arg("hi") = 1.0);
}
