#include <pybind11/operators.h>
#include <pybind11/pybind11.h>

#include <string>

#include "connasym/expansion.hpp"
#include "connasym/jsonio.hpp"
#include "connasym/models.hpp"
#include "connasym/oracle.hpp"
#include "connasym/verify.hpp"

namespace py = pybind11;

namespace {

using connasym::BigRat;
using connasym::njson;

connasym::ModelSpec model_from(const std::string& id,
                               const std::string& params_json) {
  const njson j =
      params_json.empty() ? njson::object() : njson::parse(params_json);
  return connasym::make_model(id, connasym::params_from_json(j));
}

njson checks_json(const std::vector<connasym::CheckResult>& checks) {
  njson rows = njson::array();
  int failed = 0;
  for (const auto& r : checks) {
    rows.push_back(
        njson{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++failed;
  }
  return njson{{"checks", rows},
               {"passed", static_cast<int>(checks.size()) - failed},
               {"failed", failed},
               {"pass", failed == 0}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact expansions of connectivity probabilities (C++ core)";

  py::class_<BigRat>(m, "Rat")
      .def(py::init([](const std::string& s) { return BigRat::parse(s); }))
      .def(py::init<long>())
      .def(py::init([](long num, long den) { return BigRat(num, den); }))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def("__pow__", [](const BigRat& a, long e) { return a.pow(e); })
      .def("decimal", &BigRat::decimal, py::arg("digits") = 12)
      .def("__str__", &BigRat::str)
      .def("__repr__",
           [](const BigRat& a) { return "Rat('" + a.str() + "')"; });

  m.def("version", [] { return std::string("0.1.0"); });

  m.def("models_json", [] { return connasym::models_listing_json().dump(); });

  m.def(
      "d_table_json",
      [](const std::string& model, const std::string& params, int m,
         int k_max) {
        const auto spec = model_from(model, params);
        return connasym::table_json(connasym::d_coefficients(spec, m, k_max))
            .dump();
      },
      py::arg("model"), py::arg("params") = "", py::arg("m") = 1,
      py::arg("k_max") = 4);

  m.def(
      "expansion_json",
      [](const std::string& model, const std::string& params, int m, long n,
         int order, bool with_exact) {
        const auto spec = model_from(model, params);
        return connasym::evaluation_json(
                   connasym::expansion_terms(spec, m, n, order, with_exact))
            .dump();
      },
      py::arg("model"), py::arg("params"), py::arg("m"), py::arg("n"),
      py::arg("order"), py::arg("with_exact") = true);

  m.def(
      "exact_probability_str",
      [](const std::string& model, const std::string& params, int m, long n) {
        return connasym::exact_probability(model_from(model, params), m, n)
            .str();
      },
      py::arg("model"), py::arg("params"), py::arg("m"), py::arg("n"));

  m.def(
      "leading_term_json",
      [](const std::string& model, const std::string& params, int m, long n) {
        return connasym::leading_json(
                   connasym::leading_term(model_from(model, params), m, n))
            .dump();
      },
      py::arg("model"), py::arg("params"), py::arg("m"), py::arg("n"));

  m.def(
      "oracle_graphs_json",
      [](int k, int cap, int threads) {
        if (cap < 0) cap = connasym::kGraphEnumCap;
        njson j = connasym::histogram_json(
            connasym::enumerate_graph_components(k, cap, threads));
        j["family"] = "graphs";
        return j.dump();
      },
      py::arg("k"), py::arg("cap") = -1, py::arg("threads") = 1);

  m.def(
      "oracle_ties_json",
      [](int k, int cap, int threads) {
        if (cap < 0) cap = connasym::kTournamentEnumCap;
        njson j = connasym::histogram_json(
            connasym::enumerate_tournament_components(k, cap, threads));
        j["family"] = "ties";
        return j.dump();
      },
      py::arg("k"), py::arg("cap") = -1, py::arg("threads") = 1);

  m.def(
      "probe_json",
      [](const std::string& model, const std::string& params, long n_max) {
        return connasym::growth_json(
                   connasym::growth_probe(model_from(model, params), n_max))
            .dump();
      },
      py::arg("model"), py::arg("params"), py::arg("n_max"));

  m.def(
      "convergence_json",
      [](const std::string& model, const std::string& params, int m, long n_lo,
         long n_hi, int order, const std::string& bound) {
        return connasym::convergence_json(
                   connasym::convergence_report(model_from(model, params), m,
                                                n_lo, n_hi, order,
                                                BigRat::parse(bound)))
            .dump();
      },
      py::arg("model"), py::arg("params"), py::arg("m"), py::arg("n_lo"),
      py::arg("n_hi"), py::arg("order"), py::arg("bound") = "10");

  m.def(
      "verify_json",
      [](const std::string& suite, int k_max, int order, int threads) {
        njson j = checks_json(connasym::run_suite(suite, k_max, order, threads));
        j["suite"] = suite;
        return j.dump();
      },
      py::arg("suite") = "all", py::arg("k_max") = 4, py::arg("order") = 12,
      py::arg("threads") = 1);
}
