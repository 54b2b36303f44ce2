#include "connasym/jsonio.hpp"

#include <stdexcept>

namespace connasym {

njson rat_json(const BigRat& q) { return q.str(); }

njson poly_json(const PolyQ& p) {
  njson coeffs = njson::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
  return njson{{"var", "rho"}, {"coeffs", coeffs}};
}

PolyQ poly_from_json(const njson& j) {
  std::vector<BigRat> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(BigRat::parse(c.get<std::string>()));
  return PolyQ(std::move(cs));
}

njson ring_elem_json(const RingElem& e) {
  if (e.ring() == RingTag::Rational) return rat_json(e.rat());
  return poly_json(e.poly());
}

njson egf_json(const Egf& a) {
  njson coeffs = njson::array();
  for (int k = 0; k <= a.order(); ++k) coeffs.push_back(ring_elem_json(a.coeff(k)));
  return njson{{"ring", ring_name(a.ring())},
               {"order", a.order()},
               {"stride", a.stride()},
               {"coeffs", coeffs}};
}

njson table_json(const ExpansionTable& t) {
  njson d = njson::array();
  for (const auto& e : t.d) d.push_back(ring_elem_json(e));
  return njson{{"model", t.model},
               {"kind", decomp_name(t.kind)},
               {"m", t.m},
               {"stride", t.stride},
               {"d", d}};
}

njson histogram_json(const ComponentHistogram& h) {
  njson buckets = njson::object();
  for (const auto& [c, w] : h.buckets) buckets[std::to_string(c)] = w.str();
  return njson{{"k", h.k}, {"buckets", buckets}};
}

namespace {
njson rat_list(const std::vector<BigRat>& v) {
  njson a = njson::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}
}  // namespace

njson evaluation_json(const ExpansionEvaluation& ev) {
  njson j{{"model", ev.model},   {"m", ev.m},
          {"n", ev.n},           {"order", ev.order},
          {"stride", ev.stride}, {"d", rat_list(ev.d)},
          {"terms", rat_list(ev.terms)},
          {"partial_sums", rat_list(ev.partial_sums)}};
  j["rho"] = ev.rho ? njson(ev.rho->str()) : njson(nullptr);
  j["exact"] = ev.exact ? njson(ev.exact->str()) : njson(nullptr);
  j["residuals"] = rat_list(ev.residuals);
  return j;
}

njson leading_json(const LeadingTerm& lt) {
  return njson{{"k", lt.k},
               {"exact_term", lt.exact_term.str()},
               {"form", lt.form},
               {"form_value", lt.form_value.str()}};
}

njson growth_json(const GrowthReport& rep) {
  njson ratios = njson::array();
  for (const auto& [n, r] : rep.ratios)
    ratios.push_back(njson{{"n", n}, {"value", r.str()}});
  njson violations = njson::array();
  for (const auto& v : rep.violations)
    violations.push_back(njson{{"n", v.n}, {"check", v.check}, {"detail", v.detail}});
  return njson{{"model", rep.model},
               {"n_max", rep.n_max},
               {"stride", rep.stride},
               {"window", rep.window},
               {"ratios", ratios},
               {"ratio_ok", rep.ratio_ok},
               {"convolution_ok", rep.convolution_ok},
               {"violations", violations},
               {"verdict", rep.verdict},
               {"note", rep.note}};
}

njson convergence_json(const ConvergenceReport& rep) {
  njson rows = njson::array();
  for (const auto& r : rep.rows) {
    njson row{{"n", r.n},
              {"exact", r.exact.str()},
              {"partial", r.partial.str()},
              {"residual", r.residual.str()},
              {"next_term", r.next_term.str()},
              {"ok", r.ok}};
    row["ratio"] = r.ratio ? njson(r.ratio->str()) : njson(nullptr);
    rows.push_back(row);
  }
  return njson{{"model", rep.model}, {"m", rep.m},
               {"order", rep.order}, {"bound", rep.bound.str()},
               {"rows", rows},       {"bounded", rep.bounded}};
}

njson models_listing_json() {
  njson arr = njson::array();
  for (const auto& info : list_models())
    arr.push_back(njson{{"id", info.id},
                        {"kind", decomp_name(info.kind)},
                        {"stride", info.stride_rule},
                        {"params", info.params},
                        {"weights", info.weights}});
  return njson{{"models", arr}};
}

BigRat rho_from_probability(const BigRat& p) {
  if (!(BigRat(0) < p && p < BigRat(1)))
    throw std::invalid_argument("probability must satisfy 0 < p < 1");
  return p / (BigRat(1) - p);
}

ModelParams params_from_json(const njson& j) {
  ModelParams params;
  int rho_sources = 0;
  for (const auto& [key, value] : j.items()) {
    if (key == "d") params.d = value.get<long>();
    else if (key == "P") params.P = value.get<long>();
    else if (key == "D") params.D = value.get<long>();
    else if (key == "rho") {
      params.rho = BigRat::parse(value.get<std::string>());
      ++rho_sources;
    } else if (key == "p") {
      params.rho = rho_from_probability(BigRat::parse(value.get<std::string>()));
      ++rho_sources;
    } else if (key == "p_decimal") {
      params.rho =
          rho_from_probability(BigRat::parse_decimal(value.get<std::string>()));
      ++rho_sources;
    } else {
      throw std::invalid_argument("unknown model parameter: " + key);
    }
  }
  if (rho_sources > 1)
    throw std::invalid_argument("give at most one of rho, p, p_decimal");
  return params;
}

}  // namespace connasym
