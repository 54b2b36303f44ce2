#include "connasym/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "connasym/models.hpp"
#include "connasym/oracle.hpp"
#include "connasym/species.hpp"

namespace connasym {

namespace {

PolyQ poly_from(std::initializer_list<long> ascending) {
  std::vector<BigRat> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return PolyQ(std::move(c));
}

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
  out.push_back({name, pass, pass ? std::string() : detail});
}

std::string mismatch(const std::string& what, const std::string& got,
                     const std::string& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

Egf random_series(std::mt19937& rng, int order, const BigRat& c0) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Egf a(RingTag::Rational, order);
  a.set_coeff(0, RingElem(c0));
  for (int k = 1; k <= order; ++k)
    a.set_coeff(k, RingElem(BigRat(num(rng), den(rng))));
  return a;
}

}  // namespace

const std::vector<std::vector<PolyQ>>& golden_graph_table() {
  static const std::vector<std::vector<PolyQ>> t = {
      {poly_from({1}), poly_from({-1}), poly_from({1, -1}),
       poly_from({-1, 3, -3, -1}), poly_from({1, -6, 15, -12, -15, -6, -1})},
      {poly_from({}), poly_from({1}), poly_from({-2, 1}),
       poly_from({3, -6, 3, 1}), poly_from({-4, 18, -30, 8, 15, 6, 1})},
      {poly_from({}), poly_from({}), poly_from({1}), poly_from({-3, 3}),
       poly_from({6, -18, 15, 4})},
      {poly_from({}), poly_from({}), poly_from({}), poly_from({1}),
       poly_from({-4, 6})},
      {poly_from({}), poly_from({}), poly_from({}), poly_from({}),
       poly_from({1})},
  };
  return t;
}

const std::vector<std::vector<PolyQ>>& golden_tournament_table() {
  static const std::vector<std::vector<PolyQ>> t = {
      {poly_from({1}), poly_from({-2}), poly_from({4, -2}),
       poly_from({-8, 12, -6, -2}),
       poly_from({16, -48, 60, -16, -30, -12, -2})},
      {poly_from({}), poly_from({2}), poly_from({-10, 2}),
       poly_from({38, -30, 6, 2}),
       poly_from({-130, 228, -150, -8, 30, 12, 2})},
      {poly_from({}), poly_from({}), poly_from({6}), poly_from({-54, 18}),
       poly_from({330, -324, 90, 24})},
      {poly_from({}), poly_from({}), poly_from({}), poly_from({24}),
       poly_from({-336, 144})},
      {poly_from({}), poly_from({}), poly_from({}), poly_from({}),
       poly_from({120})},
  };
  return t;
}

std::vector<CheckResult> verify_tables() {
  std::vector<CheckResult> out;
  const int k_max = 4;
  const int m_max = 5;
  const struct {
    const char* model;
    const char* label;
    const std::vector<std::vector<PolyQ>>& golden;
  } families[] = {
      {"er", "graph", golden_graph_table()},
      {"tournaments_ties", "tournament", golden_tournament_table()},
  };
  for (const auto& fam : families) {
    const ModelSpec spec = make_model(fam.model);
    std::vector<ExpansionTable> tables;
    for (int m = 1; m <= m_max; ++m)
      tables.push_back(d_coefficients(spec, m, k_max));
    for (int m = 1; m <= m_max; ++m) {
      bool ok = true;
      std::string detail;
      for (int k = 0; k <= k_max; ++k) {
        const PolyQ& got = tables[m - 1].d[k].poly();
        const PolyQ& want = fam.golden[m - 1][k];
        if (got != want && detail.empty()) {
          ok = false;
          std::ostringstream what;
          what << "d(k=" << k << ",m=" << m << ")";
          detail = mismatch(what.str(), got.str(), want.str());
        }
        ok = ok && got == want;
      }
      std::ostringstream name;
      name << fam.label << "_coefficients_m" << m;
      check(out, name.str(), ok, detail);
    }
    // Row sums over m telescope: only k = 0 carries weight 1.
    bool sums_ok = true;
    std::string detail;
    for (int k = 0; k <= k_max; ++k) {
      RingElem sum = RingElem::zero(spec.ring);
      for (int m = 1; m <= m_max; ++m) sum += tables[m - 1].d[k];
      const RingElem want =
          k == 0 ? RingElem::one(spec.ring) : RingElem::zero(spec.ring);
      if (sum != want && detail.empty()) {
        std::ostringstream what;
        what << "column sum at k=" << k;
        detail = mismatch(what.str(), sum.str(), want.str());
      }
      sums_ok = sums_ok && sum == want;
    }
    check(out, std::string(fam.label) + "_column_sums", sums_ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_sequences() {
  std::vector<CheckResult> out;
  {
    const ModelSpec spec = at_rho(make_model("tournaments_ties"), BigRat(1));
    const Egf a = model_series(spec, 4);
    const Egf b = connected_series(a, DecompKind::SEQ);
    const long want[] = {1, 0, 2, 24};
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 4; ++k) {
      const BigRat got = b.total_weight(k).rat();
      if (got != BigRat(want[k - 1]) && detail.empty()) {
        std::ostringstream what;
        what << "irreducible weight at k=" << k;
        detail = mismatch(what.str(), got.str(), BigRat(want[k - 1]).str());
      }
      ok = ok && got == BigRat(want[k - 1]);
    }
    check(out, "irreducible_tournament_weights", ok, detail);
  }
  {
    ModelParams p;
    p.P = 3;
    const ModelSpec spec = make_model("p_angulations", p);
    const ExpansionTable table = d_coefficients(spec, 1, 4);
    const BigRat want[] = {BigRat(15), BigRat(9045), BigRat(30085425),
                           BigRat(282543711975L)};
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 4; ++k) {
      const BigRat got = -table.d[k].rat();
      if (got != want[k - 1] && detail.empty()) {
        std::ostringstream what;
        what << "triangulation term at slot " << k;
        detail = mismatch(what.str(), got.str(), want[k - 1].str());
      }
      ok = ok && got == want[k - 1];
    }
    check(out, "triangulation_expansion_terms", ok, detail);
  }
  {
    ModelParams p;
    p.rho = BigRat(1, 3);
    const ModelSpec spec = make_model("er", p);
    const ExpansionTable table = d_coefficients(spec, 1, 4);
    const BigRat want[] = {BigRat(1), BigRat(-1), BigRat(2, 3),
                           BigRat(-10, 27), BigRat(8, 729)};
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= 4; ++k) {
      const BigRat got = table.d[k].rat();
      if (got != want[k] && detail.empty()) {
        std::ostringstream what;
        what << "weighted term at k=" << k;
        detail = mismatch(what.str(), got.str(), want[k].str());
      }
      ok = ok && got == want[k];
    }
    check(out, "edge_weight_one_quarter_expansion", ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_oracle(int k_max, int mass_max, int threads) {
  std::vector<CheckResult> out;
  {
    const ModelSpec spec = make_model("er");
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= k_max + 1; ++m) {
      const ExpansionTable table = d_coefficients(spec, m, k_max);
      for (int k = 0; k <= k_max; ++k) {
        const PolyQ got = p_polynomial(k, m, k_max);
        const PolyQ& want = table.d[k].poly();
        if (got != want && detail.empty()) {
          std::ostringstream what;
          what << "graph d(k=" << k << ",m=" << m << ")";
          detail = mismatch(what.str(), got.str(), want.str());
        }
        ok = ok && got == want;
      }
    }
    check(out, "graph_enumeration_matches_series", ok, detail);
  }
  {
    const ModelSpec spec = make_model("tournaments_ties");
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= k_max + 1; ++m) {
      const ExpansionTable table = d_coefficients(spec, m, k_max);
      for (int k = 0; k <= k_max; ++k) {
        const PolyQ got = q_polynomial(k, m, k_max);
        const PolyQ& want = table.d[k].poly();
        if (got != want && detail.empty()) {
          std::ostringstream what;
          what << "tournament d(k=" << k << ",m=" << m << ")";
          detail = mismatch(what.str(), got.str(), want.str());
        }
        ok = ok && got == want;
      }
    }
    check(out, "tournament_enumeration_matches_series", ok, detail);
  }
  const PolyQ pair_total = poly_from({1, 1});
  {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= mass_max; ++k) {
      const PolyQ got =
          enumerate_graph_components(k, mass_max, threads).total();
      const PolyQ want = pair_total.pow(k * (k - 1) / 2);
      if (got != want && detail.empty()) {
        std::ostringstream what;
        what << "graph mass at k=" << k;
        detail = mismatch(what.str(), got.str(), want.str());
      }
      ok = ok && got == want;
    }
    check(out, "graph_histogram_mass", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= mass_max; ++k) {
      const PolyQ got =
          enumerate_tournament_components(k, mass_max, threads).total();
      const PolyQ want = pair_total.pow(k * (k - 1) / 2);
      if (got != want && detail.empty()) {
        std::ostringstream what;
        what << "tournament mass at k=" << k;
        detail = mismatch(what.str(), got.str(), want.str());
      }
      ok = ok && got == want;
    }
    check(out, "tournament_histogram_mass", ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_identities(int order) {
  std::vector<CheckResult> out;
  if (order < 4) throw std::invalid_argument("identity order too small");
  std::mt19937 rng(12345);

  check(out, "composition_route_identity", equipotence_check(order),
        "the two inverse routes disagree");

  {
    const Egf a = random_series(rng, order, BigRat(1));
    const Egf b = random_series(rng, order, BigRat(0));
    const bool ok = exp(log(a)) == a && log(exp(b)) == b;
    check(out, "exp_log_round_trip", ok, "round trip altered coefficients");
  }
  {
    const Egf a = random_series(rng, order, BigRat(-3, 2));
    const bool ok = mult_inverse(mult_inverse(a)) == a;
    check(out, "reciprocal_round_trip", ok, "round trip altered coefficients");
  }
  {
    Egf f = random_series(rng, order, BigRat(0));
    f.set_coeff(1, RingElem(BigRat(2, 3)));
    const Egf g = comp_inverse(f);
    const Egf z = Egf::standard(StdSeries::Z, order);
    const bool ok = compose(f, g) == z && compose(g, f) == z;
    check(out, "substitution_round_trip", ok, "inverse pair missed identity");
  }
  {
    const Egf f = random_series(rng, order, BigRat(5));
    const Egf g = random_series(rng, order, BigRat(-2, 7));
    const bool ok =
        derivative(f * g) == derivative(f) * g + f * derivative(g);
    check(out, "product_rule", ok, "product rule failed");
  }
  {
    const int n = std::min(order, 10);
    const Egf a = model_series(make_model("tournaments_ties"), n);
    const Egf direct = connected_series(a, DecompKind::SEQ);
    const Egf lplus = Egf::standard(StdSeries::LPlus, n, a.ring());
    const Egf shifted = a - Egf::standard(StdSeries::One, n, a.ring());
    const Egf routed = compose(comp_inverse(lplus), shifted);
    check(out, "sequence_route_agreement", direct == routed,
          "reciprocal route and substitution route disagree");
  }
  {
    const Egf c = Egf::standard(StdSeries::C, order);
    const Egf z = Egf::standard(StdSeries::Z, order);
    check(out, "cycle_series_inverts_to_atom",
          connected_series(c, DecompKind::CYC) == z,
          "cycle decomposition of the cycle series is not the atom");
  }
  return out;
}

std::vector<CheckResult> verify_all() { return run_suite("all"); }

std::vector<CheckResult> run_suite(const std::string& suite, int k_max,
                                   int order, int threads) {
  if (suite != "tables" && suite != "sequences" && suite != "oracle" &&
      suite != "identities" && suite != "all")
    throw std::invalid_argument("unknown suite: " + suite);
  std::vector<CheckResult> out;
  const auto append = [&out](std::vector<CheckResult> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (suite == "tables" || suite == "all") append(verify_tables());
  if (suite == "sequences" || suite == "all") append(verify_sequences());
  if (suite == "oracle" || suite == "all")
    append(verify_oracle(k_max, 6, threads));
  if (suite == "identities" || suite == "all")
    append(verify_identities(order));
  return out;
}

}  // namespace connasym
