#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "connasym/expansion.hpp"
#include "connasym/jsonio.hpp"
#include "connasym/models.hpp"
#include "connasym/oracle.hpp"
#include "connasym/verify.hpp"

namespace {

using connasym::BigRat;
using connasym::njson;

struct GlobalArgs {
  std::string format = "json";
  int digits = 12;
  int threads = 1;
};

struct ModelArgs {
  std::string id;
  long d = 0;
  long P = 0;
  long D = 0;
  std::string rho;
  std::string p;
  std::string p_decimal;
  CLI::Option* has_d = nullptr;
  CLI::Option* has_P = nullptr;
  CLI::Option* has_D = nullptr;
  CLI::Option* has_rho = nullptr;
  CLI::Option* has_p = nullptr;
  CLI::Option* has_pdec = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--model", id, "model id from the catalog")->required();
    has_d = sub->add_option("--d", d, "edge multiplicity bound (multigraphs)");
    has_P = sub->add_option("--P", P, "polygon size (p_angulations)");
    has_D = sub->add_option("--D", D, "dimension (gem)");
    has_rho = sub->add_option("--rho", rho, "exact mark weight, e.g. 1/3");
    has_p = sub->add_option("--p", p,
                            "mark probability as a rational; rho = p/(1-p)");
    has_pdec = sub->add_option("--p-decimal", p_decimal,
                               "mark probability as a terminating decimal");
  }

  connasym::ModelSpec build() const {
    njson j = njson::object();
    if (has_d->count()) j["d"] = d;
    if (has_P->count()) j["P"] = P;
    if (has_D->count()) j["D"] = D;
    if (has_rho->count()) j["rho"] = rho;
    if (has_p->count()) j["p"] = p;
    if (has_pdec->count()) j["p_decimal"] = p_decimal;
    return connasym::make_model(id, connasym::params_from_json(j));
  }
};

struct SizeArgs {
  long n = 0;
  long size = 0;
  CLI::Option* has_n = nullptr;
  CLI::Option* has_size = nullptr;

  void attach(CLI::App* sub) {
    has_n = sub->add_option("--n", n, "structure size (raw atom count)");
    has_size = sub->add_option("--size", size, "alias for --n");
  }

  long value() const {
    if ((has_n->count() > 0) == (has_size->count() > 0))
      throw std::invalid_argument("give exactly one of --n and --size");
    return has_n->count() ? n : size;
  }
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += "\"";
  return q;
}

void emit_json(const njson& j) { std::cout << j.dump(2) << "\n"; }

int run_expand(const GlobalArgs& g, const ModelArgs& ma, const SizeArgs& sa,
               int m, int order, bool no_exact) {
  const connasym::ModelSpec model = ma.build();
  const connasym::ExpansionEvaluation ev =
      connasym::expansion_terms(model, m, sa.value(), order, !no_exact);
  if (g.format == "json") {
    emit_json(connasym::evaluation_json(ev));
  } else if (g.format == "csv") {
    std::cout << "k,d,term,partial_sum,residual\n";
    for (size_t k = 0; k < ev.terms.size(); ++k) {
      std::cout << k << "," << ev.d[k].str() << "," << ev.terms[k].str() << ","
                << ev.partial_sums[k].str() << ","
                << (ev.exact ? ev.residuals[k].str() : std::string()) << "\n";
    }
  } else {
    std::cout << "model " << ev.model << "  m=" << ev.m << "  n=" << ev.n
              << "  order=" << ev.order << "  stride=" << ev.stride << "\n";
    if (ev.rho) std::cout << "rho " << ev.rho->str() << "\n";
    for (size_t k = 0; k < ev.terms.size(); ++k) {
      std::cout << "  k=" << k << "  d=" << ev.d[k].str() << "  term="
                << ev.terms[k].str() << "  partial_sum="
                << ev.partial_sums[k].str() << "\n";
    }
    if (ev.exact) {
      std::cout << "exact " << ev.exact->str() << " ("
                << ev.exact->decimal(g.digits) << ")\n";
      std::cout << "residuals";
      for (const BigRat& r : ev.residuals) std::cout << " " << r.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_exact(const GlobalArgs& g, const ModelArgs& ma, const SizeArgs& sa,
              int m) {
  const connasym::ModelSpec model = ma.build();
  const long n = sa.value();
  const BigRat v = connasym::exact_probability(model, m, n);
  if (g.format == "json") {
    emit_json(njson{{"model", model.display},
                    {"m", m},
                    {"n", n},
                    {"exact", v.str()},
                    {"decimal", v.decimal(g.digits)}});
  } else if (g.format == "csv") {
    std::cout << "model,m,n,exact,decimal\n"
              << csv_cell(model.display) << "," << m << "," << n << ","
              << v.str() << "," << v.decimal(g.digits) << "\n";
  } else {
    std::cout << "model " << model.display << "  m=" << m << "  n=" << n
              << "\nexact " << v.str() << " (" << v.decimal(g.digits) << ")\n";
  }
  return 0;
}

int run_verify(const GlobalArgs& g, const std::string& suite, int kmax,
               int order) {
  const std::vector<connasym::CheckResult> checks =
      connasym::run_suite(suite, kmax, order, g.threads);

  int failed = 0;
  for (const auto& r : checks)
    if (!r.pass) ++failed;
  const int passed = static_cast<int>(checks.size()) - failed;

  if (g.format == "json") {
    njson rows = njson::array();
    for (const auto& r : checks)
      rows.push_back(
          njson{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit_json(njson{{"suite", suite},
                    {"checks", rows},
                    {"passed", passed},
                    {"failed", failed},
                    {"pass", failed == 0}});
  } else if (g.format == "csv") {
    std::cout << "name,pass,detail\n";
    for (const auto& r : checks)
      std::cout << csv_cell(r.name) << "," << (r.pass ? "true" : "false")
                << "," << csv_cell(r.detail) << "\n";
  } else {
    for (const auto& r : checks) {
      if (r.pass) std::cout << "[PASS] " << r.name << "\n";
      else std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
    }
    std::cout << passed << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

int run_oracle(const GlobalArgs& g, const std::string& family, int k, int cap,
               CLI::Option* has_cap, const std::string& rho_text,
               CLI::Option* has_rho) {
  if (!has_cap->count())
    cap = family == "graphs" ? connasym::kGraphEnumCap
                             : connasym::kTournamentEnumCap;
  const connasym::ComponentHistogram h =
      family == "graphs"
          ? connasym::enumerate_graph_components(k, cap, g.threads)
          : connasym::enumerate_tournament_components(k, cap, g.threads);

  std::vector<std::pair<int, std::string>> rows;
  std::string rho_str;
  if (has_rho->count()) {
    const BigRat rho = BigRat::parse(rho_text);
    rho_str = rho.str();
    for (const auto& [c, w] : h.buckets) rows.emplace_back(c, w.eval(rho).str());
  } else {
    for (const auto& [c, w] : h.buckets) rows.emplace_back(c, w.str());
  }

  if (g.format == "json") {
    njson buckets = njson::object();
    for (const auto& [c, w] : rows) buckets[std::to_string(c)] = w;
    njson j{{"family", family}, {"k", h.k}, {"buckets", buckets}};
    if (has_rho->count()) j["rho"] = rho_str;
    emit_json(j);
  } else if (g.format == "csv") {
    std::cout << "components,weight\n";
    for (const auto& [c, w] : rows) std::cout << c << "," << csv_cell(w) << "\n";
  } else {
    std::cout << "family " << family << "  k=" << h.k;
    if (has_rho->count()) std::cout << "  rho=" << rho_str;
    std::cout << "\n";
    for (const auto& [c, w] : rows) std::cout << "  " << c << ": " << w << "\n";
  }
  return 0;
}

int run_probe(const GlobalArgs& g, const ModelArgs& ma, long nmax) {
  const connasym::ModelSpec model = ma.build();
  const connasym::GrowthReport rep = connasym::growth_probe(model, nmax);
  if (g.format == "json") {
    emit_json(connasym::growth_json(rep));
  } else if (g.format == "csv") {
    std::cout << "n,ratio,verdict\n";
    for (const auto& [n, r] : rep.ratios)
      std::cout << n << "," << r.str() << "," << rep.verdict << "\n";
  } else {
    std::cout << "model " << rep.model << "  n_max=" << rep.n_max
              << "  stride=" << rep.stride << "  window=" << rep.window
              << "\n";
    for (const auto& [n, r] : rep.ratios)
      std::cout << "  n=" << n << "  ratio=" << r.str() << " ("
                << r.decimal(g.digits) << ")\n";
    for (const auto& v : rep.violations)
      std::cout << "  violation at n=" << v.n << " [" << v.check
                << "]: " << v.detail << "\n";
    std::cout << "verdict: " << rep.verdict << "\n";
    if (!rep.note.empty()) std::cout << rep.note << "\n";
  }
  return 0;
}

int run_models(const GlobalArgs& g) {
  if (g.format == "json") {
    emit_json(connasym::models_listing_json());
  } else if (g.format == "csv") {
    std::cout << "id,kind,stride,params,weights\n";
    for (const auto& info : connasym::list_models())
      std::cout << csv_cell(info.id) << "," << decomp_name(info.kind) << ","
                << csv_cell(info.stride_rule) << "," << csv_cell(info.params)
                << "," << csv_cell(info.weights) << "\n";
  } else {
    for (const auto& info : connasym::list_models()) {
      std::cout << info.id << "  [" << decomp_name(info.kind) << ", stride "
                << info.stride_rule << "]";
      if (!info.params.empty()) std::cout << "  params: " << info.params;
      std::cout << "  weights: " << info.weights << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact asymptotic expansions of connectivity probabilities"};
  app.require_subcommand(1);

  GlobalArgs g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", g.digits, "fractional digits in decimal output")
      ->check(CLI::Range(1, 10000));
  app.add_option("--threads", g.threads, "worker threads for enumeration")
      ->check(CLI::Range(1, 1024));

  CLI::App* expand =
      app.add_subcommand("expand", "evaluate expansion terms at one size");
  expand->fallthrough();
  ModelArgs expand_model;
  expand_model.attach(expand);
  SizeArgs expand_size;
  expand_size.attach(expand);
  int expand_m = 1;
  int expand_order = 0;
  bool expand_no_exact = false;
  expand->add_option("--m", expand_m, "number of pieces")
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--order", expand_order, "truncation order")
      ->required()
      ->check(CLI::NonNegativeNumber);
  expand->add_flag("--no-exact", expand_no_exact,
                   "skip the exact reference probability");

  CLI::App* exact =
      app.add_subcommand("exact", "exact probability of having m pieces");
  exact->fallthrough();
  ModelArgs exact_model;
  exact_model.attach(exact);
  SizeArgs exact_size;
  exact_size.attach(exact);
  int exact_m = 1;
  exact->add_option("--m", exact_m, "number of pieces")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify =
      app.add_subcommand("verify", "run the self-verification suites");
  verify->fallthrough();
  std::string verify_suite = "all";
  int verify_kmax = 4;
  int verify_order = 12;
  verify->add_option("--suite", verify_suite, "which suite to run")
      ->check(CLI::IsMember({"tables", "sequences", "oracle", "identities",
                             "all"}));
  verify->add_option("--kmax", verify_kmax, "oracle comparison bound")
      ->check(CLI::Range(1, 7));
  verify->add_option("--order", verify_order, "identity truncation order")
      ->check(CLI::Range(4, 200));

  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force component histogram");
  oracle->fallthrough();
  std::string oracle_family;
  int oracle_k = 0;
  int oracle_cap = 0;
  std::string oracle_rho;
  oracle->add_option("family", oracle_family, "graphs or ties")
      ->required()
      ->check(CLI::IsMember({"graphs", "ties"}));
  oracle->add_option("--k", oracle_k, "number of labeled atoms")
      ->required()
      ->check(CLI::NonNegativeNumber);
  CLI::Option* oracle_has_cap =
      oracle->add_option("--cap", oracle_cap, "enumeration size cap");
  CLI::Option* oracle_has_rho = oracle->add_option(
      "--rho", oracle_rho, "evaluate bucket weights at this exact rho");

  CLI::App* probe =
      app.add_subcommand("probe", "finite-window growth diagnostic");
  probe->fallthrough();
  ModelArgs probe_model;
  probe_model.attach(probe);
  long probe_nmax = 30;
  probe->add_option("--nmax", probe_nmax, "largest size inspected")
      ->check(CLI::PositiveNumber);

  CLI::App* models = app.add_subcommand("models", "list the model catalog");
  models->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand)
      return run_expand(g, expand_model, expand_size, expand_m, expand_order,
                        expand_no_exact);
    if (*exact) return run_exact(g, exact_model, exact_size, exact_m);
    if (*verify) return run_verify(g, verify_suite, verify_kmax, verify_order);
    if (*oracle)
      return run_oracle(g, oracle_family, oracle_k, oracle_cap, oracle_has_cap,
                        oracle_rho, oracle_has_rho);
    if (*probe) return run_probe(g, probe_model, probe_nmax);
    if (*models) return run_models(g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
