#include "connasym/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace connasym {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

BigRat int_pow(long base, long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return BigRat(z);
}

void forbid(const std::optional<long>& v, const char* name, const std::string& id) {
  if (v) throw std::invalid_argument("model " + id + " takes no parameter " + name);
}

long require(const std::optional<long>& v, const char* name, const std::string& id) {
  if (!v) throw std::invalid_argument("model " + id + " requires parameter " + name);
  return *v;
}

// Graph-like families: (rho+1)^C(n,2) in the requested ring.
std::function<RingElem(long)> pair_state_weight(std::optional<BigRat> rho) {
  if (rho) {
    const BigRat base = *rho + BigRat(1);
    return [base](long n) { return RingElem(base.pow(choose2(n))); };
  }
  const PolyQ base(std::vector<BigRat>{BigRat(1), BigRat(1)});
  return [base](long n) {
    return RingElem(base.pow(static_cast<int>(choose2(n))));
  };
}

}  // namespace

std::vector<ModelInfo> list_models() {
  return {
      {"simple_graphs", DecompKind::SET, "1", "",
       "2^C(n,2)"},
      {"multigraphs", DecompKind::SET, "1", "d>=1",
       "(d+1)^C(n,2)"},
      {"er", DecompKind::SET, "1", "rho (optional; symbolic without it)",
       "(rho+1)^C(n,2)"},
      {"tournaments_ties", DecompKind::SEQ, "1",
       "rho (optional; symbolic without it)", "(rho+1)^C(n,2)"},
      {"qss", DecompKind::SET, "1", "", "((2n-1)!!)^2"},
      {"p_angulations", DecompKind::SET, "1 for even P, 2 for odd P", "P>=3",
       "(P*n-1)!! when P*n is even, else 0"},
      {"triangulations", DecompKind::SET, "2", "",
       "(3n-1)!! when n is even, else 0"},
      {"gem", DecompKind::SET, "2", "D>=2",
       "((n-1)!!)^(D+1) for even n, else 0"},
      {"constant_test", DecompKind::SET, "1", "", "1"},
  };
}

ModelSpec make_model(const std::string& id, const ModelParams& params) {
  ModelSpec m;
  m.id = id;
  m.display = id;
  m.params = params;

  auto weighted_display = [&]() {
    m.weighted = true;
    if (params.rho) {
      m.ring = RingTag::Rational;
      m.display = id + "(rho=" + params.rho->str() + ")";
    } else {
      m.ring = RingTag::PolynomialInRho;
      m.display = id + "(rho)";
    }
  };

  if (id == "simple_graphs") {
    forbid(params.d, "d", id); forbid(params.P, "P", id); forbid(params.D, "D", id);
    if (params.rho) throw std::invalid_argument("model simple_graphs takes no rho");
    m.weight = [](long n) { return RingElem(int_pow(2, choose2(n))); };
  } else if (id == "multigraphs") {
    forbid(params.P, "P", id); forbid(params.D, "D", id);
    if (params.rho) throw std::invalid_argument("model multigraphs takes no rho");
    const long d = require(params.d, "d", id);
    if (d < 1) throw std::invalid_argument("multigraphs requires d >= 1");
    m.display = id + "(d=" + std::to_string(d) + ")";
    m.weight = [d](long n) { return RingElem(int_pow(d + 1, choose2(n))); };
  } else if (id == "er" || id == "tournaments_ties") {
    forbid(params.d, "d", id); forbid(params.P, "P", id); forbid(params.D, "D", id);
    weighted_display();
    if (id == "tournaments_ties") m.kind = DecompKind::SEQ;
    m.weight = pair_state_weight(params.rho);
  } else if (id == "qss") {
    forbid(params.d, "d", id); forbid(params.P, "P", id); forbid(params.D, "D", id);
    if (params.rho) throw std::invalid_argument("model qss takes no rho");
    m.weight = [](long n) {
      const mpz_class f = double_factorial_z(2 * n - 1);
      const mpz_class sq = f * f;
      return RingElem(BigRat(sq));
    };
  } else if (id == "p_angulations" || id == "triangulations") {
    forbid(params.d, "d", id); forbid(params.D, "D", id);
    if (params.rho) throw std::invalid_argument("model takes no rho");
    long P = 3;
    if (id == "p_angulations") {
      P = require(params.P, "P", id);
      if (P < 3) throw std::invalid_argument("p_angulations requires P >= 3");
      m.display = id + "(P=" + std::to_string(P) + ")";
    } else {
      forbid(params.P, "P", id);
    }
    m.stride = (P % 2 == 0) ? 1 : 2;
    m.weight = [P](long n) {
      if ((P * n) % 2 != 0) return RingElem(BigRat(0));
      return RingElem(BigRat(double_factorial_z(P * n - 1)));
    };
  } else if (id == "gem") {
    forbid(params.d, "d", id); forbid(params.P, "P", id);
    if (params.rho) throw std::invalid_argument("model gem takes no rho");
    const long D = require(params.D, "D", id);
    if (D < 2) throw std::invalid_argument("gem requires D >= 2");
    m.display = id + "(D=" + std::to_string(D) + ")";
    m.stride = 2;
    m.weight = [D](long n) {
      if (n % 2 != 0) return RingElem(BigRat(0));
      mpz_class f = double_factorial_z(n - 1), r;
      mpz_pow_ui(r.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(D + 1));
      return RingElem(BigRat(r));
    };
  } else if (id == "constant_test") {
    forbid(params.d, "d", id); forbid(params.P, "P", id); forbid(params.D, "D", id);
    if (params.rho) throw std::invalid_argument("model constant_test takes no rho");
    m.weight = [](long) { return RingElem(BigRat(1)); };
  } else {
    throw std::invalid_argument("unknown model: " + id);
  }
  return m;
}

ModelSpec at_rho(const ModelSpec& model, const BigRat& rho) {
  if (!model.weighted)
    throw std::invalid_argument("model " + model.id + " takes no rho");
  ModelParams p = model.params;
  p.rho = rho;
  return make_model(model.id, p);
}

RingElem weight_sequence(const ModelSpec& model, long n) {
  if (n < 0) throw std::invalid_argument("negative size");
  return model.weight(n);
}

Egf model_series(const ModelSpec& model, int k_max) {
  if (k_max < 0) throw std::invalid_argument("negative truncation order");
  const int p = model.stride;
  for (long n = 1; n <= static_cast<long>(p) * k_max; ++n)
    if (n % p != 0 && !model.weight(n).is_zero())
      throw std::invalid_argument("weights do not match the declared stride");
  Egf a(model.ring, k_max, p);
  for (int k = 0; k <= k_max; ++k)
    a.set_coeff(k, model.weight(static_cast<long>(p) * k) /
                       factorial(static_cast<long>(p) * k));
  return a;
}

int infer_stride(const ModelSpec& model, long bound) {
  for (int p = 1; p <= 8; ++p) {
    bool ok = true;
    for (long n = 1; n <= bound && ok; ++n)
      ok = model.weight(n).is_zero() == (n % p != 0);
    if (ok) return p;
  }
  throw std::invalid_argument("no stride in 1..8 matches the weight sequence");
}

GrowthReport growth_probe(const ModelSpec& model, long n_max) {
  // Symbolic weighted models are probed at rho = 1.
  if (model.ring != RingTag::Rational)
    return growth_probe(at_rho(model, BigRat(1)), n_max);
  if (model.params.rho && *model.params.rho <= BigRat(0))
    throw std::domain_error("growth probe requires rho > 0");
  if (n_max < 1) throw std::invalid_argument("window must be positive");

  GrowthReport rep;
  rep.model = model.display;
  rep.n_max = n_max;
  rep.stride = model.stride;
  rep.window = n_max / model.stride;
  rep.note = "finite-window diagnostic only, not a certificate";

  const long w = rep.window;
  if (w < 8) {
    rep.verdict = "inconclusive";
    rep.violations.push_back({n_max, "window", "fewer than 8 usable slots"});
    return rep;
  }

  const Egf series = model_series(model, static_cast<int>(w));
  std::vector<BigRat> a(static_cast<size_t>(w) + 1);
  for (long k = 0; k <= w; ++k) {
    a[static_cast<size_t>(k)] = series.coeff(static_cast<int>(k)).rat();
    if (a[static_cast<size_t>(k)].is_zero()) {
      rep.verdict = "inconclusive";
      rep.violations.push_back({k, "zero", "vanishing coefficient in window"});
      return rep;
    }
  }

  for (long k = 1; k <= w; ++k)
    rep.ratios.emplace_back(k, BigRat(k) * a[static_cast<size_t>(k - 1)] /
                                   a[static_cast<size_t>(k)]);

  // Dominant-ratio decay, judged over the last quarter of the window.
  rep.ratio_ok = true;
  const long tail = std::max<long>(2, w - w / 4);
  for (long k = tail + 1; k <= w; ++k) {
    const BigRat& prev = rep.ratios[static_cast<size_t>(k - 2)].second;
    const BigRat& cur = rep.ratios[static_cast<size_t>(k - 1)].second;
    if (!(cur < prev)) {
      rep.ratio_ok = false;
      rep.violations.push_back({k, "ratio", "n*a(n-1)/a(n) did not decrease"});
    }
  }

  // End products must dominate: a_k * a_{n-k} strictly decreasing while
  // the pair stays left of the midpoint.
  rep.convolution_ok = true;
  for (long n = 4; n <= w; ++n) {
    for (long k = 0; 2 * (k + 1) < n; ++k) {
      const BigRat x0 =
          (a[static_cast<size_t>(k)] * a[static_cast<size_t>(n - k)]).abs();
      const BigRat x1 = (a[static_cast<size_t>(k + 1)] *
                         a[static_cast<size_t>(n - k - 1)]).abs();
      if (!(x1 < x0)) {
        rep.convolution_ok = false;
        rep.violations.push_back(
            {n, "convolution", "a(k)a(n-k) not decreasing at k=" + std::to_string(k)});
      }
    }
  }

  rep.verdict = (rep.ratio_ok && rep.convolution_ok) ? "pass" : "fail";
  return rep;
}

}  // namespace connasym
