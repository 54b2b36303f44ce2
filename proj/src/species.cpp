#include "connasym/species.hpp"

#include <stdexcept>

#include "connasym/models.hpp"

namespace connasym {

const char* decomp_name(DecompKind k) {
  switch (k) {
    case DecompKind::SET: return "SET";
    case DecompKind::SEQ: return "SEQ";
    case DecompKind::CYC: return "CYC";
  }
  return "?";
}

DecompKind decomp_from_name(const std::string& name) {
  if (name == "SET") return DecompKind::SET;
  if (name == "SEQ") return DecompKind::SEQ;
  if (name == "CYC") return DecompKind::CYC;
  throw std::invalid_argument("unknown decomposition kind: " + name);
}

namespace {

Egf one_like(const Egf& a) {
  Egf r(a.ring(), a.order(), a.stride());
  r.set_coeff(0, RingElem::one(a.ring()));
  return r;
}

}  // namespace

Egf connected_series(const Egf& a, DecompKind kind) {
  switch (kind) {
    case DecompKind::SET:
      if (!a.coeff(0).is_one())
        throw std::invalid_argument("set decomposition requires constant slot 1");
      return log(a);
    case DecompKind::SEQ:
      if (!a.coeff(0).is_one())
        throw std::invalid_argument("sequence decomposition requires constant slot 1");
      return one_like(a) - mult_inverse(a);
    case DecompKind::CYC:
      if (!a.coeff(0).is_zero())
        throw std::invalid_argument("cycle decomposition requires constant slot 0");
      return one_like(a) - exp(-a);
  }
  throw std::invalid_argument("unknown decomposition kind");
}

Egf component_series(const Egf& a, DecompKind kind, int m) {
  if (m < 0) throw std::invalid_argument("component count must be nonnegative");
  if (m == 0) {
    if (kind == DecompKind::CYC) return Egf(a.ring(), a.order(), a.stride());
    return one_like(a);
  }
  const Egf b = connected_series(a, kind);
  switch (kind) {
    case DecompKind::SET: return pow_int(b, m) / factorial(m);
    case DecompKind::SEQ: return pow_int(b, m);
    case DecompKind::CYC: return pow_int(b, m) / BigRat(m);
  }
  throw std::invalid_argument("unknown decomposition kind");
}

Egf derived_series(const Egf& a, DecompKind kind, int m) {
  if (m < 1) throw std::invalid_argument("component count must be positive");
  const Egf b = connected_series(a, kind);
  switch (kind) {
    case DecompKind::SET:
      return pow_int(b, m - 1) / factorial(m - 1) * exp(-b);
    case DecompKind::SEQ: {
      const Egf rest = one_like(a) - b;
      return pow_int(b, m - 1) * rest * rest * BigRat(m);
    }
    case DecompKind::CYC:
      return pow_int(b, m - 1) * (one_like(a) - b);
  }
  throw std::invalid_argument("unknown decomposition kind");
}

ExpansionTable d_coefficients(const ModelSpec& model, int m, int k_max) {
  if (m < 1) throw std::invalid_argument("component count must be positive");
  if (k_max < 0) throw std::invalid_argument("negative table size");
  const Egf a = model_series(model, k_max);
  const Egf der = derived_series(a, model.kind, m);
  ExpansionTable t;
  t.model = model.display;
  t.kind = model.kind;
  t.m = m;
  t.stride = model.stride;
  for (int k = 0; k <= k_max; ++k) t.d.push_back(der.total_weight(k));
  return t;
}

bool equipotence_check(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  const Egf e = Egf::standard(StdSeries::E, order);
  const Egf e_plus = Egf::standard(StdSeries::EPlus, order);
  const Egf l_plus = Egf::standard(StdSeries::LPlus, order);
  const Egf lhs = compose(mult_inverse(e), comp_inverse(e_plus));
  const Egf rhs = one_like(e) - comp_inverse(l_plus);
  return lhs == rhs;
}

}  // namespace connasym
