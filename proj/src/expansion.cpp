#include "connasym/expansion.hpp"

#include <stdexcept>

namespace connasym {

namespace {

void require_numeric(const ModelSpec& model) {
  if (model.ring != RingTag::Rational)
    throw std::invalid_argument("a numeric model is required (supply rho)");
}

long checked_slots(const ModelSpec& model, long n) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n % model.stride != 0)
    throw std::invalid_argument("size is not a multiple of the model stride");
  return n / model.stride;
}

}  // namespace

BigRat exact_probability(const ModelSpec& model, int m, long n) {
  require_numeric(model);
  if (m < 0) throw std::invalid_argument("component count must be nonnegative");
  const long j = checked_slots(model, n);
  const BigRat total = weight_sequence(model, n).rat();
  if (total.is_zero())
    throw std::domain_error("total weight vanishes at this size");
  const Egf a = model_series(model, static_cast<int>(j));
  const Egf cm = component_series(a, model.kind, m);
  return cm.total_weight(static_cast<int>(j)).rat() / total;
}

ExpansionEvaluation expansion_terms(const ModelSpec& model, int m, long n,
                                    int order, bool with_exact) {
  require_numeric(model);
  if (m < 1) throw std::invalid_argument("component count must be positive");
  if (order < 0) throw std::invalid_argument("negative order");
  const long p = model.stride;
  checked_slots(model, n);
  const BigRat total = weight_sequence(model, n).rat();
  if (total.is_zero())
    throw std::domain_error("total weight vanishes at this size");

  ExpansionEvaluation ev;
  ev.model = model.display;
  ev.m = m;
  ev.n = n;
  ev.order = order;
  ev.stride = model.stride;
  ev.rho = model.params.rho;

  const ExpansionTable tbl = d_coefficients(model, m, order);
  BigRat running(0);
  for (int k = 0; k <= order; ++k) {
    const BigRat dk = tbl.d[static_cast<size_t>(k)].rat();
    ev.d.push_back(dk);
    BigRat term(0);
    if (p * k <= n)
      term = dk * binomial(n, p * k) * weight_sequence(model, n - p * k).rat() /
             total;
    ev.terms.push_back(term);
    running += term;
    ev.partial_sums.push_back(running);
  }
  if (with_exact) {
    ev.exact = exact_probability(model, m, n);
    for (const BigRat& ps : ev.partial_sums) ev.residuals.push_back(*ev.exact - ps);
  }
  return ev;
}

LeadingTerm leading_term(const ModelSpec& model, int m, long n) {
  require_numeric(model);
  if (m < 1) throw std::invalid_argument("component count must be positive");
  const long p = model.stride;
  checked_slots(model, n);
  const BigRat total = weight_sequence(model, n).rat();
  if (total.is_zero())
    throw std::domain_error("total weight vanishes at this size");

  LeadingTerm lt;
  lt.k = m - 1;
  const ExpansionTable tbl = d_coefficients(model, m, m - 1);
  const BigRat dk = tbl.d[static_cast<size_t>(m - 1)].rat();
  lt.exact_term = BigRat(0);
  if (p * (m - 1) <= n)
    lt.exact_term = dk * binomial(n, p * (m - 1)) *
                    weight_sequence(model, n - p * (m - 1)).rat() / total;

  const BigRat mfact = factorial(m - 1);
  if (model.id == "qss") {
    lt.form = "(1/(4n))^(m-1)";
    lt.form_value = (BigRat(1) / BigRat(4 * n)).pow(m - 1);
  } else if (model.id == "p_angulations" || model.id == "triangulations") {
    const long P = model.id == "triangulations" ? 3 : *model.params.P;
    if (P % 2 == 0) {
      lt.form = "(((P-1)!!/P^(P/2))/n^(P/2-1))^(m-1)/(m-1)!";
      const BigRat base = double_factorial(P - 1) /
                          (BigRat(P).pow(P / 2) * BigRat(n).pow(P / 2 - 1));
      lt.form_value = base.pow(m - 1) / mfact;
    } else {
      lt.form = "(((2P-1)!!/(P^P 2^(P-1)))/h^(P-2))^(m-1)/(m-1)!, h = n/2";
      const long h = n / 2;
      const BigRat base =
          double_factorial(2 * P - 1) /
          (BigRat(P).pow(P) * BigRat(2).pow(P - 1) * BigRat(h).pow(P - 2));
      lt.form_value = base.pow(m - 1) / mfact;
    }
  } else if (model.id == "gem") {
    const long D = *model.params.D;
    lt.form = "(1/(2^D h^(D-1)))^(m-1)/(m-1)!, h = n/2";
    const long h = n / 2;
    const BigRat base = BigRat(1) / (BigRat(2).pow(D) * BigRat(h).pow(D - 1));
    lt.form_value = base.pow(m - 1) / mfact;
  } else {
    lt.form = "d(m-1) C(n,m-1) w(n-m+1)/w(n)";
    lt.form_value = lt.exact_term;
  }
  return lt;
}

ConvergenceReport convergence_report(const ModelSpec& model, int m, long n_lo,
                                     long n_hi, int order, const BigRat& bound) {
  require_numeric(model);
  if (n_lo > n_hi) throw std::invalid_argument("empty size range");
  ConvergenceReport rep;
  rep.model = model.display;
  rep.m = m;
  rep.order = order;
  rep.bound = bound;
  rep.bounded = true;

  const long p = model.stride;
  long n = n_lo + (p - n_lo % p) % p;
  for (; n <= n_hi; n += p) {
    const ExpansionEvaluation ev = expansion_terms(model, m, n, order + 1, true);
    ConvergenceRow row;
    row.n = n;
    row.exact = *ev.exact;
    row.partial = ev.partial_sums[static_cast<size_t>(order)];
    row.residual = row.exact - row.partial;
    row.next_term = ev.terms[static_cast<size_t>(order + 1)];
    if (!row.next_term.is_zero()) {
      row.ratio = row.residual.abs() / row.next_term.abs();
      row.ok = *row.ratio <= bound;
    } else {
      row.ok = row.residual.is_zero();
    }
    if (!row.ok) rep.bounded = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace connasym
