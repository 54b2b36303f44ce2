#pragma once

#include <optional>
#include <string>
#include <vector>

#include "connasym/models.hpp"
#include "connasym/species.hpp"

namespace connasym {

// Evaluated expansion of the probability that a structure of size n has
// exactly m pieces. Term k is d_{pk,m} * C(n, pk) * w(n-pk) / w(n) with
// p the model stride; everything is exact.
struct ExpansionEvaluation {
  std::string model;
  int m = 1;
  long n = 0;
  int order = 0;
  int stride = 1;
  std::optional<BigRat> rho;
  std::vector<BigRat> d;
  std::vector<BigRat> terms;
  std::vector<BigRat> partial_sums;
  std::optional<BigRat> exact;
  std::vector<BigRat> residuals;  // exact minus each partial sum
};

ExpansionEvaluation expansion_terms(const ModelSpec& model, int m, long n,
                                    int order, bool with_exact = true);

// Weight of m-piece structures of size n over the total weight.
BigRat exact_probability(const ModelSpec& model, int m, long n);

struct LeadingTerm {
  int k = 0;  // slot of the first structurally nonzero entry
  BigRat exact_term;
  std::string form;
  BigRat form_value;
};

LeadingTerm leading_term(const ModelSpec& model, int m, long n);

struct ConvergenceRow {
  long n = 0;
  BigRat exact;
  BigRat partial;
  BigRat residual;
  BigRat next_term;
  std::optional<BigRat> ratio;  // |residual| / |next_term| when defined
  bool ok = false;
};

struct ConvergenceReport {
  std::string model;
  int m = 1;
  int order = 0;
  BigRat bound;
  std::vector<ConvergenceRow> rows;
  bool bounded = false;
};

// Residual-vs-next-term control over a size range; a row passes when the
// ratio stays within the bound (or both vanish).
ConvergenceReport convergence_report(const ModelSpec& model, int m, long n_lo,
                                     long n_hi, int order,
                                     const BigRat& bound = BigRat(10));

}  // namespace connasym
