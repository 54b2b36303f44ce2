#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "connasym/decomp.hpp"
#include "connasym/egf.hpp"

namespace connasym {

struct ModelParams {
  std::optional<long> d;      // multigraphs: edge multiplicity bound
  std::optional<long> P;      // p_angulations: polygon size, P >= 3
  std::optional<long> D;      // gem: dimension, D >= 2
  std::optional<BigRat> rho;  // weighted models; unset means symbolic
};

struct ModelSpec {
  std::string id;
  std::string display;  // id with bound parameters, e.g. "p_angulations(P=3)"
  DecompKind kind = DecompKind::SET;
  RingTag ring = RingTag::Rational;
  int stride = 1;
  bool weighted = false;  // accepts a rho parameter
  ModelParams params;
  std::function<RingElem(long)> weight;  // total weight on n atoms
};

struct ModelInfo {
  std::string id;
  DecompKind kind;
  std::string stride_rule;
  std::string params;
  std::string weights;
};

std::vector<ModelInfo> list_models();
ModelSpec make_model(const std::string& id, const ModelParams& params = {});
// Numeric instance of a weighted model.
ModelSpec at_rho(const ModelSpec& model, const BigRat& rho);

RingElem weight_sequence(const ModelSpec& model, long n);
// Compressed series with k_max slots; validates that weights vanish exactly
// off the declared stride over the window used.
Egf model_series(const ModelSpec& model, int k_max);
// Smallest p in 1..8 whose multiples are exactly the nonzero weights over
// n in 1..bound; errors when no such p exists.
int infer_stride(const ModelSpec& model, long bound);

struct GrowthViolation {
  long n = 0;
  std::string check;
  std::string detail;
};

// Finite-window growth diagnostic; advisory only, never a gate.
struct GrowthReport {
  std::string model;
  long n_max = 0;
  int stride = 1;
  long window = 0;  // compressed slots inspected
  std::vector<std::pair<long, BigRat>> ratios;  // (slot, n*a_{n-1}/a_n)
  bool ratio_ok = false;
  bool convolution_ok = false;
  std::vector<GrowthViolation> violations;
  std::string verdict;  // "pass", "fail", "inconclusive"
  std::string note;
};

GrowthReport growth_probe(const ModelSpec& model, long n_max);

}  // namespace connasym
