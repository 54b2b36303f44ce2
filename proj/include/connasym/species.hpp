#pragma once

#include <string>
#include <vector>

#include "connasym/decomp.hpp"
#include "connasym/egf.hpp"

namespace connasym {

struct ModelSpec;

// Series B of connected pieces recovered from the full series A:
//   SET: B = log A          (A_0 = 1)
//   SEQ: B = 1 - 1/A        (A_0 = 1)
//   CYC: B = 1 - exp(-A)    (A_0 = 0)
Egf connected_series(const Egf& a, DecompKind kind);

// Series of structures with exactly m pieces: B^m/m!, B^m, or B^m/m.
// m = 0 gives the empty structure for SET and SEQ and vanishes for CYC.
Egf component_series(const Egf& a, DecompKind kind, int m);

// Series whose slot-k weights are the expansion coefficients d_{k,m}:
//   SET: B^{m-1}/(m-1)! * exp(-B)
//   SEQ: m B^{m-1} (1-B)^2
//   CYC: B^{m-1} (1-B)
Egf derived_series(const Egf& a, DecompKind kind, int m);

struct ExpansionTable {
  std::string model;
  DecompKind kind = DecompKind::SET;
  int m = 1;
  int stride = 1;
  // d[k] = (stride*k)! times slot k of the derived series.
  std::vector<RingElem> d;
};

ExpansionTable d_coefficients(const ModelSpec& model, int m, int k_max);

// Exact identity between the two composition routes for the virtual inverse
// of the nonempty-set series, checked through the given truncation order.
bool equipotence_check(int order);

}  // namespace connasym
