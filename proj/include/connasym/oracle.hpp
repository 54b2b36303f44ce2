#pragma once

#include <map>

#include "connasym/polynomial.hpp"
#include "connasym/ring.hpp"

namespace connasym {

struct ModelSpec;

inline constexpr int kGraphEnumCap = 6;
inline constexpr int kTournamentEnumCap = 5;

// Exhaustive-enumeration weights on k vertices, bucketed by the number of
// components; bucket values are polynomials in rho.
struct ComponentHistogram {
  int k = 0;
  std::map<int, PolyQ> buckets;
  PolyQ total() const;
  PolyQ bucket(int components) const;
};

// All 2^C(k,2) edge subsets, weight rho^edges, components via union-find.
ComponentHistogram enumerate_graph_components(int k, int cap = kGraphEnumCap,
                                              int threads = 1);
// All 3^C(k,2) orientations-with-ties, weight (rho-1)^ties, strongly
// connected components via Tarjan; bucket j holds the weight of
// configurations whose condensation chain has j blocks.
ComponentHistogram enumerate_tournament_components(int k,
                                                   int cap = kTournamentEnumCap,
                                                   int threads = 1);

// Expansion coefficient d_{k,m} of the graph family, recovered from the
// histogram by inclusion-exclusion over the component count.
PolyQ p_polynomial(int k, int m, int cap = kGraphEnumCap);
// Same for the tournament family; internally cross-checks the direct
// bucket counts against an ordered-split convolution of the irreducible
// weights and throws std::logic_error if the two routes disagree.
PolyQ q_polynomial(int k, int m, int cap = kTournamentEnumCap);

// Odd-minus-even component-count weight on k atoms. Enumerated for the
// graph family, otherwise folded from the model's component series.
RingElem parity_difference(int k, const ModelSpec& model);

}  // namespace connasym
