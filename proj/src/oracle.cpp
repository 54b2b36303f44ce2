#include "connasym/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "connasym/models.hpp"
#include "connasym/species.hpp"

namespace connasym {

PolyQ ComponentHistogram::total() const {
  PolyQ t;
  for (const auto& [c, w] : buckets) t += w;
  return t;
}

PolyQ ComponentHistogram::bucket(int components) const {
  auto it = buckets.find(components);
  return it == buckets.end() ? PolyQ() : it->second;
}

namespace {

using Counts = std::vector<std::vector<std::uint64_t>>;  // [components][marks]

void check_enum_args(int k, int cap, int threads) {
  if (k < 0) throw std::invalid_argument("negative vertex count");
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  if (k > cap)
    throw std::invalid_argument("vertex count exceeds the enumeration cap");
}

std::vector<std::pair<int, int>> vertex_pairs(int k) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) ps.emplace_back(i, j);
  return ps;
}

Counts merge(std::vector<Counts>& parts) {
  Counts out = parts.front();
  for (size_t t = 1; t < parts.size(); ++t)
    for (size_t c = 0; c < out.size(); ++c)
      for (size_t e = 0; e < out[c].size(); ++e) out[c][e] += parts[t][c][e];
  return out;
}

int graph_components(std::uint64_t mask,
                     const std::vector<std::pair<int, int>>& pairs, int k) {
  std::array<int, 16> parent;
  for (int v = 0; v < k; ++v) parent[static_cast<size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  int comps = k;
  for (size_t t = 0; t < pairs.size(); ++t) {
    if (!(mask >> t & 1)) continue;
    const int a = find(pairs[t].first), b = find(pairs[t].second);
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

// Strongly connected components of a digraph on k <= 7 vertices given as
// adjacency bitmasks; classic lowlink search.
struct SccCounter {
  const std::array<std::uint8_t, 8>& adj;
  int k;
  std::array<int, 8> index{}, low{};
  std::array<bool, 8> on_stack{};
  std::array<int, 8> stack{};
  int sp = 0, next = 0, comps = 0;

  explicit SccCounter(const std::array<std::uint8_t, 8>& a, int n) : adj(a), k(n) {
    index.fill(-1);
  }

  void visit(int v) {
    index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = next++;
    stack[static_cast<size_t>(sp++)] = v;
    on_stack[static_cast<size_t>(v)] = true;
    for (int w = 0; w < k; ++w) {
      if (!(adj[static_cast<size_t>(v)] >> w & 1)) continue;
      if (index[static_cast<size_t>(w)] < 0) {
        visit(w);
        low[static_cast<size_t>(v)] =
            std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
      } else if (on_stack[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] =
            std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
      }
    }
    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
      ++comps;
      int w;
      do {
        w = stack[static_cast<size_t>(--sp)];
        on_stack[static_cast<size_t>(w)] = false;
      } while (w != v);
    }
  }

  int count() {
    for (int v = 0; v < k; ++v)
      if (index[static_cast<size_t>(v)] < 0) visit(v);
    return comps;
  }
};

ComponentHistogram buckets_from_counts(int k, const Counts& counts,
                                       const PolyQ& mark_weight) {
  // Bucket value: sum over mark counts of count * mark_weight^marks.
  ComponentHistogram h;
  h.k = k;
  const size_t marks = counts.empty() ? 0 : counts.front().size();
  std::vector<PolyQ> powers(marks);
  PolyQ cur(BigRat(1));
  for (size_t e = 0; e < marks; ++e) {
    powers[e] = cur;
    cur *= mark_weight;
  }
  for (size_t c = 0; c < counts.size(); ++c) {
    PolyQ acc;
    for (size_t e = 0; e < marks; ++e) {
      if (counts[c][e] == 0) continue;
      acc += powers[e] * BigRat(mpz_class(
                 static_cast<unsigned long>(counts[c][e])));
    }
    if (!acc.is_zero() || (c == 0 && k == 0))
      h.buckets[static_cast<int>(c)] = acc;
  }
  return h;
}

}  // namespace

ComponentHistogram enumerate_graph_components(int k, int cap, int threads) {
  check_enum_args(k, cap, threads);
  if (k > 11) throw std::invalid_argument("vertex count exceeds the enumeration cap");
  const auto pairs = vertex_pairs(k);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const size_t nthreads =
      static_cast<size_t>(std::min<std::uint64_t>(total, threads));

  std::vector<Counts> parts(
      nthreads, Counts(static_cast<size_t>(k) + 1,
                       std::vector<std::uint64_t>(pairs.size() + 1, 0)));
  auto work = [&](size_t t) {
    const std::uint64_t lo = total * t / nthreads;
    const std::uint64_t hi = total * (t + 1) / nthreads;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const int comps = graph_components(mask, pairs, k);
      parts[t][static_cast<size_t>(comps)]
           [static_cast<size_t>(__builtin_popcountll(mask))]++;
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return buckets_from_counts(k, merge(parts), PolyQ::variable());
}

ComponentHistogram enumerate_tournament_components(int k, int cap, int threads) {
  check_enum_args(k, cap, threads);
  if (k > 7) throw std::invalid_argument("vertex count exceeds the enumeration cap");
  const auto pairs = vertex_pairs(k);
  std::uint64_t total = 1;
  for (size_t i = 0; i < pairs.size(); ++i) total *= 3;
  const size_t nthreads =
      static_cast<size_t>(std::min<std::uint64_t>(total, threads));

  std::vector<Counts> parts(
      nthreads, Counts(static_cast<size_t>(k) + 1,
                       std::vector<std::uint64_t>(pairs.size() + 1, 0)));
  auto work = [&](size_t t) {
    const std::uint64_t lo = total * t / nthreads;
    const std::uint64_t hi = total * (t + 1) / nthreads;
    std::vector<int> digit(pairs.size(), 0);
    std::uint64_t rem = lo;
    for (size_t i = 0; i < pairs.size(); ++i) {
      digit[i] = static_cast<int>(rem % 3);
      rem /= 3;
    }
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::array<std::uint8_t, 8> adj{};
      int ties = 0;
      for (size_t i = 0; i < pairs.size(); ++i) {
        const auto [a, b] = pairs[i];
        switch (digit[i]) {
          case 0: adj[static_cast<size_t>(a)] |= std::uint8_t(1) << b; break;
          case 1: adj[static_cast<size_t>(b)] |= std::uint8_t(1) << a; break;
          default:
            adj[static_cast<size_t>(a)] |= std::uint8_t(1) << b;
            adj[static_cast<size_t>(b)] |= std::uint8_t(1) << a;
            ++ties;
        }
      }
      const int comps = k == 0 ? 0 : SccCounter(adj, k).count();
      parts[t][static_cast<size_t>(comps)][static_cast<size_t>(ties)]++;
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (++digit[i] < 3) break;
        digit[i] = 0;
      }
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  // Ties carry weight rho - 1 on top of the two plain orientations.
  const PolyQ tie_weight(std::vector<BigRat>{BigRat(-1), BigRat(1)});
  return buckets_from_counts(k, merge(parts), tie_weight);
}

PolyQ p_polynomial(int k, int m, int cap) {
  if (m < 1) throw std::invalid_argument("component count must be positive");
  const ComponentHistogram h = enumerate_graph_components(k, cap);
  PolyQ acc;
  for (const auto& [j, w] : h.buckets) {
    if (j < m - 1) continue;
    const BigRat sign((j - (m - 1)) % 2 == 0 ? 1 : -1);
    acc += w * (sign * binomial(j, m - 1));
  }
  return acc;
}

PolyQ q_polynomial(int k, int m, int cap) {
  if (m < 1) throw std::invalid_argument("component count must be positive");
  if (k < 0) throw std::invalid_argument("negative vertex count");
  std::vector<ComponentHistogram> hist;
  for (int i = 0; i <= k; ++i)
    hist.push_back(enumerate_tournament_components(i, cap));

  // Chains of j irreducible blocks, rebuilt from the one-block weights by
  // convolving over ordered label splits; must reproduce the direct buckets.
  const int layers = std::max(k, m + 1);
  std::vector<std::vector<PolyQ>> it(static_cast<size_t>(layers) + 1,
                                     std::vector<PolyQ>(static_cast<size_t>(k) + 1));
  it[0][0] = PolyQ(BigRat(1));
  for (int j = 1; j <= layers; ++j)
    for (int i = 0; i <= k; ++i) {
      PolyQ acc;
      for (int s = 1; s <= i; ++s)
        acc += hist[static_cast<size_t>(s)].bucket(1) *
               it[static_cast<size_t>(j - 1)][static_cast<size_t>(i - s)] *
               binomial(i, s);
      it[static_cast<size_t>(j)][static_cast<size_t>(i)] = acc;
    }
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= std::min(i == 0 ? 0 : i, layers); ++j)
      if (it[static_cast<size_t>(j)][static_cast<size_t>(i)] !=
          hist[static_cast<size_t>(i)].bucket(j))
        throw std::logic_error("oracle mismatch: chain convolution vs direct buckets");

  auto layer = [&](int j) -> PolyQ {
    if (j < 0 || j > layers) return PolyQ();
    return it[static_cast<size_t>(j)][static_cast<size_t>(k)];
  };
  return (layer(m - 1) - layer(m) * BigRat(2) + layer(m + 1)) * BigRat(m);
}

RingElem parity_difference(int k, const ModelSpec& model) {
  if (k < 0) throw std::invalid_argument("negative size");
  const bool graph_family =
      model.id == "simple_graphs" || model.id == "multigraphs" || model.id == "er";
  if (graph_family && k <= kGraphEnumCap) {
    const ComponentHistogram h = enumerate_graph_components(k);
    PolyQ acc;
    for (const auto& [j, w] : h.buckets)
      acc += j % 2 == 1 ? w : -w;
    if (model.ring == RingTag::PolynomialInRho) return RingElem(acc);
    BigRat at(1);
    if (model.id == "multigraphs") at = BigRat(*model.params.d);
    if (model.id == "er") at = *model.params.rho;
    return RingElem(acc.eval(at));
  }
  if (k % model.stride != 0) return RingElem::zero(model.ring);
  const int j_max = k / model.stride;
  const Egf a = model_series(model, j_max);
  RingElem acc = RingElem::zero(model.ring);
  for (int m = 0; m <= k; ++m) {
    const Egf cm = component_series(a, model.kind, m);
    const RingElem w = cm.total_weight(j_max);
    acc += m % 2 == 1 ? w : -w;
  }
  return acc;
}

}  // namespace connasym
