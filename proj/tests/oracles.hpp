#pragma once

// Test-only reference implementations. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prd/graph.hpp"

namespace prd::oracle {

/// Straightforward O(n^2) Prüfer decoding.
inline std::vector<Edge> prufer_edges(const std::vector<Vertex>& seq, std::size_t n) {
  std::vector<int> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = -1, b = -1;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  }
  if (n >= 2) edges.emplace_back(a, b);
  return edges;
}

/// Lexicographically smallest sorted edge list over all n! relabelings.
inline std::vector<Edge> brute_canonical_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (auto [u, v] : edges) {
      Vertex a = perm[u], b = perm[v];
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Calls visit(sequence) for all n^(n-2) Prüfer sequences.
template <typename Visit>
void for_each_prufer(std::size_t n, Visit visit) {
  if (n < 2) {
    visit(std::vector<Vertex>{});
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    visit(seq);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == static_cast<Vertex>(n)) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

/// Perfect Roman domination number by a plain 3^n scan (no pruning).
inline int plain_prdf_number(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> f(n, 0);
  int best = static_cast<int>(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int weight = 0;
    for (std::size_t v = 0; v < n; ++v) {
      f[v] = static_cast<int>(c % 3);
      c /= 3;
      weight += f[v];
    }
    if (weight >= best) continue;
    bool ok = true;
    for (Vertex v = 0; ok && static_cast<std::size_t>(v) < n; ++v) {
      if (f[v] != 0) continue;
      int twos = 0;
      for (Vertex w : g.neighbors(v)) twos += f[w] == 2;
      ok = twos == 1;
    }
    if (ok) best = weight;
  }
  return best;
}

}  // namespace prd::oracle
