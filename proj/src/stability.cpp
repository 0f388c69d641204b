#include "prd/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace prd {

StabilityReport stability_report(const Tree& t) {
  StabilityReport report;
  report.base = prdf_number(t);
  report.deltas.reserve(t.order());
  for (Vertex v = 0; static_cast<std::size_t>(v) < t.order(); ++v) {
    report.deltas.push_back(prdf_number(remove_vertex(t, v)) - report.base);
  }
  report.stable = std::all_of(report.deltas.begin(), report.deltas.end(),
                              [](Weight d) { return d == 0; });
  return report;
}

bool is_stable(const Tree& t) {
  const Weight base = prdf_number(t);
  for (Vertex v = 0; static_cast<std::size_t>(v) < t.order(); ++v) {
    if (prdf_number(remove_vertex(t, v)) != base) return false;
  }
  return true;
}

Tree attach_pendant_path(const Tree& t, Vertex u, std::size_t length) {
  if (!t.contains(u)) throw std::out_of_range("attach_pendant_path: vertex out of range");
  if (length < 1 || length > 3) {
    throw std::invalid_argument("attach_pendant_path: length must be 1, 2 or 3");
  }
  auto edges = t.graph().edges();
  Vertex prev = u;
  auto next = static_cast<Vertex>(t.order());
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  return Tree(Graph(t.order() + length, edges));
}

Observation1Report check_observation1(const Tree& t) {
  if (t.order() > kObservationMaxOrder) {
    throw SizeLimitError("check_observation1 supports at most " +
                         std::to_string(kObservationMaxOrder) + " vertices");
  }
  auto oracle = brute_force(t.graph(), true);
  Observation1Report report;
  report.optima = oracle.optima.size();
  for (std::size_t i = 0; i < oracle.optima.size(); ++i) {
    const auto& f = oracle.optima[i];
    for (Vertex v = 0; static_cast<std::size_t>(v) < t.order(); ++v) {
      if (f[v] == 1) {
        report.violations.push_back({Observation1Violation::Kind::ValueOne, i, v});
      } else if (f[v] == 2 && t.degree(v) == 1) {
        report.violations.push_back({Observation1Violation::Kind::LeafValuedTwo, i, v});
      }
    }
  }
  return report;
}

std::vector<PendantStar> find_pendant_stars(const Tree& t) {
  std::vector<PendantStar> out;
  for (Vertex x2 = 0; static_cast<std::size_t>(x2) < t.order(); ++x2) {
    if (t.degree(x2) != 3) continue;
    auto leaves = leaves_of(t, x2);
    if (leaves.size() != 2) continue;
    for (Vertex x3 : t.neighbors(x2)) {
      if (t.degree(x3) == 1) continue;
      for (Vertex x4 : t.neighbors(x3)) {
        if (x4 != x2) out.push_back({leaves[0], leaves[1], x2, x3, x4});
      }
    }
  }
  return out;
}

PendantStarReport check_pendant_stars(const Tree& t) {
  if (t.order() > kObservationMaxOrder) {
    throw SizeLimitError("check_pendant_stars supports at most " +
                         std::to_string(kObservationMaxOrder) + " vertices");
  }
  PendantStarReport report;
  auto stars = find_pendant_stars(t);
  report.configurations = stars.size();
  if (stars.empty()) return report;
  auto oracle = brute_force(t.graph(), true);
  report.optima = oracle.optima.size();
  for (const auto& s : stars) {
    bool ok = std::all_of(oracle.optima.begin(), oracle.optima.end(), [&](const auto& f) {
      return f[s.x2] == 2 && f[s.x1] == 0 && f[s.y1] == 0 && f[s.x3] == 0 && f[s.x4] == 0;
    });
    if (!ok) report.violations.push_back(s);
  }
  return report;
}

}  // namespace prd
