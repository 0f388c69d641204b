#include "prd/solver.hpp"

#include <algorithm>
#include <numeric>

namespace prd {

Weight PRDFAssignment::weight() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), Weight{0});
}

bool is_prdf(const Graph& g, const PRDFAssignment& f) {
  if (f.size() != g.order()) return false;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (f[v] > 2) return false;
    if (f[v] != 0) continue;
    int twos = 0;
    for (Vertex w : g.neighbors(v)) twos += f[w] == 2;
    if (twos != 1) return false;
  }
  return true;
}

namespace {

Weight min_of(const StateCosts& c, std::initializer_list<State> states) {
  Weight best = kInfinity;
  for (State s : states) best = std::min(best, c[s]);
  return best;
}

// First state in `states` attaining the minimum; the list is in letter order.
State argmin_of(const StateCosts& c, std::initializer_list<State> states) {
  State best = *states.begin();
  for (State s : states) {
    if (c[s] < c[best]) best = s;
  }
  return best;
}

std::uint8_t value_of(State s) {
  switch (s) {
    case State::A:
    case State::B:
      return 0;
    case State::C:
      return 1;
    case State::D:
      return 2;
  }
  return 0;
}

// The child c minimizing D(c) - min(A(c), C(c)), lowest label on ties.
Vertex best_dominator(const DPTable& dp, const Graph& g, Vertex v) {
  Vertex best = -1;
  Weight best_delta = kInfinity;
  for (Vertex c : g.neighbors(v)) {
    if (c == dp.parent[v]) continue;
    const auto& cc = dp.costs[c];
    Weight delta = cc[State::D] - min_of(cc, {State::A, State::C});
    if (best < 0 || delta < best_delta) {
      best = c;
      best_delta = delta;
    }
  }
  return best;
}

}  // namespace

DPTable build_dp_table(const Graph& forest, Vertex root) {
  const std::size_t n = forest.order();
  DPTable dp;
  dp.costs.resize(n);
  dp.parent.assign(n, -1);
  dp.order.reserve(n);
  std::vector<bool> seen(n, false);

  auto traverse = [&](Vertex r) {
    dp.roots.push_back(r);
    seen[r] = true;
    std::size_t head = dp.order.size();
    dp.order.push_back(r);
    for (; head < dp.order.size(); ++head) {
      Vertex v = dp.order[head];
      for (Vertex w : forest.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          dp.parent[w] = v;
          dp.order.push_back(w);
        }
      }
    }
  };
  if (root >= 0) traverse(root);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (!seen[v]) traverse(v);
  }

  for (auto it = dp.order.rbegin(); it != dp.order.rend(); ++it) {
    const Vertex v = *it;
    Weight sum_ac = 0;   // children all in {A, C}
    Weight sum_acd = 0;  // children in {A, C, D}
    Weight sum_bcd = 0;  // children in {B, C, D}
    Weight swap = kInfinity;
    bool has_child = false;
    for (Vertex c : forest.neighbors(v)) {
      if (c == dp.parent[v]) continue;
      has_child = true;
      const auto& cc = dp.costs[c];
      const Weight ac = min_of(cc, {State::A, State::C});
      sum_ac = saturating_add(sum_ac, ac);
      sum_acd = saturating_add(sum_acd, min_of(cc, {State::A, State::C, State::D}));
      sum_bcd = saturating_add(sum_bcd, min_of(cc, {State::B, State::C, State::D}));
      swap = std::min(swap, cc[State::D] - ac);
    }
    auto& out = dp.costs[v];
    out[State::A] = has_child ? saturating_add(sum_ac, swap) : kInfinity;
    out[State::B] = sum_ac;
    out[State::C] = saturating_add(1, sum_acd);
    out[State::D] = saturating_add(2, sum_bcd);
  }
  return dp;
}

Weight root_minimum(const StateCosts& c) noexcept {
  return std::min({c[State::A], c[State::C], c[State::D]});
}

Weight prdf_number(const Forest& f) {
  auto dp = build_dp_table(f.graph());
  Weight total = 0;
  for (Vertex r : dp.roots) total = saturating_add(total, root_minimum(dp.costs[r]));
  return total;
}

Weight prdf_number(const Tree& t) {
  auto dp = build_dp_table(t.graph());
  return root_minimum(dp.costs[dp.roots.front()]);
}

namespace {

PRDFAssignment reconstruct(const Graph& g) {
  auto dp = build_dp_table(g);
  std::vector<State> state(g.order(), State::A);
  for (Vertex r : dp.roots) state[r] = argmin_of(dp.costs[r], {State::A, State::C, State::D});

  for (Vertex v : dp.order) {
    const State s = state[v];
    const Vertex dominator = s == State::A ? best_dominator(dp, g, v) : -1;
    for (Vertex c : g.neighbors(v)) {
      if (c == dp.parent[v]) continue;
      const auto& cc = dp.costs[c];
      switch (s) {
        case State::A:
          state[c] = c == dominator ? State::D : argmin_of(cc, {State::A, State::C});
          break;
        case State::B:
          state[c] = argmin_of(cc, {State::A, State::C});
          break;
        case State::C:
          state[c] = argmin_of(cc, {State::A, State::C, State::D});
          break;
        case State::D:
          state[c] = argmin_of(cc, {State::B, State::C, State::D});
          break;
      }
    }
  }
  std::vector<std::uint8_t> values(g.order());
  for (std::size_t v = 0; v < values.size(); ++v) values[v] = value_of(state[v]);
  return PRDFAssignment(std::move(values));
}

}  // namespace

PRDFAssignment optimal_assignment(const Forest& f) { return reconstruct(f.graph()); }
PRDFAssignment optimal_assignment(const Tree& t) { return reconstruct(t.graph()); }

Weight prdf_number_forced(const Tree& t, Vertex v, ValueMask allowed) {
  if (!t.contains(v)) throw std::out_of_range("prdf_number_forced: vertex out of range");
  if ((allowed & 7) == 0) throw std::invalid_argument("prdf_number_forced: empty value set");
  auto dp = build_dp_table(t.graph(), v);
  const auto& c = dp.costs[v];
  Weight best = kInfinity;
  if (allowed & kAllowZero) best = std::min(best, c[State::A]);
  if (allowed & kAllowOne) best = std::min(best, c[State::C]);
  if (allowed & kAllowTwo) best = std::min(best, c[State::D]);
  return best;
}

std::vector<Vertex> w_set(const Tree& t) {
  const Weight gamma = prdf_number(t);
  std::vector<Vertex> out;
  for (Vertex v = 0; static_cast<std::size_t>(v) < t.order(); ++v) {
    if (prdf_number_forced(t, v, kAllowOne | kAllowTwo) > gamma) out.push_back(v);
  }
  return out;
}

bool in_w_set(const Tree& t, Vertex v) {
  return prdf_number_forced(t, v, kAllowOne | kAllowTwo) > prdf_number(t);
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

class Exhaustive {
 public:
  Exhaustive(const Graph& g, bool enumerate_all)
      : g_(g), all_(enumerate_all), value_(g.order(), -1), twos_(g.order(), 0),
        open_(g.order(), 0), best_(static_cast<Weight>(g.order()) + 1) {
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
      open_[v] = static_cast<int>(g.degree(v));
    }
    // BFS order so that constraints close early.
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; static_cast<std::size_t>(s) < g.order(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      for (; head < order_.size(); ++head) {
        for (Vertex w : g.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  BruteForceResult run() {
    search(0, 0);
    BruteForceResult out;
    out.weight = best_;
    out.optima = std::move(found_);
    std::sort(out.optima.begin(), out.optima.end());
    return out;
  }

 private:
  // A 0-vertex may see at most one 2, and exactly one once closed.
  bool consistent(Vertex v) const {
    if (value_[v] != 0) return true;
    return twos_[v] <= 1 && (open_[v] > 0 || twos_[v] == 1);
  }

  void search(std::size_t depth, Weight weight) {
    if (depth == order_.size()) {
      if (weight < best_) {
        best_ = weight;
        found_.clear();
      }
      if (all_) {
        std::vector<std::uint8_t> values(value_.begin(), value_.end());
        found_.emplace_back(std::move(values));
      }
      return;
    }
    const Vertex v = order_[depth];
    for (int x = 0; x <= 2; ++x) {
      const Weight next = weight + x;
      if (all_ ? next > best_ : next >= best_) break;
      value_[v] = x;
      for (Vertex w : g_.neighbors(v)) {
        --open_[w];
        if (x == 2) ++twos_[w];
      }
      bool ok = consistent(v);
      for (Vertex w : g_.neighbors(v)) {
        if (!ok) break;
        if (value_[w] >= 0) ok = consistent(w);
      }
      if (ok) search(depth + 1, next);
      for (Vertex w : g_.neighbors(v)) {
        ++open_[w];
        if (x == 2) --twos_[w];
      }
      value_[v] = -1;
    }
  }

  const Graph& g_;
  bool all_;
  std::vector<Vertex> order_;
  std::vector<int> value_;
  std::vector<int> twos_;  // assigned neighbors valued 2
  std::vector<int> open_;  // unassigned neighbors
  Weight best_;
  std::vector<PRDFAssignment> found_;
};

}  // namespace

BruteForceResult brute_force(const Graph& g, bool enumerate_all) {
  if (g.order() > kBruteForceMaxOrder) {
    throw SizeLimitError("brute_force supports at most " + std::to_string(kBruteForceMaxOrder) +
                         " vertices, got " + std::to_string(g.order()));
  }
  return Exhaustive(g, enumerate_all).run();
}

}  // namespace prd
