#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "prd/graph.hpp"

namespace prd {

using Weight = std::int64_t;

/// Marks an infeasible state. Far above any real weight (at most 2n), and
/// `saturating_add` keeps sums pinned here.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

constexpr Weight saturating_add(Weight a, Weight b) noexcept {
  return (a >= kInfinity || b >= kInfinity) ? kInfinity : a + b;
}

/// f : V -> {0, 1, 2}.
class PRDFAssignment {
 public:
  PRDFAssignment() = default;
  explicit PRDFAssignment(std::vector<std::uint8_t> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::uint8_t operator[](Vertex v) const { return values_[v]; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  Weight weight() const noexcept;

  auto operator<=>(const PRDFAssignment&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// Every 0-vertex has exactly one neighbor valued 2, and every value is in
/// {0, 1, 2}.
bool is_prdf(const Graph& g, const PRDFAssignment& f);

/// Subtree states of the tree DP. A vertex's state constrains its parent:
///   A  value 0, dominated by exactly one child valued 2; parent must not be 2
///   B  value 0, no child valued 2; parent must be 2
///   C  value 1
///   D  value 2
enum class State : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

struct StateCosts {
  std::array<Weight, 4> cost{kInfinity, kInfinity, kInfinity, kInfinity};

  Weight operator[](State s) const { return cost[static_cast<std::size_t>(s)]; }
  Weight& operator[](State s) { return cost[static_cast<std::size_t>(s)]; }
};

/// Bottom-up DP over a forest. Each component is rooted at its smallest
/// vertex, except that the component holding `root` (if given) is rooted
/// there.
struct DPTable {
  std::vector<StateCosts> costs;
  std::vector<Vertex> parent;  // -1 at component roots
  std::vector<Vertex> order;   // preorder; children after parents
  std::vector<Vertex> roots;
};

/// `forest` must be acyclic; Tree and Forest guarantee that.
DPTable build_dp_table(const Graph& forest, Vertex root = -1);

/// Minimum weight at a component root: states A, C, D (B needs a parent).
Weight root_minimum(const StateCosts& c) noexcept;

Weight prdf_number(const Forest& f);
Weight prdf_number(const Tree& t);

/// A minimum-weight PRDF. Ties resolve toward the lower state letter, then
/// toward the lower child label when picking the dominating child for A.
PRDFAssignment optimal_assignment(const Forest& f);
PRDFAssignment optimal_assignment(const Tree& t);

/// Which values f(v) may take in prdf_number_forced. Bit i set allows i.
using ValueMask = std::uint8_t;
inline constexpr ValueMask kAllowZero = 1;
inline constexpr ValueMask kAllowOne = 2;
inline constexpr ValueMask kAllowTwo = 4;

/// Minimum weight of a PRDF with f(v) in `allowed`; kInfinity if none.
Weight prdf_number_forced(const Tree& t, Vertex v, ValueMask allowed);

/// W(T): vertices that are 0 under every minimum-weight PRDF, ascending.
/// One rerooted DP per vertex, O(n^2).
std::vector<Vertex> w_set(const Tree& t);
bool in_w_set(const Tree& t, Vertex v);

inline constexpr std::size_t kBruteForceMaxOrder = 16;

struct BruteForceResult {
  Weight weight = 0;
  /// Every minimum-weight PRDF in lexicographic order; filled only when
  /// requested.
  std::vector<PRDFAssignment> optima;
};

/// Exhaustive search over all labelings V -> {0,1,2} for any graph, with
/// feasibility and weight pruning. Throws SizeLimitError above
/// kBruteForceMaxOrder vertices.
BruteForceResult brute_force(const Graph& g, bool enumerate_all = false);

}  // namespace prd
