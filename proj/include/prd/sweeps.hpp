#pragma once

// Exhaustive verification sweeps over all free trees up to a given order.
// Each sweep reports counts and every counterexample it finds.

#include <cstddef>
#include <string>
#include <vector>

#include "prd/family.hpp"
#include "prd/solver.hpp"

namespace prd {

inline constexpr std::size_t kTheoremSweepMaxOrder = 15;
inline constexpr std::size_t kLemmaSweepMaxOrder = 15;
inline constexpr std::size_t kObservationSweepMaxOrder = 12;

struct OrderTally {
  std::size_t order = 0;
  std::size_t trees = 0;
  std::size_t stable = 0;
  std::size_t accepted = 0;
  std::size_t family = 0;  // family members at this order (0 unless n = 0 mod 3)
};

struct TheoremDiscrepancy {
  std::string graph6;
  bool stable = false;
  bool accepted = false;
  bool in_family = false;
  RejectReason reason = RejectReason::None;
};

struct TheoremSweep {
  std::vector<OrderTally> tallies;
  std::vector<TheoremDiscrepancy> discrepancies;
  std::vector<std::string> corollary_failures;  // graph6 of stable trees
  /// Stable trees the recognizer rejected on a degree requirement along
  /// the longest path (a subset of discrepancies, listed for diagnosis).
  std::vector<std::string> structural_rejections;
  bool passed() const noexcept { return discrepancies.empty() && corollary_failures.empty(); }
};

/// Stability vs recognizer vs family membership for every free tree with
/// 3 <= n <= max_n.
TheoremSweep run_theorem_sweep(std::size_t max_n);

struct LemmaViolation {
  std::string graph6;
  Vertex vertex = 0;
  std::size_t attached = 0;  // pendant path length
  Weight delta = 0;
};

struct LemmaSweep {
  std::size_t stable_trees = 0;
  std::size_t p3_checks = 0;
  std::size_t k1_checks = 0;
  std::size_t p2_checks = 0;
  std::vector<LemmaViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// For every stable tree with n <= max_n: a pendant P3 anywhere adds 2; at
/// u in W a pendant K1 adds 1 and a pendant P2 adds 2.
LemmaSweep run_lemma_sweep(std::size_t max_n);

struct ObservationFailure {
  std::string graph6;
  std::string detail;
};

struct ObservationSweep {
  std::size_t stable_trees = 0;
  std::size_t optima = 0;
  std::size_t star_configurations = 0;
  std::vector<ObservationFailure> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Oracle enumeration of all optima of every stable tree with n <= max_n:
/// no value 1, no leaf valued 2, and the pendant-star pattern.
ObservationSweep run_observation_sweep(std::size_t max_n);

}  // namespace prd
