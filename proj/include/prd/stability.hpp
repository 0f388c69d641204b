#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "prd/graph.hpp"
#include "prd/solver.hpp"

namespace prd {

/// gamma(T - v) - gamma(T) for every v. Removing the only vertex of K1
/// leaves the empty forest (gamma 0), so K1 is not stable.
struct StabilityReport {
  Weight base = 0;
  std::vector<Weight> deltas;
  bool stable = false;
};

StabilityReport stability_report(const Tree& t);
bool is_stable(const Tree& t);

/// Hangs a path of `length` (1, 2 or 3) new vertices off u. New labels are
/// appended: the vertex adjacent to u gets n, the far end gets n + length - 1.
Tree attach_pendant_path(const Tree& t, Vertex u, std::size_t length);

inline constexpr std::size_t kObservationMaxOrder = 14;

struct Observation1Violation {
  enum class Kind { ValueOne, LeafValuedTwo };
  Kind kind;
  std::size_t assignment;  // index into the enumerated optima
  Vertex vertex;
};

struct Observation1Report {
  std::size_t optima = 0;
  std::vector<Observation1Violation> violations;
  bool holds() const noexcept { return violations.empty(); }
};

/// Across every minimum-weight PRDF (oracle enumeration): no vertex is
/// valued 1 and no leaf is valued 2. Meaningful for stable trees; on other
/// trees the violations are reported, not thrown. Throws SizeLimitError
/// above kObservationMaxOrder vertices.
Observation1Report check_observation1(const Tree& t);

/// A star centered at x2 reached from x4 through x3: x2 has exactly the
/// neighbors x1, y1, x3, where x1 and y1 are leaves, and x4 is any neighbor
/// of x3 other than x2.
struct PendantStar {
  Vertex x1, y1, x2, x3, x4;
};

std::vector<PendantStar> find_pendant_stars(const Tree& t);

struct PendantStarReport {
  std::size_t configurations = 0;
  std::size_t optima = 0;
  std::vector<PendantStar> violations;
  bool holds() const noexcept { return violations.empty(); }
};

/// Every minimum-weight PRDF gives x2 the value 2 and 0 to x1, y1, x3, x4.
PendantStarReport check_pendant_stars(const Tree& t);

}  // namespace prd
