#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prd/canonical.hpp"
#include "prd/graph.hpp"
#include "prd/solver.hpp"

namespace prd {

/// A construction step was invalid: the attachment vertex is not in W, the
/// labels do not match the replay convention, or an intermediate tree is
/// not stable.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One pendant-P3 attachment: u is a vertex of the smaller tree; path holds
/// the new vertices (v3, v2, v1) with v3 adjacent to u, labeled n, n+1, n+2
/// in the larger tree.
struct PeelStep {
  Vertex attach = 0;
  std::array<Vertex, 3> path{};

  bool operator==(const PeelStep&) const = default;
};

/// Construction sequence from the base path 0-1-2, in forward order.
struct PeelCertificate {
  std::vector<PeelStep> steps;

  std::size_t order() const noexcept { return 3 + 3 * steps.size(); }
  bool operator==(const PeelCertificate&) const = default;
};

/// Text form: a "P3" line, then one "u: v3 v2 v1" line per step.
std::string format_certificate(const PeelCertificate& c);
/// Throws ParseError with the offending line.
PeelCertificate parse_certificate(std::string_view text);

/// Hangs a pendant P3 at u. Throws ConstructionError when u is not in W(t).
Tree apply_o1(const Tree& t, Vertex u);

/// Rebuilds the tree from P3, re-checking W membership and stability of
/// every intermediate tree. Throws ConstructionError on the first bad step.
Tree replay_certificate(const PeelCertificate& c);

enum class RejectReason {
  None,
  OrderNotMultipleOfThree,
  SmallDiameter,      // not P3 and diameter below 4
  SupportDegree,      // d(x2) != 2 on the longest path
  SecondDegree,       // d(x3) != 2 on the longest path
  AttachmentNotInW,   // x4 not in W of the peeled tree
};

std::string_view to_string(RejectReason r);

struct Recognition {
  bool accepted = false;
  RejectReason reason = RejectReason::None;
  /// Order of the intermediate tree at which the rejection happened.
  std::size_t rejected_at_order = 0;
  std::optional<PeelCertificate> certificate;
  /// For an accepted tree: replay label -> input label. The replayed tree
  /// is the input relabeled through this map.
  std::vector<Vertex> labeling;
};

/// Decides membership in the family built from P3 by pendant-P3 attachments
/// at W-vertices. Repeatedly takes the deterministic longest path x1..xk,
/// requires d(x2) = d(x3) = 2, peels x1 x2 x3 and requires x4 in W of what
/// remains, until P3 is reached.
Recognition recognize(const Tree& t);

inline constexpr std::size_t kMaxFamilyOrder = 18;

struct FamilyMember {
  Tree tree;  // as produced by replaying the certificate
  PeelCertificate certificate;
};

using FamilyIndex = std::map<CanonicalForm, FamilyMember>;

/// All family members of order n, one per isomorphism class, each with the
/// first construction met in breadth-first order. Throws
/// std::invalid_argument unless n is a positive multiple of 3, and
/// SizeLimitError above kMaxFamilyOrder.
FamilyIndex enumerate_family(std::size_t n);

/// n = 0 (mod 3) and gamma(t) = 2n/3.
bool check_corollary(const Tree& t);

}  // namespace prd
