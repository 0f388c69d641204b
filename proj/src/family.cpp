#include "prd/family.hpp"

#include <algorithm>
#include <charconv>

#include "prd/stability.hpp"

namespace prd {

std::string format_certificate(const PeelCertificate& c) {
  std::string out = "P3\n";
  for (const auto& s : c.steps) {
    out += std::to_string(s.attach) + ": " + std::to_string(s.path[0]) + " " +
           std::to_string(s.path[1]) + " " + std::to_string(s.path[2]) + "\n";
  }
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool read_label(std::string_view& s, Vertex& out) {
  s = strip(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || out < 0) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return s.empty() || s.front() == ' ' || s.front() == '\t' || s.front() == ':';
}

}  // namespace

PeelCertificate parse_certificate(std::string_view text) {
  PeelCertificate c;
  bool have_base = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!have_base) {
      if (line != "P3") throw ParseError("certificate must start with 'P3'", line_no);
      have_base = true;
      continue;
    }
    PeelStep step;
    std::string_view rest = line;
    if (!read_label(rest, step.attach) || (rest = strip(rest)).empty() || rest.front() != ':') {
      throw ParseError("expected 'u: v3 v2 v1'", line_no);
    }
    rest.remove_prefix(1);
    for (auto& v : step.path) {
      if (!read_label(rest, v)) throw ParseError("expected 'u: v3 v2 v1'", line_no);
    }
    if (!strip(rest).empty()) throw ParseError("trailing text after step", line_no);
    c.steps.push_back(step);
  }
  if (!have_base) throw ParseError("empty certificate", 1);
  return c;
}

Tree apply_o1(const Tree& t, Vertex u) {
  if (!t.contains(u)) throw ConstructionError("O1: attachment vertex out of range");
  if (!in_w_set(t, u)) {
    throw ConstructionError("O1: vertex " + std::to_string(u) + " is not in W(T)");
  }
  return attach_pendant_path(t, u, 3);
}

Tree replay_certificate(const PeelCertificate& c) {
  Tree t = make_path(3);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    const auto n = static_cast<Vertex>(t.order());
    if (s.path != std::array<Vertex, 3>{n, n + 1, n + 2}) {
      throw ConstructionError("step " + std::to_string(i + 1) + ": new vertices must be " +
                              std::to_string(n) + " " + std::to_string(n + 1) + " " +
                              std::to_string(n + 2));
    }
    try {
      t = apply_o1(t, s.attach);
    } catch (const ConstructionError& e) {
      throw ConstructionError("step " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!is_stable(t)) {
      throw ConstructionError("step " + std::to_string(i + 1) + ": result is not stable");
    }
  }
  return t;
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None:
      return "none";
    case RejectReason::OrderNotMultipleOfThree:
      return "order-not-multiple-of-3";
    case RejectReason::SmallDiameter:
      return "diameter-below-4";
    case RejectReason::SupportDegree:
      return "support-degree";
    case RejectReason::SecondDegree:
      return "second-degree";
    case RejectReason::AttachmentNotInW:
      return "attachment-not-in-w";
  }
  return "unknown";
}

Recognition recognize(const Tree& t) {
  Recognition result;
  Tree cur = t;
  std::vector<Vertex> orig(t.order());
  for (std::size_t v = 0; v < orig.size(); ++v) orig[v] = static_cast<Vertex>(v);

  // (x4, x3, x2, x1) in input labels, in peeling order
  std::vector<std::array<Vertex, 4>> peeled;

  auto reject = [&](RejectReason why) {
    result.reason = why;
    result.rejected_at_order = cur.order();
    return result;
  };

  while (true) {
    const std::size_t n = cur.order();
    if (n % 3 != 0) return reject(RejectReason::OrderNotMultipleOfThree);
    if (n == 3) break;  // the only tree on three vertices is P3

    auto path = longest_path(cur);
    if (path.size() < 5) return reject(RejectReason::SmallDiameter);
    const Vertex x1 = path[0], x2 = path[1], x3 = path[2], x4 = path[3];
    if (cur.degree(x2) != 2) return reject(RejectReason::SupportDegree);
    if (cur.degree(x3) != 2) return reject(RejectReason::SecondDegree);

    std::vector<bool> keep(n, true);
    keep[x1] = keep[x2] = keep[x3] = false;
    auto cut = induced_subgraph(cur.graph(), keep);
    Tree smaller(std::move(cut.graph));
    const auto at = static_cast<Vertex>(std::lower_bound(cut.original.begin(), cut.original.end(), x4) -
                                        cut.original.begin());
    if (!in_w_set(smaller, at)) return reject(RejectReason::AttachmentNotInW);

    peeled.push_back({orig[x4], orig[x3], orig[x2], orig[x1]});
    std::vector<Vertex> next_orig(cut.original.size());
    for (std::size_t v = 0; v < next_orig.size(); ++v) next_orig[v] = orig[cut.original[v]];
    orig = std::move(next_orig);
    cur = std::move(smaller);
  }

  // Relabel into the replay convention: base path 0-1-2, then each step's
  // new vertices take the next three labels.
  std::vector<Vertex> to_replay(t.order(), -1);
  const Vertex center = cur.degree(0) == 2 ? 0 : (cur.degree(1) == 2 ? 1 : 2);
  Vertex end_label = 0;
  for (Vertex v = 0; v < 3; ++v) {
    if (v == center) {
      to_replay[orig[v]] = 1;
    } else {
      to_replay[orig[v]] = end_label;
      end_label = 2;
    }
  }
  PeelCertificate cert;
  auto next = static_cast<Vertex>(3);
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const auto& [x4, x3, x2, x1] = *it;
    PeelStep step;
    step.attach = to_replay[x4];
    to_replay[x3] = next;
    to_replay[x2] = next + 1;
    to_replay[x1] = next + 2;
    step.path = {next, next + 1, next + 2};
    next += 3;
    cert.steps.push_back(step);
  }

  result.accepted = true;
  result.labeling.assign(t.order(), -1);
  for (std::size_t v = 0; v < t.order(); ++v) result.labeling[to_replay[v]] = static_cast<Vertex>(v);
  result.certificate = std::move(cert);
  return result;
}

FamilyIndex enumerate_family(std::size_t n) {
  if (n == 0 || n % 3 != 0) {
    throw std::invalid_argument("enumerate_family: n must be a positive multiple of 3, got " +
                                std::to_string(n));
  }
  if (n > kMaxFamilyOrder) {
    throw SizeLimitError("enumerate_family supports n <= " + std::to_string(kMaxFamilyOrder));
  }
  FamilyIndex level;
  Tree base = make_path(3);
  level.emplace(canonical_form(base), FamilyMember{base, {}});
  for (std::size_t k = 3; k < n; k += 3) {
    FamilyIndex next;
    for (const auto& [form, member] : level) {
      for (Vertex u : w_set(member.tree)) {
        Tree grown = attach_pendant_path(member.tree, u, 3);
        auto key = canonical_form(grown);
        if (next.contains(key)) continue;
        PeelCertificate cert = member.certificate;
        const auto m = static_cast<Vertex>(k);
        cert.steps.push_back({u, {m, m + 1, m + 2}});
        next.emplace(std::move(key), FamilyMember{std::move(grown), std::move(cert)});
      }
    }
    level = std::move(next);
  }
  return level;
}

bool check_corollary(const Tree& t) {
  const std::size_t n = t.order();
  return n % 3 == 0 && prdf_number(t) == static_cast<Weight>(2 * n / 3);
}

}  // namespace prd
