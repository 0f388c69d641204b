#include "prd/sweeps.hpp"

#include <set>

#include "prd/canonical.hpp"
#include "prd/stability.hpp"

namespace prd {

namespace {

void require_range(std::size_t max_n, std::size_t cap, const char* suite) {
  if (max_n > cap) {
    throw SizeLimitError(std::string(suite) + " sweep supports max-n <= " + std::to_string(cap));
  }
}

}  // namespace

TheoremSweep run_theorem_sweep(std::size_t max_n) {
  require_range(max_n, kTheoremSweepMaxOrder, "theorem");
  TheoremSweep sweep;
  for (std::size_t n = 3; n <= max_n; ++n) {
    OrderTally tally;
    tally.order = n;
    std::set<CanonicalForm> family;
    if (n % 3 == 0) {
      for (const auto& [form, member] : enumerate_family(n)) family.insert(form);
    }
    tally.family = family.size();

    for_each_free_tree(n, [&](const Tree& t) {
      ++tally.trees;
      const bool stable = is_stable(t);
      const auto rec = recognize(t);
      const bool member = family.contains(canonical_form(t));
      tally.stable += stable;
      tally.accepted += rec.accepted;
      if (stable != rec.accepted || stable != member) {
        sweep.discrepancies.push_back({emit_graph6(t.graph()), stable, rec.accepted, member, rec.reason});
        if (stable && (rec.reason == RejectReason::SupportDegree ||
                       rec.reason == RejectReason::SecondDegree)) {
          sweep.structural_rejections.push_back(emit_graph6(t.graph()));
        }
      }
      if (stable && !check_corollary(t)) sweep.corollary_failures.push_back(emit_graph6(t.graph()));
    });
    sweep.tallies.push_back(tally);
  }
  return sweep;
}

LemmaSweep run_lemma_sweep(std::size_t max_n) {
  require_range(max_n, kLemmaSweepMaxOrder, "lemma");
  LemmaSweep sweep;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      if (!is_stable(t)) return;
      ++sweep.stable_trees;
      const Weight base = prdf_number(t);
      auto check = [&](Vertex u, std::size_t length, Weight expected) {
        const Weight delta = prdf_number(attach_pendant_path(t, u, length)) - base;
        if (delta != expected) sweep.violations.push_back({emit_graph6(t.graph()), u, length, delta});
      };
      for (Vertex u = 0; static_cast<std::size_t>(u) < t.order(); ++u) {
        check(u, 3, 2);
        ++sweep.p3_checks;
      }
      for (Vertex u : w_set(t)) {
        check(u, 1, 1);
        check(u, 2, 2);
        ++sweep.k1_checks;
        ++sweep.p2_checks;
      }
    });
  }
  return sweep;
}

ObservationSweep run_observation_sweep(std::size_t max_n) {
  require_range(max_n, kObservationSweepMaxOrder, "observation");
  ObservationSweep sweep;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      if (!is_stable(t)) return;
      ++sweep.stable_trees;
      const auto g6 = emit_graph6(t.graph());
      auto obs = check_observation1(t);
      sweep.optima += obs.optima;
      for (const auto& v : obs.violations) {
        const char* what = v.kind == Observation1Violation::Kind::ValueOne ? "value 1 at vertex "
                                                                            : "leaf valued 2 at vertex ";
        sweep.violations.push_back({g6, what + std::to_string(v.vertex) + " in optimum #" +
                                            std::to_string(v.assignment)});
      }
      auto stars = check_pendant_stars(t);
      sweep.star_configurations += stars.configurations;
      for (const auto& s : stars.violations) {
        sweep.violations.push_back({g6, "pendant star at x2 = " + std::to_string(s.x2)});
      }
    });
  }
  return sweep;
}

}  // namespace prd
