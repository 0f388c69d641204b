// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "prd/canonical.hpp"
#include "prd/family.hpp"
#include "prd/solver.hpp"
#include "prd/stability.hpp"
#include "prd/sweeps.hpp"

using namespace prd;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kOracleBudgetSeconds = 300.0;
constexpr double kTheoremBudgetSeconds = 600.0;
constexpr double kPathBudgetSeconds = 2.0;
constexpr std::size_t kRandomOracleTrees = 500;
constexpr std::size_t kRoundTripTrees = 100;
constexpr std::size_t kRoundTripMaxOrder = 60;
constexpr std::uint64_t kSeed = 20240601;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void oracle_equivalence() {
  auto start = Clock::now();
  std::size_t classes = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      ++classes;
      if (prdf_number(t) != brute_force(t.graph()).weight) ++mismatches;
    });
  }
  std::mt19937_64 rng(kSeed);
  for (std::size_t i = 0; i < kRandomOracleTrees; ++i) {
    Tree t = random_tree(13 + rng() % 4, rng);
    if (prdf_number(t) != brute_force(t.graph()).weight) ++mismatches;
  }
  const double s = seconds_since(start);
  report(1, "DP matches brute force", mismatches == 0 && s < kOracleBudgetSeconds,
         std::to_string(classes) + " classes n<=12 + " + std::to_string(kRandomOracleTrees) +
             " random 13<=n<=16, " + std::to_string(mismatches) + " mismatches, " + std::to_string(s) + " s");
}

void theorem_and_corollary() {
  auto start = Clock::now();
  TheoremSweep sweep = run_theorem_sweep(15);
  const double s = seconds_since(start);
  std::size_t trees = 0, stable = 0;
  std::string per_order;
  bool counts_ok = true;
  for (const auto& t : sweep.tallies) {
    trees += t.trees;
    stable += t.stable;
    per_order += " " + std::to_string(t.order) + ":" + std::to_string(t.stable);
    counts_ok = counts_ok && t.stable == t.accepted && t.stable == t.family;
  }
  report(2, "stable <=> recognized <=> family member",
         sweep.discrepancies.empty() && counts_ok && s < kTheoremBudgetSeconds,
         std::to_string(trees) + " trees 3<=n<=15, " + std::to_string(stable) + " stable, " +
             std::to_string(sweep.discrepancies.size()) + " discrepancies, " + std::to_string(s) + " s");

  bool none_off_multiple = true;
  for (const auto& t : sweep.tallies) {
    if (t.order % 3 != 0 && t.stable != 0) none_off_multiple = false;
  }
  report(3, "stable trees have n = 0 mod 3 and gamma = 2n/3",
         sweep.corollary_failures.empty() && none_off_multiple && stable > 0,
         std::to_string(sweep.corollary_failures.size()) + " failures; stable per order:" + per_order);
}

void lemma_deltas() {
  LemmaSweep sweep = run_lemma_sweep(12);
  report(4, "pendant attachment deltas", sweep.passed() && sweep.stable_trees > 0,
         std::to_string(sweep.stable_trees) + " stable trees, " + std::to_string(sweep.p3_checks) +
             " P3 / " + std::to_string(sweep.k1_checks) + " K1 / " + std::to_string(sweep.p2_checks) +
             " P2 attachments, " + std::to_string(sweep.violations.size()) + " violations");
}

void observation() {
  std::size_t stable = 0, optima = 0, violations = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      if (!is_stable(t)) return;
      ++stable;
      auto r = check_observation1(t);
      optima += r.optima;
      violations += r.violations.size();
    });
  }
  report(5, "optima of stable trees avoid 1 and leaf-2", violations == 0 && stable > 0,
         std::to_string(stable) + " stable trees, " + std::to_string(optima) + " optimal functions, " +
             std::to_string(violations) + " violations");
}

void certificate_round_trip() {
  std::mt19937_64 rng(kSeed);
  std::size_t ok = 0, largest = 0;
  for (std::size_t i = 0; i < kRoundTripTrees; ++i) {
    const std::size_t steps = rng() % ((kRoundTripMaxOrder - 3) / 3 + 1);
    Tree t = make_path(3);
    for (std::size_t k = 0; k < steps; ++k) {
      auto w = w_set(t);
      t = apply_o1(t, w[rng() % w.size()]);
    }
    largest = std::max(largest, t.order());
    // Hide the construction order from the recognizer.
    std::vector<Vertex> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : t.graph().edges()) edges.emplace_back(perm[u], perm[v]);
    Tree input{Graph(t.order(), edges)};

    auto r = recognize(input);
    if (!r.accepted || !r.certificate) continue;
    try {
      Tree replayed = replay_certificate(parse_certificate(format_certificate(*r.certificate)));
      if (canonical_form(replayed) == canonical_form(input)) ++ok;
    } catch (const std::exception&) {
    }
  }
  report(6, "generated trees recognized and replayed", ok == kRoundTripTrees,
         std::to_string(ok) + "/" + std::to_string(kRoundTripTrees) + " round trips, largest n=" +
             std::to_string(largest));
}

void path_performance() {
  Tree big = make_path(1'000'000);
  auto start = Clock::now();
  const Weight g = prdf_number(big);
  const double s = seconds_since(start);
  bool regression = true;
  for (std::size_t n = 1; n <= 3000 && regression; ++n) {
    regression = prdf_number(make_path(n)) == static_cast<Weight>((2 * n + 2) / 3);
  }
  report(7, "path performance and closed form",
         g == 666'667 && s < kPathBudgetSeconds && regression,
         "gamma(P_1000000)=" + std::to_string(g) + " in " + std::to_string(s) +
             " s; ceil(2n/3) for n<=3000 " + (regression ? "holds" : "fails"));
}

}  // namespace

int main() {
  oracle_equivalence();
  theorem_and_corollary();
  lemma_deltas();
  observation();
  certificate_round_trip();
  path_performance();
  return failures == 0 ? 0 : 1;
}
