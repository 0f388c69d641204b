#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prd/canonical.hpp"
#include "prd/family.hpp"
#include "prd/graph.hpp"
#include "prd/solver.hpp"
#include "prd/stability.hpp"
#include "prd/sweeps.hpp"

namespace prd::cli {

namespace {

using Json = nlohmann::ordered_json;

// Quadratic operations (W set, stability, recognition) refuse larger inputs.
constexpr std::size_t kQuadraticLimit = 20000;

/// Carries an exit code out of a command.
struct Exit {
  int code;
  std::string message;
};

struct InputOptions {
  std::string input;
  std::string format = "edgelist";
  std::string output;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const InputOptions& opt, std::istream& in) {
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) throw Exit{kParseError, "cannot open input file " + opt.input};
    text = read_all(file);
  }
  return opt.format == "graph6" ? parse_graph6(text) : parse_edge_list(text);
}

Tree as_tree(Graph g) {
  try {
    return Tree(std::move(g));
  } catch (const std::invalid_argument& e) {
    throw Exit{kParseError, std::string("input is not a tree: ") + e.what()};
  }
}

void require_order(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Exit{kSizeLimit, std::string(what) + " supports at most " + std::to_string(limit) +
                               " vertices, got " + std::to_string(n)};
  }
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

// Trees hash their canonical form; forests hash the sorted component forms.
std::string input_digest(const Forest& f) {
  if (f.component_count() == 1) return hex_digest(canonical_form(Tree(f.graph())).digest());
  std::vector<std::string> parts;
  for (std::size_t c = 0; c < f.component_count(); ++c) {
    std::vector<bool> keep(f.order());
    for (Vertex v = 0; static_cast<std::size_t>(v) < f.order(); ++v) keep[v] = f.component_of(v) == c;
    parts.push_back(canonical_form(Tree(induced_subgraph(f.graph(), keep).graph)).str());
  }
  std::sort(parts.begin(), parts.end());
  std::string joined;
  for (const auto& p : parts) joined += p + "|";
  return hex_digest(CanonicalForm(joined).digest());
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Exit{kParseError, "cannot open output file " + path};
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

Json report(const std::string& command, const std::vector<std::string>& args,
            const std::string& digest, Json result) {
  Json j;
  j["command"] = command;
  j["arguments"] = args;
  j["version"] = kVersion;
  j["input_digest"] = digest.empty() ? Json(nullptr) : Json(digest);
  j["result"] = std::move(result);
  return j;
}

// ---------------------------------------------------------------------------

struct SolveOptions {
  InputOptions io;
  bool witness = false;
  bool wset = false;
};

Json cmd_solve(const SolveOptions& opt, std::istream& in, std::string& digest) {
  Forest forest = [&] {
    try {
      return Forest(load_graph(opt.io, in));
    } catch (const std::invalid_argument& e) {
      throw Exit{kParseError, std::string("input is not a forest: ") + e.what()};
    }
  }();
  if (opt.wset) require_order(forest.order(), kQuadraticLimit, "--wset");
  digest = input_digest(forest);

  Json r;
  r["order"] = forest.order();
  r["components"] = forest.component_count();
  r["gamma"] = prdf_number(forest);
  if (opt.witness) {
    auto f = optimal_assignment(forest);
    r["witness"] = std::vector<int>(f.values().begin(), f.values().end());
  }
  if (opt.wset) {
    if (forest.component_count() != 1) throw Exit{kParseError, "--wset needs a tree input"};
    r["wset"] = w_set(Tree(forest.graph()));
  }
  return r;
}

Json cmd_stable(const InputOptions& io, std::istream& in, std::string& digest) {
  Tree t = as_tree(load_graph(io, in));
  require_order(t.order(), kQuadraticLimit, "stable");
  digest = hex_digest(canonical_form(t).digest());
  auto rep = stability_report(t);
  Json r;
  r["order"] = t.order();
  r["gamma"] = rep.base;
  r["stable"] = rep.stable;
  r["deltas"] = rep.deltas;
  return r;
}

struct RecognizeOptions {
  InputOptions io;
  std::string certificate_path;
};

Json cmd_recognize(const RecognizeOptions& opt, std::istream& in, std::string& digest) {
  Tree t = as_tree(load_graph(opt.io, in));
  require_order(t.order(), kQuadraticLimit, "recognize");
  digest = hex_digest(canonical_form(t).digest());
  auto rec = recognize(t);
  Json r;
  r["order"] = t.order();
  r["accepted"] = rec.accepted;
  if (rec.accepted) {
    const auto text = format_certificate(*rec.certificate);
    r["steps"] = rec.certificate->steps.size();
    r["certificate"] = text;
    r["labeling"] = rec.labeling;
    if (!opt.certificate_path.empty()) {
      std::ofstream file(opt.certificate_path, std::ios::binary);
      if (!file) throw Exit{kParseError, "cannot open certificate file " + opt.certificate_path};
      file << text;
    }
  } else {
    r["reason"] = std::string(to_string(rec.reason));
    r["rejected_at_order"] = rec.rejected_at_order;
  }
  return r;
}

struct GenerateOptions {
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::size_t all = 0;
  std::string output;
};

void cmd_generate(const GenerateOptions& opt, std::ostream& out) {
  if (opt.all != 0) {
    if (opt.all % 3 != 0) throw Exit{kParseError, "--all needs a positive multiple of 3"};
    require_order(opt.all, kMaxFamilyOrder, "--all");
    for (const auto& [form, member] : enumerate_family(opt.all)) {
      out << emit_graph6(member.tree.graph()) << '\n';
    }
    return;
  }
  std::mt19937_64 rng(opt.seed);
  Tree t = make_path(3);
  for (std::size_t i = 0; i < opt.steps; ++i) {
    auto w = w_set(t);
    if (w.empty()) {
      throw Exit{kInternalError, "no W-vertex available at step " + std::to_string(i + 1)};
    }
    t = apply_o1(t, w[rng() % w.size()]);
  }
  out << emit_graph6(t.graph()) << '\n';
}

struct VerifyOptions {
  InputOptions io;
  std::size_t max_n = 10;
  std::string suite = "all";
  std::string certificate;
};

Json theorem_json(const TheoremSweep& s) {
  Json j;
  j["passed"] = s.passed();
  Json orders = Json::array();
  for (const auto& t : s.tallies) {
    orders.push_back({{"order", t.order}, {"trees", t.trees}, {"stable", t.stable},
                      {"accepted", t.accepted}, {"family", t.family}});
  }
  j["per_order"] = orders;
  Json disc = Json::array();
  for (const auto& d : s.discrepancies) {
    disc.push_back({{"graph6", d.graph6}, {"stable", d.stable}, {"accepted", d.accepted},
                    {"in_family", d.in_family}, {"reason", std::string(to_string(d.reason))}});
  }
  j["discrepancies"] = disc;
  j["corollary_failures"] = s.corollary_failures;
  j["structural_rejections"] = s.structural_rejections;
  return j;
}

Json lemma_json(const LemmaSweep& s) {
  Json j;
  j["passed"] = s.passed();
  j["stable_trees"] = s.stable_trees;
  j["p3_checks"] = s.p3_checks;
  j["k1_checks"] = s.k1_checks;
  j["p2_checks"] = s.p2_checks;
  Json v = Json::array();
  for (const auto& x : s.violations) {
    v.push_back({{"graph6", x.graph6}, {"vertex", x.vertex}, {"attached", x.attached},
                 {"delta", x.delta}});
  }
  j["violations"] = v;
  return j;
}

Json observation_json(const ObservationSweep& s) {
  Json j;
  j["passed"] = s.passed();
  j["stable_trees"] = s.stable_trees;
  j["optima"] = s.optima;
  j["pendant_star_configurations"] = s.star_configurations;
  Json v = Json::array();
  for (const auto& x : s.violations) v.push_back({{"graph6", x.graph6}, {"detail", x.detail}});
  j["violations"] = v;
  return j;
}

Json cmd_verify(const VerifyOptions& opt, std::istream& in, bool& passed, std::string& digest) {
  Json r;
  if (!opt.certificate.empty()) {
    std::ifstream file(opt.certificate, std::ios::binary);
    if (!file) throw Exit{kParseError, "cannot open certificate " + opt.certificate};
    auto cert = parse_certificate(read_all(file));
    Json c;
    c["steps"] = cert.steps.size();
    try {
      Tree rebuilt = replay_certificate(cert);
      c["replayed"] = true;
      c["order"] = rebuilt.order();
      passed = true;
      if (!opt.io.input.empty()) {
        Tree t = as_tree(load_graph(opt.io, in));
        digest = hex_digest(canonical_form(t).digest());
        const bool same = canonical_form(t) == canonical_form(rebuilt);
        c["matches_input"] = same;
        passed = same;
      }
    } catch (const ConstructionError& e) {
      c["replayed"] = false;
      c["error"] = e.what();
      passed = false;
    }
    r["certificate"] = c;
    r["passed"] = passed;
    return r;
  }

  const bool all = opt.suite == "all";
  Json suites;
  passed = true;
  if (all || opt.suite == "theorem") {
    auto s = run_theorem_sweep(opt.max_n);
    passed = passed && s.passed();
    suites["theorem"] = theorem_json(s);
  }
  if (all || opt.suite == "lemmas") {
    auto s = run_lemma_sweep(opt.max_n);
    passed = passed && s.passed();
    suites["lemmas"] = lemma_json(s);
  }
  if (all || opt.suite == "observation") {
    auto s = run_observation_sweep(opt.max_n);
    passed = passed && s.passed();
    suites["observation"] = observation_json(s);
  }
  r["max_n"] = opt.max_n;
  r["suites"] = suites;
  r["passed"] = passed;
  return r;
}

void add_input_options(CLI::App* cmd, InputOptions& io) {
  cmd->add_option("-i,--input", io.input, "Input file (default: stdin)");
  cmd->add_option("-f,--format", io.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("-o,--output", io.output, "Output file (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Perfect Roman domination on trees: solver, stability checker and recognizer",
               "prdf"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Perfect Roman domination number of a tree or forest");
  add_input_options(solve_cmd, solve.io);
  solve_cmd->add_flag("--witness", solve.witness, "Include a minimum-weight assignment");
  solve_cmd->add_flag("--wset", solve.wset, "Include W(T), the vertices 0 in every optimum");

  InputOptions stable_io;
  auto* stable_cmd = app.add_subcommand("stable", "Per-vertex deletion deltas and stability");
  add_input_options(stable_cmd, stable_io);

  RecognizeOptions rec;
  auto* rec_cmd = app.add_subcommand("recognize", "Decide family membership with a certificate");
  add_input_options(rec_cmd, rec.io);
  rec_cmd->add_option("--emit-certificate", rec.certificate_path, "Write the certificate here");

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Emit family members as graph6 lines");
  auto* steps_opt = gen_cmd->add_option("--steps", gen.steps, "Random attachment steps from P3");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->needs(steps_opt);
  gen_cmd->add_option("--all", gen.all, "Every member of this order")->excludes(steps_opt);
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Exhaustive verification sweeps");
  add_input_options(ver_cmd, ver.io);
  ver_cmd->add_option("--max-n", ver.max_n, "Largest tree order to sweep");
  ver_cmd->add_option("--suite", ver.suite, "Which sweep to run")
      ->check(CLI::IsMember({"theorem", "lemmas", "observation", "all"}));
  ver_cmd->add_option("--certificate", ver.certificate,
                      "Replay a certificate instead (compared against --input when given)");

  std::vector<std::string> argv_store{"prdf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](std::ostream& sink, Json j) {
    j["timing_ms"] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    sink << j.dump(2) << '\n';
  };

  try {
    std::string digest;
    if (*solve_cmd) {
      auto result = cmd_solve(solve, in, digest);
      Sink sink(solve.io.output, out);
      finish(sink.stream(), report("solve", args, digest, std::move(result)));
    } else if (*stable_cmd) {
      auto result = cmd_stable(stable_io, in, digest);
      Sink sink(stable_io.output, out);
      finish(sink.stream(), report("stable", args, digest, std::move(result)));
    } else if (*rec_cmd) {
      auto result = cmd_recognize(rec, in, digest);
      Sink sink(rec.io.output, out);
      finish(sink.stream(), report("recognize", args, digest, std::move(result)));
    } else if (*gen_cmd) {
      Sink sink(gen.output, out);
      cmd_generate(gen, sink.stream());
    } else if (*ver_cmd) {
      bool passed = false;
      auto result = cmd_verify(ver, in, passed, digest);
      Sink sink(ver.io.output, out);
      finish(sink.stream(), report("verify", args, digest, std::move(result)));
      return passed ? kSuccess : kPropertyFailure;
    }
    return kSuccess;
  } catch (const Exit& e) {
    err << "prdf: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "prdf: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const SizeLimitError& e) {
    err << "prdf: size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const std::exception& e) {
    err << "prdf: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace prd::cli
