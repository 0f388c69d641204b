#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "prd/canonical.hpp"
#include "prd/family.hpp"

using json = nlohmann::ordered_json;
using namespace prd;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Outcome& o) { return json::parse(o.out).at("result"); }

std::string without_timing(const std::string& report) {
  auto j = json::parse(report);
  j.erase("timing_ms");
  return j.dump();
}

const std::string kP3 = "3\n0 1\n1 2\n";
const std::string kP6 = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n";

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("prdf_test_" + name);
}

}  // namespace

TEST_CASE("solve") {
  auto o = run_cli({"solve", "--wset", "--witness"}, kP3);
  CHECK(o.code == cli::kSuccess);
  auto r = result_of(o);
  CHECK(r["gamma"] == 2);
  CHECK(r["wset"] == json::array({0, 2}));
  CHECK(r["witness"] == json::array({0, 2, 0}));

  CHECK(result_of(run_cli({"solve"}, "1\n"))["gamma"] == 1);
  CHECK(result_of(run_cli({"solve"}, kP6))["gamma"] == 4);
  CHECK(result_of(run_cli({"solve", "-f", "graph6"}, "Bg\n"))["gamma"] == 2);
  // A forest is accepted.
  CHECK(result_of(run_cli({"solve"}, "4\n0 1\n"))["gamma"] == 4);

  auto report = json::parse(run_cli({"solve"}, kP3).out);
  std::vector<std::string> keys;
  for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "arguments", "version", "input_digest", "result",
                                         "timing_ms"});
  CHECK(report["version"] == cli::kVersion);
}

TEST_CASE("input digest is label independent") {
  auto a = json::parse(run_cli({"solve"}, kP3).out)["input_digest"];
  auto b = json::parse(run_cli({"solve"}, "3\n1 0\n0 2\n").out)["input_digest"];
  CHECK(a == b);
  auto c = json::parse(run_cli({"solve"}, kP6).out)["input_digest"];
  CHECK(a != c);
}

TEST_CASE("stable") {
  auto p6 = result_of(run_cli({"stable"}, kP6));
  CHECK(p6["stable"] == true);
  CHECK(p6["deltas"] == json::array({0, 0, 0, 0, 0, 0}));
  auto star = run_cli({"stable"}, "4\n0 1\n0 2\n0 3\n");
  CHECK(star.code == cli::kSuccess);
  CHECK(result_of(star)["stable"] == false);
  CHECK(result_of(run_cli({"stable"}, "4\n0 1\n1 2\n2 3\n"))["stable"] == false);
  CHECK(run_cli({"stable"}, "4\n0 1\n").code == cli::kParseError);  // not a tree
}

TEST_CASE("recognize") {
  auto cert = temp_file("cert.txt");
  auto o = run_cli({"recognize", "--emit-certificate", cert.string()}, kP6);
  CHECK(o.code == cli::kSuccess);
  auto r = result_of(o);
  CHECK(r["accepted"] == true);
  CHECK(r["steps"] == 1);
  std::ifstream file(cert);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(parse_certificate(text.str()).steps.size() == 1);
  std::filesystem::remove(cert);

  // Double star DS_{3,3}.
  auto ds = result_of(run_cli({"recognize"}, "8\n0 1\n0 2\n0 3\n0 4\n1 5\n1 6\n1 7\n"));
  CHECK(ds["accepted"] == false);

  auto p9 = result_of(run_cli({"recognize"}, "9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n"));
  auto p9_stable = result_of(run_cli({"stable"}, "9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n"));
  CHECK(p9["accepted"] == p9_stable["stable"]);
}

TEST_CASE("generate") {
  CHECK(run_cli({"generate", "--steps", "0"}).out == "Bg\n");
  auto all6 = run_cli({"generate", "--all", "6"}).out;
  REQUIRE(all6.size() == 5);  // one graph6 line
  CHECK(canonical_form(Tree(parse_graph6(all6))) == canonical_form(make_path(6)));

  auto o = run_cli({"generate", "--steps", "2", "--seed", "7"});
  CHECK(o.code == cli::kSuccess);
  Tree t(parse_graph6(o.out));
  CHECK(t.order() == 9);
  auto rec = run_cli({"recognize", "-f", "graph6"}, o.out);
  CHECK(result_of(rec)["accepted"] == true);
  CHECK(run_cli({"generate", "--steps", "4", "--seed", "7"}).out ==
        run_cli({"generate", "--steps", "4", "--seed", "7"}).out);

  // --all is sorted by canonical form and duplicate-free.
  std::istringstream lines(run_cli({"generate", "--all", "12"}).out);
  std::vector<CanonicalForm> forms;
  for (std::string line; std::getline(lines, line);) forms.push_back(canonical_form(Tree(parse_graph6(line))));
  CHECK(forms.size() == 5);
  CHECK(std::is_sorted(forms.begin(), forms.end()));
  CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());

  CHECK(run_cli({"generate", "--all", "7"}).code == cli::kParseError);
  CHECK(run_cli({"generate", "--all", "21"}).code == cli::kSizeLimit);
}

TEST_CASE("verify") {
  auto theorem = run_cli({"verify", "--suite", "theorem", "--max-n", "10"});
  CHECK(theorem.code == cli::kSuccess);
  CHECK(run_cli({"verify", "--suite", "lemmas", "--max-n", "12"}).code == cli::kSuccess);
  CHECK(run_cli({"verify", "--suite", "observation", "--max-n", "12"}).code == cli::kSuccess);
  CHECK(run_cli({"verify", "--suite", "theorem", "--max-n", "16"}).code == cli::kSizeLimit);
  CHECK(run_cli({"verify", "--suite", "observation", "--max-n", "13"}).code == cli::kSizeLimit);
  CHECK(run_cli({"verify", "--suite", "bogus"}).code == cli::kParseError);

  auto good = temp_file("good.txt");
  std::ofstream(good) << "P3\n0: 3 4 5\n";
  CHECK(run_cli({"verify", "--certificate", good.string()}).code == cli::kSuccess);
  auto bad = temp_file("bad.txt");
  std::ofstream(bad) << "P3\n1: 3 4 5\n";
  CHECK(run_cli({"verify", "--certificate", bad.string()}).code == cli::kPropertyFailure);
  auto input = temp_file("p6.txt");
  std::ofstream(input) << kP6;
  CHECK(run_cli({"verify", "--certificate", good.string(), "-i", input.string()}).code ==
        cli::kSuccess);
  std::ofstream(input) << "6\n0 1\n0 2\n0 3\n0 4\n0 5\n";
  CHECK(run_cli({"verify", "--certificate", good.string(), "-i", input.string()}).code ==
        cli::kPropertyFailure);
  for (const auto& p : {good, bad, input}) std::filesystem::remove(p);
}

TEST_CASE("parse errors and size limits") {
  CHECK(run_cli({"solve"}, "3\n0 0\n").code == cli::kParseError);
  CHECK(run_cli({"solve"}, "3\n0 1\n0 1\n").code == cli::kParseError);
  CHECK(run_cli({"solve"}, "abc\n").code == cli::kParseError);
  CHECK(run_cli({"solve", "-f", "graph6"}, "Bw\n").code == cli::kParseError);  // a triangle
  CHECK(run_cli({"solve", "-f", "nope"}, kP3).code == cli::kParseError);
  CHECK(run_cli({"nonsense"}).code == cli::kParseError);
  CHECK(run_cli({"solve", "-i", "/nonexistent/file"}).code == cli::kParseError);

  std::string big = "30000\n";
  for (int v = 1; v < 30000; ++v) big += std::to_string(v - 1) + " " + std::to_string(v) + "\n";
  CHECK(run_cli({"solve"}, big).code == cli::kSuccess);  // linear
  CHECK(run_cli({"solve", "--wset"}, big).code == cli::kSizeLimit);
  CHECK(run_cli({"stable"}, big).code == cli::kSizeLimit);
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "--witness", "--wset"}, {"stable"}, {"recognize"}}) {
    CHECK(without_timing(run_cli(args, kP6).out) == without_timing(run_cli(args, kP6).out));
  }
  CHECK(without_timing(run_cli({"verify", "--max-n", "9"}).out) ==
        without_timing(run_cli({"verify", "--max-n", "9"}).out));
}

TEST_CASE("black-box exit codes") {
  auto exit_code = [](const std::string& args, const std::string& stdin_text) {
    auto in = temp_file("stdin.txt");
    std::ofstream(in) << stdin_text;
    std::string cmd = std::string(PRDF_BINARY) + " " + args + " < " + in.string() + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    std::filesystem::remove(in);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(exit_code("solve", kP3) == 0);
  CHECK(exit_code("solve", "3\n0 0\n") == 2);
  CHECK(exit_code("verify --suite theorem --max-n 16", "") == 3);
  CHECK(exit_code("verify --suite lemmas --max-n 9", "") == 0);
  CHECK(exit_code("--version", "") == 0);
  auto bad = temp_file("bb_cert.txt");
  std::ofstream(bad) << "P3\n1: 3 4 5\n";
  CHECK(exit_code("verify --certificate " + bad.string(), "") == 1);
  std::filesystem::remove(bad);
}
