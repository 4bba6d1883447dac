// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "suptrop/cli.hpp"
#include "suptrop/selfcheck/properties.hpp"

namespace {

using suptrop::selfcheck::PropertyReport;

constexpr std::uint64_t kSeed = 0xACCE55;

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void print(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "C" << id << " " << title << ": " << o.detail << "\n";
  if (!o.passed) ++failures;
}

std::string summary(const PropertyReport& r) {
  std::ostringstream s;
  s << r.cases << " cases, " << r.failures << " violations, " << r.seconds << " s";
  if (!r.note.empty()) s << " (" << r.note << ")";
  if (r.failures) s << "; first: " << r.first_failure;
  return s.str();
}

Outcome from_reports(std::initializer_list<PropertyReport> reports, double time_limit = 0.0) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    o.passed &= r.passed();
    if (time_limit > 0.0 && r.seconds >= time_limit) {
      o.passed = false;
      o.detail += "[over " + std::to_string(time_limit) + " s] ";
    }
    if (!o.detail.empty() && o.detail.back() != ' ') o.detail += " | ";
    o.detail += r.name + ": " + summary(r);
  }
  return o;
}

struct Run {
  int code;
  std::string out;
};

std::string fixtures_dir() { return SUPTROP_FIXTURES_DIR; }

Run cli(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 5 && a.ends_with(".json")) a = fixtures_dir() + "/" + a;
  args.insert(args.begin(), "suptrop");
  std::ostringstream out, err;
  const int code = suptrop::cli::main(args, out, err);
  return {code, out.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GoldenCase {
  std::string stem;
  int exit_code;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  std::ifstream in(std::string(SUPTROP_GOLDEN_DIR) + "/cases.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    GoldenCase c;
    fields >> c.stem >> c.exit_code;
    for (std::string arg; fields >> arg;) c.args.push_back(arg);
    cases.push_back(std::move(c));
  }
  return cases;
}

Outcome worked_examples() {
  // The three hand-derived fixtures.
  const std::vector<std::string> stems = {"lemma_pair.check", "lemma_pair.certificate", "relabel_system.triangularize",
                                          "single_edge.power2", "single_edge.power3"};
  Outcome o{true, ""};
  std::size_t matched = 0;
  for (const auto& c : golden_cases()) {
    if (std::find(stems.begin(), stems.end(), c.stem) == stems.end()) continue;
    const Run r = cli(c.args);
    const std::string expected = read_file(std::string(SUPTROP_GOLDEN_DIR) + "/" + c.stem + ".txt");
    if (r.out == expected && r.code == c.exit_code) {
      ++matched;
    } else {
      o.passed = false;
      o.detail += "mismatch in " + c.stem + "; ";
    }
  }
  if (matched != stems.size()) o.passed = false;
  o.detail += std::to_string(matched) + "/" + std::to_string(stems.size()) + " outputs byte-identical to goldens";
  return o;
}

Outcome determinism() {
  std::vector<std::vector<std::string>> jobs;
  for (const auto& c : golden_cases()) jobs.push_back(c.args);
  for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir())) {
    if (entry.path().extension() != ".json") continue;
    const std::string file = entry.path().filename().string();
    for (const char* command : {"check", "triangularize", "certificate", "lcs", "spectrum"}) {
      jobs.push_back({command, file});
      jobs.push_back({command, file, "--format", "json"});
    }
  }
  std::size_t stable = 0;
  for (const auto& job : jobs) {
    const Run first = cli(job);
    bool same = true;
    for (int repeat = 0; repeat < 2; ++repeat) {
      const Run again = cli(job);
      same &= again.out == first.out && again.code == first.code;
    }
    stable += same ? 1 : 0;
  }
  return {stable == jobs.size(),
          std::to_string(stable) + "/" + std::to_string(jobs.size()) + " jobs byte-identical over 3 runs"};
}

}  // namespace

int main() {
  using namespace suptrop::selfcheck;

  print(1, "semiring laws on 10000 random triples (< 2 s)", from_reports({scalar_semiring_laws(kSeed, 10000)}, 2.0));
  print(2, "ghost ideal and no zero divisors, 10000 cases plus i⊗i = 0",
        from_reports({ghost_ideal_laws(kSeed + 1, 10000)}));
  print(3, "nilpotent <=> acyclic <=> cycle mean ε, 1000 matrices per n in 2..6 (< 10 s)",
        from_reports({nilpotency_equivalence(kSeed + 2, 1000)}, 10.0));
  print(4, "[A,A] = A² on 1000 matrices; 200 sampled elements nilpotent",
        from_reports({bracket_identities(kSeed + 3, 1000), element_nilpotency(kSeed + 4, 200)}));

  auto [lemma, roundtrip] = decide_consistency(kSeed + 5, 500);
  print(5, "decide vs two-way paths and certificates, 500 systems", from_reports({lemma}));
  print(6, "SUCCESS instances triangularize, depth-3 words stay upper", from_reports({roundtrip}));
  print(7, "support closure fixpoint = reachability, 500 systems", from_reports({oracle_equivalence(kSeed + 6, 500)}));
  print(8, "lower central series terminates by n-1, 200 systems",
        from_reports({lower_central_series_termination(kSeed + 7, 200)}));
  print(9, "worked examples through the CLI", worked_examples());
  print(10, "CLI determinism over the fixture corpus", determinism());

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
