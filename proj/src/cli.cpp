#include "suptrop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "suptrop/digraph.hpp"
#include "suptrop/io.hpp"

namespace suptrop::cli {

namespace {

struct Report {
  std::string text;
  int exit_code = kExitOk;
};

std::string one_line(const Permutation& label) {
  std::string s;
  for (std::size_t v = 0; v < label.size(); ++v) s += (v ? " " : "") + std::to_string(label[v] + 1);
  return s;
}

Json one_line_json(const Permutation& label) {
  Json out = Json::array();
  for (std::size_t v = 0; v < label.size(); ++v) out.push_back(label[v] + 1);
  return out;
}

std::string cycle_line(const CycleWitness& cycle) {
  std::string s = "cycle:";
  for (Vertex v : cycle.vertices) s += " " + std::to_string(v + 1);
  return s + "\n";
}

Json cycle_json(const CycleWitness& cycle) {
  Json out = Json::array();
  for (Vertex v : cycle.vertices) out.push_back(v + 1);
  return out;
}

Json matrices_json(const std::vector<SuperMatrix>& list) {
  Json out = Json::array();
  for (const auto& m : list) out.push_back(matrix_to_json(m));
  return out;
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

SuperSystem load_system(const JobSpec& job) {
  if (job.inputs.size() != 1) throw InvalidArgument("expected exactly one input file");
  return as_system(parse_input_file(job.inputs.front()));
}

SuperMatrix single_matrix(const ParsedInput& input, const std::string& path) {
  SuperSystem system = as_system(input);
  if (system.size() != 1) throw InvalidArgument(path + " must hold a single matrix");
  return system[0];
}

Report check(const JobSpec& job) {
  const auto outcome = decide(load_system(job));
  Report r;
  r.exit_code = outcome.nilpotent() ? kExitOk : kExitNotNilpotent;
  if (job.format == Format::Json) {
    Json doc = Json::object();
    doc["result"] = outcome.nilpotent() ? "NILPOTENT" : "NOT_NILPOTENT";
    if (!outcome.nilpotent()) doc["cycle"] = cycle_json(outcome.failure().cycle);
    r.text = dump(doc);
  } else {
    r.text = outcome.nilpotent() ? "NILPOTENT\n" : "NOT_NILPOTENT\n" + cycle_line(outcome.failure().cycle);
  }
  return r;
}

Report triangularize(const JobSpec& job) {
  const auto outcome = decide(load_system(job));
  Report r;
  if (!outcome.nilpotent()) {
    r.exit_code = kExitNotNilpotent;
    if (job.format == Format::Json) {
      Json doc = Json::object();
      doc["result"] = "NOT_NILPOTENT";
      doc["cycle"] = cycle_json(outcome.failure().cycle);
      r.text = dump(doc);
    } else {
      r.text = "NOT_NILPOTENT\n" + cycle_line(outcome.failure().cycle);
    }
    return r;
  }
  const auto& success = outcome.success();
  if (job.format == Format::Json) {
    Json doc = Json::object();
    doc["result"] = "NILPOTENT";
    doc["permutation"] = one_line_json(success.permutation);
    doc["matrices"] = matrices_json(success.conjugated);
    r.text = dump(doc);
  } else {
    r.text = "NILPOTENT\npermutation: " + one_line(success.permutation) + "\n";
    for (std::size_t t = 0; t < success.conjugated.size(); ++t)
      r.text += "generator " + std::to_string(t + 1) + ":\n" + format_matrix(success.conjugated[t]);
  }
  return r;
}

Report certificate(const JobSpec& job) {
  const auto outcome = decide(load_system(job));
  Report r;
  if (job.format == Format::Json) {
    Json doc = Json::object();
    doc["result"] = outcome.nilpotent() ? "NILPOTENT" : "NOT_NILPOTENT";
    if (!outcome.nilpotent()) {
      const auto& failure = outcome.failure();
      doc["cycle"] = cycle_json(failure.cycle);
      doc["certificate"] = failure.word.to_string();
      doc["matrices"] = matrices_json({failure.value});
    }
    r.text = dump(doc);
  } else if (outcome.nilpotent()) {
    r.text = "NILPOTENT\n";
  } else {
    const auto& failure = outcome.failure();
    r.text = "NOT_NILPOTENT\n" + cycle_line(failure.cycle) + "certificate: " + failure.word.to_string() +
             "\nvalue:\n" + format_matrix(failure.value);
  }
  return r;
}

Report lcs(const JobSpec& job) {
  const auto series = lower_central_series(load_system(job), job.max_depth, job.cap);
  const char* status = series.index ? "TERMINATED" : series.truncated ? "TRUNCATED" : "DEPTH_LIMIT";
  Report r;
  if (job.format == Format::Json) {
    Json counts = Json::array();
    for (const auto& level : series.levels) counts.push_back(level.size());
    Json doc = Json::object();
    doc["result"] = status;
    doc["levels"] = std::move(counts);
    doc["index"] = series.index ? Json(*series.index) : Json(nullptr);
    doc["truncated"] = series.truncated;
    r.text = dump(doc);
    return r;
  }
  for (std::size_t k = 0; k < series.levels.size(); ++k)
    r.text += "level " + std::to_string(k) + ": " + std::to_string(series.levels[k].size()) + "\n";
  if (series.index) {
    r.text += "index: " + std::to_string(*series.index) + "\n";
  } else if (series.truncated) {
    r.text += "index: none (level " + std::to_string(series.levels.size()) + " exceeds cap " +
              std::to_string(job.cap) + ")\n";
  } else {
    r.text += "index: none (depth limit " + std::to_string(job.max_depth) + ")\n";
  }
  return r;
}

Report spectrum(const JobSpec& job) {
  const SuperSystem system = load_system(job);
  Report r;
  if (system.size() == 1) {
    const ExtReal lambda = max_cycle_mean(system[0]);
    r.text = job.format == Format::Json ? dump(Json{{"result", ext_real_to_json(lambda)}}) : format_ext_real(lambda) + "\n";
    return r;
  }
  Json values = Json::array();
  for (std::size_t t = 0; t < system.size(); ++t) {
    const ExtReal lambda = max_cycle_mean(system[t]);
    values.push_back(ext_real_to_json(lambda));
    r.text += "generator " + std::to_string(t + 1) + ": " + format_ext_real(lambda) + "\n";
  }
  if (job.format == Format::Json) r.text = dump(Json{{"result", values}});
  return r;
}

Report matrix_report(const JobSpec& job, const SuperMatrix& m) {
  Report r;
  r.text = job.format == Format::Json ? dump(Json{{"result", matrix_to_json(m)}}) : format_matrix(m);
  return r;
}

Report bracket_job(const JobSpec& job) {
  if (job.inputs.size() == 2) {
    const SuperMatrix a = single_matrix(parse_input_file(job.inputs[0]), job.inputs[0]);
    const SuperMatrix b = single_matrix(parse_input_file(job.inputs[1]), job.inputs[1]);
    return matrix_report(job, bracket(a, b));
  }
  const SuperSystem system = load_system(job);
  if (system.size() != 2) throw InvalidArgument("bracket needs two matrix files or one system of two generators");
  return matrix_report(job, bracket(system[0], system[1]));
}

Report power_job(const JobSpec& job) {
  if (job.inputs.size() != 1) throw InvalidArgument("expected exactly one input file");
  const SuperMatrix a = single_matrix(parse_input_file(job.inputs[0]), job.inputs[0]);
  return matrix_report(job, mat_pow(a, job.exponent));
}

Report selftest(const JobSpec& job) {
  const auto reports = selfcheck::run_all(job.seed);
  std::size_t passed = 0;
  Report r;
  Json list = Json::array();
  for (const auto& rep : reports) {
    passed += rep.passed() ? 1 : 0;
    if (job.format == Format::Json) {
      list.push_back(Json{{"name", rep.name}, {"cases", rep.cases}, {"failures", rep.failures},
                          {"passed", rep.passed()}, {"first_failure", rep.first_failure}});
    } else {
      r.text += std::string(rep.passed() ? "PASS " : "FAIL ") + rep.name + " (" + std::to_string(rep.cases) +
                " cases, " + std::to_string(rep.failures) + " failures)\n";
      if (!rep.passed() && !rep.first_failure.empty()) r.text += "  first failure: " + rep.first_failure + "\n";
    }
  }
  const std::size_t failed = reports.size() - passed;
  if (job.format == Format::Json) {
    r.text = dump(Json{{"result", failed == 0 ? "PASS" : "FAIL"},
                       {"seed", job.seed},
                       {"passed", passed},
                       {"failed", failed},
                       {"suites", list}});
  } else {
    r.text += "selftest seed " + std::to_string(job.seed) + ": " + std::to_string(passed) + " passed, " +
              std::to_string(failed) + " failed\n";
  }
  r.exit_code = failed == 0 ? kExitOk : kExitNotNilpotent;
  return r;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    if (job.command != Command::Selftest && job.inputs.empty()) throw InvalidArgument("an input file is required");
    switch (job.command) {
      case Command::Check: report = check(job); break;
      case Command::Triangularize: report = triangularize(job); break;
      case Command::Certificate: report = certificate(job); break;
      case Command::Lcs: report = lcs(job); break;
      case Command::Spectrum: report = spectrum(job); break;
      case Command::Bracket: report = bracket_job(job); break;
      case Command::Power: report = power_job(job); break;
      case Command::Selftest: report = selftest(job); break;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (job.output.empty()) {
    out << report.text;
  } else {
    std::ofstream file(job.output, std::ios::binary);
    file << report.text;
    if (!file) {
      err << "error: cannot write " << job.output << "\n";
      return kExitUsage;
    }
  }
  return report.exit_code;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supertropical Lie algebra toolkit: nilpotency, triangularization, certificates", "suptrop"};
  app.require_subcommand(1);

  JobSpec job;
  std::string format = "human";
  const std::map<std::string, Command> commands{
      {"check", Command::Check},           {"triangularize", Command::Triangularize},
      {"certificate", Command::Certificate}, {"lcs", Command::Lcs},
      {"spectrum", Command::Spectrum},     {"bracket", Command::Bracket},
      {"power", Command::Power},           {"selftest", Command::Selftest},
  };
  const std::map<std::string, std::string> descriptions{
      {"check", "decide nilpotency of the generated Lie algebra"},
      {"triangularize", "print the relabeling and the strictly upper generators"},
      {"certificate", "print a bracket word whose value is not nilpotent"},
      {"lcs", "lower central series level sizes and termination index"},
      {"spectrum", "maximum cycle mean of each generator"},
      {"bracket", "[A, B] = AB + BA of two matrices"},
      {"power", "A^k"},
      {"selftest", "run the randomized property suites"},
  };

  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--output,-o", job.output, "write the report to a file");
    sub->add_option("--seed", job.seed, "random seed");
    if (command == Command::Selftest) continue;
    const std::size_t arity = command == Command::Bracket ? 2 : 1;
    sub->add_option("input", job.inputs, "matrix or system JSON file")->required()->expected(1, static_cast<int>(arity));
    sub->add_option("--max-depth", job.max_depth, "lcs: deepest level to compute")->check(CLI::PositiveNumber);
    sub->add_option("--cap", job.cap, "lcs: maximum distinct generators per level")->check(CLI::PositiveNumber);
    if (command == Command::Power)
      sub->add_option("-k,--exponent", job.exponent, "exponent, >= 1")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [name, command] : commands)
    if (app.got_subcommand(name)) job.command = command;
  job.format = format == "json" ? Format::Json : Format::Human;
  return run(job, out, err);
}

}  // namespace suptrop::cli
