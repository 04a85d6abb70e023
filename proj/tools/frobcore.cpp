#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobcore/errors.hpp"
#include "report.hpp"

namespace {

using namespace frobcore::cli;

constexpr int kPass = 0, kCheckFailure = 1, kUsage = 2;

int emit(const Report& r, bool as_json) {
  if (as_json) std::cout << render_json(r).dump(2) << "\n";
  else std::cout << render_text(r);
  return r.ok() ? kPass : kCheckFailure;
}

int run_file(const std::string& path, const std::string& dot_path, std::uint64_t seed, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "frobcore: cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path.substr(path.find_last_of('/') + 1);
  if (auto dot = name.rfind(".scn"); dot != std::string::npos) name.resize(dot);
  Scenario sc;
  try {
    sc = parse_scenario(buf.str(), name);
  } catch (const frobcore::Error& e) {
    std::cerr << path << ": " << e.kind() << ": " << e.what() << "\n";
    return kUsage;
  }
  Report r = run_scenario(sc, RunOptions{seed, !dot_path.empty()});
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "frobcore: cannot write " << dot_path << "\n";
      return kUsage;
    }
    out << r.dot;
  }
  return emit(r, as_json);
}

int run_examples(const std::string& filter, std::uint64_t seed, bool as_json) {
  int status = kPass;
  json all = json::array();
  int matched = 0;
  for (const auto& e : embedded_corpus()) {
    std::string name = e.name;
    if (name.find(filter) == std::string::npos) continue;
    ++matched;
    Report r = run_scenario(parse_scenario(e.text, name), RunOptions{seed, false});
    if (!r.ok()) status = kCheckFailure;
    if (as_json) all.push_back(render_json(r));
    else std::cout << render_text(r) << "\n";
  }
  if (matched == 0) {
    std::cerr << "frobcore: no example matches '" << filter << "'\n";
    return kUsage;
  }
  if (as_json) std::cout << all.dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobcore: transposes, tame ramification and centers of F-purity over F_p"};
  app.require_subcommand(1);
  std::uint64_t seed = RunOptions{}.seed;
  bool as_json = false;

  std::string file, dot_path;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("file", file, "scenario (.scn)")->required();
  run->add_option("--dot", dot_path, "write the compatible-prime lattice as DOT");
  run->add_option("--seed", seed, "seed for randomized checks");
  run->add_flag("--json", as_json, "structured report");

  std::string filter;
  auto* ex = app.add_subcommand("examples", "run the built-in example corpus");
  ex->add_option("--filter", filter, "substring of the example name");
  ex->add_option("--seed", seed, "seed for randomized checks");
  ex->add_flag("--json", as_json, "structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*run) return run_file(file, dot_path, seed, as_json);
  return run_examples(filter, seed, as_json);
}
