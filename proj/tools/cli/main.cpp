#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge numbers, Picard groups and products of hypersurfaces in toric varieties"};
  app.require_subcommand(1);
  std::string input = "-", emit;
  int jobs = 0;
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::vector<int> criteria;
  for (const auto& name : th::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    if (name == "selftest") {
      sub->add_option("--criterion", criteria, "acceptance criteria to run (default 1..9)")->check(CLI::Range(1, 9));
    } else {
      sub->add_option("--input", input, "job file, or - for stdin")->capture_default_str();
    }
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--numeric-tolerance", tolerance, "root and rank tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "seed for generic coefficients and random families");
    sub->add_option("--emit", emit, "also write the JSON report to this file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : th::cli::invalid_input;
  }
  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  th::cli::CommandOptions opt;
  if (sub->count("--jobs")) opt.jobs = jobs;
  if (sub->count("--numeric-tolerance")) opt.numeric_tolerance = tolerance;
  if (sub->count("--seed")) opt.seed = seed;
  opt.criteria = criteria;

  std::string text;
  if (command != "selftest") {
    try {
      text = read_input(input);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return th::cli::invalid_input;
    }
  }
  auto rep = th::cli::run_command(command, text, opt);
  for (const auto& line : rep.lines) std::cerr << line << "\n";
  const std::string out = rep.document.dump(2);
  std::cout << out << "\n";
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) {
      std::cerr << "cannot write " << emit << "\n";
      return th::cli::internal_error;
    }
    f << out << "\n";
  }
  return rep.exit_code;
}
