#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "vatwist/cli/jobs.hpp"

using vatwist::cli::json;

namespace {

int fail(const std::string& message, int code) {
  json err = {{"error", {{"kind", "MalformedInput"}, {"message", message}}}};
  std::cout << vatwist::cli::render(err);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtually abelian groups, twisted cocycles and their representations"};
  std::string command, input_path = "-", output_path;
  vatwist::cli::JobOptions opt;
  app.add_option("command", command,
                 "cocycle-check | cocycle-classify | group-validate | extension-build | irreps | "
                 "twisted-irreps | torus-report")
      ->required();
  app.add_option("--input", input_path, "JSON job file ('-' for stdin)");
  app.add_option("--seed", opt.seed, "seed for randomized decompositions");
  app.add_option("--tol", opt.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-order", opt.max_order, "cap on finite group orders")->check(CLI::PositiveNumber);
  app.add_option("--output", output_path, "report file (default stdout)");
  app.add_flag("--matrices", opt.matrices, "include representation matrices");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(e.what(), 2);
  }

  const auto cmd = vatwist::cli::parse_command(command);
  if (!cmd) return fail("unknown command '" + command + "'", 2);

  std::string text;
  if (input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input_path);
    if (!in) return fail("cannot read " + input_path, 2);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json input;
  try {
    input = json::parse(text);
  } catch (const json::parse_error& e) {
    return fail(e.what(), 2);
  }

  const auto result = vatwist::cli::run_job(*cmd, input, opt);
  const std::string out = vatwist::cli::render(result.report);
  if (output_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(output_path);
    if (!f) return fail("cannot write " + output_path, 2);
    f << out;
  }
  return result.exit_code;
}
