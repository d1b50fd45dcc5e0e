#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cliffq/commands.hpp"
#include "cliffq/errors.hpp"

namespace {

std::optional<std::string> read_input(const std::string& path) {
  if (path.empty()) return std::nullopt;
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even Clifford algebras of quadratic forms on P^2"};
  std::string command;
  std::string input_path;
  std::string point, type;
  std::uint64_t prime = 0;
  cliffq::CommandOptions opt;

  std::string commands;
  for (const auto& c : cliffq::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("input", input_path, "Input JSON document ('-' for stdin)");
  app.add_option("--point", point, "Fiber point x:y:z");
  app.add_option("--type", type, "F23, F24, F25plus or F25minus");
  app.add_option("--seed", opt.seed, "Seed for pseudorandom generation");
  app.add_option("--order", opt.order, "Series order for hilbert");
  app.add_option("--prime", prime, "Work over F_p");
  app.add_flag("--symbolic", opt.symbolic, "bsv-verify with symbolic q_ij");
  app.add_flag("--timing", opt.timing, "Add wall-clock time to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (!point.empty()) opt.point = point;
  if (!type.empty()) opt.type = type;
  if (prime != 0) opt.prime = prime;
  try {
    opt.workers = cliffq::workers_from_env(std::getenv("CLIFFORD_THREADS"));
  } catch (const cliffq::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  std::optional<std::string> input = read_input(input_path);
  if (!input_path.empty() && !input) {
    std::cerr << "cannot read " << input_path << "\n";
    return 1;
  }
  const cliffq::CommandResult r = cliffq::run(command, opt, input);
  std::cout << r.report;
  std::cerr << r.summary << "\n";
  return r.exit_code;
}
