#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "leonard/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leonard pair classification, construction and certificates"};
  app.require_subcommand(1, 1);

  std::string input;
  std::uint64_t seed = 1;
  std::size_t d = 2;
  std::string field = "rational";
  std::size_t count = 1;

  auto* classify = app.add_subcommand("classify", "verdict, orderings and split data for one instance");
  auto* construct = app.add_subcommand("construct", "bidiagonal pair and report for a parameter array");
  auto* certify = app.add_subcommand("certify", "full certificate for a Leonard pair (G, H, companion phi)");
  auto* random = app.add_subcommand("random", "seeded stream of valid parameter arrays");
  for (auto* sub : {classify, construct, certify}) sub->add_option("--input", input, "instance JSON (default stdin)");
  random->add_option("--seed", seed, "generator seed");
  random->add_option("--d", d, "diameter");
  random->add_option("--field", field, "rational or gf:P");
  random->add_option("--count", count, "number of arrays");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : leonard::cli::kParse;
  }

  leonard::cli::CommandResult result;
  if (random->parsed()) {
    result = leonard::cli::random(seed, d, field, count);
  } else {
    std::string text;
    if (!read_input(input, text)) {
      std::cerr << "error: cannot read " << input << "\n";
      return leonard::cli::kParse;
    }
    if (classify->parsed()) result = leonard::cli::classify(text);
    if (construct->parsed()) result = leonard::cli::construct(text);
    if (certify->parsed()) result = leonard::cli::certify(text);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
