#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "singpoincare/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Poincare series and Alexander polynomials from resolution data"};
  singpoincare::CliRequest request;
  std::string job_path;
  int truncate = singpoincare::kDefaultTruncation;
  std::uint64_t seed = 0;

  app.add_option("command", request.command, "resolve | poincare | alexander | zeta | equivariant | ideal | oracle")
      ->required();
  app.add_option("jobfile", job_path, "JSON job file")->required();
  auto* truncate_opt = app.add_option("--truncate", truncate, "total-degree truncation (default 20)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for curvette parameters (default 0)");
  app.add_option("--format", request.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--compare", request.compare, "oracle: compare against the product formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (truncate_opt->count()) request.truncate = truncate;
  if (seed_opt->count()) request.seed = seed;

  std::ifstream in(job_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << job_path << "\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();

  const auto outcome = singpoincare::run_command(request, text.str());
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
