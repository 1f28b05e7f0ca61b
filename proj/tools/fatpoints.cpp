// Command-line front end: fatpoints <command> [input...] [options]

#include "fatpoints/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace fatpoints;
  cli::RunConfig cfg;
  std::string strategy = "multimodular-certify";
  std::string mode = "affine";
  std::string out_path;

  CLI::App app{"Initial degrees of symbolic powers of point ideals, with exact linear algebra"};
  app.set_version_flag("--version", cli::kVersion);
  app.add_option("command", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(cli::commands()));
  app.add_option("inputs", cfg.inputs, "Point, hyperplane or ideal file(s)");
  app.add_option("--m", cfg.m, "Multiplicity / exponent")->check(CLI::PositiveNumber);
  app.add_option("--m-max", cfg.m_max, "Largest multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--s-max", cfg.s_max, "Largest s searched for delta")->check(CLI::PositiveNumber);
  app.add_option("--d-max", cfg.d_max, "Largest degree checked");
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--seeds", cfg.seeds, "Sampling seeds")->delimiter(',');
  app.add_option("--n", cfg.n, "Number of points to sample")->check(CLI::PositiveNumber);
  app.add_option("--dim", cfg.dim, "Ambient dimension N for sampling")->check(CLI::PositiveNumber);
  app.add_option("--height", cfg.height, "Coordinate bound for sampling")->check(CLI::PositiveNumber);
  app.add_option("--strategy", strategy, "Rank strategy")
      ->check(CLI::IsMember({"exact", "modular", "multimodular", "multimodular-certify"}));
  app.add_option("--mode", mode, "Conditions matrix mode")->check(CLI::IsMember({"affine", "homogeneous"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }
  cfg.strategy = parse_rank_strategy(strategy);
  cfg.mode = parse_conditions_mode(mode);

  const cli::RunOutcome outcome = cli::run(cfg);
  if (!outcome.error.empty()) std::cerr << "fatpoints: " << outcome.error << "\n";
  if (out_path.empty()) {
    std::cout << outcome.document;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "fatpoints: cannot write " << out_path << "\n";
      return cli::kInputError;
    }
    out << outcome.document;
  }
  return outcome.exit_code;
}
