#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace permorb;
  cli::RunConfig cfg;
  std::string command, q_order = "10", weight_cutoff = "2", mode_bound = "2", format = "text";

  CLI::App app{"Exact checks for cyclic permutation orbifolds of lattice vertex operator algebras"};
  app.add_option("command", command, "lemma | coeffs | chars | thm41 | iso | verify-all")
      ->required()
      ->check(CLI::IsMember(cli::command_names()));
  app.add_option("--lattice", cfg.lattice_path, "lattice description file")->check(CLI::ExistingFile);
  app.add_option("--k", cfg.k, "cycle length")->check(CLI::PositiveNumber);
  app.add_option("--q-order", q_order, "q-series truncation (rational)");
  app.add_option("--weight-cutoff", weight_cutoff, "state weight cutoff (rational)");
  app.add_option("--mode-bound", mode_bound, "largest |n| for checked modes (rational)");
  app.add_option("--series-order", cfg.series_order, "order of the c_{mnr} and a_j tables")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.q_order = parse_rat(q_order);
    cfg.weight_cutoff = parse_rat(weight_cutoff);
    cfg.mode_bound = parse_rat(mode_bound);
    cfg.machine = format == "machine";
    return cli::run_command(command, cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "permorb: " << e.what() << "\n";
    return 2;
  }
}
