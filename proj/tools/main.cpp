// wedderburn: Wedderburn decomposition of twisted group algebras of
// C_p x|_r C_m over prime fields.

#include <CLI11.hpp>

#include <iostream>

#include "wedderburn/cli.hpp"

namespace {

using wedderburn::cli::Command;
using wedderburn::cli::Format;
using wedderburn::cli::RunConfig;

void add_group_options(CLI::App* sub, RunConfig& cfg, bool with_r) {
  sub->add_option("--p", cfg.p, "odd prime p")->required();
  sub->add_option("--m", cfg.m, "order of the acting cyclic group, m | p - 1")->required();
  sub->add_option("--ell", cfg.ell, "coefficient field characteristic")->required();
  if (with_r) sub->add_option("--r", cfg.r, "r of multiplicative order m modulo p")->required();
}

void add_format(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}},
                                          CLI::ignore_case));
}

void add_sweep_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--min-p", cfg.min_p, "smallest p in the sweep");
  sub->add_option("--max-p", cfg.max_p, "largest p in the sweep");
  sub->add_option("--ell-list", cfg.ell_list, "coefficient primes")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wedderburn decomposition of twisted group algebras F_l^alpha (C_p x| C_m)"};
  app.require_subcommand(1);
  RunConfig cfg;
  Command command = Command::Decompose;

  auto* decompose = app.add_subcommand("decompose", "closed-form decomposition");
  add_group_options(decompose, cfg, true);
  decompose->add_option("--lambda", cfg.lambda, "cocycle parameter lambda in F_l^*");
  decompose->add_flag("--verify", cfg.verify, "cross-check against the brute-force oracle");
  decompose->add_flag("--exhaustive-assoc", cfg.exhaustive_associativity, "check all N^3 triples for associativity");
  decompose->add_option("--seed", cfg.seed, "seed of the randomized polynomial splitter");
  add_format(decompose, cfg);
  decompose->callback([&] { command = Command::Decompose; });

  auto* verify = app.add_subcommand("verify", "decompose and compare against the oracle");
  add_group_options(verify, cfg, true);
  verify->add_option("--lambda", cfg.lambda, "cocycle parameter lambda in F_l^*");
  verify->add_flag("--exhaustive-assoc", cfg.exhaustive_associativity, "check all N^3 triples for associativity");
  verify->add_option("--seed", cfg.seed, "seed of the randomized polynomial splitter");
  add_format(verify, cfg);
  verify->callback([&] { command = Command::Verify; });

  auto* orbit_cmd = app.add_subcommand("orbits", "Frobenius orbits and C_m-orbit parameters");
  add_group_options(orbit_cmd, cfg, true);
  add_format(orbit_cmd, cfg);
  orbit_cmd->callback([&] { command = Command::Orbits; });

  auto* h2 = app.add_subcommand("h2", "second cohomology F_l^*/(F_l^*)^m");
  h2->add_option("--ell", cfg.ell, "coefficient field characteristic")->required();
  h2->add_option("--m", cfg.m, "order of the cyclic quotient")->required();
  add_format(h2, cfg);
  h2->callback([&] { command = Command::H2; });

  auto* tables = app.add_subcommand("tables", "regenerate the classification tables");
  tables->add_option("--table", cfg.table, "2, 3, 4 or general");
  tables->add_option("--m", cfg.m, "m for the general table");
  cfg.max_p = 13;
  add_sweep_options(tables, cfg);
  add_format(tables, cfg);
  tables->callback([&] { command = Command::Tables; });

  auto* scan = app.add_subcommand("scan", "verify every tuple in a parameter box");
  add_sweep_options(scan, cfg);
  scan->add_option("--oracle-cap", cfg.oracle_cap, "run the oracle when p m <= cap");
  scan->add_option("--threads", cfg.threads, "worker threads (0: hardware concurrency)");
  scan->add_flag("--exhaustive-assoc", cfg.exhaustive_associativity, "check all N^3 triples for associativity");
  add_format(scan, cfg);
  scan->callback([&] { command = Command::Scan; });

  CLI11_PARSE(app, argc, argv);
  cfg.command = command;
  return wedderburn::cli::dispatch(cfg, std::cout, std::cerr);
}
