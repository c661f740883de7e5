#pragma once

// Subcommands of the wedderburn tool. Each writes to `out`/`err` and
// returns the process exit status.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wedderburn/oracle.hpp"

namespace wedderburn::cli {

enum class Command { Decompose, Orbits, H2, Verify, Tables, Scan };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::Decompose;
  std::optional<std::int64_t> p, m, ell, r;
  std::int64_t lambda = 1;
  Format format = Format::Text;
  bool verify = false;
  std::int64_t min_p = 3;
  std::int64_t max_p = 13;
  std::vector<std::int64_t> ell_list{2, 3, 5, 7, 13};
  std::int64_t oracle_cap = 400;
  std::uint64_t seed = 0x5eed'f00dULL;
  std::string table = "general";  // tables: "2", "3", "4" or "general"
  unsigned threads = 0;
  bool exhaustive_associativity = false;
  /// Applied to the explicit algebra before the oracle runs (fault injection).
  std::function<void(oracle::ExplicitAlgebra&)> perturb_oracle;
};

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_orbits(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_h2(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// decompose with the oracle cross-check forced on.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace wedderburn::cli
