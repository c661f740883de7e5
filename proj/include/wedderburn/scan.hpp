#pragma once

// Parameter-space sweep: every valid (p, m, l, r, class) tuple within bounds,
// checked against the structural invariants and, for small enough |G|,
// against the brute-force oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedderburn/decomposition.hpp"
#include "wedderburn/oracle.hpp"

namespace wedderburn::scan {

struct Tuple {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::int64_t r = 0;
  std::int64_t lambda = 0;
  auto operator<=>(const Tuple&) const = default;
};

struct ScanOptions {
  std::int64_t min_p = 3;
  std::int64_t max_p = 13;
  std::vector<std::int64_t> ells{2, 3, 5, 7, 13};
  std::int64_t oracle_cap = 400;  // run the oracle when p m <= cap
  oracle::AssociativityCheck associativity = oracle::AssociativityCheck::Generators;
  bool check_cocycle = false;  // exhaustive is_cocycle per tuple
  unsigned threads = 0;        // 0: hardware concurrency
};

/// One tuple per (p, m, r, l, class representative), sorted.
std::vector<Tuple> enumerate(const ScanOptions& options);

/// Violations of the per-orbit and global structural invariants; empty when
/// all hold.
std::vector<std::string> invariant_violations(const decomposition::Decomposition& dec);

struct TupleResult {
  Tuple tuple;
  std::int64_t class_index = 0;
  std::optional<decomposition::Decomposition> engine;
  std::string engine_error;
  std::vector<std::string> violations;
  std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> oracle_blocks;
  std::string oracle_error;
  std::optional<bool> cocycle_ok;

  bool oracle_ran() const { return oracle_blocks.has_value() || !oracle_error.empty(); }
  bool matches() const;
  bool ok() const;
};

/// Checks one tuple; never throws for invalid data, recording errors instead.
TupleResult check_tuple(const Tuple& tuple, const ScanOptions& options);

/// Runs check_tuple over `tuples` on a worker pool; output order follows input.
std::vector<TupleResult> run(const std::vector<Tuple>& tuples, const ScanOptions& options);

}  // namespace wedderburn::scan
