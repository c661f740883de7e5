#pragma once

// Closed-form Wedderburn decomposition of F_l^alpha G for
// G = C_p x|_r C_m, assembled from orbit data and the cocycle class.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wedderburn/cohomology.hpp"
#include "wedderburn/orbits.hpp"

namespace wedderburn::decomposition {

/// M_n(F_{l^d}).
struct SimpleBlock {
  std::int64_t n = 1;
  std::int64_t d = 1;

  std::int64_t dimension() const { return n * n * d; }
  auto operator<=>(const SimpleBlock&) const = default;
};

struct Params {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::int64_t r = 0;
  std::int64_t class_index = 0;
  bool operator==(const Params&) const = default;
};

struct Decomposition {
  Params params;
  std::int64_t f = 0;
  std::vector<orbits::CmOrbitData> orbits;  // canonical order
  std::vector<std::int64_t> commutative;    // field degrees, ascending
  std::vector<SimpleBlock> matrix_blocks;   // one per C_m-orbit, sorted by (d, n)

  /// Every block as (n, d), commutative ones with n = 1, sorted.
  std::vector<std::pair<std::int64_t, std::int64_t>> all_blocks() const;
  std::int64_t total_dimension() const;

  bool operator==(const Decomposition&) const = default;
};

/// Degrees of the irreducible factors of X^m - lambda over F_l, using the
/// canonical representative of the class. Requires gcd(l, m) = 1.
std::vector<std::int64_t> commutative_component(std::int64_t ell, std::int64_t m,
                                                const cohomology::CocycleClass& cls);
std::vector<std::int64_t> commutative_component(std::int64_t ell, std::int64_t m,
                                                const cohomology::CocycleClass& cls, std::mt19937_64& rng);

Decomposition wedderburn(const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls);
Decomposition wedderburn(const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls,
                         std::mt19937_64& rng);

/// Total dimension p m, commutative part m, and (t r)^2 d = t m f per orbit.
bool dimension_check(const Decomposition& dec);

/// (n d, d) for every simple block: the F_l-dimension of its simple module.
std::vector<std::pair<std::int64_t, std::int64_t>> irreducible_projective_degrees(const Decomposition& dec);

/// "F_2 (+) F_4 (+) M3(F_2) (+) M3(F_2)"
std::string render(const Decomposition& dec);
std::string field_name(std::int64_t ell, std::int64_t d);
/// "1 + 2 + 9 + 9 = 21"
std::string dimension_identity(const Decomposition& dec);

// ---------------------------------------------------------------------------
// Classification tables

enum class TableKind { General, M2, M3, M4 };

/// Table to check against: the specialized table for m in {2, 3, 4} when
/// `specialized` is set, the general table otherwise.
TableKind table_kind_for(std::int64_t m, bool specialized);

/// One row of a reference table. Fields left empty are unconstrained.
struct ReferenceRow {
  std::string condition;
  std::string component;
};

const std::vector<ReferenceRow>& reference_rows(TableKind kind);

/// Index of the reference row matching one observed orbit, if any.
std::optional<std::size_t> match_reference_row(TableKind kind, std::int64_t m, const orbits::CmOrbitData& data);

struct Witness {
  std::int64_t p;
  std::int64_t r;
  std::int64_t f;
  auto operator<=>(const Witness&) const = default;
};

struct TableRow {
  std::int64_t t = 0;
  std::int64_t h = 0;
  std::int64_t s = 0;
  std::int64_t r_mat = 0;
  std::optional<std::size_t> reference_row;  // matched row of the reference table
  std::vector<std::int64_t> f_values;        // distinct f observed, ascending
  Witness witness{};                         // smallest (p, r)
  std::int64_t occurrences = 0;

  /// "f/s" style formula for d.
  std::string d_formula() const;
  std::string component() const;
};

struct TableReport {
  std::int64_t m = 0;
  std::vector<std::int64_t> ells;
  std::int64_t p_min = 0;
  std::int64_t p_max = 0;
  TableKind kind = TableKind::General;
  std::vector<TableRow> rows;
  std::int64_t groups_checked = 0;    // valid (p, r, l) tuples
  std::int64_t inconsistencies = 0;   // tuples where stabilizer_params threw

  bool contained_in_reference() const;
};

/// Sweeps all primes p in [p_min, p_max] with m | p - 1, every r of order m
/// and every l in `ells` with gcd(l, p m) = 1; groups observed orbits by
/// (t, h, s, r_mat, matched reference row).
TableReport table_report(std::int64_t m, const std::vector<std::int64_t>& ells, std::int64_t p_min,
                         std::int64_t p_max, TableKind kind);

/// All r in [1, p) of multiplicative order m modulo p.
std::vector<std::int64_t> elements_of_order(std::int64_t p, std::int64_t m);

}  // namespace wedderburn::decomposition
