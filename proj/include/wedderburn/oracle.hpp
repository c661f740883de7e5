#pragma once

// Brute-force verifier for the Wedderburn decomposition. The twisted group
// algebra is built from its structure constants and split with nothing but
// linear algebra over F_l: center, Berlekamp subalgebra of the center,
// primitive central idempotents, and the dimensions of the blocks they cut
// out. No orbit or cohomology theory is used past the product table.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wedderburn/cohomology.hpp"
#include "wedderburn/linalg.hpp"

namespace wedderburn::oracle {

using linalg::Residue;

/// Coordinates over the basis u_0, ..., u_{N-1}.
struct AlgebraElement {
  std::vector<Residue> coords;

  bool operator==(const AlgebraElement&) const = default;
};

/// Monomial algebra: u_x u_y = scalar(x, y) u_{index(x, y)}.
class ExplicitAlgebra {
 public:
  ExplicitAlgebra(std::uint32_t ell, std::size_t dimension, std::vector<std::uint32_t> index,
                  std::vector<Residue> scalar);

  std::uint32_t ell() const { return ell_; }
  std::size_t dimension() const { return n_; }
  std::uint32_t index(std::size_t x, std::size_t y) const { return index_[x * n_ + y]; }
  Residue scalar(std::size_t x, std::size_t y) const { return scalar_[x * n_ + y]; }
  const std::uint32_t* index_row(std::size_t x) const { return index_.data() + x * n_; }
  const Residue* scalar_row(std::size_t x) const { return scalar_.data() + x * n_; }

  /// Fault injection for tests.
  void set_scalar(std::size_t x, std::size_t y, Residue value);

  AlgebraElement zero() const { return {std::vector<Residue>(n_, 0)}; }
  AlgebraElement basis(std::size_t x) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  // Basis indices of the generators a = (1,0) and b = (0,1), and the unit.
  std::size_t unit_index() const { return unit_; }
  std::vector<std::size_t> generators() const { return generators_; }
  void set_generators(std::vector<std::size_t> gens, std::size_t unit);

 private:
  std::uint32_t ell_;
  std::size_t n_;
  std::vector<std::uint32_t> index_;
  std::vector<Residue> scalar_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> generators_;
};

/// Basis ordering matches cohomology::element_index. Requires gcd(l, pm) = 1.
ExplicitAlgebra build_algebra(const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls);

/// (u_x u_y) u_z == u_x (u_y u_z) for all N^3 basis triples.
bool verify_associativity(const ExplicitAlgebra& algebra);

/// Light's associativity test: for a generating set S of the monomial
/// magma, (u_x u_g) u_y == u_x (u_g u_y) for g in S and all x, y implies
/// associativity. Also checks that the generators reach every basis element.
/// Exact, with O(|S| N^2) work.
bool verify_associativity_by_generators(const ExplicitAlgebra& algebra);

/// Basis of Z(A) in reduced row echelon form.
std::vector<AlgebraElement> center(const ExplicitAlgebra& algebra);

class SplittingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdempotentSplit {
  std::vector<AlgebraElement> idempotents;
  std::size_t berlekamp_dimension = 0;
};

/// Primitive central idempotents of a semisimple A given a basis of Z(A).
IdempotentSplit central_idempotents(const ExplicitAlgebra& algebra, const std::vector<AlgebraElement>& center_basis);

struct BlockReport {
  AlgebraElement idempotent;
  std::size_t block_dim = 0;   // dim_F(eA)
  std::size_t center_dim = 0;  // dim_F(eZ(A)), the field degree d
  std::size_t matrix_size = 0; // n with block_dim = n^2 d
};

BlockReport block_report(const ExplicitAlgebra& algebra, const std::vector<AlgebraElement>& center_basis,
                         const AlgebraElement& idempotent);

enum class AssociativityCheck { Exhaustive, Generators };

struct OracleRun {
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks;  // (n, d), sorted
  std::vector<BlockReport> reports;
  std::size_t center_dim = 0;
  std::size_t berlekamp_dim = 0;
  bool associative = false;
};

/// Full pipeline on a prebuilt algebra; throws SplittingError if A is not
/// associative or a block has inconsistent dimensions.
OracleRun run_oracle(const ExplicitAlgebra& algebra, AssociativityCheck check = AssociativityCheck::Exhaustive);

/// Multiset of (n, d) over all simple blocks of F_l^alpha G.
std::vector<std::pair<std::int64_t, std::int64_t>> oracle_decomposition(
    const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls,
    AssociativityCheck check = AssociativityCheck::Exhaustive);

}  // namespace wedderburn::oracle
