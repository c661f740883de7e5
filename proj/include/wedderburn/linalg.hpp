#pragma once

// Linear algebra over a prime field F_l for the brute-force oracle.
// Entries are stored as uint32 residues in [0, l).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wedderburn::linalg {

using Residue = std::uint32_t;

/// Incrementally built row echelon basis of a subspace of F_l^width.
/// Row reductions are accumulated without per-entry reduction and folded
/// mod l only when the running bound could overflow 32 bits.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t ell, std::size_t width);

  /// Adds v to the basis if it is independent; returns whether it was.
  bool insert(std::span<const Residue> v);

  /// Reduces v against the basis; returns true iff v lies in the span.
  bool contains(std::span<const Residue> v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t width() const { return width_; }
  std::span<const Residue> row(std::size_t i) const { return {rows_.data() + i * width_, width_}; }
  std::size_t pivot_column(std::size_t i) const { return pivots_[i]; }

 private:
  void reduce(std::vector<std::uint32_t>& work) const;

  std::uint32_t ell_;
  std::size_t width_;
  std::vector<Residue> rows_;
  std::vector<std::size_t> pivots_;
  mutable std::vector<std::uint32_t> scratch_;
};

/// Rank of a list of vectors of equal width.
std::size_t rank_of(std::uint32_t ell, std::size_t width, const std::vector<std::vector<Residue>>& vectors);

/// Sparse vector: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<std::uint32_t, Residue>>;

/// Reduced row echelon form of the span of the given sparse rows: rows are
/// sorted by leading column, each leading entry is 1 and every other row is
/// zero in that column.
std::vector<SparseRow> sparse_rref(std::uint32_t ell, std::size_t width, std::vector<SparseRow> rows);

/// Basis of {x : M x = 0} for the matrix whose rows are given, returned in
/// reduced row echelon form.
std::vector<SparseRow> sparse_kernel(std::uint32_t ell, std::size_t width, std::vector<SparseRow> rows);

/// Dense small-matrix helpers (row-major vectors of rows).
using DenseMatrix = std::vector<std::vector<Residue>>;

/// Basis of {x : M x = 0} in reduced row echelon form; `cols` is the width.
DenseMatrix dense_kernel(std::uint32_t ell, std::size_t cols, const DenseMatrix& m);

Residue inverse(Residue x, std::uint32_t ell);

}  // namespace wedderburn::linalg
