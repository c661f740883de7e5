#include "wedderburn/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "wedderburn/arith.hpp"

namespace wedderburn::linalg {

Residue inverse(Residue x, std::uint32_t ell) {
  return static_cast<Residue>(arith::inv_mod(x, ell));
}

EchelonBasis::EchelonBasis(std::uint32_t ell, std::size_t width) : ell_(ell), width_(width) {
  if (ell < 2 || static_cast<std::uint64_t>(ell - 1) * (ell - 1) > (1ULL << 31)) {
    throw std::invalid_argument("EchelonBasis: characteristic out of range");
  }
}

void EchelonBasis::reduce(std::vector<std::uint32_t>& work) const {
  const std::uint32_t ell = ell_;
  const std::uint64_t step = static_cast<std::uint64_t>(ell - 1) * (ell - 1);
  const std::uint64_t limit = std::numeric_limits<std::uint32_t>::max() - step;
  std::uint64_t bound = ell - 1;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t col = pivots_[i];
    const std::uint32_t x = work[col] % ell;
    if (x == 0) continue;
    if (bound > limit) {
      for (auto& w : work) w %= ell;
      bound = ell - 1;
    }
    const std::uint32_t coef = ell - x;
    const Residue* r = rows_.data() + i * width_;
    std::uint32_t* w = work.data();
    // row i is zero left of its pivot
    for (std::size_t c = col; c < width_; ++c) w[c] += coef * r[c];
    bound += step;
  }
  for (auto& w : work) w %= ell;
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  if (v.size() != width_) throw std::invalid_argument("EchelonBasis::insert: width mismatch");
  scratch_.assign(v.begin(), v.end());
  reduce(scratch_);
  const auto lead = std::find_if(scratch_.begin(), scratch_.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == scratch_.end()) return false;
  const auto col = static_cast<std::size_t>(lead - scratch_.begin());
  const std::uint32_t inv = inverse(*lead, ell_);
  const std::size_t base = rows_.size();
  rows_.resize(base + width_);
  for (std::size_t c = 0; c < width_; ++c) {
    rows_[base + c] = static_cast<Residue>(static_cast<std::uint64_t>(scratch_[c]) * inv % ell_);
  }
  pivots_.push_back(col);
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  if (v.size() != width_) throw std::invalid_argument("EchelonBasis::contains: width mismatch");
  scratch_.assign(v.begin(), v.end());
  reduce(scratch_);
  return std::all_of(scratch_.begin(), scratch_.end(), [](std::uint32_t x) { return x == 0; });
}

std::size_t rank_of(std::uint32_t ell, std::size_t width, const std::vector<std::vector<Residue>>& vectors) {
  EchelonBasis basis(ell, width);
  for (const auto& v : vectors) {
    basis.insert(v);
    if (basis.rank() == width) break;
  }
  return basis.rank();
}

namespace {

// a + coef * b
SparseRow axpy(const SparseRow& a, Residue coef, const SparseRow& b, std::uint32_t ell) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, static_cast<Residue>(static_cast<std::uint64_t>(coef) * b[j].second % ell));
      ++j;
    } else {
      const auto v = static_cast<Residue>((a[i].second + static_cast<std::uint64_t>(coef) * b[j].second) % ell);
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(SparseRow& row, std::uint32_t ell) {
  std::sort(row.begin(), row.end());
  SparseRow merged;
  for (const auto& [c, v] : row) {
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second = static_cast<Residue>((merged.back().second + v) % ell);
    } else {
      merged.emplace_back(c, v % ell);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  row = std::move(merged);
}

}  // namespace

std::vector<SparseRow> sparse_rref(std::uint32_t ell, std::size_t width, std::vector<SparseRow> rows) {
  std::map<std::uint32_t, SparseRow> pivots;  // leading column -> row with leading 1
  for (auto& row : rows) {
    normalize(row, ell);
    for (const auto& e : row) {
      if (e.first >= width) throw std::invalid_argument("sparse_rref: column out of range");
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = axpy(row, ell - row.front().second, it->second, ell);
    }
    if (row.empty()) continue;
    const Residue inv = inverse(row.front().second, ell);
    for (auto& e : row) e.second = static_cast<Residue>(static_cast<std::uint64_t>(e.second) * inv % ell);
    const std::uint32_t lead = row.front().first;
    pivots.emplace(lead, std::move(row));
  }
  // back substitution, largest leading column first
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseRow& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto pit = pivots.find(row[k].first);
        if (pit == pivots.end()) continue;
        row = axpy(row, ell - row[k].second, pit->second, ell);
        changed = true;
        break;
      }
    }
  }
  std::vector<SparseRow> out;
  out.reserve(pivots.size());
  for (auto& [lead, row] : pivots) out.push_back(std::move(row));
  return out;
}

std::vector<SparseRow> sparse_kernel(std::uint32_t ell, std::size_t width, std::vector<SparseRow> rows) {
  const auto reduced = sparse_rref(ell, width, std::move(rows));
  std::vector<bool> is_pivot(width, false);
  for (const auto& row : reduced) is_pivot[row.front().first] = true;
  // For free column f: x_f = 1 and x_lead = -coef(row, f) for each row.
  std::vector<SparseRow> kernel_rows;
  std::map<std::uint32_t, std::size_t> free_slot;
  for (std::uint32_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    free_slot.emplace(f, kernel_rows.size());
    kernel_rows.push_back({{f, 1}});
  }
  for (const auto& row : reduced) {
    const std::uint32_t lead = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto slot = free_slot.at(row[k].first);
      kernel_rows[slot].emplace_back(lead, static_cast<Residue>((ell - row[k].second) % ell));
    }
  }
  return sparse_rref(ell, width, std::move(kernel_rows));
}

DenseMatrix dense_kernel(std::uint32_t ell, std::size_t cols, const DenseMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    SparseRow s;
    for (std::size_t c = 0; c < cols; ++c) {
      if (r.at(c) % ell != 0) s.emplace_back(static_cast<std::uint32_t>(c), r[c] % ell);
    }
    rows.push_back(std::move(s));
  }
  DenseMatrix out;
  for (const auto& s : sparse_kernel(ell, cols, std::move(rows))) {
    std::vector<Residue> v(cols, 0);
    for (const auto& [c, x] : s) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace wedderburn::linalg
