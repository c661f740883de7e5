#include "wedderburn/oracle.hpp"

#include <algorithm>
#include <string>

#include "wedderburn/arith.hpp"
#include "wedderburn/ff.hpp"

namespace wedderburn::oracle {

namespace {

using linalg::DenseMatrix;
using linalg::SparseRow;

using Coords = std::vector<Residue>;  // coordinates in a basis of Z(A)

std::vector<std::pair<std::uint32_t, Residue>> support(const AlgebraElement& a) {
  std::vector<std::pair<std::uint32_t, Residue>> out;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), a.coords[i]);
  }
  return out;
}

constexpr std::uint32_t kTableLimit = 2048;

Residue mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t ell) { return static_cast<Residue>(a * b % ell); }

AlgebraElement sparse_product(const ExplicitAlgebra& algebra, const std::vector<std::pair<std::uint32_t, Residue>>& a,
                              const std::vector<std::pair<std::uint32_t, Residue>>& b) {
  const std::uint32_t ell = algebra.ell();
  std::vector<std::uint64_t> acc(algebra.dimension(), 0);
  for (const auto& [x, ax] : a) {
    for (const auto& [y, by] : b) {
      acc[algebra.index(x, y)] += static_cast<std::uint64_t>(mulmod(ax, by, ell)) * algebra.scalar(x, y);
    }
    // ax * by * s < ell^3; |b| <= N terms per slot between folds
    if (ell > 2048) {
      for (auto& v : acc) v %= ell;
    }
  }
  AlgebraElement out{std::vector<Residue>(algebra.dimension())};
  for (std::size_t i = 0; i < acc.size(); ++i) out.coords[i] = static_cast<Residue>(acc[i] % ell);
  return out;
}

// Arithmetic in the commutative algebra Z(A) through its structure constants.
class CenterAlgebra {
 public:
  CenterAlgebra(const ExplicitAlgebra& algebra, const std::vector<AlgebraElement>& basis)
      : ell_(algebra.ell()), k_(basis.size()) {
    for (const auto& b : basis) {
      const auto lead = std::find_if(b.coords.begin(), b.coords.end(), [](Residue x) { return x != 0; });
      if (lead == b.coords.end()) throw SplittingError("center basis contains zero");
      pivots_.push_back(static_cast<std::size_t>(lead - b.coords.begin()));
    }
    std::vector<std::vector<std::pair<std::uint32_t, Residue>>> supports;
    for (const auto& b : basis) supports.push_back(support(b));
    table_.assign(k_ * k_, Coords(k_, 0));
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const AlgebraElement prod = sparse_product(algebra, supports[i], supports[j]);
        Coords c = coordinates(prod);
        if (lift(c, basis) != prod) throw SplittingError("product of central elements left the center");
        table_[i * k_ + j] = std::move(c);
      }
    }
    unit_ = coordinates(algebra.basis(algebra.unit_index()));
  }

  std::size_t dimension() const { return k_; }
  const Coords& unit() const { return unit_; }

  Coords coordinates(const AlgebraElement& z) const {
    Coords c(k_);
    for (std::size_t i = 0; i < k_; ++i) c[i] = z.coords[pivots_[i]];
    return c;
  }

  AlgebraElement lift(const Coords& c, const std::vector<AlgebraElement>& basis) const {
    const std::size_t n = basis.empty() ? 0 : basis.front().coords.size();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t x = 0; x < n; ++x) acc[x] = (acc[x] + static_cast<std::uint64_t>(c[i]) * basis[i].coords[x]) % ell_;
    }
    AlgebraElement out{std::vector<Residue>(n)};
    for (std::size_t x = 0; x < n; ++x) out.coords[x] = static_cast<Residue>(acc[x]);
    return out;
  }

  Coords mul(const Coords& a, const Coords& b) const {
    Coords out(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        if (b[j] == 0) continue;
        const Residue c = mulmod(a[i], b[j], ell_);
        const Coords& t = table_[i * k_ + j];
        for (std::size_t r = 0; r < k_; ++r) out[r] = static_cast<Residue>((out[r] + static_cast<std::uint64_t>(c) * t[r]) % ell_);
      }
    }
    return out;
  }

  Coords axpy(const Coords& a, Residue coef, const Coords& b) const {
    Coords out(k_);
    for (std::size_t r = 0; r < k_; ++r) out[r] = static_cast<Residue>((a[r] + static_cast<std::uint64_t>(coef) * b[r]) % ell_);
    return out;
  }

  Coords scale(const Coords& a, Residue coef) const { return axpy(Coords(k_, 0), coef, a); }

  Coords power(const Coords& a, std::uint64_t e) const {
    Coords result = unit_;
    Coords base = a;
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

 private:
  std::uint32_t ell_;
  std::size_t k_;
  std::vector<std::size_t> pivots_;
  std::vector<Coords> table_;
  Coords unit_;
};

// Minimal polynomial of x inside eZ, where e is the identity of eZ.
ff::Polynomial minimal_polynomial(const CenterAlgebra& z, const Coords& e, const Coords& x, std::uint32_t ell) {
  const std::size_t k = z.dimension();
  struct Reduced {
    Coords vec;
    std::vector<Residue> combo;
    std::size_t pivot;
  };
  std::vector<Reduced> stored;
  Coords power = e;
  for (std::size_t j = 0; j <= k + 1; ++j) {
    Coords w = power;
    std::vector<Residue> combo(j + 1, 0);
    combo[j] = 1;
    for (const auto& s : stored) {
      const Residue coef = w[s.pivot];
      if (coef == 0) continue;
      const Residue neg = static_cast<Residue>(ell - coef);
      w = z.axpy(w, neg, s.vec);
      for (std::size_t i = 0; i < s.combo.size(); ++i) {
        combo[i] = static_cast<Residue>((combo[i] + static_cast<std::uint64_t>(neg) * s.combo[i]) % ell);
      }
    }
    const auto lead = std::find_if(w.begin(), w.end(), [](Residue v) { return v != 0; });
    if (lead == w.end()) {
      std::vector<std::int64_t> coeffs(combo.begin(), combo.end());
      return {static_cast<std::int64_t>(ell), std::move(coeffs)};
    }
    const auto pivot = static_cast<std::size_t>(lead - w.begin());
    const Residue inv = linalg::inverse(*lead, ell);
    w = z.scale(w, inv);
    for (auto& c : combo) c = mulmod(c, inv, ell);
    stored.push_back({std::move(w), std::move(combo), pivot});
    power = z.mul(power, x);
  }
  throw SplittingError("Krylov sequence did not become dependent");
}

}  // namespace

ExplicitAlgebra::ExplicitAlgebra(std::uint32_t ell, std::size_t dimension, std::vector<std::uint32_t> index,
                                 std::vector<Residue> scalar)
    : ell_(ell), n_(dimension), index_(std::move(index)), scalar_(std::move(scalar)) {
  if (index_.size() != n_ * n_ || scalar_.size() != n_ * n_) {
    throw std::invalid_argument("ExplicitAlgebra: product table has wrong size");
  }
  for (auto i : index_) {
    if (i >= n_) throw std::invalid_argument("ExplicitAlgebra: basis index out of range");
  }
}

void ExplicitAlgebra::set_scalar(std::size_t x, std::size_t y, Residue value) {
  scalar_.at(x * n_ + y) = value % ell_;
}

AlgebraElement ExplicitAlgebra::basis(std::size_t x) const {
  AlgebraElement e = zero();
  e.coords.at(x) = 1;
  return e;
}

AlgebraElement ExplicitAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  return sparse_product(*this, support(a), support(b));
}

void ExplicitAlgebra::set_generators(std::vector<std::size_t> gens, std::size_t unit) {
  generators_ = std::move(gens);
  unit_ = unit;
}

ExplicitAlgebra build_algebra(const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls) {
  cohomology::require_semisimple(spec, cls.ell);
  const std::int64_t p = spec.p();
  const std::int64_t m = spec.m();
  const auto ell = static_cast<std::uint32_t>(cls.ell);
  const auto n = static_cast<std::size_t>(p * m);
  // r^j mod p for j in [0, m)
  std::vector<std::int64_t> twist(static_cast<std::size_t>(m), 1);
  for (std::int64_t j = 1; j < m; ++j) twist[static_cast<std::size_t>(j)] = twist[static_cast<std::size_t>(j - 1)] * spec.r() % p;

  std::vector<std::uint32_t> index(n * n);
  std::vector<Residue> scalar(n * n);
  const auto lam = static_cast<Residue>(arith::mod(cls.lambda, cls.ell));
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      const auto x = static_cast<std::size_t>(i * m + j);
      for (std::int64_t k = 0; k < p; ++k) {
        for (std::int64_t l = 0; l < m; ++l) {
          const auto y = static_cast<std::size_t>(k * m + l);
          const std::int64_t i2 = (i + k * twist[static_cast<std::size_t>(j)]) % p;
          const std::int64_t j2 = (j + l) % m;
          index[x * n + y] = static_cast<std::uint32_t>(i2 * m + j2);
          scalar[x * n + y] = (j + l >= m) ? lam : 1U;
        }
      }
    }
  }
  ExplicitAlgebra algebra(ell, n, std::move(index), std::move(scalar));
  algebra.set_generators({static_cast<std::size_t>(m), 1}, 0);
  return algebra;
}

bool verify_associativity(const ExplicitAlgebra& algebra) {
  const std::size_t n = algebra.dimension();
  const std::uint32_t ell = algebra.ell();
  if (ell > kTableLimit) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = algebra.index(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t yz = algebra.index(y, z);
          if (algebra.index(xy, z) != algebra.index(x, yz) ||
              mulmod(algebra.scalar(x, y), algebra.scalar(xy, z), ell) !=
                  mulmod(algebra.scalar(y, z), algebra.scalar(x, yz), ell)) {
            return false;
          }
        }
      }
    }
    return true;
  }
  // scalars are stored reduced, so an ell x ell table replaces the divisions
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(ell) * ell);
  for (std::uint32_t a = 0; a < ell; ++a) {
    for (std::uint32_t b = 0; b < ell; ++b) mul[a * ell + b] = mulmod(a, b, ell);
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t* idx_x = algebra.index_row(x);
    const Residue* sc_x = algebra.scalar_row(x);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = idx_x[y];
      const std::uint32_t* row_s = mul.data() + static_cast<std::size_t>(sc_x[y]) * ell;
      const std::uint32_t* idx_xy = algebra.index_row(xy);
      const Residue* sc_xy = algebra.scalar_row(xy);
      const std::uint32_t* idx_y = algebra.index_row(y);
      const Residue* sc_y = algebra.scalar_row(y);
      std::uint32_t bad = 0;
      for (std::size_t z = 0; z < n; ++z) {
        const std::uint32_t yz = idx_y[z];
        bad |= idx_xy[z] ^ idx_x[yz];
        bad |= row_s[sc_xy[z]] ^ mul[sc_y[z] * ell + sc_x[yz]];
      }
      if (bad != 0) return false;
    }
  }
  return true;
}

bool verify_associativity_by_generators(const ExplicitAlgebra& algebra) {
  const std::size_t n = algebra.dimension();
  const std::uint32_t ell = algebra.ell();
  const auto gens = algebra.generators();
  if (gens.empty()) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (algebra.scalar(x, y) % ell == 0) return false;
    }
  }
  // every basis element is a left-normed product of generators
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> frontier;
  for (auto g : gens) {
    if (!reached[g]) {
      reached[g] = true;
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    const std::size_t c = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      const std::size_t w = algebra.index(c, g);
      if (!reached[w]) {
        reached[w] = true;
        frontier.push_back(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;

  for (auto g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xg = algebra.index(x, g);
      const std::uint64_t s_xg = algebra.scalar(x, g);
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t gy = algebra.index(g, y);
        if (algebra.index(xg, y) != algebra.index(x, gy)) return false;
        if (s_xg * algebra.scalar(xg, y) % ell !=
            static_cast<std::uint64_t>(algebra.scalar(g, y)) * algebra.scalar(x, gy) % ell) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<AlgebraElement> center(const ExplicitAlgebra& algebra) {
  const std::size_t n = algebra.dimension();
  const std::uint32_t ell = algebra.ell();
  const auto gens = algebra.generators();
  // Row (g, w): coefficient of u_w in z u_g - u_g z.
  std::vector<SparseRow> rows(gens.size() * n);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const std::size_t g = gens[gi];
    for (std::size_t x = 0; x < n; ++x) {
      rows[gi * n + algebra.index(x, g)].emplace_back(static_cast<std::uint32_t>(x), algebra.scalar(x, g));
      rows[gi * n + algebra.index(g, x)].emplace_back(static_cast<std::uint32_t>(x),
                                                      static_cast<Residue>((ell - algebra.scalar(g, x)) % ell));
    }
  }
  std::vector<AlgebraElement> out;
  for (const auto& row : linalg::sparse_kernel(ell, n, std::move(rows))) {
    AlgebraElement z = algebra.zero();
    for (const auto& [c, v] : row) z.coords[c] = v;
    out.push_back(std::move(z));
  }
  return out;
}

IdempotentSplit central_idempotents(const ExplicitAlgebra& algebra, const std::vector<AlgebraElement>& center_basis) {
  const std::uint32_t ell = algebra.ell();
  const CenterAlgebra z(algebra, center_basis);
  const std::size_t k = z.dimension();

  // Berlekamp subalgebra: kernel of z -> z^l - z on Z.
  DenseMatrix frob_minus_id(k, std::vector<Residue>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    Coords bi(k, 0);
    bi[i] = 1;
    const Coords image = z.power(bi, ell);
    for (std::size_t r = 0; r < k; ++r) {
      frob_minus_id[r][i] = static_cast<Residue>((image[r] + ell - bi[r]) % ell);
    }
  }
  const DenseMatrix berlekamp = linalg::dense_kernel(ell, k, frob_minus_id);

  std::vector<Coords> idempotents{z.unit()};
  std::mt19937_64 rng(ff::kDefaultSeed);
  for (const auto& b : berlekamp) {
    if (idempotents.size() == berlekamp.size()) break;
    std::vector<Coords> next;
    for (const auto& e : idempotents) {
      const Coords x = z.mul(e, b);
      const ff::Polynomial minpoly = minimal_polynomial(z, e, x, ell);
      std::vector<Residue> roots;
      for (const auto& factor : ff::factor_squarefree(minpoly, rng)) {
        if (factor.degree() != 1) throw SplittingError("minimal polynomial of a Berlekamp element is not split");
        roots.push_back(static_cast<Residue>((ell - factor.coefficient(0)) % ell));
      }
      if (roots.size() == 1) {
        next.push_back(e);
        continue;
      }
      for (Residue c : roots) {
        Coords piece = e;
        for (Residue other : roots) {
          if (other == c) continue;
          // (x - other e) / (c - other)
          const Coords lin = z.axpy(x, static_cast<Residue>(ell - other), e);
          const Residue inv = linalg::inverse(static_cast<Residue>((c + ell - other) % ell), ell);
          piece = z.scale(z.mul(piece, lin), inv);
        }
        next.push_back(std::move(piece));
      }
    }
    idempotents = std::move(next);
  }
  if (idempotents.size() != berlekamp.size()) {
    throw SplittingError("idempotent splitting stalled at " + std::to_string(idempotents.size()) + " of " +
                         std::to_string(berlekamp.size()) + " blocks");
  }
  IdempotentSplit out;
  out.berlekamp_dimension = berlekamp.size();
  for (const auto& e : idempotents) out.idempotents.push_back(z.lift(e, center_basis));
  return out;
}

BlockReport block_report(const ExplicitAlgebra& algebra, const std::vector<AlgebraElement>& center_basis,
                         const AlgebraElement& idempotent) {
  const std::size_t n = algebra.dimension();
  const std::uint32_t ell = algebra.ell();
  const auto e_support = support(idempotent);
  BlockReport report;
  report.idempotent = idempotent;

  linalg::EchelonBasis block(ell, n);
  std::vector<Residue> v(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(v.begin(), v.end(), 0);
    for (const auto& [x, ex] : e_support) {
      auto& slot = v[algebra.index(x, g)];
      slot = static_cast<Residue>((slot + static_cast<std::uint64_t>(ex) * algebra.scalar(x, g)) % ell);
    }
    block.insert(v);
  }
  report.block_dim = block.rank();

  linalg::EchelonBasis central(ell, n);
  for (const auto& zb : center_basis) central.insert(algebra.multiply(idempotent, zb).coords);
  report.center_dim = central.rank();

  if (report.center_dim == 0 || report.block_dim % report.center_dim != 0) {
    throw SplittingError("block dimension " + std::to_string(report.block_dim) + " is not a multiple of " +
                         std::to_string(report.center_dim));
  }
  const auto size = arith::exact_integer_sqrt(static_cast<std::int64_t>(report.block_dim / report.center_dim));
  if (!size) throw SplittingError("block dimension over its center is not a perfect square");
  report.matrix_size = static_cast<std::size_t>(*size);
  return report;
}

OracleRun run_oracle(const ExplicitAlgebra& algebra, AssociativityCheck check) {
  OracleRun run;
  run.associative = check == AssociativityCheck::Exhaustive ? verify_associativity(algebra)
                                                            : verify_associativity_by_generators(algebra);
  if (!run.associative) throw SplittingError("product table is not associative");
  const auto z = center(algebra);
  run.center_dim = z.size();
  const auto split = central_idempotents(algebra, z);
  run.berlekamp_dim = split.berlekamp_dimension;
  std::size_t total = 0;
  std::size_t center_total = 0;
  for (const auto& e : split.idempotents) {
    auto report = block_report(algebra, z, e);
    total += report.block_dim;
    center_total += report.center_dim;
    run.blocks.emplace_back(static_cast<std::int64_t>(report.matrix_size), static_cast<std::int64_t>(report.center_dim));
    run.reports.push_back(std::move(report));
  }
  if (total != algebra.dimension() || center_total != run.center_dim) {
    throw SplittingError("block dimensions do not add up");
  }
  std::sort(run.blocks.begin(), run.blocks.end());
  return run;
}

std::vector<std::pair<std::int64_t, std::int64_t>> oracle_decomposition(const cohomology::GroupSpec& spec,
                                                                        const cohomology::CocycleClass& cls,
                                                                        AssociativityCheck check) {
  return run_oracle(build_algebra(spec, cls), check).blocks;
}

}  // namespace wedderburn::oracle
