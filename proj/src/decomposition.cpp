#include "wedderburn/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wedderburn/arith.hpp"
#include "wedderburn/ff.hpp"

namespace wedderburn::decomposition {

std::vector<std::pair<std::int64_t, std::int64_t>> Decomposition::all_blocks() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto d : commutative) out.emplace_back(1, d);
  for (const auto& b : matrix_blocks) out.emplace_back(b.n, b.d);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t Decomposition::total_dimension() const {
  std::int64_t total = 0;
  for (auto d : commutative) total += d;
  for (const auto& b : matrix_blocks) total += b.dimension();
  return total;
}

std::vector<std::int64_t> commutative_component(std::int64_t ell, std::int64_t m, const cohomology::CocycleClass& cls,
                                                std::mt19937_64& rng) {
  if (arith::gcd(ell, m) != 1) {
    throw std::invalid_argument("commutative_component: gcd(ell, m) = " + std::to_string(arith::gcd(ell, m)) +
                                " != 1");
  }
  if (cls.ell != ell) throw std::invalid_argument("commutative_component: class belongs to another field");
  const auto poly = ff::Polynomial::binomial(ell, m, cls.representative);
  std::vector<std::int64_t> out;
  for (int d : ff::factor_degrees(poly, rng)) out.push_back(d);
  return out;
}

std::vector<std::int64_t> commutative_component(std::int64_t ell, std::int64_t m,
                                                const cohomology::CocycleClass& cls) {
  std::mt19937_64 rng(ff::kDefaultSeed);
  return commutative_component(ell, m, cls, rng);
}

Decomposition wedderburn(const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls) {
  std::mt19937_64 rng(ff::kDefaultSeed);
  return wedderburn(spec, cls, rng);
}

Decomposition wedderburn(const cohomology::GroupSpec& spec, const cohomology::CocycleClass& cls,
                         std::mt19937_64& rng) {
  cohomology::require_semisimple(spec, cls.ell);
  Decomposition dec;
  dec.params = {spec.p(), spec.m(), cls.ell, spec.r(), cls.class_index};
  dec.f = arith::mul_order(cls.ell, spec.p());
  dec.orbits = orbits::analyze(spec, cls.ell);
  dec.commutative = commutative_component(cls.ell, spec.m(), cls, rng);
  for (const auto& o : dec.orbits) dec.matrix_blocks.push_back({o.matrix_size(), o.d});
  std::sort(dec.matrix_blocks.begin(), dec.matrix_blocks.end(),
            [](const SimpleBlock& a, const SimpleBlock& b) { return std::tie(a.d, a.n) < std::tie(b.d, b.n); });
  return dec;
}

bool dimension_check(const Decomposition& dec) {
  const auto& prm = dec.params;
  std::int64_t commutative_total = 0;
  for (auto d : dec.commutative) commutative_total += d;
  if (commutative_total != prm.m) return false;
  if (dec.total_dimension() != prm.p * prm.m) return false;
  if (dec.matrix_blocks.size() != dec.orbits.size()) return false;
  for (const auto& o : dec.orbits) {
    if (o.matrix_size() * o.matrix_size() * o.d != o.t * prm.m * dec.f) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> irreducible_projective_degrees(const Decomposition& dec) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [n, d] : dec.all_blocks()) out.emplace_back(n * d, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::string field_name(std::int64_t ell, std::int64_t d) {
  if (d == 1) return "F_" + std::to_string(ell);
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < d && q < 100; ++i) q *= ell;
  if (q < 100) return "F_" + std::to_string(q);
  return "F_{" + std::to_string(ell) + "^" + std::to_string(d) + "}";
}

std::string render(const Decomposition& dec) {
  std::vector<std::string> parts;
  for (auto d : dec.commutative) parts.push_back(field_name(dec.params.ell, d));
  for (const auto& b : dec.matrix_blocks) {
    parts.push_back("M" + std::to_string(b.n) + "(" + field_name(dec.params.ell, b.d) + ")");
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " (+) " : "") << parts[i];
  return os.str();
}

std::string dimension_identity(const Decomposition& dec) {
  std::ostringstream os;
  bool first = true;
  for (auto d : dec.commutative) {
    os << (first ? "" : " + ") << d;
    first = false;
  }
  for (const auto& b : dec.matrix_blocks) {
    os << (first ? "" : " + ") << b.dimension();
    first = false;
  }
  os << " = " << dec.total_dimension();
  return os.str();
}

}  // namespace wedderburn::decomposition
