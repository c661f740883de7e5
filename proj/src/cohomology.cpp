#include "wedderburn/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "wedderburn/arith.hpp"

namespace wedderburn::cohomology {

using arith::mod;

GroupSpec validate_spec(std::int64_t p, std::int64_t m, std::int64_t r) {
  if (!arith::is_prime(p) || p == 2) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (m < 2) throw std::invalid_argument("m = " + std::to_string(m) + " must be >= 2");
  if ((p - 1) % m != 0) {
    throw std::invalid_argument("m = " + std::to_string(m) + " does not divide p - 1 = " +
                                std::to_string(p - 1));
  }
  if (arith::gcd(r, p) != 1) {
    throw std::invalid_argument("r = " + std::to_string(r) + " is not a unit modulo " + std::to_string(p));
  }
  const std::int64_t ord = arith::mul_order(r, p);
  if (ord != m) {
    throw std::invalid_argument("r = " + std::to_string(r) + " has order " + std::to_string(ord) +
                                " modulo " + std::to_string(p) + ", expected m = " + std::to_string(m));
  }
  return {p, m, mod(r, p)};
}

void require_semisimple(const GroupSpec& spec, std::int64_t ell) {
  if (!arith::is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
  if (arith::gcd(ell, spec.order()) != 1) {
    throw std::invalid_argument("ell = " + std::to_string(ell) + " divides |G| = " +
                                std::to_string(spec.order()) + "; the algebra is not semisimple");
  }
}

GroupElement multiply(const GroupSpec& spec, GroupElement x, GroupElement y) {
  // a^i b^j a^k b^l = a^(i + k r^j) b^(j + l)
  const std::int64_t twist = arith::pow_mod(spec.r(), static_cast<std::uint64_t>(x.j), spec.p());
  return {mod(x.i + y.i * twist, spec.p()), mod(x.j + y.j, spec.m())};
}

H2Structure h2_structure(std::int64_t ell, std::int64_t m) {
  if (!arith::is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
  if (m < 1) throw std::invalid_argument("m must be positive");
  H2Structure out;
  out.order = arith::gcd(m, ell - 1);
  out.generator = arith::least_primitive_root(ell);
  std::int64_t g = 1;
  for (std::int64_t c = 0; c < out.order; ++c) {
    out.representatives.push_back(g);
    g = arith::mul_mod(g, out.generator, ell);
  }
  return out;
}

CocycleClass classify_lambda(std::int64_t ell, std::int64_t m, std::int64_t lambda) {
  if (!arith::is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
  const std::int64_t lam = mod(lambda, ell);
  if (lam == 0) throw std::invalid_argument("lambda must be a unit of F_" + std::to_string(ell));
  const std::int64_t gen = arith::least_primitive_root(ell);
  const auto dlog = arith::discrete_log_in_subgroup(gen, lam, ell, ell - 1);
  if (!dlog) throw std::logic_error("classify_lambda: primitive root does not generate F_l^*");
  const std::int64_t count = arith::gcd(m, ell - 1);
  const std::int64_t index = *dlog % count;
  return {ell, lam, index, count,
          arith::pow_mod(gen, static_cast<std::uint64_t>(index), ell)};
}

Cocycle::Cocycle(const GroupSpec& spec, std::int64_t ell, std::vector<std::int64_t> table)
    : spec_(spec), ell_(ell), size_(static_cast<std::size_t>(spec.order())), table_(std::move(table)) {
  if (table_.size() != size_ * size_) throw std::invalid_argument("Cocycle: table has wrong size");
}

std::int64_t Cocycle::operator()(GroupElement x, GroupElement y) const {
  return at(element_index(spec_, x), element_index(spec_, y));
}

void Cocycle::set(std::size_t x, std::size_t y, std::int64_t value) {
  table_.at(x * size_ + y) = mod(value, ell_);
}

Cocycle build_cocycle(const GroupSpec& spec, const CocycleClass& cls) {
  const auto n = static_cast<std::size_t>(spec.order());
  std::vector<std::int64_t> table(n * n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    const auto gx = element_at(spec, x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto gy = element_at(spec, y);
      if (gx.j + gy.j >= spec.m()) table[x * n + y] = cls.lambda;
    }
  }
  return {spec, cls.ell, std::move(table)};
}

bool is_cocycle(const Cocycle& alpha, const GroupSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.order());
  if (alpha.group_order() != n) return false;
  const std::int64_t ell = alpha.ell();
  for (std::size_t x = 0; x < n; ++x) {
    if (alpha.at(x, 0) != 1 || alpha.at(0, x) != 1) return false;
  }
  // product table of G, reused for every triple
  std::vector<std::uint32_t> prod(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      prod[x * n + y] = static_cast<std::uint32_t>(
          element_index(spec, multiply(spec, element_at(spec, x), element_at(spec, y))));
    }
  }
  // values outside [0, ell) cannot be compared through the table
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (alpha.at(x, y) <= 0 || alpha.at(x, y) >= ell) return false;
    }
  }
  if (ell > 2048) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = prod[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t yz = prod[y * n + z];
          if (alpha.at(x, y) * alpha.at(xy, z) % ell != alpha.at(y, z) * alpha.at(x, yz) % ell) return false;
        }
      }
    }
    return true;
  }
  std::vector<std::uint32_t> vals(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) vals[x * n + y] = static_cast<std::uint32_t>(alpha.at(x, y));
  }
  const auto l = static_cast<std::uint32_t>(ell);
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(l) * l);
  for (std::uint32_t a = 0; a < l; ++a) {
    for (std::uint32_t b = 0; b < l; ++b) mul[a * l + b] = static_cast<std::uint32_t>(std::uint64_t{a} * b % l);
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t* a_x = vals.data() + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = prod[x * n + y];
      const std::uint32_t* row = mul.data() + static_cast<std::size_t>(a_x[y]) * l;
      const std::uint32_t* a_xy = vals.data() + xy * n;
      const std::uint32_t* a_y = vals.data() + y * n;
      const std::uint32_t* p_y = prod.data() + y * n;
      std::uint32_t bad = 0;
      for (std::size_t z = 0; z < n; ++z) {
        bad |= row[a_xy[z]] ^ mul[a_y[z] * l + a_x[p_y[z]]];
      }
      if (bad != 0) return false;
    }
  }
  return true;
}

}  // namespace wedderburn::cohomology
