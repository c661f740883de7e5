#pragma once

// Presentation data of G = C_p x|_r C_m, its second cohomology with
// coefficients in F_l^*, and the canonical inflated 2-cocycle.

#include <cstdint>
#include <vector>

namespace wedderburn::cohomology {

/// Validated presentation <a, b | a^p, b^m, b a b^-1 = a^r> with the C_m
/// action faithful.
class GroupSpec {
 public:
  std::int64_t p() const { return p_; }
  std::int64_t m() const { return m_; }
  std::int64_t r() const { return r_; }
  std::int64_t order() const { return p_ * m_; }

  bool operator==(const GroupSpec&) const = default;

 private:
  friend GroupSpec validate_spec(std::int64_t p, std::int64_t m, std::int64_t r);
  GroupSpec(std::int64_t p, std::int64_t m, std::int64_t r) : p_(p), m_(m), r_(r) {}

  std::int64_t p_;
  std::int64_t m_;
  std::int64_t r_;
};

/// Throws std::invalid_argument naming the violated condition.
GroupSpec validate_spec(std::int64_t p, std::int64_t m, std::int64_t r);

/// Rejects coefficient primes for which the twisted group algebra is not
/// semisimple (gcd(l, p*m) != 1) or l is not prime.
void require_semisimple(const GroupSpec& spec, std::int64_t ell);

/// a^i b^j in normal form.
struct GroupElement {
  std::int64_t i;
  std::int64_t j;
  bool operator==(const GroupElement&) const = default;
};

GroupElement multiply(const GroupSpec& spec, GroupElement x, GroupElement y);

/// Row-major basis index of a^i b^j: i * m + j.
inline std::size_t element_index(const GroupSpec& spec, GroupElement g) {
  return static_cast<std::size_t>(g.i * spec.m() + g.j);
}
inline GroupElement element_at(const GroupSpec& spec, std::size_t index) {
  const auto idx = static_cast<std::int64_t>(index);
  return {idx / spec.m(), idx % spec.m()};
}

struct H2Structure {
  std::int64_t order;  // gcd(m, l - 1)
  std::vector<std::int64_t> representatives;  // g^0, ..., g^(order-1)
  std::int64_t generator;  // least primitive root of l
};

H2Structure h2_structure(std::int64_t ell, std::int64_t m);

/// A unit lambda of F_l together with its class in F_l^* / (F_l^*)^m.
struct CocycleClass {
  std::int64_t ell;
  std::int64_t lambda;          // as supplied, reduced mod l
  std::int64_t class_index;     // in [0, class_count)
  std::int64_t class_count;     // gcd(m, l - 1)
  std::int64_t representative;  // generator^class_index

  bool is_trivial() const { return class_index == 0; }
};

/// Throws std::invalid_argument for lambda = 0 mod l or non-prime l.
CocycleClass classify_lambda(std::int64_t ell, std::int64_t m, std::int64_t lambda);

/// Normalized 2-cocycle G x G -> F_l^*, stored as a dense table indexed by
/// element_index pairs.
class Cocycle {
 public:
  Cocycle(const GroupSpec& spec, std::int64_t ell, std::vector<std::int64_t> table);

  const GroupSpec& spec() const { return spec_; }
  std::int64_t ell() const { return ell_; }
  std::int64_t operator()(GroupElement x, GroupElement y) const;
  std::int64_t at(std::size_t x, std::size_t y) const { return table_[x * size_ + y]; }
  void set(std::size_t x, std::size_t y, std::int64_t value);
  std::size_t group_order() const { return size_; }

 private:
  GroupSpec spec_;
  std::int64_t ell_;
  std::size_t size_;
  std::vector<std::int64_t> table_;
};

/// Inflation of alpha_lambda from C_m: lambda when j + l >= m, else 1.
/// Uses the supplied lambda of the class.
Cocycle build_cocycle(const GroupSpec& spec, const CocycleClass& cls);

/// Exhaustive check of normalization and the cocycle identity over all
/// |G|^3 triples.
bool is_cocycle(const Cocycle& alpha, const GroupSpec& spec);

}  // namespace wedderburn::cohomology
