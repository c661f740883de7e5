#pragma once

// Integer and modular arithmetic primitives. Everything fits in 64 bits:
// the moduli used by the library are small primes and their orders.

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace wedderburn::arith {

/// Residue of an integer modulo n >= 2, kept in [0, n).
class ResidueClass {
 public:
  ResidueClass(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  ResidueClass operator+(const ResidueClass& other) const;
  ResidueClass operator*(const ResidueClass& other) const;
  ResidueClass pow(std::uint64_t exponent) const;

  bool operator==(const ResidueClass&) const = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

/// Reduces any integer into [0, n).
std::int64_t mod(std::int64_t x, std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// (a * b) mod n without overflow for n < 2^63.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t n);

/// Inverse of x modulo n; throws std::invalid_argument when gcd(x, n) != 1.
std::int64_t inv_mod(std::int64_t x, std::int64_t n);

/// Deterministic primality test (trial division).
bool is_prime(std::int64_t n);

/// Least f >= 1 with x^f = 1 (mod n). Throws std::invalid_argument if
/// gcd(x, n) != 1 or n < 2.
std::int64_t mul_order(std::int64_t x, std::int64_t n);

/// Least k in [0, order) with base^k = target (mod modulus), if any.
/// Linear scan; order is expected to be mul_order(base, modulus).
std::optional<std::int64_t> discrete_log_in_subgroup(std::int64_t base, std::int64_t target,
                                                     std::int64_t modulus, std::int64_t order);

std::int64_t euler_totient(std::int64_t n);

std::optional<std::int64_t> exact_integer_sqrt(std::int64_t n);

/// Least primitive root modulo a prime (1 for the prime 2).
std::int64_t least_primitive_root(std::int64_t prime);

}  // namespace wedderburn::arith
