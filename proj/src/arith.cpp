#include "wedderburn/arith.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace wedderburn::arith {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, n)) * mod(b, n) % n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod(base, n);
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exponent >>= 1U;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t x, std::int64_t n) {
  // extended Euclid on (x mod n, n)
  std::int64_t old_r = mod(x, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::invalid_argument("inv_mod: " + std::to_string(x) + " is not invertible modulo " +
                                std::to_string(n));
  }
  return mod(old_s, n);
}

ResidueClass::ResidueClass(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("ResidueClass: modulus must be >= 2");
  value_ = mod(value, modulus);
}

ResidueClass ResidueClass::operator+(const ResidueClass& other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("ResidueClass: modulus mismatch");
  return {value_ + other.value_, modulus_};
}

ResidueClass ResidueClass::operator*(const ResidueClass& other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("ResidueClass: modulus mismatch");
  return {mul_mod(value_, other.value_, modulus_), modulus_};
}

ResidueClass ResidueClass::pow(std::uint64_t exponent) const {
  return {pow_mod(value_, exponent, modulus_), modulus_};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t mul_order(std::int64_t x, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("mul_order: modulus must be >= 2");
  if (gcd(x, n) != 1) {
    throw std::invalid_argument("mul_order: gcd(" + std::to_string(x) + ", " + std::to_string(n) +
                                ") != 1");
  }
  const std::int64_t base = mod(x, n);
  std::int64_t y = base;
  std::int64_t f = 1;
  while (y != 1 % n) {
    y = mul_mod(y, base, n);
    ++f;
  }
  return f;
}

std::optional<std::int64_t> discrete_log_in_subgroup(std::int64_t base, std::int64_t target,
                                                     std::int64_t modulus, std::int64_t order) {
  const std::int64_t want = mod(target, modulus);
  const std::int64_t b = mod(base, modulus);
  std::int64_t y = 1 % modulus;
  for (std::int64_t k = 0; k < order; ++k) {
    if (y == want) return k;
    y = mul_mod(y, b, modulus);
  }
  return std::nullopt;
}

std::int64_t euler_totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_totient: n must be >= 1");
  std::int64_t result = n;
  std::int64_t rest = n;
  for (std::int64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    result -= result / q;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::optional<std::int64_t> exact_integer_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s != n) return std::nullopt;
  return s;
}

std::int64_t least_primitive_root(std::int64_t prime) {
  if (!is_prime(prime)) throw std::invalid_argument("least_primitive_root: modulus must be prime");
  if (prime == 2) return 1;
  const std::int64_t group_order = prime - 1;
  std::vector<std::int64_t> factors;
  std::int64_t rest = group_order;
  for (std::int64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    factors.push_back(q);
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) factors.push_back(rest);
  for (std::int64_t g = 2; g < prime; ++g) {
    bool generator = true;
    for (std::int64_t q : factors) {
      if (pow_mod(g, static_cast<std::uint64_t>(group_order / q), prime) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("least_primitive_root: no generator found");
}

}  // namespace wedderburn::arith
