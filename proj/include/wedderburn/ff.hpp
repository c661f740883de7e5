#pragma once

// Prime field F_l and the polynomial ring F_l[X], with factorization of
// squarefree polynomials into monic irreducibles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wedderburn::ff {

/// Element of the prime field F_l.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t residue, std::int64_t characteristic);

  std::int64_t residue() const { return residue_; }
  std::int64_t characteristic() const { return characteristic_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t e) const;

  bool operator==(const PrimeFieldElement&) const = default;

 private:
  std::int64_t residue_;
  std::int64_t characteristic_;
};

/// Dense univariate polynomial over F_l, lowest degree coefficient first.
/// Trailing zeros are trimmed so the zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::int64_t characteristic);
  Polynomial(std::int64_t characteristic, std::vector<std::int64_t> coefficients);

  static Polynomial constant(std::int64_t characteristic, std::int64_t c);
  static Polynomial x(std::int64_t characteristic);
  /// X^n - c
  static Polynomial binomial(std::int64_t characteristic, std::int64_t n, std::int64_t c);

  std::int64_t characteristic() const { return characteristic_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::int64_t coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Polynomial monic() const;
  Polynomial derivative() const;
  PrimeFieldElement evaluate(std::int64_t at) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::int64_t c) const;

  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();

  std::int64_t characteristic_;
  std::vector<std::int64_t> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
DivMod poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; throws when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// base^exponent mod modulus by square-and-multiply; modulus must be nonconstant.
Polynomial poly_powmod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus);

bool is_squarefree(const Polynomial& poly);

/// Distinct monic irreducible factors of a squarefree nonconstant polynomial.
/// The random stream drives the equal-degree splitting; results are returned
/// sorted by (degree, coefficients) so they do not depend on the stream.
std::vector<Polynomial> factor_squarefree(const Polynomial& poly, std::mt19937_64& rng);

/// Convenience overload with a fixed seed.
std::vector<Polynomial> factor_squarefree(const Polynomial& poly);

/// Sorted degrees of factor_squarefree(poly).
std::vector<int> factor_degrees(const Polynomial& poly, std::mt19937_64& rng);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f00dULL;

}  // namespace wedderburn::ff
