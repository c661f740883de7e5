#include "wedderburn/ff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "wedderburn/arith.hpp"

namespace wedderburn::ff {

namespace {

void require_same(std::int64_t a, std::int64_t b) {
  if (a != b) throw std::invalid_argument("characteristic mismatch");
}

}  // namespace

PrimeFieldElement::PrimeFieldElement(std::int64_t residue, std::int64_t characteristic)
    : characteristic_(characteristic) {
  if (characteristic < 2) throw std::invalid_argument("PrimeFieldElement: bad characteristic");
  residue_ = arith::mod(residue, characteristic);
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  require_same(characteristic_, o.characteristic_);
  return {residue_ + o.residue_, characteristic_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  require_same(characteristic_, o.characteristic_);
  return {residue_ - o.residue_, characteristic_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  require_same(characteristic_, o.characteristic_);
  return {arith::mul_mod(residue_, o.residue_, characteristic_), characteristic_};
}

PrimeFieldElement PrimeFieldElement::operator-() const { return {-residue_, characteristic_}; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  return {arith::inv_mod(residue_, characteristic_), characteristic_};
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  return {arith::pow_mod(residue_, e, characteristic_), characteristic_};
}

Polynomial::Polynomial(std::int64_t characteristic) : characteristic_(characteristic) {
  if (characteristic < 2) throw std::invalid_argument("Polynomial: bad characteristic");
}

Polynomial::Polynomial(std::int64_t characteristic, std::vector<std::int64_t> coefficients)
    : characteristic_(characteristic), coeffs_(std::move(coefficients)) {
  if (characteristic < 2) throw std::invalid_argument("Polynomial: bad characteristic");
  for (auto& c : coeffs_) c = arith::mod(c, characteristic_);
  trim();
}

Polynomial Polynomial::constant(std::int64_t characteristic, std::int64_t c) {
  return {characteristic, {c}};
}

Polynomial Polynomial::x(std::int64_t characteristic) { return {characteristic, {0, 1}}; }

Polynomial Polynomial::binomial(std::int64_t characteristic, std::int64_t n, std::int64_t c) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs[0] = -c;
  coeffs.back() = 1;
  return {characteristic, std::move(coeffs)};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(arith::inv_mod(leading(), characteristic_));
}

Polynomial Polynomial::derivative() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(arith::mul_mod(coeffs_[i], static_cast<std::int64_t>(i), characteristic_));
  }
  return {characteristic_, std::move(out)};
}

PrimeFieldElement Polynomial::evaluate(std::int64_t at) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = arith::mod(arith::mul_mod(acc, at, characteristic_) + *it, characteristic_);
  }
  return {acc, characteristic_};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(characteristic_, o.characteristic_);
  std::vector<std::int64_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + o.coefficient(i);
  return {characteristic_, std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same(characteristic_, o.characteristic_);
  std::vector<std::int64_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) - o.coefficient(i);
  return {characteristic_, std::move(out)};
}

Polynomial Polynomial::operator*(const Polynomial& o) const { return poly_mul(*this, o); }

Polynomial Polynomial::scaled(std::int64_t c) const {
  std::vector<std::int64_t> out = coeffs_;
  for (auto& v : out) v = arith::mul_mod(v, c, characteristic_);
  return {characteristic_, std::move(out)};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same(a.characteristic(), b.characteristic());
  const std::int64_t l = a.characteristic();
  if (a.is_zero() || b.is_zero()) return Polynomial(l);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<std::int64_t> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = (out[i + j] + arith::mul_mod(ac[i], bc[j], l)) % l;
    }
  }
  return {l, std::move(out)};
}

DivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  require_same(a.characteristic(), b.characteristic());
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  const std::int64_t l = a.characteristic();
  std::vector<std::int64_t> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::int64_t lead_inv = arith::inv_mod(b.leading(), l);
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(l), a};
  std::vector<std::int64_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const std::int64_t c = arith::mul_mod(rem[static_cast<std::size_t>(i)], lead_inv, l);
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = arith::mod(slot - arith::mul_mod(c, bc[static_cast<std::size_t>(j)], l), l);
    }
  }
  return {Polynomial(l, std::move(quot)), Polynomial(l, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).remainder; }

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs are zero");
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial poly_powmod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("poly_powmod: modulus must be nonconstant");
  Polynomial result = Polynomial::constant(modulus.characteristic(), 1);
  Polynomial b = poly_mod(base, modulus);
  while (exponent > 0) {
    if (exponent & 1U) result = poly_mod(result * b, modulus);
    exponent >>= 1U;
    if (exponent > 0) b = poly_mod(b * b, modulus);
  }
  return result;
}

bool is_squarefree(const Polynomial& poly) {
  if (poly.is_zero()) return false;
  if (poly.degree() < 1) return true;
  return poly_gcd(poly, poly.derivative()).degree() == 0;
}

namespace {

struct DegreeBucket {
  Polynomial product;  // product of all irreducible factors of this degree
  int degree;
};

std::vector<DegreeBucket> distinct_degree(const Polynomial& f_in) {
  const std::int64_t l = f_in.characteristic();
  std::vector<DegreeBucket> out;
  Polynomial f = f_in.monic();
  const Polynomial x = Polynomial::x(l);
  Polynomial h = poly_mod(x, f);  // X^(l^d) mod f
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = poly_powmod(h, static_cast<std::uint64_t>(l), f);
    Polynomial g = poly_gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = poly_divmod(f, g).quotient;
      if (f.degree() > 0) h = poly_mod(h, f);
    }
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

// a^(l^0) * a^(l^1) * ... * a^(l^(d-1)) mod g, or the analogous sum when
// `additive` is set (the trace map).
Polynomial frobenius_orbit_fold(const Polynomial& a, int d, const Polynomial& g, bool additive) {
  const std::int64_t l = g.characteristic();
  Polynomial term = poly_mod(a, g);
  Polynomial acc = term;
  for (int i = 1; i < d; ++i) {
    term = poly_powmod(term, static_cast<std::uint64_t>(l), g);
    acc = additive ? poly_mod(acc + term, g) : poly_mod(acc * term, g);
  }
  return acc;
}

Polynomial random_poly_below(std::int64_t l, int degree_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, l - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree_bound));
  for (auto& v : c) v = coeff(rng);
  return {l, std::move(c)};
}

void equal_degree(const Polynomial& g, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const std::int64_t l = g.characteristic();
  const Polynomial one = Polynomial::constant(l, 1);
  for (;;) {
    Polynomial a = random_poly_below(l, g.degree(), rng);
    if (a.degree() < 1) continue;
    Polynomial splitter(l);
    if (l == 2) {
      splitter = frobenius_orbit_fold(a, d, g, /*additive=*/true);
    } else {
      // a^((l^d - 1)/2) = (a^(1 + l + ... + l^(d-1)))^((l-1)/2)
      Polynomial norm = frobenius_orbit_fold(a, d, g, /*additive=*/false);
      splitter = poly_powmod(norm, static_cast<std::uint64_t>((l - 1) / 2), g) - one;
    }
    if (splitter.is_zero()) continue;
    Polynomial h = poly_gcd(g, splitter);
    if (h.degree() <= 0 || h.degree() >= g.degree()) continue;
    equal_degree(h, d, rng, out);
    equal_degree(poly_divmod(g, h).quotient, d, rng, out);
    return;
  }
}

}  // namespace

std::vector<Polynomial> factor_squarefree(const Polynomial& poly, std::mt19937_64& rng) {
  if (poly.degree() < 1) throw std::invalid_argument("factor_squarefree: input must be nonconstant");
  if (!is_squarefree(poly)) throw std::invalid_argument("factor_squarefree: input is not squarefree");
  std::vector<Polynomial> factors;
  for (const auto& bucket : distinct_degree(poly)) equal_degree(bucket.product, bucket.degree, rng, factors);
  std::sort(factors.begin(), factors.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients() < b.coefficients();
  });
  return factors;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& poly) {
  std::mt19937_64 rng(kDefaultSeed);
  return factor_squarefree(poly, rng);
}

std::vector<int> factor_degrees(const Polynomial& poly, std::mt19937_64& rng) {
  std::vector<int> degrees;
  for (const auto& f : factor_squarefree(poly, rng)) degrees.push_back(f.degree());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace wedderburn::ff
