#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "azeta/exact/bigrational.hpp"

namespace azeta {

// Dense univariate polynomial in w with rational coefficients.
// Trailing zeros are always stripped; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const BigRational& c);
  static Poly monomial(const BigRational& c, std::size_t e);
  // 1 + sign * w^e
  static Poly binomial(int sign, std::size_t e);
  static Poly from_integers(const std::vector<BigInt>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<BigRational>& coefficients() const { return c_; }
  BigRational coeff(std::size_t i) const;
  const BigRational& leading() const { return c_.back(); }

  bool is_integral() const;
  std::vector<BigInt> integer_coefficients() const;  // throws if not integral
  bool is_even_in_w() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigRational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const;
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  // w -> w^k
  Poly substitute_power(unsigned k) const;
  // inverse of substitute_power; requires all exponents divisible by k
  Poly deflate(unsigned k) const;
  // w -> -w
  Poly negate_variable() const;
  // u -> -u with u = w^2, i.e. w -> i*w; defined only when even in w
  Poly negate_u() const;

  std::string to_string(const std::string& var = "w") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

// Primitive integer polynomials: content removed, positive leading coefficient.
std::vector<BigInt> primitive_part(std::vector<BigInt> p);
BigInt content(const std::vector<BigInt>& p);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient. Multi-modular with trial-division certification.
std::vector<BigInt> gcd_integer(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
Poly gcd(const Poly& a, const Poly& b);

// a / b over Z when b divides a exactly; returns false otherwise.
bool exact_divide_integer(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                          std::vector<BigInt>& quotient);

// Scale so all coefficients are integers (multiplies by lcm of denominators).
std::vector<BigInt> clear_denominators(const Poly& p, BigInt* scale = nullptr);

}  // namespace azeta
