#pragma once

#include <vector>

#include "azeta/exact/bigrational.hpp"
#include "azeta/exact/poly.hpp"

namespace azeta {

// Truncated power series sum_{i=0}^{K} c_i w^i. Binary operations truncate to
// the smaller order.
class Series {
 public:
  explicit Series(int order);
  Series(int order, std::vector<BigRational> coeffs);
  static Series from_poly(const Poly& p, int order);
  static Series one(int order);

  int order() const { return order_; }
  const BigRational& operator[](int i) const { return c_[i]; }
  BigRational& operator[](int i) { return c_[i]; }
  const std::vector<BigRational>& coefficients() const { return c_; }

  Series truncate(int order) const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const BigRational& s);
  friend bool operator==(const Series& a, const Series& b);

  Series inverse() const;  // constant term must be nonzero
  Series substitute_power(unsigned k) const;
  bool is_integral() const;
  Poly to_poly() const;
  // first exponent where the two differ within the common order, or -1
  friend int first_mismatch(const Series& a, const Series& b);

 private:
  int order_;
  std::vector<BigRational> c_;
};

Series series_exp(const Series& s);
Series series_log(const Series& s);

// exp(sum_{n>=1} a_n w^n / n) for an integer sequence a[1..K] (a[0] ignored).
Series exp_of_power_sums(const std::vector<BigInt>& a, int order);

Poly reconstruct_poly_from_series(const Series& s, int degree_bound);

constexpr int kReconstructionSlack = 8;
constexpr int kDefaultOrder = 48;

}  // namespace azeta
