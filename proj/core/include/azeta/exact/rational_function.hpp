#pragma once

#include <string>

#include "azeta/exact/poly.hpp"
#include "azeta/exact/series.hpp"

namespace azeta {

// num/den in w, kept with gcd removed and den(0) = 1.
class RationalFunctionW {
 public:
  RationalFunctionW();
  RationalFunctionW(Poly num, Poly den);
  explicit RationalFunctionW(Poly num);

  static RationalFunctionW one() { return {}; }
  // (1 - w^e)^(-1)
  static RationalFunctionW geometric(unsigned e);
  // ((1 + w^e) / (1 - w^e))^p
  static RationalFunctionW plus_over_minus(unsigned e, int p);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  RationalFunctionW operator*(const RationalFunctionW& o) const;
  RationalFunctionW operator/(const RationalFunctionW& o) const;
  RationalFunctionW inverse() const;
  RationalFunctionW pow(int e) const;

  RationalFunctionW substitute(unsigned k) const;
  RationalFunctionW negate_variable() const;
  RationalFunctionW negate_u() const;
  bool is_even_in_w() const;
  BigRational value_at_zero() const;

  Series series(int order) const;
  std::string to_string(const std::string& var = "w") const;

  // cross-multiplied polynomial identity
  bool equals(const RationalFunctionW& o) const;
  friend bool operator==(const RationalFunctionW& a, const RationalFunctionW& b) {
    return a.equals(b);
  }

 private:
  struct Reduced {};
  RationalFunctionW(Poly num, Poly den, Reduced);
  void normalize_constant();
  Poly num_;
  Poly den_;
};

bool ratfunc_equal(const RationalFunctionW& f, const RationalFunctionW& g);
RationalFunctionW ratfunc_substitute(const RationalFunctionW& f, unsigned k);
RationalFunctionW ratfunc_negate_variable(const RationalFunctionW& f);

}  // namespace azeta
