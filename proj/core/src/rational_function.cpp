#include "azeta/exact/rational_function.hpp"

#include "azeta/errors.hpp"

namespace azeta {

namespace {

Poly divide_exact(const Poly& a, const Poly& g) {
  if (g.is_constant()) return a * (1 / g.coeff(0));
  if (a.is_integral() && g.is_integral()) {
    std::vector<BigInt> q;
    if (exact_divide_integer(a.integer_coefficients(), g.integer_coefficients(), q))
      return Poly::from_integers(q);
  }
  auto [q, r] = a.divmod(g);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division in reduction");
  return q;
}

std::vector<BigInt> as_integers(const Poly& p) { return clear_denominators(p); }

}  // namespace

RationalFunctionW::RationalFunctionW() : num_{1}, den_{1} {}

RationalFunctionW::RationalFunctionW(Poly num) : num_(std::move(num)), den_{1} {}

RationalFunctionW::RationalFunctionW(Poly num, Poly den) {
  if (den.is_zero()) throw ValidationError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly{};
    den_ = Poly{1};
    return;
  }
  std::vector<BigInt> n = as_integers(num);
  std::vector<BigInt> d = as_integers(den);
  BigInt cn = content(n), cd = content(d);
  std::vector<BigInt> pn = primitive_part(n), pd = primitive_part(d);
  BigRational scale(cn * (sgn(n.back()) < 0 ? -1 : 1), cd * (sgn(d.back()) < 0 ? -1 : 1));
  scale.canonicalize();
  if (pn.size() > 1 && pd.size() > 1) {
    std::vector<BigInt> g = gcd_integer(pn, pd);
    if (g.size() > 1) {
      std::vector<BigInt> q;
      exact_divide_integer(pn, g, q);
      pn = q;
      exact_divide_integer(pd, g, q);
      pd = q;
    }
  }
  num_ = Poly::from_integers(pn) * scale;
  den_ = Poly::from_integers(pd);
  normalize_constant();
}

RationalFunctionW::RationalFunctionW(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
  normalize_constant();
}

void RationalFunctionW::normalize_constant() {
  if (num_.is_zero()) {
    den_ = Poly{1};
    return;
  }
  const BigRational d0 = den_.coeff(0);
  if (sgn(d0) == 0) throw ValidationError("rational function undefined at w = 0");
  if (d0 != 1) {
    const BigRational inv = 1 / d0;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunctionW RationalFunctionW::geometric(unsigned e) { return {Poly{1}, Poly::binomial(-1, e), Reduced{}}; }

RationalFunctionW RationalFunctionW::plus_over_minus(unsigned e, int p) {
  RationalFunctionW f(Poly::binomial(1, e), Poly::binomial(-1, e), Reduced{});
  return f.pow(p);
}

RationalFunctionW RationalFunctionW::operator*(const RationalFunctionW& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return RationalFunctionW(Poly{});
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!a.is_constant() && !d.is_constant()) {
    Poly g = gcd(a, d);
    if (!g.is_constant()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!c.is_constant() && !b.is_constant()) {
    Poly g = gcd(c, b);
    if (!g.is_constant()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  return {a * c, b * d, Reduced{}};
}

RationalFunctionW RationalFunctionW::inverse() const {
  if (num_.is_zero()) throw ValidationError("inverse of zero rational function");
  return {den_, num_, Reduced{}};
}

RationalFunctionW RationalFunctionW::operator/(const RationalFunctionW& o) const { return *this * o.inverse(); }

RationalFunctionW RationalFunctionW::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{}};
}

RationalFunctionW RationalFunctionW::substitute(unsigned k) const {
  return {num_.substitute_power(k), den_.substitute_power(k), Reduced{}};
}

RationalFunctionW RationalFunctionW::negate_variable() const {
  return {num_.negate_variable(), den_.negate_variable(), Reduced{}};
}

RationalFunctionW RationalFunctionW::negate_u() const { return {num_.negate_u(), den_.negate_u(), Reduced{}}; }

bool RationalFunctionW::is_even_in_w() const { return num_.is_even_in_w() && den_.is_even_in_w(); }

BigRational RationalFunctionW::value_at_zero() const { return num_.coeff(0); }

Series RationalFunctionW::series(int order) const {
  return Series::from_poly(num_, order) * Series::from_poly(den_, order).inverse();
}

std::string RationalFunctionW::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

bool RationalFunctionW::equals(const RationalFunctionW& o) const { return num_ * o.den_ == o.num_ * den_; }

bool ratfunc_equal(const RationalFunctionW& f, const RationalFunctionW& g) { return f.equals(g); }

RationalFunctionW ratfunc_substitute(const RationalFunctionW& f, unsigned k) { return f.substitute(k); }

RationalFunctionW ratfunc_negate_variable(const RationalFunctionW& f) { return f.negate_variable(); }

}  // namespace azeta
