#include "azeta/exact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "azeta/errors.hpp"

namespace azeta {

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const BigRational& c) { return Poly(std::vector<BigRational>{c}); }

Poly Poly::monomial(const BigRational& c, std::size_t e) {
  std::vector<BigRational> v(e + 1);
  v[e] = c;
  return Poly(std::move(v));
}

Poly Poly::binomial(int sign, std::size_t e) {
  std::vector<BigRational> v(e + 1);
  v[0] += 1;
  v[e] += sign;
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<BigRational> v;
  v.reserve(coeffs.size());
  for (const auto& z : coeffs) v.emplace_back(z);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigRational Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

bool Poly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& q) { return is_integer(q); });
}

std::vector<BigInt> Poly::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& q : c_) {
    if (!is_integer(q)) throw ValidationError("polynomial has non-integer coefficient " + q.get_str());
    out.push_back(q.get_num());
  }
  return out;
}

bool Poly::is_even_in_w() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

namespace {

struct Term {
  std::size_t e;
  const BigRational* c;
};

std::vector<Term> nonzero_terms(const std::vector<BigRational>& c) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) t.push_back({i, &c[i]});
  return t;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  auto ta = nonzero_terms(a.c_);
  auto tb = nonzero_terms(b.c_);
  if (ta.size() > tb.size()) std::swap(ta, tb);
  if (a.is_integral() && b.is_integral()) {
    std::vector<BigInt> acc(n);
    for (const auto& x : ta)
      for (const auto& y : tb)
        mpz_addmul(acc[x.e + y.e].get_mpz_t(), mpq_numref(x.c->get_mpq_t()),
                   mpq_numref(y.c->get_mpq_t()));
    return Poly::from_integers(acc);
  }
  std::vector<BigRational> acc(n);
  for (const auto& x : ta)
    for (const auto& y : tb) acc[x.e + y.e] += *x.c * *y.c;
  return Poly(std::move(acc));
}

Poly Poly::pow(unsigned e) const {
  Poly result{1};
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<BigRational> r = c_;
  if (r.size() < d.c_.size()) return {Poly{}, *this};
  const std::size_t dd = d.c_.size() - 1;
  std::vector<BigRational> q(r.size() - dd);
  const BigRational inv_lead = 1 / d.c_.back();
  for (std::size_t i = r.size(); i-- > dd;) {
    if (sgn(r[i]) == 0) continue;
    BigRational f = r[i] * inv_lead;
    q[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j)
      if (sgn(d.c_[j]) != 0) r[i - dd + j] -= f * d.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::substitute_power(unsigned k) const {
  if (k == 0) throw ValidationError("substitution exponent must be positive");
  if (c_.empty()) return {};
  std::vector<BigRational> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::deflate(unsigned k) const {
  if (k == 0) throw ValidationError("deflation exponent must be positive");
  if (c_.empty()) return {};
  std::vector<BigRational> v((c_.size() - 1) / k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % k == 0)
      v[i / k] = c_[i];
    else if (sgn(c_[i]) != 0)
      throw ValidationError("cannot deflate: exponent " + std::to_string(i) +
                            " not divisible by " + std::to_string(k));
  }
  return Poly(std::move(v));
}

Poly Poly::negate_variable() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::negate_u() const {
  if (!is_even_in_w()) throw ValidationError("u -> -u requires a polynomial even in w");
  Poly r = *this;
  for (std::size_t i = 2; i < r.c_.size(); i += 4) r.c_[i] = -r.c_[i];
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigRational& q = c_[i];
    if (sgn(q) == 0) continue;
    BigRational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

BigInt content(const std::vector<BigInt>& p) {
  BigInt g = 0;
  for (const auto& z : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<BigInt> primitive_part(std::vector<BigInt> p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  if (p.empty()) return p;
  BigInt g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1)
    for (auto& z : p) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return p;
}

std::vector<BigInt> clear_denominators(const Poly& p, BigInt* scale) {
  BigInt l = 1;
  for (const auto& q : p.coefficients())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(q.get_mpq_t()));
  std::vector<BigInt> out;
  out.reserve(p.size());
  for (const auto& q : p.coefficients()) {
    BigInt z;
    mpz_divexact(z.get_mpz_t(), l.get_mpz_t(), mpq_denref(q.get_mpq_t()));
    z *= q.get_num();
    out.push_back(std::move(z));
  }
  if (scale) *scale = l;
  return out;
}

bool exact_divide_integer(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                          std::vector<BigInt>& quotient) {
  if (b.empty()) throw ValidationError("polynomial division by zero");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  std::vector<BigInt> r = a;
  const std::size_t db = b.size() - 1;
  quotient.assign(a.size() - db, BigInt(0));
  const BigInt& lb = b.back();
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < db; ++j)
    if (sgn(b[j]) != 0) nz.push_back(j);
  for (std::size_t i = r.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    BigInt f;
    mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j : nz) mpz_submul(r[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    r[i] = 0;
    quotient[i - db] = std::move(f);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return false;
  return true;
}

}  // namespace azeta
