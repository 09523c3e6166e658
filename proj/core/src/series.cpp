#include "azeta/exact/series.hpp"

#include <algorithm>

#include "azeta/errors.hpp"

namespace azeta {

Series::Series(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
}

Series::Series(int order, std::vector<BigRational> coeffs) : Series(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

Series Series::from_poly(const Poly& p, int order) { return Series(order, p.coefficients()); }

Series Series::one(int order) {
  Series s(order);
  s.c_[0] = 1;
  return s;
}

Series Series::truncate(int order) const {
  if (order > order_) throw InsufficientOrderError(order_, order);
  return Series(order, c_);
}

Series& Series::operator+=(const Series& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int k = std::min(a.order_, b.order_);
  Series r(k);
  for (int i = 0; i <= k; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; i + j <= k; ++j)
      if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Series operator*(Series a, const BigRational& s) {
  for (auto& c : a.c_) c *= s;
  return a;
}

bool operator==(const Series& a, const Series& b) { return first_mismatch(a, b) < 0; }

int first_mismatch(const Series& a, const Series& b) {
  const int k = std::min(a.order_, b.order_);
  for (int i = 0; i <= k; ++i)
    if (a.c_[i] != b.c_[i]) return i;
  return -1;
}

bool Series::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& q) { return is_integer(q); });
}

Poly Series::to_poly() const { return Poly(c_); }

Series Series::substitute_power(unsigned k) const {
  if (k == 0) throw ValidationError("substitution exponent must be positive");
  Series r(order_ * static_cast<int>(k));
  for (int i = 0; i <= order_; ++i) r.c_[static_cast<std::size_t>(i) * k] = c_[i];
  return r;
}

Series Series::inverse() const {
  if (sgn(c_[0]) == 0) throw ValidationError("series inverse needs a nonzero constant term");
  Series r(order_);
  if (is_integral() && abs(c_[0]) == 1) {
    const BigInt c0 = c_[0].get_num();
    std::vector<BigInt> a(c_.size()), inv(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) a[i] = c_[i].get_num();
    std::vector<int> nz;
    for (int i = 1; i <= order_; ++i)
      if (sgn(a[i]) != 0) nz.push_back(i);
    inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
    BigInt acc;
    for (int n = 1; n <= order_; ++n) {
      acc = 0;
      for (int k : nz) {
        if (k > n) break;
        mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), inv[n - k].get_mpz_t());
      }
      inv[n] = -acc * c0;
    }
    for (int i = 0; i <= order_; ++i) r.c_[i] = inv[i];
    return r;
  }
  const BigRational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    BigRational acc = 0;
    for (int k = 1; k <= n; ++k)
      if (sgn(c_[k]) != 0) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

namespace {

// exp with k*s_k given as rationals b_k; tries integer arithmetic first.
Series exp_from_weighted(const std::vector<BigRational>& b, int order) {
  Series r(order);
  bool integral = std::all_of(b.begin(), b.end(), [](const BigRational& q) { return is_integer(q); });
  if (integral) {
    std::vector<BigInt> bz(b.size()), e(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < b.size(); ++i) bz[i] = b[i].get_num();
    std::vector<int> nz;
    for (int i = 1; i <= order; ++i)
      if (sgn(bz[i]) != 0) nz.push_back(i);
    e[0] = 1;
    BigInt acc;
    bool ok = true;
    for (int n = 1; n <= order && ok; ++n) {
      acc = 0;
      for (int k : nz) {
        if (k > n) break;
        mpz_addmul(acc.get_mpz_t(), bz[k].get_mpz_t(), e[n - k].get_mpz_t());
      }
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n))) {
        ok = false;
        break;
      }
      mpz_divexact_ui(e[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    }
    if (ok) {
      for (int i = 0; i <= order; ++i) r[i] = e[i];
      return r;
    }
  }
  r[0] = 1;
  for (int n = 1; n <= order; ++n) {
    BigRational acc = 0;
    for (int k = 1; k <= n; ++k)
      if (sgn(b[k]) != 0) acc += b[k] * r[n - k];
    r[n] = acc / n;
  }
  return r;
}

}  // namespace

Series series_exp(const Series& s) {
  if (sgn(s[0]) != 0) throw ValidationError("series_exp needs a zero constant term");
  std::vector<BigRational> b(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 1; k <= s.order(); ++k) b[k] = s[k] * k;
  return exp_from_weighted(b, s.order());
}

Series exp_of_power_sums(const std::vector<BigInt>& a, int order) {
  if (static_cast<int>(a.size()) <= order) throw InsufficientOrderError(static_cast<int>(a.size()) - 1, order);
  std::vector<BigRational> b(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) b[k] = a[k];
  return exp_from_weighted(b, order);
}

Series series_log(const Series& s) {
  if (s[0] != 1) throw ValidationError("series_log needs constant term 1");
  const int K = s.order();
  // k * l_k
  std::vector<BigRational> kl(static_cast<std::size_t>(K) + 1);
  for (int n = 1; n <= K; ++n) {
    BigRational acc = s[n] * n;
    for (int k = 1; k < n; ++k)
      if (sgn(s[n - k]) != 0 && sgn(kl[k]) != 0) acc -= kl[k] * s[n - k];
    kl[n] = acc;
  }
  Series r(K);
  for (int n = 1; n <= K; ++n) r[n] = kl[n] / n;
  return r;
}

Poly reconstruct_poly_from_series(const Series& s, int degree_bound) {
  if (degree_bound < 0) throw ValidationError("degree bound must be nonnegative");
  if (s[0] != 1) throw ValidationError("reconstruction needs constant term 1");
  const int required = degree_bound + kReconstructionSlack;
  if (s.order() < required) throw InsufficientOrderError(s.order(), required);
  Series inv = s.inverse();
  for (int i = degree_bound + 1; i <= inv.order(); ++i)
    if (sgn(inv[i]) != 0) throw NotPolynomialError(i);
  return inv.truncate(degree_bound).to_poly();
}

}  // namespace azeta
