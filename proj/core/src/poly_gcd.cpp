#include <cstdint>
#include <vector>

#include "azeta/exact/poly.hpp"

namespace azeta {

namespace {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP reduce(const std::vector<BigInt>& a, u64 p) {
  PolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim(r);
  return r;
}

// a <- a mod b, b nonzero
void rem_in_place(PolyP& a, const PolyP& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const u64 f = a.back() * inv % p;
    if (f != 0)
      for (std::size_t j = 0; j <= db; ++j)
        if (b[j]) a[shift + j] = (a[shift + j] + (p - f) * b[j]) % p;
    a.pop_back();
    trim(a);
  }
}

PolyP gcd_mod(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

class PrimeStream {
 public:
  u64 next() {
    do {
      cur_ -= 2;
    } while (mpz_probab_prime_p(BigInt(static_cast<unsigned long>(cur_)).get_mpz_t(), 25) == 0);
    return cur_;
  }

 private:
  u64 cur_ = (u64{1} << 31) + 1;
};

std::vector<BigInt> symmetric_lift(const std::vector<BigInt>& h, const BigInt& m) {
  BigInt half = m / 2;
  std::vector<BigInt> out = h;
  for (auto& z : out)
    if (z > half) z -= m;
  return out;
}

}  // namespace

std::vector<BigInt> gcd_integer(const std::vector<BigInt>& a_in, const std::vector<BigInt>& b_in) {
  std::vector<BigInt> a = primitive_part(a_in);
  std::vector<BigInt> b = primitive_part(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return {BigInt(1)};
  if (a == b) return a;
  if (a.size() < b.size()) std::swap(a, b);

  BigInt lc;
  mpz_gcd(lc.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  PrimeStream primes;
  std::vector<BigInt> h;  // CRT image of lc * gcd
  BigInt modulus = 0;
  std::vector<BigInt> last_candidate;
  int cur_deg = -1;
  std::vector<BigInt> q;

  for (;;) {
    const u64 p = primes.next();
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0)
      continue;
    PolyP g = gcd_mod(reduce(a, p), reduce(b, p), p);
    const int d = static_cast<int>(g.size()) - 1;
    if (d == 0) return {BigInt(1)};
    const u64 lcp = mpz_fdiv_ui(lc.get_mpz_t(), p);
    for (auto& c : g) c = c * lcp % p;

    if (cur_deg < 0 || d < cur_deg) {
      cur_deg = d;
      h.assign(g.size(), BigInt(0));
      for (std::size_t i = 0; i < g.size(); ++i) h[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(p);
      last_candidate.clear();
      continue;
    }
    if (d > cur_deg) continue;

    const u64 minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const u64 hm = mpz_fdiv_ui(h[i].get_mpz_t(), p);
      const u64 t = (g[i] + p - hm) % p * minv % p;
      mpz_addmul_ui(h[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
    }
    modulus *= static_cast<unsigned long>(p);

    std::vector<BigInt> cand = symmetric_lift(h, modulus);
    if (cand == last_candidate) {
      std::vector<BigInt> prim = primitive_part(cand);
      if (exact_divide_integer(a, prim, q) && exact_divide_integer(b, prim, q)) return prim;
    }
    last_candidate = std::move(cand);
  }
}

Poly gcd(const Poly& a, const Poly& b) {
  return Poly::from_integers(gcd_integer(clear_denominators(a), clear_denominators(b)));
}

}  // namespace azeta
