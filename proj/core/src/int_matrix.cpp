#include "azeta/exact/int_matrix.hpp"

#include <algorithm>

#include "azeta/errors.hpp"

namespace azeta {

IntMatrix::IntMatrix(std::size_t dim) : n_(dim), a_(dim * dim) {}

IntMatrix::IntMatrix(std::size_t dim, std::vector<BigInt> entries) : n_(dim), a_(std::move(entries)) {
  if (a_.size() != n_ * n_) throw ValidationError("matrix entries do not match a square dimension");
}

IntMatrix IntMatrix::permutation(const std::vector<int>& image) {
  IntMatrix m(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(static_cast<std::size_t>(image[i]), i) = 1;
  return m;
}

// Berkowitz: q_k = T_k q_{k-1} with T_k the lower Toeplitz matrix whose first
// column is (1, -a_kk, -R C, -R M C, ..., -R M^{k-2} C).
std::vector<BigInt> IntMatrix::characteristic_polynomial() const {
  std::vector<BigInt> q{BigInt(1)};
  // nonzero pattern of each row
  std::vector<std::vector<std::size_t>> row_nz(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn((*this)(i, j)) != 0) row_nz[i].push_back(j);

  std::vector<BigInt> v, mv;
  for (std::size_t k = 0; k < n_; ++k) {
    // leading block M = A[0..k), column C = A[0..k, k], row R = A[k, 0..k)
    std::vector<BigInt> t(k + 2);
    t[0] = 1;
    t[1] = -(*this)(k, k);
    v.assign(k, BigInt(0));
    bool c_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = (*this)(i, k);
      if (sgn(v[i]) != 0) c_zero = false;
    }
    for (std::size_t j = 2; j <= k + 1 && !c_zero; ++j) {
      BigInt dot = 0;
      for (std::size_t c : row_nz[k]) {
        if (c >= k) break;
        mpz_addmul(dot.get_mpz_t(), (*this)(k, c).get_mpz_t(), v[c].get_mpz_t());
      }
      t[j] = -dot;
      if (j == k + 1) break;
      mv.assign(k, BigInt(0));
      bool all_zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c : row_nz[i]) {
          if (c >= k) break;
          if (sgn(v[c]) != 0) mpz_addmul(mv[i].get_mpz_t(), (*this)(i, c).get_mpz_t(), v[c].get_mpz_t());
        }
        if (sgn(mv[i]) != 0) all_zero = false;
      }
      v.swap(mv);
      if (all_zero) break;
    }
    std::vector<BigInt> nq(k + 2);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (sgn(q[j]) == 0) continue;
      for (std::size_t d = 0; j + d < nq.size(); ++d)
        if (sgn(t[d]) != 0) mpz_addmul(nq[j + d].get_mpz_t(), t[d].get_mpz_t(), q[j].get_mpz_t());
    }
    q.swap(nq);
  }
  std::reverse(q.begin(), q.end());
  return q;
}

Poly det_identity_minus_wT(const IntMatrix& t) {
  std::vector<BigInt> c = t.characteristic_polynomial();
  std::reverse(c.begin(), c.end());
  return Poly::from_integers(c);
}

std::vector<int> cycle_lengths(const std::vector<int>& image) {
  std::vector<int> lens;
  std::vector<char> seen(image.size(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(image[j]);
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

}  // namespace azeta
