#pragma once

#include <cstddef>
#include <vector>

#include "azeta/exact/bigrational.hpp"
#include "azeta/exact/poly.hpp"

namespace azeta {

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::size_t dim, std::vector<BigInt> entries);
  static IntMatrix permutation(const std::vector<int>& image);  // e_i -> e_{image[i]}

  std::size_t dim() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  // Coefficients c_0..c_n of det(x I - A), c_n = 1 (Berkowitz, division free).
  std::vector<BigInt> characteristic_polynomial() const;

 private:
  std::size_t n_;
  std::vector<BigInt> a_;
};

// det(I - wT)
Poly det_identity_minus_wT(const IntMatrix& t);

// Cycle lengths of a permutation given as an image table.
std::vector<int> cycle_lengths(const std::vector<int>& image);

}  // namespace azeta
