#pragma once

#include <vector>

#include "azeta/exact/int_matrix.hpp"
#include "azeta/exact/rational_function.hpp"
#include "azeta/quotient_group.hpp"

namespace azeta {

enum class TransferKind { walks, semi, galleries };

struct TransferState {
  LatticeVector point;  // doubled coordinates for semi states
  LatticeVector lambda;
  LatticeVector mu;  // galleries only
};

struct TransferSystem {
  TransferKind kind;
  Rep rep;
  int step_in_w;  // w-degree of one step
  std::vector<TransferState> states;
  std::vector<int> next;

  bool is_bijection() const;
  std::vector<int> cycle_lengths() const;
  // number of states fixed by the n-th power of the transition
  i64 trace_power(int n) const;
  IntMatrix matrix() const;
  // prod over cycles of (1 - w^{step * length})
  Poly inverse_zeta() const;
  RationalFunctionW zeta() const;
};

TransferSystem build_walk_system(const QuotientGroup& q, Rep rep);
TransferSystem build_semi_system(const QuotientGroup& q, Rep rep);
TransferSystem build_gallery_system(const QuotientGroup& q, Rep rep);

// prod_i (1 - w^{e_i}) as an integer polynomial
Poly binomial_product(const std::vector<int>& exponents);

}  // namespace azeta
