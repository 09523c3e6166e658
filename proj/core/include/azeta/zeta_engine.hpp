#pragma once

#include <map>
#include <optional>

#include "azeta/exact/rational_function.hpp"
#include "azeta/exact/series.hpp"
#include "azeta/quotient_group.hpp"
#include "azeta/transfer_system.hpp"

namespace azeta {

RationalFunctionW zeta_walks(const QuotientGroup& q, Rep rep);
RationalFunctionW zeta_semi(const QuotientGroup& q, Rep rep);
RationalFunctionW zeta_galleries(const QuotientGroup& q, Rep rep);

struct LFunction {
  Rep rep;
  int order;                   // in u
  int degree_bound;            // N * |wt'|
  std::vector<BigInt> counts;  // N_n, index n (counts[0] = 0)
  Series series_u;             // exp(sum N_n u^n / n)
  Poly p_u;                    // P in u
  Poly p_w;                    // P in w
  // L itself: 1 / (P (1-u)^{eps N})
  RationalFunctionW l_w;
  RationalFunctionW inverse_p_w() const { return RationalFunctionW(Poly{1}, p_w); }
};

int l_function_required_order(const QuotientGroup& q, Rep rep);
LFunction l_function(const QuotientGroup& q, Rep rep, int order);

// order of lambda in Lambda / Gamma (torus)
i64 weight_degree(const QuotientGroup& q, LatticeVector lambda);
RationalFunctionW torus_closed_form(const QuotientGroup& q, Rep rep);
// prod over nontrivial weights of det(1 - rho_reg(lambda) u), in w (torus)
Poly character_product(const QuotientGroup& q, Rep rep);
RationalFunctionW correction_factor(const QuotientGroup& q, Rep rep);

// ((1 + w^k) / (1 - w^k))^{(2 - delta)(1 - m_axes)}, 1 for tori
RationalFunctionW semi_factor(const QuotientGroup& q, Rep rep);

struct RepZetas {
  RationalFunctionW z;
  RationalFunctionW z_semi;
  RationalFunctionW z2;
  RationalFunctionW correction;
  std::optional<LFunction> l;
};

struct ZetaBundle {
  std::map<Rep, RepZetas> reps;
};

ZetaBundle compute_zeta_bundle(const QuotientGroup& q, std::optional<int> order);

// order policy: explicit order must reach the requirement; default is max(48, required)
int required_order(const QuotientGroup& q);
int effective_order(const QuotientGroup& q, std::optional<int> requested);

}  // namespace azeta
