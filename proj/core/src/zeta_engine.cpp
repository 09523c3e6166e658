#include "azeta/zeta_engine.hpp"

#include <algorithm>

#include "azeta/errors.hpp"
#include "azeta/walk_census.hpp"

namespace azeta {

RationalFunctionW zeta_walks(const QuotientGroup& q, Rep rep) { return build_walk_system(q, rep).zeta(); }

RationalFunctionW zeta_semi(const QuotientGroup& q, Rep rep) { return build_semi_system(q, rep).zeta(); }

RationalFunctionW zeta_galleries(const QuotientGroup& q, Rep rep) { return build_gallery_system(q, rep).zeta(); }

int l_function_required_order(const QuotientGroup& q, Rep rep) {
  const auto w = static_cast<i64>(q.root_system().weights(rep).size());
  return static_cast<int>(2 * q.N() * w + kReconstructionSlack);
}

int required_order(const QuotientGroup& q) {
  int r = 0;
  for (Rep rep : q.root_system().rep_names()) r = std::max(r, l_function_required_order(q, rep));
  return r;
}

int effective_order(const QuotientGroup& q, std::optional<int> requested) {
  const int req = required_order(q);
  if (requested) {
    if (*requested < req) throw InsufficientOrderError(*requested, req);
    return *requested;
  }
  return std::max(kDefaultOrder, req);
}

LFunction l_function(const QuotientGroup& q, Rep rep, int order) {
  const int req = l_function_required_order(q, rep);
  if (order < req) throw InsufficientOrderError(order, req);
  LFunction L{rep, order, 0, {}, Series(0), {}, {}, {}};
  L.degree_bound = static_cast<int>(q.N() * static_cast<i64>(q.root_system().weights(rep).size()));
  L.counts.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
  for (int n = 1; n <= order; ++n) L.counts[static_cast<std::size_t>(n)] = static_cast<long>(count_closed_walks(q, rep, n));
  L.series_u = exp_of_power_sums(L.counts, order);
  try {
    L.p_u = reconstruct_poly_from_series(L.series_u, L.degree_bound);
  } catch (const NotPolynomialError& e) {
    throw InvariantViolation(std::string("L-function reconstruction failed: ") + e.what());
  }
  L.p_w = L.p_u.substitute_power(2);
  const int eps = q.root_system().repr(rep).epsilon;
  Poly den = L.p_w;
  if (eps != 0) den = den * Poly::binomial(-1, 2).pow(static_cast<unsigned>(eps * q.N()));
  L.l_w = RationalFunctionW(Poly{1}, den);
  return L;
}

i64 weight_degree(const QuotientGroup& q, LatticeVector lambda) {
  if (q.is_klein()) throw ValidationError("weight degree is defined for tori only");
  for (i64 d = 1; d <= q.N(); ++d)
    if (q.transporter(LatticeVector{0, 0}, d * lambda)) return d;
  throw InvariantViolation("weight has no finite order modulo the lattice");
}

RationalFunctionW torus_closed_form(const QuotientGroup& q, Rep rep) {
  if (q.is_klein()) throw ValidationError("torus closed form requires a torus quotient");
  std::vector<int> es;
  for (auto l : q.root_system().weights(rep)) {
    const i64 d = weight_degree(q, l);
    if (q.N() % d != 0) throw InvariantViolation("N / deg(lambda) is not an integer");
    for (i64 i = 0; i < q.N() / d; ++i) es.push_back(static_cast<int>(2 * d));
  }
  return RationalFunctionW(Poly{1}, binomial_product(es));
}

Poly character_product(const QuotientGroup& q, Rep rep) {
  if (q.is_klein()) throw ValidationError("character product requires a torus quotient");
  const auto& reps = q.vertex_reps();
  Poly acc{1};
  for (auto l : q.root_system().weights(rep)) {
    std::vector<int> image(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) image[i] = q.vertex_index(q.canonical_vertex(reps[i] + l));
    acc = acc * det_identity_minus_wT(IntMatrix::permutation(image));
  }
  return acc.substitute_power(2);
}

RationalFunctionW correction_factor(const QuotientGroup& q, Rep rep) {
  if (!q.is_klein()) return RationalFunctionW::one();
  if (q.k_gamma() % q.n_gamma() != 0) throw InvariantViolation("k / n is not an integer");
  const i64 e = q.k_gamma() / q.n_gamma();
  const int p = static_cast<int>(q.n_gamma() * q.delta(rep));
  if (p == 0) return RationalFunctionW::one();
  return RationalFunctionW::plus_over_minus(static_cast<unsigned>(2 * e), p);
}

RationalFunctionW semi_factor(const QuotientGroup& q, Rep rep) {
  if (!q.is_klein()) return RationalFunctionW::one();
  const int p = (2 - q.delta(rep)) * (1 - q.m_axes());
  if (p == 0) return RationalFunctionW::one();
  return RationalFunctionW::plus_over_minus(static_cast<unsigned>(q.k_gamma()), p);
}

ZetaBundle compute_zeta_bundle(const QuotientGroup& q, std::optional<int> order) {
  const int K = effective_order(q, order);
  ZetaBundle b;
  for (Rep rep : q.root_system().rep_names()) {
    RepZetas z{zeta_walks(q, rep), zeta_semi(q, rep), zeta_galleries(q, rep), correction_factor(q, rep),
               l_function(q, rep, K)};
    b.reps.emplace(rep, std::move(z));
  }
  return b;
}

}  // namespace azeta
