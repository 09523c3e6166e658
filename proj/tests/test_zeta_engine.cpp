#include <gtest/gtest.h>

#include "azeta/errors.hpp"
#include "azeta/exact/series.hpp"
#include "azeta/transfer_system.hpp"
#include "azeta/walk_census.hpp"
#include "azeta/zeta_engine.hpp"

using namespace azeta;

namespace {

const RootSystem& A2 = RootSystem::a2();
const RootSystem& C2 = RootSystem::c2();

QuotientGroup a2_torus() { return QuotientGroup::build(A2, GroupSpec::torus(RootKind::A2, {1, 1}, {-1, 2})); }
QuotientGroup c2_torus() { return QuotientGroup::build(C2, GroupSpec::torus(RootKind::C2, {1, 1}, {1, -1})); }
QuotientGroup a2_klein() { return QuotientGroup::build(A2, GroupSpec::klein(RootKind::A2, {1, 0}, {0, 1}, 1, 1, 1)); }
QuotientGroup c2_spin_klein() {
  return QuotientGroup::build(C2, GroupSpec::klein(RootKind::C2, {1, 0}, {1, 1}, 2, 1, 1));
}

// (1 - u^e)^(-p) written in w
RationalFunctionW geo_u(unsigned e, int p) { return RationalFunctionW::geometric(2 * e).pow(p); }
RationalFunctionW pm_u(unsigned e, int p) { return RationalFunctionW::plus_over_minus(2 * e, p); }

std::vector<QuotientGroup> samples() {
  return {a2_torus(), c2_torus(), a2_klein(), c2_spin_klein(),
          QuotientGroup::build(A2, GroupSpec::torus(RootKind::A2, {3, 0}, {1, 4})),
          QuotientGroup::build(C2, GroupSpec::klein(RootKind::C2, {1, 1}, {1, 0}, 3, 4, 1)),
          QuotientGroup::build(A2, GroupSpec::klein(RootKind::A2, {0, 1}, {1, 0}, 2, 2, 2))};
}

}  // namespace

TEST(Walks, TorusExamples) {
  EXPECT_EQ(zeta_walks(a2_torus(), Rep::pi1), geo_u(3, 3));
  EXPECT_EQ(zeta_walks(a2_torus(), Rep::pi2), geo_u(3, 3));
  EXPECT_EQ(zeta_walks(c2_torus(), Rep::spin), geo_u(2, 4));
  EXPECT_EQ(zeta_walks(c2_torus(), Rep::st), geo_u(1, 8));
}

TEST(Semi, Examples) {
  EXPECT_EQ(zeta_semi(c2_torus(), Rep::spin), geo_u(2, 4));
  EXPECT_EQ(zeta_semi(a2_torus(), Rep::pi2), geo_u(3, 3));
  QuotientGroup k = a2_klein();
  EXPECT_EQ(zeta_semi(k, Rep::pi1) / zeta_walks(k, Rep::pi1), RationalFunctionW::plus_over_minus(3, 1));
  for (int len : build_semi_system(c2_torus(), Rep::spin).cycle_lengths()) EXPECT_EQ(len % 2, 0);
}

TEST(Galleries, TorusExamples) {
  EXPECT_EQ(zeta_galleries(a2_torus(), Rep::pi1), geo_u(6, 3));
  EXPECT_EQ(zeta_galleries(c2_torus(), Rep::spin), geo_u(2, 8));
  EXPECT_EQ(zeta_galleries(c2_torus(), Rep::st), geo_u(2, 8));
  EXPECT_EQ(zeta_galleries(c2_torus(), Rep::st), zeta_semi(c2_torus(), Rep::spin).pow(2));
  EXPECT_EQ(build_gallery_system(a2_torus(), Rep::pi1).states.size(), 18u);
}

TEST(LFunction, TorusExamples) {
  LFunction st = l_function(c2_torus(), Rep::st, 48);
  EXPECT_EQ(st.p_u, Poly::binomial(-1, 1).pow(8));
  EXPECT_EQ(st.l_w, geo_u(1, 10));
  EXPECT_EQ(l_function(a2_torus(), Rep::pi1, 48).p_u, Poly::binomial(-1, 3).pow(3));
  EXPECT_EQ(l_function(c2_torus(), Rep::spin, 48).p_u, Poly::binomial(-1, 2).pow(4));
}

TEST(LFunction, OrderTooLow) {
  QuotientGroup q = c2_spin_klein();
  const int need = l_function_required_order(q, Rep::st);
  EXPECT_EQ(need, 2 * q.N() * 4 + 8);
  EXPECT_THROW(l_function(q, Rep::st, need - 1), InsufficientOrderError);
  EXPECT_NO_THROW(l_function(q, Rep::st, need));
  EXPECT_THROW(effective_order(q, need - 1), InsufficientOrderError);
  EXPECT_EQ(effective_order(a2_torus(), std::nullopt), kDefaultOrder);
  EXPECT_EQ(effective_order(q, std::nullopt), std::max(kDefaultOrder, required_order(q)));
}

TEST(LFunction, DegreeBoundAndIntegrality) {
  for (const auto& q : samples())
    for (Rep r : q.root_system().rep_names()) {
      LFunction l = l_function(q, r, l_function_required_order(q, r));
      EXPECT_TRUE(l.p_u.is_integral());
      EXPECT_LE(l.p_u.degree(), l.degree_bound);
      EXPECT_EQ(l.p_u.coeff(0), 1);
    }
}

TEST(ClosedForm, Torus) {
  EXPECT_EQ(torus_closed_form(a2_torus(), Rep::pi1), geo_u(3, 3));
  QuotientGroup big = QuotientGroup::build(A2, GroupSpec::torus(RootKind::A2, {3, 0}, {0, 3}));
  EXPECT_EQ(big.N(), 9);
  for (const auto& l : A2.weights(Rep::pi1)) EXPECT_EQ(weight_degree(big, l), 3);
  EXPECT_EQ(torus_closed_form(big, Rep::pi1), geo_u(3, 9));
  EXPECT_EQ(torus_closed_form(c2_torus(), Rep::st), geo_u(1, 8));
  EXPECT_THROW(torus_closed_form(a2_klein(), Rep::pi1), ValidationError);
}

TEST(ClosedForm, ThreeWayTorusEquality) {
  for (const auto& q : samples()) {
    if (q.is_klein()) continue;
    for (Rep r : q.root_system().rep_names()) {
      RationalFunctionW z = zeta_walks(q, r);
      LFunction l = l_function(q, r, l_function_required_order(q, r));
      EXPECT_EQ(z, torus_closed_form(q, r));
      EXPECT_EQ(z, l.inverse_p_w());
      EXPECT_EQ(z, RationalFunctionW(Poly{1}, character_product(q, r)));
    }
  }
}

TEST(Correction, Examples) {
  EXPECT_EQ(correction_factor(a2_torus(), Rep::pi1), RationalFunctionW::one());
  EXPECT_EQ(correction_factor(a2_klein(), Rep::pi1), pm_u(3, 1));
  EXPECT_EQ(correction_factor(c2_spin_klein(), Rep::st), pm_u(3, 4));
  EXPECT_EQ(correction_factor(c2_spin_klein(), Rep::spin), RationalFunctionW::one());
  EXPECT_EQ(semi_factor(a2_torus(), Rep::pi2), RationalFunctionW::one());
}

TEST(Transfer, BijectiveAndDeterminantCrossCheck) {
  for (const auto& q : samples())
    for (Rep r : q.root_system().rep_names())
      for (const auto& sys : {build_walk_system(q, r), build_semi_system(q, r), build_gallery_system(q, r)}) {
        EXPECT_TRUE(sys.is_bijection());
        if (sys.states.size() <= 96) {
          Poly viaMatrix = det_identity_minus_wT(sys.matrix()).substitute_power(sys.step_in_w);
          EXPECT_EQ(viaMatrix, sys.inverse_zeta());
        }
      }
}

TEST(Transfer, LogMatchesCensus) {
  for (const auto& q : samples())
    for (Rep r : q.root_system().rep_names()) {
      const int K = 16;
      Series lz = series_log(zeta_walks(q, r).series(2 * K));
      auto geo = geodesic_walk_table(q, r, K).values;
      for (int n = 1; n <= K; ++n) EXPECT_EQ(lz[2 * n] * n, geo[n - 1]) << n;
      Series lg = series_log(zeta_galleries(q, r).series(24));
      auto gal = closed_gallery_table(q, r, 12).values;
      for (int n = 1; n <= 12; ++n) EXPECT_EQ(lg[2 * n] * n, gal[n - 1]) << n;
      Series ls = series_log(zeta_semi(q, r).series(24));
      auto semi = semi_closing_table(q, r, 24).values;
      for (int j = 1; j <= 24; ++j) EXPECT_EQ(ls[j] * j, semi[j - 1]) << j;
    }
}

TEST(Zetas, IntegralityAndParity) {
  for (const auto& q : samples())
    for (Rep r : q.root_system().rep_names()) {
      for (const auto& z : {zeta_walks(q, r), zeta_semi(q, r), zeta_galleries(q, r)}) {
        EXPECT_EQ(z.value_at_zero(), 1);
        EXPECT_EQ(z.numerator(), Poly{1});
        EXPECT_TRUE(z.denominator().is_integral());
      }
      if (r == Rep::spin) EXPECT_TRUE(zeta_walks(q, r).substitute(1).is_even_in_w() &&
                                      zeta_walks(q, r).denominator().deflate(2).is_even_in_w());
      if (q.type_rep() == r && q.root_system().kind() == RootKind::C2)
        EXPECT_TRUE(zeta_galleries(q, r).denominator().deflate(2).is_even_in_w());
    }
}

TEST(Bundle, Contents) {
  QuotientGroup q = a2_klein();
  ZetaBundle b = compute_zeta_bundle(q, std::nullopt);
  ASSERT_EQ(b.reps.size(), 2u);
  const RepZetas& z = b.reps.at(Rep::pi1);
  ASSERT_TRUE(z.l.has_value());
  EXPECT_EQ(z.l->p_u, Poly::binomial(-1, 3).pow(3));
  EXPECT_EQ(z.correction, pm_u(3, 1));
}
