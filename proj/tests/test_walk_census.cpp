#include <gtest/gtest.h>

#include "azeta/errors.hpp"
#include "azeta/exact/rational_function.hpp"
#include "azeta/exact/series.hpp"
#include "azeta/walk_census.hpp"

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

}  // namespace

TEST(ClosedWalks, TorusExamples) {
  QuotientGroup q = a2_torus();
  EXPECT_EQ(count_closed_walks(q, Rep::pi1, 1), 0);
  EXPECT_EQ(count_closed_walks(q, Rep::pi1, 3), 9);
  EXPECT_EQ(count_closed_walks(c2_torus(), Rep::spin, 2), 8);
  EXPECT_EQ(closed_walk_table(q, Rep::pi1, 3).values, (std::vector<i64>{0, 0, 9}));
}

TEST(ClosedWalks, TorusGeodesicEqualsAll) {
  for (const auto& q : {a2_torus(), c2_torus(),
                        QuotientGroup::build(A2, GroupSpec::torus(RootKind::A2, {3, 0}, {1, 4})),
                        QuotientGroup::build(C2, GroupSpec::torus(RootKind::C2, {2, 0}, {1, 3}))})
    for (Rep r : q.root_system().rep_names())
      EXPECT_EQ(closed_walk_table(q, r, 12).values, geodesic_walk_table(q, r, 12).values);
}

TEST(ClosedWalks, KleinDifferenceSeries) {
  QuotientGroup q = a2_klein();
  const int K = 24;
  auto all = closed_walk_table(q, Rep::pi1, K).values;
  auto geo = geodesic_walk_table(q, Rep::pi1, K).values;
  Series diff(K);
  for (int n = 1; n <= K; ++n) {
    EXPECT_GE(all[n - 1], geo[n - 1]);
    diff[n] = BigRational(all[n - 1] - geo[n - 1], n);
    diff[n].canonicalize();
  }
  Series expected = series_log(RationalFunctionW::plus_over_minus(3, 1).series(K));
  EXPECT_EQ(diff, expected);
}

TEST(ClosedWalks, SpinParity) {
  for (const auto& q : {c2_torus(), c2_spin_klein()}) {
    auto geo = geodesic_walk_table(q, Rep::spin, 16).values;
    for (int n = 1; n <= 16; n += 2) EXPECT_EQ(geo[n - 1], 0) << n;
  }
}

TEST(SemiClosings, OddHalfStepsVanishForStTorus) {
  auto t = semi_closing_table(c2_torus(), Rep::st, 12).values;
  for (int j = 1; j <= 12; j += 2) EXPECT_EQ(t[j - 1], 0);
}

TEST(SemiClosings, NonNegativeAndBounded) {
  QuotientGroup q = a2_klein();
  auto t = semi_closing_table(q, Rep::pi2, 24).values;
  for (i64 v : t) EXPECT_GE(v, 0);
  EXPECT_THROW(count_semi_closings(q, Rep::pi2, 0), ValidationError);
}

TEST(Galleries, TorusExamples) {
  QuotientGroup q = a2_torus();
  auto t = closed_gallery_table(q, Rep::pi1, 6).values;
  EXPECT_EQ(t, (std::vector<i64>{0, 0, 0, 0, 0, 18}));
  EXPECT_EQ(count_closed_galleries(c2_torus(), Rep::spin, 2), 16);
}

TEST(Galleries, TypeParity) {
  QuotientGroup q = c2_spin_klein();
  auto t = closed_gallery_table(q, Rep::spin, 12).values;
  for (int n = 1; n <= 12; n += 2) EXPECT_EQ(t[n - 1], 0);
}

TEST(LambdaSet, A2KleinExample) {
  QuotientGroup q = a2_klein();
  EXPECT_EQ(lambda_set_size(q, 1, {1, 1}), 3);
  EXPECT_EQ(lambda_set_size(q, 1, {2, -1}), 0);
  EXPECT_EQ(lambda_set_size(q, 1, {1, 4}), 0);
  EXPECT_THROW(lambda_set_size(q, 1, {3, 0}), ValidationError);
  EXPECT_THROW(lambda_set_size(q, 2, {1, 1}), ValidationError);
}

TEST(LambdaSet, CardinalityRule) {
  for (const auto& q : {a2_klein(), c2_spin_klein(),
                        QuotientGroup::build(C2, GroupSpec::klein(RootKind::C2, {1, 1}, {1, 0}, 3, 4, 1))}) {
    const auto& rs = q.root_system();
    const LatticeVector al = q.klein_spec().alpha, be = q.klein_spec().beta;
    for (i64 m : {1, 3, -1})
      for (i64 c = -12; c <= 12; ++c)
        for (i64 d = -5; d <= 5; ++d) {
          if (d == 0) continue;
          LatticeVector v = c * al + d * be;
          if (!rs.in_coroot_lattice(v)) continue;
          const bool admissible = d > 0 && 2 * rs.pairing(v, al) == q.k_gamma() * m * rs.pairing(al, al);
          const i64 s = lambda_set_size(q, m, v, Glide::sigma);
          EXPECT_EQ(s, admissible ? q.k_gamma() : 0) << q.spec().to_string() << " m=" << m << " v=" << v.to_string();
          EXPECT_EQ(s, lambda_set_size(q, m, v, Glide::t_sigma));
        }
  }
}
