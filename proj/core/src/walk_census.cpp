#include "azeta/walk_census.hpp"

#include <algorithm>

#include "azeta/errors.hpp"

namespace azeta {

namespace {

void require_positive(int n) {
  if (n < 1) throw ValidationError("walk length must be at least 1");
}

bool excluded_half_class(LatticeVector doubled, LatticeVector lambda) {
  const i64 cx = mod_floor(doubled.x, 2), cy = mod_floor(doubled.y, 2);
  if (cx == 0 && cy == 0) return true;
  return cx == mod_floor(lambda.x, 2) && cy == mod_floor(lambda.y, 2);
}

template <class F>
CountTable tabulate(Rep rep, int max_n, F f) {
  CountTable t{rep, {}};
  for (int n = 1; n <= max_n; ++n) t.values.push_back(f(n));
  return t;
}

}  // namespace

i64 count_closed_walks(const QuotientGroup& q, Rep rep, int n) {
  require_positive(n);
  i64 c = 0;
  for (auto x : q.vertex_reps())
    for (auto l : q.root_system().weights(rep))
      if (q.transporter(x, x + n * l)) ++c;
  return c;
}

i64 count_geodesic_walks(const QuotientGroup& q, Rep rep, int n) {
  require_positive(n);
  i64 c = 0;
  for (auto x : q.vertex_reps())
    for (auto l : q.root_system().weights(rep)) {
      auto g = q.transporter(x, x + n * l);
      if (g && g->linear.apply(l) == l) ++c;
    }
  return c;
}

i64 count_semi_closings(const QuotientGroup& q, Rep rep, int j) {
  require_positive(j);
  i64 c = 0;
  for (auto x : q.half_vertex_reps())
    for (auto l : q.root_system().weights(rep)) {
      if (excluded_half_class(x.doubled, l)) continue;
      auto g = q.transporter(x, HalfVector{x.doubled + j * l});
      if (g && g->linear.apply(l) == l) ++c;
    }
  return c;
}

i64 count_closed_galleries(const QuotientGroup& q, Rep rep, int n) {
  require_positive(n);
  i64 c = 0;
  for (auto x : q.vertex_reps())
    for (auto [l, m] : q.root_system().gallery_pairs(rep)) {
      LatticeVector v = x, a = l, b = m;
      for (int s = 0; s < n; ++s) {
        v = v + a;
        std::swap(a, b);
      }
      auto g = q.transporter(x, v);
      if (g && g->linear.apply(l) == a && g->linear.apply(m) == b) ++c;
    }
  return c;
}

i64 lambda_set_size(const QuotientGroup& q, i64 m_odd, LatticeVector v, Glide glide) {
  if (!q.is_klein()) throw ValidationError("lambda_set_size needs a Klein-bottle quotient");
  if (m_odd % 2 == 0) throw ValidationError("exponent must be odd");
  const RootSystem& rs = q.root_system();
  if (!rs.in_coroot_lattice(v)) throw ValidationError("v is not in the coroot lattice");
  const KleinSpec& ks = q.klein_spec();
  const LatticeVector al = ks.alpha, be = ks.beta;
  const i64 dab = det2(al, be);
  if (dab != 1 && dab != -1) throw InvariantViolation("alpha, beta do not form a lattice basis");
  // v = c alpha + d beta
  const i64 d = det2(al, v) * dab;
  if (d == 0) throw ValidationError("v has zero beta-component");

  AffineMap g = q.sigma();
  i64 b = ks.b;
  if (glide == Glide::t_sigma) {
    g = q.t() * q.sigma();
    // t = m_t (2 beta - n alpha) shifts b by 2 m_t
    b += 2 * ks.m;
  }
  const AffineMap gm = g.pow(m_odd);
  const i64 k = q.k_gamma();
  const i64 depth = (d < 0 ? -d : d) / 2 + 2;
  const i64 y_top = floor_div(b, 2);
  i64 count = 0;
  for (i64 y = y_top - depth; y <= y_top; ++y) {
    const bool on_axis = (2 * y == b);
    for (i64 s = 0; s < k; ++s) {
      if (on_axis && 2 * s >= k) break;
      const LatticeVector x = s * al + y * be;
      if (gm.apply(x) == x + v) ++count;
    }
  }
  return count;
}

CountTable closed_walk_table(const QuotientGroup& q, Rep rep, int max_n) {
  return tabulate(rep, max_n, [&](int n) { return count_closed_walks(q, rep, n); });
}

CountTable geodesic_walk_table(const QuotientGroup& q, Rep rep, int max_n) {
  return tabulate(rep, max_n, [&](int n) { return count_geodesic_walks(q, rep, n); });
}

CountTable semi_closing_table(const QuotientGroup& q, Rep rep, int max_j) {
  return tabulate(rep, max_j, [&](int j) { return count_semi_closings(q, rep, j); });
}

CountTable closed_gallery_table(const QuotientGroup& q, Rep rep, int max_n) {
  return tabulate(rep, max_n, [&](int n) { return count_closed_galleries(q, rep, n); });
}

}  // namespace azeta
