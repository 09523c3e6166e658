#pragma once

#include <vector>

#include "azeta/quotient_group.hpp"

namespace azeta {

// values[i] is the count for n = i + 1 (or j = i + 1 half-steps)
struct CountTable {
  Rep rep;
  std::vector<i64> values;
};

i64 count_closed_walks(const QuotientGroup& q, Rep rep, int n);
i64 count_geodesic_walks(const QuotientGroup& q, Rep rep, int n);
i64 count_semi_closings(const QuotientGroup& q, Rep rep, int j);
i64 count_closed_galleries(const QuotientGroup& q, Rep rep, int n);

enum class Glide { sigma, t_sigma };

// |A_gamma ∩ Lambda(gamma^m, v)| for gamma = sigma or t sigma, by enumerating a
// window of the fundamental strip.
i64 lambda_set_size(const QuotientGroup& q, i64 m_odd, LatticeVector v, Glide glide = Glide::sigma);

CountTable closed_walk_table(const QuotientGroup& q, Rep rep, int max_n);
CountTable geodesic_walk_table(const QuotientGroup& q, Rep rep, int max_n);
CountTable semi_closing_table(const QuotientGroup& q, Rep rep, int max_j);
CountTable closed_gallery_table(const QuotientGroup& q, Rep rep, int max_n);

}  // namespace azeta
