#include "azeta/transfer_system.hpp"

#include <algorithm>

#include "azeta/errors.hpp"

namespace azeta {

namespace {

int index_of(const std::vector<LatticeVector>& v, LatticeVector x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw InvariantViolation("Weyl image " + x.to_string() + " is not a weight");
  return static_cast<int>(it - v.begin());
}

void check_bijective(const TransferSystem& t) {
  if (!t.is_bijection()) throw InvariantViolation("transfer map is not a bijection");
}

}  // namespace

bool TransferSystem::is_bijection() const {
  std::vector<char> hit(next.size(), 0);
  for (int j : next) {
    if (j < 0 || static_cast<std::size_t>(j) >= next.size() || hit[static_cast<std::size_t>(j)]) return false;
    hit[static_cast<std::size_t>(j)] = 1;
  }
  return true;
}

std::vector<int> TransferSystem::cycle_lengths() const { return azeta::cycle_lengths(next); }

i64 TransferSystem::trace_power(int n) const {
  i64 c = 0;
  for (int len : cycle_lengths())
    if (n % len == 0) c += len;
  return c;
}

IntMatrix TransferSystem::matrix() const { return IntMatrix::permutation(next); }

Poly binomial_product(const std::vector<int>& exponents) {
  std::vector<int> es = exponents;
  std::sort(es.begin(), es.end());
  std::vector<BigInt> acc{BigInt(1)};
  for (int e : es) {
    if (e <= 0) throw ValidationError("binomial exponent must be positive");
    const std::size_t old = acc.size();
    acc.resize(old + static_cast<std::size_t>(e));
    for (std::size_t i = acc.size(); i-- > static_cast<std::size_t>(e);) acc[i] -= acc[i - static_cast<std::size_t>(e)];
  }
  return Poly::from_integers(acc);
}

Poly TransferSystem::inverse_zeta() const {
  std::vector<int> es;
  for (int len : cycle_lengths()) es.push_back(step_in_w * len);
  return binomial_product(es);
}

RationalFunctionW TransferSystem::zeta() const { return RationalFunctionW(Poly{1}, inverse_zeta()); }

TransferSystem build_walk_system(const QuotientGroup& q, Rep rep) {
  const auto& wt = q.root_system().weights(rep);
  const int W = static_cast<int>(wt.size());
  TransferSystem t{TransferKind::walks, rep, 2, {}, {}};
  for (auto x : q.vertex_reps())
    for (auto l : wt) t.states.push_back({x, l, {}});
  t.next.resize(t.states.size());
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    const auto& st = t.states[s];
    const auto c = q.canonicalize(st.point + st.lambda);
    t.next[s] = q.vertex_index(c.point) * W + index_of(wt, c.linear.apply(st.lambda));
  }
  check_bijective(t);
  return t;
}

TransferSystem build_semi_system(const QuotientGroup& q, Rep rep) {
  const auto& wt = q.root_system().weights(rep);
  const int W = static_cast<int>(wt.size());
  const auto& reps = q.half_vertex_reps();
  TransferSystem t{TransferKind::semi, rep, 1, {}, {}};
  std::vector<int> slot(reps.size() * wt.size(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const LatticeVector x = reps[i].doubled;
    const bool integral = (mod_floor(x.x, 2) == 0 && mod_floor(x.y, 2) == 0);
    for (int j = 0; j < W; ++j) {
      const LatticeVector l = wt[static_cast<std::size_t>(j)];
      if (integral || (mod_floor(x.x, 2) == mod_floor(l.x, 2) && mod_floor(x.y, 2) == mod_floor(l.y, 2))) continue;
      slot[i * wt.size() + static_cast<std::size_t>(j)] = static_cast<int>(t.states.size());
      t.states.push_back({x, l, {}});
    }
  }
  t.next.resize(t.states.size());
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    const auto& st = t.states[s];
    const auto c = q.canonicalize(HalfVector{st.point + st.lambda});
    const int i = q.half_vertex_index(HalfVector{c.point});
    const int target = slot[static_cast<std::size_t>(i * W + index_of(wt, c.linear.apply(st.lambda)))];
    if (target < 0) throw InvariantViolation("semi-rational step left the state set");
    t.next[s] = target;
  }
  check_bijective(t);
  return t;
}

TransferSystem build_gallery_system(const QuotientGroup& q, Rep rep) {
  const auto pairs = q.root_system().gallery_pairs(rep);
  const int P = static_cast<int>(pairs.size());
  auto pair_index = [&](LatticeVector l, LatticeVector m) {
    for (int i = 0; i < P; ++i)
      if (pairs[static_cast<std::size_t>(i)].first == l && pairs[static_cast<std::size_t>(i)].second == m) return i;
    throw InvariantViolation("Weyl image of a gallery pair is not a gallery pair");
  };
  TransferSystem t{TransferKind::galleries, rep, 2, {}, {}};
  for (auto x : q.vertex_reps())
    for (auto [l, m] : pairs) t.states.push_back({x, l, m});
  t.next.resize(t.states.size());
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    const auto& st = t.states[s];
    const auto c = q.canonicalize(st.point + st.lambda);
    t.next[s] = q.vertex_index(c.point) * P + pair_index(c.linear.apply(st.mu), c.linear.apply(st.lambda));
  }
  check_bijective(t);
  return t;
}

}  // namespace azeta
