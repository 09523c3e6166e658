#include "azeta/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "azeta/errors.hpp"

namespace azeta {

std::string_view to_string(RootKind k) { return k == RootKind::A2 ? "A2" : "C2"; }

std::string_view to_string(Rep r) {
  switch (r) {
    case Rep::pi1: return "pi1";
    case Rep::pi2: return "pi2";
    case Rep::spin: return "spin";
    case Rep::st: return "st";
  }
  return "?";
}

RootKind parse_root_kind(std::string_view s) {
  if (s == "A2") return RootKind::A2;
  if (s == "C2") return RootKind::C2;
  throw ValidationError("unknown root system '" + std::string(s) + "' (expected A2 or C2)");
}

Rep parse_rep(std::string_view s) {
  if (s == "pi1") return Rep::pi1;
  if (s == "pi2") return Rep::pi2;
  if (s == "spin") return Rep::spin;
  if (s == "st") return Rep::st;
  throw ValidationError("unknown representation '" + std::string(s) + "'");
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

WeylElement WeylElement::inverse() const {
  const i64 d = det();
  if (d != 1 && d != -1) throw ValidationError("matrix is not invertible over the integers");
  WeylElement r;
  r.m = {{{m[1][1] * d, -m[0][1] * d}, {-m[1][0] * d, m[0][0] * d}}};
  return r;
}

std::string WeylElement::to_string() const {
  return "[[" + std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + "],[" + std::to_string(m[1][0]) + "," +
         std::to_string(m[1][1]) + "]]";
}

namespace {

WeylElement raw_reflection(const std::array<std::array<i64, 2>, 2>& g, LatticeVector d) {
  auto pair = [&](LatticeVector a, LatticeVector b) {
    return a.x * (g[0][0] * b.x + g[0][1] * b.y) + a.y * (g[1][0] * b.x + g[1][1] * b.y);
  };
  const i64 dd = pair(d, d);
  WeylElement r;
  const LatticeVector basis[2] = {{1, 0}, {0, 1}};
  for (int col = 0; col < 2; ++col) {
    const i64 num = 2 * pair(basis[col], d);
    if (num % dd != 0) throw ValidationError("reflection fixing " + d.to_string() + " is not integral");
    const i64 c = num / dd;
    const LatticeVector img = c * d - basis[col];
    r.m[0][col] = img.x;
    r.m[1][col] = img.y;
  }
  return r;
}

}  // namespace

RootSystem::RootSystem(RootKind kind) : kind_(kind) {
  if (kind == RootKind::A2) {
    gram_ = {{{2, 1}, {1, 2}}};
    reps_.push_back({Rep::pi1, {{1, 0}, {-1, 1}, {0, -1}}, 0, 1});
    reps_.push_back({Rep::pi2, {{-1, 0}, {1, -1}, {0, 1}}, 0, 1});
  } else {
    gram_ = {{{1, 0}, {0, 1}}};
    reps_.push_back({Rep::spin, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 0, 2});
    reps_.push_back({Rep::st, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, 1, 1});
  }
  std::set<WeylElement> group{WeylElement::identity()};
  std::vector<WeylElement> gens;
  for (const auto& r : reps_)
    for (auto w : r.nontrivial_weights) gens.push_back(raw_reflection(gram_, w));
  std::vector<WeylElement> frontier{WeylElement::identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        WeylElement h = s * g;
        if (group.insert(h).second) next.push_back(h);
      }
    frontier.swap(next);
  }
  weyl_.assign(group.begin(), group.end());
}

const RootSystem& RootSystem::get(RootKind kind) {
  static const RootSystem a2(RootKind::A2);
  static const RootSystem c2(RootKind::C2);
  return kind == RootKind::A2 ? a2 : c2;
}

std::array<Rep, 2> RootSystem::rep_names() const { return {reps_[0].name, reps_[1].name}; }

bool RootSystem::supports(Rep r) const {
  return std::any_of(reps_.begin(), reps_.end(), [r](const ReprData& d) { return d.name == r; });
}

const ReprData& RootSystem::repr(Rep r) const {
  for (const auto& d : reps_)
    if (d.name == r) return d;
  throw ValidationError("representation " + std::string(to_string(r)) + " is not defined for " +
                        std::string(to_string(kind_)));
}

Rep RootSystem::dual(Rep r) const {
  repr(r);
  switch (r) {
    case Rep::pi1: return Rep::pi2;
    case Rep::pi2: return Rep::pi1;
    case Rep::spin: return Rep::st;
    case Rep::st: return Rep::spin;
  }
  return r;
}

std::optional<Rep> RootSystem::rep_of_weight(LatticeVector v) const {
  for (const auto& d : reps_)
    if (std::find(d.nontrivial_weights.begin(), d.nontrivial_weights.end(), v) != d.nontrivial_weights.end())
      return d.name;
  return std::nullopt;
}

i64 RootSystem::pairing(LatticeVector a, LatticeVector b) const {
  return a.x * (gram_[0][0] * b.x + gram_[0][1] * b.y) + a.y * (gram_[1][0] * b.x + gram_[1][1] * b.y);
}

BigRational RootSystem::pairing(HalfVector a, HalfVector b) const {
  BigRational r(static_cast<long>(pairing(a.doubled, b.doubled)), 4);
  r.canonicalize();
  return r;
}

bool RootSystem::in_coroot_lattice(LatticeVector v) const {
  if (kind_ == RootKind::A2) return mod_floor(v.x - v.y, 3) == 0;
  return mod_floor(v.x + v.y, 2) == 0;
}

WeylElement RootSystem::reflection_fixing(LatticeVector d) const {
  if (!rep_of_weight(d)) throw ValidationError(d.to_string() + " is not a nontrivial weight");
  WeylElement r = raw_reflection(gram_, d);
  if (!in_weyl(r)) throw ValidationError("reflection fixing " + d.to_string() + " is not in the Weyl group");
  return r;
}

bool RootSystem::in_weyl(const WeylElement& g) const {
  for (const WeylElement& h : weyl_) {
    bool same = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) same = same && h.m[i][j] == g.m[i][j];
    if (same) return true;
  }
  return false;
}

std::vector<std::pair<LatticeVector, LatticeVector>> RootSystem::gallery_pairs(Rep r) const {
  const auto& wt = weights(r);
  std::vector<std::pair<LatticeVector, LatticeVector>> out;
  for (auto l : wt)
    for (auto m : wt) {
      const bool ok = kind_ == RootKind::A2 ? (l != m) : (pairing(l, m) == 0);
      if (ok) out.emplace_back(l, m);
    }
  return out;
}

std::vector<LatticeVector> RootSystem::gallery_successors(Rep r, LatticeVector lambda) const {
  std::vector<LatticeVector> out;
  for (auto [l, m] : gallery_pairs(r))
    if (l == lambda) out.push_back(m);
  return out;
}

const std::vector<LatticeVector>& weights(const RootSystem& rs, Rep r) { return rs.weights(r); }
i64 pairing(const RootSystem& rs, LatticeVector a, LatticeVector b) { return rs.pairing(a, b); }
bool in_coroot_lattice(const RootSystem& rs, LatticeVector v) { return rs.in_coroot_lattice(v); }
WeylElement reflection_fixing(const RootSystem& rs, LatticeVector d) { return rs.reflection_fixing(d); }
std::vector<std::pair<LatticeVector, LatticeVector>> gallery_pairs(const RootSystem& rs, Rep r) {
  return rs.gallery_pairs(r);
}

}  // namespace azeta
