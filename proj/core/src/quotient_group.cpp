#include "azeta/quotient_group.hpp"

#include <algorithm>
#include <numeric>

#include "azeta/errors.hpp"

namespace azeta {

AffineMap AffineMap::inverse() const {
  const WeylElement li = linear.inverse();
  return {li, -li.apply(translation)};
}

AffineMap AffineMap::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  AffineMap r = identity();
  AffineMap base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::string AffineMap::to_string() const {
  return "x -> " + linear.to_string() + " x + " + translation.to_string();
}

std::string GroupSpec::to_string() const {
  std::string s(azeta::to_string(root));
  if (const auto* t = std::get_if<TorusSpec>(&data))
    return s + " torus v1=" + t->v1.to_string() + " v2=" + t->v2.to_string();
  const auto& k = std::get<KleinSpec>(data);
  return s + " klein alpha=" + k.alpha.to_string() + " beta=" + k.beta.to_string() + " a=" + std::to_string(k.a) +
         " b=" + std::to_string(k.b) + " m=" + std::to_string(k.m);
}

namespace {

// returns g = gcd(a,b) >= 0 with s*a + t*b = g
i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
  i64 old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    const i64 q = floor_div(old_r, r);
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * ss;
    std::swap(old_s, ss);
    old_t -= q * tt;
    std::swap(old_t, tt);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

PlaneLattice::PlaneLattice(LatticeVector b1, LatticeVector b2) {
  const i64 d = det2(b1, b2);
  if (d == 0) throw ValidationError("lattice generators are linearly dependent");
  i64 s = 0, t = 0;
  const i64 g = ext_gcd(b1.y, b2.y, s, t);
  r_ = g;
  p_ = (d < 0 ? -d : d) / g;
  q_ = mod_floor(s * b1.x + t * b2.x, p_);
}

LatticeVector PlaneLattice::reduce(LatticeVector v) const {
  const i64 c = floor_div(v.y, r_);
  return {mod_floor(v.x - c * q_, p_), v.y - c * r_};
}

const KleinSpec& QuotientGroup::klein_spec() const {
  if (!klein_) throw ValidationError("quotient is not a Klein bottle");
  return std::get<KleinSpec>(spec_.data);
}

QuotientGroup QuotientGroup::build(const RootSystem& rs, const GroupSpec& spec) {
  if (rs.kind() != spec.root) throw ValidationError("group spec root system does not match");
  QuotientGroup q;
  q.rs_ = &rs;
  q.spec_ = spec;
  if (const auto* ts = std::get_if<TorusSpec>(&spec.data)) {
    if (!rs.in_coroot_lattice(ts->v1)) throw ValidationError("v1 is not in the coroot lattice");
    if (!rs.in_coroot_lattice(ts->v2)) throw ValidationError("v2 is not in the coroot lattice");
    const i64 d = det2(ts->v1, ts->v2);
    if (d == 0) throw ValidationError("v1 and v2 are linearly dependent");
    q.klein_ = false;
    q.N_ = d < 0 ? -d : d;
    q.gamma0_ = {ts->v1, ts->v2};
    q.sigma_ = AffineMap::identity();
    q.t_ = AffineMap::translation_by(ts->v1);
  } else {
    KleinSpec k = std::get<KleinSpec>(spec.data);
    const auto arep = rs.rep_of_weight(k.alpha);
    if (!arep) throw ValidationError("alpha is not a nontrivial weight");
    const Rep comp = rs.dual(*arep);
    const auto& cw = rs.weights(comp);
    if (std::find(cw.begin(), cw.end(), k.beta) == cw.end())
      throw ValidationError("beta is not in the complementary weight set");
    i64 best = rs.pairing(k.alpha, cw.front());
    for (auto w : cw) best = std::max(best, rs.pairing(k.alpha, w));
    if (rs.pairing(k.alpha, k.beta) != best) throw ValidationError("beta does not maximize pairing");
    if (k.m == 0) throw ValidationError("m must be nonzero");
    const LatticeVector v = k.a * k.alpha + k.b * k.beta;
    if (!rs.in_coroot_lattice(v)) throw ValidationError("translation part not in coroot lattice");
    const i64 aa = rs.pairing(k.alpha, k.alpha);
    if ((2 * rs.pairing(k.alpha, k.beta)) % aa != 0) throw InvariantViolation("n is not an integer");
    const i64 n = 2 * rs.pairing(k.alpha, k.beta) / aa;
    i64 kk = 2 * k.a + n * k.b;
    if (kk == 0) throw ValidationError("k = 0");
    if (kk < 0) {
      k.alpha = -k.alpha;
      k.beta = -k.beta;
      k.a = -k.a;
      k.b = -k.b;
      kk = -kk;
    }
    q.spec_.data = k;
    q.klein_ = true;
    q.k_ = kk;
    q.n_ = n;
    q.type_rep_ = rs.rep_of_weight(k.alpha);
    q.m_axes_ = (k.b % 2 == 0) ? 2 : 0;
    const WeylElement s0 = rs.reflection_fixing(k.alpha);
    q.sigma_ = {s0, k.a * k.alpha + k.b * k.beta};
    const LatticeVector tv = k.m * (2 * k.beta - n * k.alpha);
    if (!rs.in_coroot_lattice(tv)) throw InvariantViolation("t is not in the coroot lattice");
    q.t_ = AffineMap::translation_by(tv);
    q.gamma0_ = {tv, kk * k.alpha};
    const i64 d = det2(tv, kk * k.alpha);
    q.N_ = (d < 0 ? -d : d) / 2;
    if (!(q.t_ * q.sigma_ == q.sigma_ * q.t_.inverse())) throw InvariantViolation("t sigma != sigma t^-1");
    if (!(q.sigma_ * q.sigma_ == AffineMap::translation_by(kk * k.alpha)))
      throw InvariantViolation("sigma^2 is not translation by k alpha");
  }
  q.lat_ = PlaneLattice(q.gamma0_[0], q.gamma0_[1]);
  q.half_lat_ = PlaneLattice(2 * q.gamma0_[0], 2 * q.gamma0_[1]);
  q.enumerate_reps();
  if (static_cast<i64>(q.vertex_reps_.size()) != q.N_)
    throw InvariantViolation("vertex representative count differs from N");
  return q;
}

QuotientGroup::Canonical QuotientGroup::canonicalize_scaled(LatticeVector x, const PlaneLattice& lat,
                                                            i64 scale) const {
  const LatticeVector r = lat.reduce(x);
  if (!klein_) return {r, WeylElement::identity()};
  const LatticeVector sx = sigma_.linear.apply(x) + scale * sigma_.translation;
  const LatticeVector r2 = lat.reduce(sx);
  if (r <= r2) return {r, WeylElement::identity()};
  return {r2, sigma_.linear};
}

QuotientGroup::Canonical QuotientGroup::canonicalize(LatticeVector x) const { return canonicalize_scaled(x, lat_, 1); }

QuotientGroup::Canonical QuotientGroup::canonicalize(HalfVector x) const {
  return canonicalize_scaled(x.doubled, half_lat_, 2);
}

void QuotientGroup::enumerate_reps() {
  auto run = [this](const PlaneLattice& lat, i64 scale, std::vector<LatticeVector>& out, std::vector<int>& slot) {
    const i64 w = lat.width(), h = lat.height();
    slot.assign(static_cast<std::size_t>(w * h), -1);
    for (i64 y = 0; y < h; ++y)
      for (i64 x = 0; x < w; ++x) {
        const LatticeVector p{x, y};
        if (canonicalize_scaled(p, lat, scale).point == p) out.push_back(p);
      }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i)
      slot[static_cast<std::size_t>(out[i].y * w + out[i].x)] = static_cast<int>(i);
  };
  vertex_reps_.clear();
  run(lat_, 1, vertex_reps_, vertex_slot_);
  std::vector<LatticeVector> half;
  run(half_lat_, 2, half, half_slot_);
  half_reps_.clear();
  for (auto p : half) half_reps_.push_back({p});
}

int QuotientGroup::vertex_index(LatticeVector c) const {
  if (c.x < 0 || c.y < 0 || c.x >= lat_.width() || c.y >= lat_.height()) return -1;
  return vertex_slot_[static_cast<std::size_t>(c.y * lat_.width() + c.x)];
}

int QuotientGroup::half_vertex_index(HalfVector h) const {
  const LatticeVector c = h.doubled;
  if (c.x < 0 || c.y < 0 || c.x >= half_lat_.width() || c.y >= half_lat_.height()) return -1;
  return half_slot_[static_cast<std::size_t>(c.y * half_lat_.width() + c.x)];
}

std::optional<AffineMap> QuotientGroup::transporter(LatticeVector x, LatticeVector y) const {
  const LatticeVector d = y - x;
  if (lat_.contains(d)) return AffineMap::translation_by(d);
  if (klein_) {
    const LatticeVector d2 = y - sigma_.apply(x);
    if (lat_.contains(d2)) return AffineMap::translation_by(d2) * sigma_;
  }
  return std::nullopt;
}

std::optional<AffineMap> QuotientGroup::transporter(HalfVector x, HalfVector y) const {
  const LatticeVector d = y.doubled - x.doubled;
  if (half_lat_.contains(d)) return AffineMap::translation_by({d.x / 2, d.y / 2});
  if (klein_) {
    const LatticeVector d2 = y.doubled - sigma_.apply(x).doubled;
    if (half_lat_.contains(d2)) return AffineMap::translation_by({d2.x / 2, d2.y / 2}) * sigma_;
  }
  return std::nullopt;
}

bool QuotientGroup::contains(const AffineMap& g) const {
  if (g.linear.is_identity()) return lat_.contains(g.translation);
  if (klein_ && g.linear == sigma_.linear) return lat_.contains((g * sigma_.inverse()).translation);
  return false;
}

int QuotientGroup::delta(Rep r) const {
  rs_->repr(r);
  if (!klein_) return 0;
  if (rs_->kind() == RootKind::A2) return 1;
  return r == *type_rep_ ? 0 : 2;
}

int QuotientGroup::wt_plus_size(Rep r) const {
  if (!klein_) return 0;
  const auto& k = klein_spec();
  const i64 dab = det2(k.alpha, k.beta);
  int count = 0;
  for (auto l : rs_->weights(r)) {
    if (rs_->pairing(l, k.alpha) == 0) continue;
    // l = c alpha + d beta, d = det(alpha, l) / det(alpha, beta)
    const i64 dn = det2(k.alpha, l);
    if ((dn > 0) == (dab > 0) && dn != 0) ++count;
  }
  return count;
}

InvariantsReport QuotientGroup::invariants_report() const {
  InvariantsReport r;
  r.root = rs_->kind();
  r.klein = klein_;
  r.N = N_;
  r.k_gamma = k_;
  r.n_gamma = n_;
  r.type_rep = type_rep_;
  r.m_axes = m_axes_;
  r.gamma0_basis = gamma0_;
  if (klein_) r.normalized = klein_spec();
  for (const auto& d : rs_->reps()) r.reps.push_back({d.name, d.epsilon, d.n_value, delta(d.name), wt_plus_size(d.name)});
  return r;
}

std::pair<AffineMap, AffineMap> normalize_generators(const RootSystem& rs, const AffineMap& g_t,
                                                     const AffineMap& g_sigma) {
  if (!g_t.is_translation()) throw ValidationError("t is not a translation");
  if (g_t.translation.is_zero()) throw ValidationError("t is the identity");
  if (!rs.in_coroot_lattice(g_t.translation)) throw ValidationError("t is not in the coroot lattice");
  if (!rs.in_coroot_lattice(g_sigma.translation)) throw ValidationError("sigma translation is not in the coroot lattice");
  const WeylElement& s0 = g_sigma.linear;
  if (!rs.in_weyl(s0) || s0.det() != -1) throw ValidationError("sigma is not a glide reflection");
  const LatticeVector S = s0.apply(g_sigma.translation) + g_sigma.translation;
  if (S.is_zero()) throw ValidationError("sigma has torsion (it is a reflection)");
  const LatticeVector T = g_t.translation;
  const LatticeVector sT = s0.apply(T);
  if (sT == T) throw ValidationError("generators commute");
  const LatticeVector par = T + sT;  // twice the axis component of T
  // par = 2c S
  const i64 num = (S.x != 0) ? par.x : par.y;
  const i64 den = 2 * ((S.x != 0) ? S.x : S.y);
  if (num % den != 0) throw ValidationError("not a Klein-bottle presentation (axis component is an odd multiple)");
  const i64 c = num / den;
  const AffineMap t = AffineMap::translation_by(T - c * S);
  if (!(t * g_sigma == g_sigma * t.inverse())) throw InvariantViolation("normalized generators fail t sigma = sigma t^-1");
  return {t, g_sigma};
}

AffineMap glide_conjugacy_representative(const QuotientGroup& q, i64 n, i64 m_odd) {
  if (!q.is_klein()) throw ValidationError("glide reflections exist only in Klein-bottle groups");
  if (m_odd % 2 == 0) throw ValidationError("exponent of sigma must be odd");
  if (n % 2 == 0) return q.sigma().pow(m_odd);
  return (q.t() * q.sigma()).pow(m_odd);
}

}  // namespace azeta
