#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "azeta/lattice.hpp"
#include "azeta/root_system.hpp"

namespace azeta {

// x -> linear * x + translation
struct AffineMap {
  WeylElement linear;
  LatticeVector translation;

  static AffineMap identity() { return {}; }
  static AffineMap translation_by(LatticeVector v) { return {WeylElement::identity(), v}; }

  LatticeVector apply(LatticeVector x) const { return linear.apply(x) + translation; }
  HalfVector apply(HalfVector x) const { return {linear.apply(x.doubled) + 2 * translation}; }
  // (*this) o other
  AffineMap operator*(const AffineMap& o) const { return {linear * o.linear, linear.apply(o.translation) + translation}; }
  AffineMap inverse() const;
  AffineMap pow(i64 e) const;
  bool is_translation() const { return linear.is_identity(); }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  std::string to_string() const;
};

struct TorusSpec {
  LatticeVector v1;
  LatticeVector v2;
};

struct KleinSpec {
  LatticeVector alpha;
  LatticeVector beta;
  i64 a = 0;
  i64 b = 0;
  i64 m = 0;
};

struct GroupSpec {
  RootKind root = RootKind::A2;
  std::variant<TorusSpec, KleinSpec> data;

  bool is_klein() const { return std::holds_alternative<KleinSpec>(data); }
  static GroupSpec torus(RootKind k, LatticeVector v1, LatticeVector v2) { return {k, TorusSpec{v1, v2}}; }
  static GroupSpec klein(RootKind k, LatticeVector alpha, LatticeVector beta, i64 a, i64 b, i64 m) {
    return {k, KleinSpec{alpha, beta, a, b, m}};
  }
  std::string to_string() const;
};

// A rank-2 sublattice in Hermite normal form {(p,0), (q,r)} with 0 <= q < p.
class PlaneLattice {
 public:
  PlaneLattice() = default;
  PlaneLattice(LatticeVector b1, LatticeVector b2);
  LatticeVector reduce(LatticeVector v) const;
  bool contains(LatticeVector v) const { return reduce(v).is_zero(); }
  i64 index() const { return p_ * r_; }
  i64 width() const { return p_; }
  i64 height() const { return r_; }

 private:
  i64 p_ = 1, q_ = 0, r_ = 1;
};

struct InvariantsReport {
  struct PerRep {
    Rep rep;
    int epsilon;
    int n_value;
    int delta;
    int wt_plus;
  };
  RootKind root;
  bool klein;
  i64 N;
  i64 k_gamma;  // 0 for tori
  i64 n_gamma;  // 0 for tori
  std::optional<Rep> type_rep;
  int m_axes;
  std::array<LatticeVector, 2> gamma0_basis;
  std::optional<KleinSpec> normalized;
  std::vector<PerRep> reps;
};

class QuotientGroup {
 public:
  struct Canonical {
    LatticeVector point;  // doubled coordinates for half-lattice input
    WeylElement linear;   // linear part of the element moving the input to point
  };

  static QuotientGroup build(const RootSystem& rs, const GroupSpec& spec);

  const RootSystem& root_system() const { return *rs_; }
  const GroupSpec& spec() const { return spec_; }  // sign-normalized
  bool is_klein() const { return klein_; }
  i64 N() const { return N_; }
  i64 k_gamma() const { return k_; }
  i64 n_gamma() const { return n_; }
  std::optional<Rep> type_rep() const { return type_rep_; }
  int m_axes() const { return m_axes_; }
  const AffineMap& sigma() const { return sigma_; }
  const AffineMap& t() const { return t_; }
  LatticeVector t_vec() const { return t_.translation; }
  const std::array<LatticeVector, 2>& gamma0_basis() const { return gamma0_; }
  const KleinSpec& klein_spec() const;

  const std::vector<LatticeVector>& vertex_reps() const { return vertex_reps_; }
  const std::vector<HalfVector>& half_vertex_reps() const { return half_reps_; }
  // position of a canonical point in vertex_reps / half_vertex_reps
  int vertex_index(LatticeVector canonical) const;
  int half_vertex_index(HalfVector canonical) const;

  Canonical canonicalize(LatticeVector x) const;
  Canonical canonicalize(HalfVector x) const;
  LatticeVector canonical_vertex(LatticeVector x) const { return canonicalize(x).point; }
  HalfVector canonical_vertex(HalfVector x) const { return {canonicalize(x).point}; }

  std::optional<AffineMap> transporter(LatticeVector x, LatticeVector y) const;
  std::optional<AffineMap> transporter(HalfVector x, HalfVector y) const;
  bool contains(const AffineMap& g) const;

  int delta(Rep r) const;
  int wt_plus_size(Rep r) const;
  InvariantsReport invariants_report() const;

 private:
  Canonical canonicalize_scaled(LatticeVector x, const PlaneLattice& lat, i64 scale) const;
  void enumerate_reps();

  const RootSystem* rs_ = nullptr;
  GroupSpec spec_;
  bool klein_ = false;
  i64 N_ = 0, k_ = 0, n_ = 0;
  std::optional<Rep> type_rep_;
  int m_axes_ = 0;
  AffineMap sigma_, t_;
  std::array<LatticeVector, 2> gamma0_{};
  PlaneLattice lat_, half_lat_;
  std::vector<LatticeVector> vertex_reps_;
  std::vector<HalfVector> half_reps_;
  std::vector<int> vertex_slot_, half_slot_;
};

// Generators (t, sigma) with t o sigma = sigma o t^-1 and t orthogonal to the axis.
std::pair<AffineMap, AffineMap> normalize_generators(const RootSystem& rs, const AffineMap& g_t,
                                                     const AffineMap& g_sigma);

// sigma^m for even n, (t sigma)^m for odd n: the class of t^n sigma^m.
AffineMap glide_conjugacy_representative(const QuotientGroup& q, i64 n, i64 m_odd);

}  // namespace azeta
