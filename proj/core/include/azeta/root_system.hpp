#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "azeta/exact/bigrational.hpp"
#include "azeta/lattice.hpp"

namespace azeta {

enum class RootKind { A2, C2 };
enum class Rep { pi1, pi2, spin, st };

std::string_view to_string(RootKind k);
std::string_view to_string(Rep r);
RootKind parse_root_kind(std::string_view s);
Rep parse_rep(std::string_view s);

// 2x2 integer matrix acting on lattice coordinates.
struct WeylElement {
  std::array<std::array<i64, 2>, 2> m{{{1, 0}, {0, 1}}};

  static WeylElement identity() { return {}; }
  LatticeVector apply(LatticeVector v) const {
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
  }
  WeylElement operator*(const WeylElement& o) const;
  i64 det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  WeylElement inverse() const;  // requires det = +-1
  bool is_identity() const { return *this == WeylElement{}; }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
  std::string to_string() const;
};

struct ReprData {
  Rep name;
  std::vector<LatticeVector> nontrivial_weights;
  int epsilon;
  int n_value;
};

class RootSystem {
 public:
  static const RootSystem& get(RootKind kind);
  static const RootSystem& a2() { return get(RootKind::A2); }
  static const RootSystem& c2() { return get(RootKind::C2); }

  RootKind kind() const { return kind_; }
  const std::array<std::array<i64, 2>, 2>& gram() const { return gram_; }
  const std::vector<WeylElement>& weyl() const { return weyl_; }
  const std::vector<ReprData>& reps() const { return reps_; }
  std::array<Rep, 2> rep_names() const;
  bool supports(Rep r) const;
  const ReprData& repr(Rep r) const;

  const std::vector<LatticeVector>& weights(Rep r) const { return repr(r).nontrivial_weights; }
  // the other distinguished representation: pi1 <-> pi2, spin <-> st
  Rep dual(Rep r) const;
  // representation whose nontrivial weights contain v
  std::optional<Rep> rep_of_weight(LatticeVector v) const;

  i64 pairing(LatticeVector a, LatticeVector b) const;
  BigRational pairing(HalfVector a, HalfVector b) const;
  bool in_coroot_lattice(LatticeVector v) const;
  int coroot_index() const { return kind_ == RootKind::A2 ? 3 : 2; }

  WeylElement reflection_fixing(LatticeVector d) const;
  bool in_weyl(const WeylElement& g) const;

  std::vector<std::pair<LatticeVector, LatticeVector>> gallery_pairs(Rep r) const;
  std::vector<LatticeVector> gallery_successors(Rep r, LatticeVector lambda) const;

 private:
  explicit RootSystem(RootKind kind);
  RootKind kind_;
  std::array<std::array<i64, 2>, 2> gram_;
  std::vector<WeylElement> weyl_;
  std::vector<ReprData> reps_;
};

// Free functions mirroring the member API.
const std::vector<LatticeVector>& weights(const RootSystem& rs, Rep r);
i64 pairing(const RootSystem& rs, LatticeVector a, LatticeVector b);
bool in_coroot_lattice(const RootSystem& rs, LatticeVector v);
WeylElement reflection_fixing(const RootSystem& rs, LatticeVector d);
std::vector<std::pair<LatticeVector, LatticeVector>> gallery_pairs(const RootSystem& rs, Rep r);

}  // namespace azeta
