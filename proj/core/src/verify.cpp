#include "azeta/verify.hpp"

#include <functional>
#include <map>

#include "azeta/errors.hpp"
#include "azeta/transfer_system.hpp"
#include "azeta/walk_census.hpp"
#include "azeta/zeta_engine.hpp"

namespace azeta {

bool VerificationReport::all_hold() const {
  for (const auto& r : records)
    if (!r.holds) return false;
  return true;
}

const IdentityRecord* VerificationReport::find(const std::string& id, std::optional<Rep> rep) const {
  for (const auto& r : records)
    if (r.id == id && r.rep == rep) return &r;
  return nullptr;
}

std::vector<const IdentityRecord*> VerificationReport::failures() const {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : records)
    if (!r.holds) out.push_back(&r);
  return out;
}

namespace {

constexpr int kWitnessOrder = 64;

Series u_series(const RationalFunctionW& f, int order) {
  if (!f.is_even_in_w()) throw InvariantViolation("expected a function of u = w^2");
  return Series::from_poly(f.numerator().deflate(2), order) *
         Series::from_poly(f.denominator().deflate(2), order).inverse();
}

void compare(IdentityRecord& rec, const RationalFunctionW& lhs, const RationalFunctionW& rhs) {
  rec.holds = lhs.equals(rhs);
  if (!rec.holds) {
    rec.lhs = lhs.to_string();
    rec.rhs = rhs.to_string();
    rec.mismatch = first_mismatch(lhs.series(kWitnessOrder), rhs.series(kWitnessOrder));
  }
}

void compare(IdentityRecord& rec, const Series& lhs, const Series& rhs) {
  rec.mismatch = first_mismatch(lhs, rhs);
  rec.holds = rec.mismatch < 0;
  if (!rec.holds) {
    rec.lhs = lhs[rec.mismatch].get_str();
    rec.rhs = rhs[rec.mismatch].get_str();
    rec.detail = "first mismatching coefficient at exponent " + std::to_string(rec.mismatch);
  }
}

bool integer_inverse(const RationalFunctionW& z) {
  return z.numerator() == Poly{1} && z.denominator().is_integral() && z.denominator().coeff(0) == 1;
}

struct RepData {
  std::optional<TransferSystem> walks, semi, galleries;
  std::optional<RationalFunctionW> z, z_semi, z2;
  std::optional<LFunction> l;
  std::vector<i64> n_tilde;  // index n
  std::string error;
  std::string l_error;

  void need() const {
    if (!error.empty()) throw InvariantViolation(error);
  }
  const LFunction& need_l() const {
    need();
    if (!l) throw InvariantViolation(l_error);
    return *l;
  }
};

class Verifier {
 public:
  Verifier(const QuotientGroup& q, const VerifyOptions& opt, VerificationReport& rep)
      : q_(q), rs_(q.root_system()), opt_(opt), report_(rep) {}

  void run() {
    K_ = effective_order(q_, opt_.order);
    report_.spec = q_.spec();
    report_.order = K_;
    for (Rep r : rs_.rep_names()) data_[r] = build(r);
    if (q_.is_klein()) build_cover();

    for (Rep r : rs_.rep_names()) structural(r);
    for (Rep r : rs_.rep_names()) walk_identities(r);
    if (q_.is_klein()) {
      for (Rep r : rs_.rep_names()) klein_identities(r);
      klein_group_checks();
    }
    for (Rep r : rs_.rep_names()) semi_identities(r);
    for (Rep r : rs_.rep_names()) gallery_identities(r);
    parity_checks();
  }

 private:
  using Body = std::function<void(IdentityRecord&)>;

  void check(const std::string& id, std::optional<Rep> rep, const std::string& statement, const Body& body) {
    IdentityRecord rec;
    rec.id = id;
    rec.rep = rep;
    rec.statement = statement;
    try {
      body(rec);
    } catch (const InsufficientOrderError&) {
      throw;
    } catch (const Error& e) {
      rec.holds = false;
      rec.detail = e.what();
    }
    report_.records.push_back(std::move(rec));
  }

  RepData build(Rep r) {
    RepData d;
    try {
      d.walks = build_walk_system(q_, r);
      d.semi = build_semi_system(q_, r);
      d.galleries = build_gallery_system(q_, r);
      d.z = d.walks->zeta();
      d.z_semi = d.semi->zeta();
      d.z2 = d.galleries->zeta();
      d.n_tilde.assign(static_cast<std::size_t>(K_) + 1, 0);
      for (int n = 1; n <= K_; ++n) d.n_tilde[static_cast<std::size_t>(n)] = count_geodesic_walks(q_, r, n);
    } catch (const InvariantViolation& e) {
      d.error = e.what();
      return d;
    }
    try {
      d.l = l_function(q_, r, K_);
    } catch (const InvariantViolation& e) {
      d.l_error = e.what();
    }
    return d;
  }

  void build_cover() {
    const auto b = q_.gamma0_basis();
    cover_ = QuotientGroup::build(rs_, GroupSpec::torus(rs_.kind(), b[0], b[1]));
  }

  int walk_census_max() const { return opt_.walk_census_max > 0 ? std::min(opt_.walk_census_max, K_) : K_; }

  void structural(Rep r) {
    const RepData& d = data_[r];
    check("bijectivity", r, "walk, semi and gallery transfer maps are bijections", [&](IdentityRecord& rec) {
      d.need();
      rec.holds = d.walks->is_bijection() && d.semi->is_bijection() && d.galleries->is_bijection();
    });
    const bool small = d.error.empty() && static_cast<int>(d.walks->states.size()) <= opt_.determinant_state_limit &&
                       static_cast<int>(d.semi->states.size()) <= opt_.determinant_state_limit &&
                       static_cast<int>(d.galleries->states.size()) <= opt_.determinant_state_limit;
    if (small) {
      check("transfer-determinant", r, "det(I - w^s T) of each transfer matrix equals its cycle product",
            [&](IdentityRecord& rec) {
              bool ok = true;
              for (const TransferSystem* t : {&*d.walks, &*d.semi, &*d.galleries}) {
                Poly det = det_identity_minus_wT(t->matrix()).substitute_power(static_cast<unsigned>(t->step_in_w));
                ok = ok && det == t->inverse_zeta();
              }
              rec.holds = ok;
            });
    }
    check("integrality", r, "1/Z, 1/Z2 and P have integer coefficients with constant term 1", [&](IdentityRecord& rec) {
      const LFunction& L = d.need_l();
      rec.holds = integer_inverse(*d.z) && integer_inverse(*d.z2) && integer_inverse(*d.z_semi) &&
                  L.p_u.is_integral() && L.p_u.coeff(0) == 1 && L.p_u.degree() <= L.degree_bound;
      if (!rec.holds) rec.detail = "P = " + L.p_u.to_string("u");
    });
  }

  void walk_identities(Rep r) {
    const RepData& d = data_[r];
    check("walk-trace", r, "Z(u) = exp(sum_n Ntilde_n u^n / n)", [&](IdentityRecord& rec) {
      d.need();
      std::vector<BigInt> nt(d.n_tilde.size());
      for (std::size_t i = 0; i < nt.size(); ++i) nt[i] = static_cast<long>(d.n_tilde[i]);
      compare(rec, u_series(*d.z, K_), exp_of_power_sums(nt, K_));
    });
    check("l-trace", r, "(1-u)^{eps N} L(u) = exp(sum_n N_n u^n / n)", [&](IdentityRecord& rec) {
      const LFunction& L = d.need_l();
      compare(rec, Series::from_poly(L.p_u, K_).inverse(), L.series_u);
    });
    if (!q_.is_klein()) {
      check("torus-closed-form", r, "Z = (1-u)^{eps N} L = prod_lambda (1-u^deg)^{-N/deg} = 1/prod_lambda det(1 - rho_reg(lambda) u)",
            [&](IdentityRecord& rec) {
              const LFunction& L = d.need_l();
              const RationalFunctionW closed = torus_closed_form(q_, r);
              const bool chars = character_product(q_, r) == L.p_w;
              compare(rec, *d.z, L.inverse_p_w());
              if (rec.holds && !(closed == *d.z)) compare(rec, *d.z, closed);
              if (rec.holds && !chars) {
                rec.holds = false;
                rec.detail = "character product differs from P";
              }
            });
      check("walks-equal", r, "N_n = Ntilde_n", [&](IdentityRecord& rec) {
        const LFunction& L = d.need_l();
        rec.holds = true;
        for (int n = 1; n <= walk_census_max(); ++n)
          if (L.counts[static_cast<std::size_t>(n)] != static_cast<long>(d.n_tilde[static_cast<std::size_t>(n)])) {
            rec.holds = false;
            rec.mismatch = n;
            rec.detail = "first difference at n = " + std::to_string(n);
            break;
          }
      });
    }
  }

  void klein_identities(Rep r) {
    const RepData& d = data_[r];
    const RationalFunctionW cf = correction_factor(q_, r);
    check("klein-difference", r, "sum_n (N_n - Ntilde_n) u^n / n = delta n_G log((1+u^{k/n})/(1-u^{k/n}))",
          [&](IdentityRecord& rec) {
            const LFunction& L = d.need_l();
            std::vector<BigInt> diff(static_cast<std::size_t>(K_) + 1);
            bool nonneg = true;
            for (int n = 1; n <= K_; ++n) {
              diff[static_cast<std::size_t>(n)] =
                  L.counts[static_cast<std::size_t>(n)] - static_cast<long>(d.n_tilde[static_cast<std::size_t>(n)]);
              if (sgn(diff[static_cast<std::size_t>(n)]) < 0) nonneg = false;
            }
            compare(rec, exp_of_power_sums(diff, K_), u_series(cf, K_));
            if (rec.holds && !nonneg) {
              rec.holds = false;
              rec.detail = "N_n < Ntilde_n for some n";
            }
          });
    check("klein-l-function", r, "(1-u)^{eps N} L = Z * ((1+u^{k/n})/(1-u^{k/n}))^{n delta}", [&](IdentityRecord& rec) {
      const LFunction& L = d.need_l();
      compare(rec, L.inverse_p_w(), *d.z * cf);
    });
    check("cover-square", r, "Z(A_G)^2 * ((1+u^{k/2})/(1-u^{k/2}))^{-m_G (2-delta)} = Z(A_G0)", [&](IdentityRecord& rec) {
      d.need();
      const int p = -q_.m_axes() * (2 - q_.delta(r));
      RationalFunctionW lhs = d.z->pow(2);
      if (p != 0) lhs = lhs * RationalFunctionW::plus_over_minus(static_cast<unsigned>(q_.k_gamma()), p);
      compare(rec, lhs, zeta_walks(*cover_, r));
    });
    check("semi-cover", r, "Z_semi(A_G0) = Z(A_G0)", [&](IdentityRecord& rec) {
      compare(rec, zeta_semi(*cover_, r), zeta_walks(*cover_, r));
    });
  }

  void klein_group_checks() {
    const KleinSpec& ks = q_.klein_spec();
    check("axis-parity", std::nullopt, "b odd <=> k/n odd; C2 with n = 1 forces b even", [&](IdentityRecord& rec) {
      const bool divisible = q_.k_gamma() % q_.n_gamma() == 0;
      const bool b_odd = ks.b % 2 != 0;
      const bool kn_odd = divisible && (q_.k_gamma() / q_.n_gamma()) % 2 != 0;
      const bool c2_rule = !(rs_.kind() == RootKind::C2 && q_.n_gamma() == 1 && b_odd);
      const bool tsigma = ((ks.b + 2 * ks.m) % 2 != 0) == b_odd;
      rec.holds = divisible && (b_odd == kn_odd) && c2_rule && tsigma;
      rec.detail = "b = " + std::to_string(ks.b) + ", k/n = " + std::to_string(q_.k_gamma()) + "/" +
                   std::to_string(q_.n_gamma());
    });
    check("glide-lattice-count", std::nullopt,
          "|A_s ∩ Lambda(s^m, v)| = k if d > 0 and (v,alpha) = (k m / 2)(alpha,alpha), else 0; same for t s",
          [&](IdentityRecord& rec) {
            const i64 k = q_.k_gamma();
            const i64 aa = rs_.pairing(ks.alpha, ks.alpha);
            int tested = 0, admissible = 0;
            rec.holds = true;
            for (i64 m : {1, 3}) {
              const i64 cmax = 3 * k + 16;
              for (i64 dd = -6; dd <= 6 && rec.holds; ++dd) {
                if (dd == 0) continue;
                for (i64 c = -cmax; c <= cmax; ++c) {
                  const LatticeVector v = c * ks.alpha + dd * ks.beta;
                  if (!rs_.in_coroot_lattice(v)) continue;
                  const bool adm = dd > 0 && 2 * rs_.pairing(v, ks.alpha) == k * m * aa;
                  const i64 expect = adm ? k : 0;
                  const i64 s = lambda_set_size(q_, m, v, Glide::sigma);
                  const i64 ts = lambda_set_size(q_, m, v, Glide::t_sigma);
                  ++tested;
                  if (adm) ++admissible;
                  if (s != expect || ts != s) {
                    rec.holds = false;
                    rec.detail = "m = " + std::to_string(m) + ", v = " + v.to_string() + ": got " + std::to_string(s) +
                                 " / " + std::to_string(ts) + ", expected " + std::to_string(expect);
                    break;
                  }
                }
              }
            }
            if (rec.holds)
              rec.detail = std::to_string(tested) + " vectors, " + std::to_string(admissible) + " admissible";
            if (admissible == 0) {
              rec.holds = false;
              rec.detail = "window contains no admissible v";
            }
          });
  }

  void semi_identities(Rep r) {
    const RepData& d = data_[r];
    check("semi-vs-walks", r,
          q_.is_klein() ? "Z_semi = Z * ((1+u^{k/2})/(1-u^{k/2}))^{(2-delta)(1-m_G)}" : "Z_semi = Z",
          [&](IdentityRecord& rec) {
            d.need();
            compare(rec, *d.z_semi, *d.z * semi_factor(q_, r));
          });
    check("semi-census", r, "j [w^j] log Z_semi = semi-rational closings of j half-steps", [&](IdentityRecord& rec) {
      d.need();
      const int J = opt_.semi_census_max;
      Series lg = series_log(d.z_semi->series(J));
      rec.holds = true;
      for (int j = 1; j <= J; ++j) {
        const BigRational lhs = lg[j] * j;
        const i64 rhs = count_semi_closings(q_, r, j);
        if (lhs != rhs) {
          rec.holds = false;
          rec.mismatch = j;
          rec.lhs = lhs.get_str();
          rec.rhs = std::to_string(rhs);
          break;
        }
      }
    });
  }

  RationalFunctionW dual_lift(const RationalFunctionW& f, Rep dual) const {
    return rs_.repr(dual).n_value == 1 ? f.substitute(2) : f.pow(2);
  }

  void gallery_identities(Rep r) {
    const RepData& d = data_[r];
    const Rep rp = rs_.dual(r);
    const RepData& dp = data_[rp];
    check("gallery-semi", r, "Z2(pi, u) = Z_semi(pi', u^{2/n'})^{n'}", [&](IdentityRecord& rec) {
      d.need();
      dp.need();
      compare(rec, *d.z2, dual_lift(*dp.z_semi, rp));
    });
    std::string main_id = "main-a2";
    if (rs_.kind() == RootKind::C2) main_id = (r == Rep::spin) ? "main-c2-spin" : "main-c2-st";
    check(main_id, r, "(1-u)^{eps N} L(pi, u) = Z(pi, u) Z(pi', u^{2/n'})^{n'} / Z2(pi, -u)", [&](IdentityRecord& rec) {
      const LFunction& L = d.need_l();
      dp.need();
      compare(rec, L.inverse_p_w(), *d.z * dual_lift(*dp.z, rp) / d.z2->negate_u());
    });
    check("main-correction", r, "Z(pi', u^{2/n'})^{n'} / Z2(pi, -u) = ((1+u^{k/n})/(1-u^{k/n}))^{n delta}", [&](IdentityRecord& rec) {
      d.need();
      dp.need();
      compare(rec, dual_lift(*dp.z, rp) / d.z2->negate_u(), correction_factor(q_, r));
    });
    check("galleries-census", r, "n [u^n] log Z2 = closed galleries of length n", [&](IdentityRecord& rec) {
      d.need();
      const int M = opt_.gallery_census_max;
      Series lg = series_log(u_series(*d.z2, M));
      rec.holds = true;
      for (int n = 1; n <= M; ++n) {
        const BigRational lhs = lg[n] * n;
        const i64 rhs = count_closed_galleries(q_, r, n);
        if (lhs != rhs) {
          rec.holds = false;
          rec.mismatch = n;
          rec.lhs = lhs.get_str();
          rec.rhs = std::to_string(rhs);
          break;
        }
      }
    });
  }

  void parity_checks() {
    if (rs_.kind() != RootKind::C2) return;
    const RepData& spin = data_[Rep::spin];
    check("parity-spin-walks", Rep::spin, "Z(spin) has only even powers of u; Ntilde_n = 0 for odd n",
          [&](IdentityRecord& rec) {
            spin.need();
            bool ok = spin.z->denominator().deflate(2).is_even_in_w() && spin.z->numerator().deflate(2).is_even_in_w();
            for (int n = 1; n <= K_; n += 2) ok = ok && spin.n_tilde[static_cast<std::size_t>(n)] == 0;
            rec.holds = ok;
          });
    if (q_.is_klein()) {
      const Rep t = *q_.type_rep();
      const RepData& d = data_[t];
      check("parity-type-galleries", t, "Z2(type rep) has only even powers of u", [&](IdentityRecord& rec) {
        d.need();
        rec.holds = d.z2->denominator().deflate(2).is_even_in_w() && d.z2->numerator().deflate(2).is_even_in_w();
      });
    }
  }

  const QuotientGroup& q_;
  const RootSystem& rs_;
  const VerifyOptions& opt_;
  VerificationReport& report_;
  int K_ = 0;
  std::map<Rep, RepData> data_;
  std::optional<QuotientGroup> cover_;
};

}  // namespace

VerificationReport verify(const QuotientGroup& q, const VerifyOptions& options) {
  VerificationReport report;
  Verifier(q, options, report).run();
  return report;
}

VerificationReport verify(const QuotientGroup& q, std::optional<int> order) {
  VerifyOptions o;
  o.order = order;
  return verify(q, o);
}

}  // namespace azeta
