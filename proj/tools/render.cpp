#include "render.hpp"

#include <sstream>

namespace azeta::cli {

namespace {

Json coefficient(const BigRational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json vec_json(LatticeVector v) { return Json::array({v.x, v.y}); }

Json table_json(const CountTable& t) {
  Json a = Json::array();
  for (i64 v : t.values) a.push_back(v);
  return a;
}

std::string table_text(const CountTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.values.size(); ++i) s += (i ? " " : "") + std::to_string(t.values[i]);
  return s;
}

std::string rational_text(const RationalFunctionW& f) {
  if (f.is_even_in_w())
    return RationalFunctionW(f.numerator().deflate(2), f.denominator().deflate(2)).to_string("u") + "  [u]";
  return f.to_string("w") + "  [w]";
}

}  // namespace

Json coefficient_list(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(coefficient(c));
  if (p.is_zero()) a.push_back(0);
  return a;
}

Json rational_json(const RationalFunctionW& f) {
  const bool even = f.is_even_in_w();
  const Poly num = even ? f.numerator().deflate(2) : f.numerator();
  const Poly den = even ? f.denominator().deflate(2) : f.denominator();
  return Json{{"num", coefficient_list(num)}, {"den", coefficient_list(den)}, {"var", even ? "u" : "w"}};
}

Json spec_json(const GroupSpec& spec) {
  Json j{{"root_system", std::string(to_string(spec.root))}};
  if (const auto* t = std::get_if<TorusSpec>(&spec.data)) {
    j["kind"] = "torus";
    j["v1"] = vec_json(t->v1);
    j["v2"] = vec_json(t->v2);
  } else {
    const auto& k = std::get<KleinSpec>(spec.data);
    j["kind"] = "klein";
    j["alpha"] = vec_json(k.alpha);
    j["beta"] = vec_json(k.beta);
    j["a"] = k.a;
    j["b"] = k.b;
    j["m"] = k.m;
  }
  return j;
}

Json invariants_json(const QuotientGroup& q) {
  const InvariantsReport r = q.invariants_report();
  Json j{{"root_system", std::string(to_string(r.root))}, {"kind", r.klein ? "klein" : "torus"}, {"N", r.N}};
  if (r.klein) {
    j["k_gamma"] = r.k_gamma;
    j["n_gamma"] = r.n_gamma;
    j["type"] = std::string(to_string(*r.type_rep));
    j["m_axes"] = r.m_axes;
    j["normalized"] = spec_json(q.spec());
    j["t"] = vec_json(q.t_vec());
  }
  j["gamma0_basis"] = Json::array({vec_json(r.gamma0_basis[0]), vec_json(r.gamma0_basis[1])});
  Json reps = Json::object();
  for (const auto& p : r.reps)
    reps[std::string(to_string(p.rep))] = {
        {"epsilon", p.epsilon}, {"n", p.n_value}, {"delta", p.delta}, {"wt_plus", p.wt_plus}};
  j["reps"] = reps;
  return j;
}

Json counts_json(const QuotientGroup& q, int max_n) {
  Json j = Json::object();
  for (Rep r : q.root_system().rep_names()) {
    j[std::string(to_string(r))] = {
        {"N", table_json(closed_walk_table(q, r, max_n))},
        {"N_tilde", table_json(geodesic_walk_table(q, r, max_n))},
        {"semi", table_json(semi_closing_table(q, r, 2 * max_n))},
        {"galleries", table_json(closed_gallery_table(q, r, max_n))},
    };
  }
  return j;
}

Json zeta_json(const QuotientGroup& q, const ZetaBundle& b, int order) {
  Json z = Json::object(), zs = Json::object(), z2 = Json::object(), l = Json::object(), cf = Json::object();
  for (const auto& [rep, d] : b.reps) {
    const std::string name(to_string(rep));
    z[name] = rational_json(d.z);
    zs[name] = rational_json(d.z_semi);
    z2[name] = rational_json(d.z2);
    cf[name] = rational_json(d.correction);
    const int eps = q.root_system().repr(rep).epsilon;
    l[name] = {{"P", coefficient_list(d.l->p_u)},
               {"var", "u"},
               {"epsilon_N", static_cast<i64>(eps) * q.N()},
               {"L", rational_json(d.l->l_w)}};
  }
  return Json{{"order", order}, {"zeta", z},       {"zeta_semi", zs},
              {"zeta_galleries", z2}, {"l_function", l}, {"correction", cf}};
}

Json record_json(const IdentityRecord& r) {
  Json j{{"id", r.id}};
  if (r.rep) j["rep"] = std::string(to_string(*r.rep));
  j["statement"] = r.statement;
  j["holds"] = r.holds;
  if (!r.lhs.empty()) j["lhs"] = r.lhs;
  if (!r.rhs.empty()) j["rhs"] = r.rhs;
  if (r.mismatch >= 0) j["mismatch"] = r.mismatch;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json report_json(const QuotientGroup& q, const VerificationReport& r) {
  Json v = Json::array();
  for (const auto& rec : r.records) v.push_back(record_json(rec));
  return Json{{"invariants", invariants_json(q)}, {"order", r.order}, {"verify", v}, {"all_hold", r.all_hold()}};
}

Json corpus_json(std::uint64_t seed, const std::vector<CorpusResult>& results) {
  Json entries = Json::array();
  std::size_t passed = 0;
  for (const auto& res : results) {
    Json e{{"name", res.entry.name}, {"cell", res.entry.cell}, {"spec", spec_json(res.entry.spec)}, {"holds", res.ok()}};
    if (res.report) {
      e["order"] = res.report->order;
      e["identities"] = res.report->records.size();
      Json fails = Json::array();
      for (const auto* f : res.report->failures()) fails.push_back(record_json(*f));
      if (!fails.empty()) e["failures"] = fails;
    }
    if (!res.error.empty()) e["error"] = res.error;
    if (res.ok()) ++passed;
    entries.push_back(e);
  }
  return Json{{"seed", seed},
              {"entries", entries},
              {"summary", {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}}}};
}

std::string invariants_text(const QuotientGroup& q) {
  const InvariantsReport r = q.invariants_report();
  std::ostringstream os;
  os << "root system: " << to_string(r.root) << "\n";
  os << "kind:        " << (r.klein ? "klein" : "torus") << "\n";
  os << "N:           " << r.N << "\n";
  if (r.klein) {
    const auto& k = *r.normalized;
    os << "normalized:  alpha=" << k.alpha.to_string() << " beta=" << k.beta.to_string() << " a=" << k.a
       << " b=" << k.b << " m=" << k.m << "\n";
    os << "k_gamma:     " << r.k_gamma << "\n";
    os << "n_gamma:     " << r.n_gamma << "\n";
    os << "type:        " << to_string(*r.type_rep) << "\n";
    os << "m_axes:      " << r.m_axes << "\n";
    os << "t:           " << q.t_vec().to_string() << "\n";
  }
  os << "Gamma0:      " << r.gamma0_basis[0].to_string() << " " << r.gamma0_basis[1].to_string() << "\n";
  for (const auto& p : r.reps)
    os << "  " << to_string(p.rep) << ": epsilon=" << p.epsilon << " n=" << p.n_value << " delta=" << p.delta
       << " |wt+|=" << p.wt_plus << "\n";
  return os.str();
}

std::string counts_text(const QuotientGroup& q, int max_n) {
  std::ostringstream os;
  for (Rep r : q.root_system().rep_names()) {
    os << to_string(r) << "\n";
    os << "  N:         " << table_text(closed_walk_table(q, r, max_n)) << "\n";
    os << "  N_tilde:   " << table_text(geodesic_walk_table(q, r, max_n)) << "\n";
    os << "  semi:      " << table_text(semi_closing_table(q, r, 2 * max_n)) << "\n";
    os << "  galleries: " << table_text(closed_gallery_table(q, r, max_n)) << "\n";
  }
  return os.str();
}

std::string zeta_text(const QuotientGroup& q, const ZetaBundle& b, int order) {
  std::ostringstream os;
  os << "order " << order << "\n";
  for (const auto& [rep, d] : b.reps) {
    const int eps = q.root_system().repr(rep).epsilon;
    os << to_string(rep) << "\n";
    os << "  Z      = " << rational_text(d.z) << "\n";
    os << "  Z_semi = " << rational_text(d.z_semi) << "\n";
    os << "  Z2     = " << rational_text(d.z2) << "\n";
    os << "  P      = " << d.l->p_u.to_string("u") << "   ((1-u)^" << eps * q.N() << " L = 1/P)\n";
    os << "  factor = " << rational_text(d.correction) << "\n";
  }
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.spec.to_string() << "  (order " << r.order << ")\n";
  std::size_t ok = 0;
  for (const auto& rec : r.records) {
    os << (rec.holds ? "  ok    " : "  FAIL  ") << rec.id;
    if (rec.rep) os << "[" << to_string(*rec.rep) << "]";
    os << "  " << rec.statement << "\n";
    if (!rec.holds) {
      if (!rec.detail.empty()) os << "        " << rec.detail << "\n";
      if (!rec.lhs.empty()) os << "        lhs: " << rec.lhs << "\n";
      if (!rec.rhs.empty()) os << "        rhs: " << rec.rhs << "\n";
    }
    if (rec.holds) ++ok;
  }
  os << ok << "/" << r.records.size() << " identities hold\n";
  return os.str();
}

std::string corpus_text(std::uint64_t seed, const std::vector<CorpusResult>& results) {
  std::ostringstream os;
  os << "corpus seed " << seed << "\n";
  std::size_t passed = 0;
  for (const auto& res : results) {
    os << (res.ok() ? "  ok    " : "  FAIL  ") << res.entry.name << "  " << res.entry.spec.to_string();
    if (res.report) os << "  (" << res.report->records.size() << " identities)";
    os << "\n";
    if (!res.error.empty()) os << "        error: " << res.error << "\n";
    if (res.report)
      for (const auto* f : res.report->failures()) os << "        failed " << f->id << "\n";
    if (res.ok()) ++passed;
  }
  os << passed << "/" << results.size() << " quotients verified\n";
  return os.str();
}

}  // namespace azeta::cli
