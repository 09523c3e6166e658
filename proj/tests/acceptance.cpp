// One line per acceptance criterion; exit status 0 iff every line passes.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "azeta/corpus.hpp"
#include "azeta/errors.hpp"
#include "azeta/walk_census.hpp"
#include "azeta/zeta_engine.hpp"

using namespace azeta;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RationalFunctionW geo_u(unsigned e, int p) { return RationalFunctionW::geometric(2 * e).pow(p); }

struct Member {
  CorpusEntry entry;
  QuotientGroup q;
  VerificationReport report;
  double seconds;
};

void require(Outcome& o, const Member& m, const std::string& id, std::optional<Rep> rep) {
  const IdentityRecord* r = m.report.find(id, rep);
  const std::string tag = m.entry.name + " " + id + (rep ? "[" + std::string(to_string(*rep)) + "]" : "");
  if (!r)
    o.fail(tag + " missing");
  else if (!r->holds)
    o.fail(tag + " fails: " + r->detail);
}

std::string main_identity(const QuotientGroup& q, Rep r) {
  if (q.root_system().kind() == RootKind::A2) return "main-a2";
  return r == Rep::spin ? "main-c2-spin" : "main-c2-st";
}

Outcome regression() {
  Outcome o;
  const RootSystem& a2 = RootSystem::a2();
  const RootSystem& c2 = RootSystem::c2();
  QuotientGroup ta = QuotientGroup::build(a2, GroupSpec::torus(RootKind::A2, {1, 1}, {-1, 2}));
  QuotientGroup tc = QuotientGroup::build(c2, GroupSpec::torus(RootKind::C2, {1, 1}, {1, -1}));
  auto check = [&o](bool ok, const std::string& what) {
    if (!ok) o.fail(what);
  };
  check(zeta_walks(ta, Rep::pi1) == geo_u(3, 3), "A2 Z(pi1)");
  check(zeta_walks(ta, Rep::pi2) == geo_u(3, 3), "A2 Z(pi2)");
  check(zeta_galleries(ta, Rep::pi1) == geo_u(6, 3), "A2 Z2(pi1)");
  check(zeta_walks(tc, Rep::spin) == geo_u(2, 4), "C2 Z(spin)");
  check(zeta_walks(tc, Rep::st) == geo_u(1, 8), "C2 Z(st)");
  check(l_function(tc, Rep::st, kDefaultOrder).l_w == geo_u(1, 10), "C2 L(st)");
  check(zeta_galleries(tc, Rep::spin) == geo_u(2, 8), "C2 Z2(spin)");
  check(zeta_galleries(tc, Rep::st) == geo_u(2, 8), "C2 Z2(st)");
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&all](int n, const std::string& title, const Outcome& o, double secs, double budget) {
    const bool ok = o.pass && secs < budget;
    all = all && ok;
    std::ostringstream line;
    line << "criterion " << n << " " << std::left << std::setw(24) << title << (ok ? "PASS" : "FAIL") << "  ("
         << std::fixed << std::setprecision(2);
    if (budget < 1e9)
      line << secs << " s / budget " << budget << " s)";
    else
      line << "from the shared corpus reports)";
    if (!o.pass) line << "  " << o.note;
    if (secs >= budget) line << "  over time budget";
    std::cout << line.str() << std::endl;
  };
  constexpr double kNoBudget = 1e18;

  auto t0 = Clock::now();
  Outcome c1;
  try {
    c1 = regression();
  } catch (const std::exception& e) {
    c1.fail(e.what());
  }
  report(1, "regression values", c1, seconds_since(t0), 1.0);

  // Shared corpus: default bounds, fixed seed.
  CorpusOptions copt;
  copt.seed = 1;
  copt.tori_per_root = 20;
  copt.kleins_per_cell = 3;
  std::vector<Member> tori, kleins;
  std::string corpus_error;
  for (const auto& e : generate_corpus(copt)) {
    auto start = Clock::now();
    try {
      QuotientGroup q = QuotientGroup::build(RootSystem::get(e.spec.root), e.spec);
      VerificationReport r = verify(q, std::nullopt);
      Member m{e, q, std::move(r), seconds_since(start)};
      (q.is_klein() ? kleins : tori).push_back(std::move(m));
    } catch (const std::exception& ex) {
      corpus_error = e.name + ": " + ex.what();
    }
  }
  auto all_members = [&](const std::function<void(const Member&)>& f) {
    for (const auto& m : tori) f(m);
    for (const auto& m : kleins) f(m);
  };

  // 2. torus suite
  {
    Outcome o;
    if (!corpus_error.empty()) o.fail(corpus_error);
    double secs = 0;
    std::map<RootKind, int> per_root;
    for (const auto& m : tori) {
      auto start = Clock::now();
      per_root[m.q.root_system().kind()]++;
      for (Rep r : m.q.root_system().rep_names()) {
        require(o, m, "torus-closed-form", r);
        if (closed_walk_table(m.q, r, 12).values != geodesic_walk_table(m.q, r, 12).values)
          o.fail(m.entry.name + " N_n != Ntilde_n");
      }
      secs += m.seconds + seconds_since(start);
    }
    if (per_root[RootKind::A2] < 20 || per_root[RootKind::C2] < 20) o.fail("fewer than 20 tori per root system");
    report(2, "torus suite", o, secs, 60.0);
  }

  // 3. klein suite
  {
    Outcome o;
    double secs = 0;
    std::map<std::string, int> cells;
    for (const auto& m : kleins) {
      cells[m.entry.cell]++;
      for (Rep r : m.q.root_system().rep_names()) require(o, m, "klein-l-function", r);
      require(o, m, "axis-parity", std::nullopt);
      require(o, m, "glide-lattice-count", std::nullopt);
      secs += m.seconds;
    }
    for (const char* c : {"A2/b-even", "A2/b-odd", "C2-spin/b-even", "C2-spin/b-odd", "C2-st/b-even"})
      if (cells[c] == 0) o.fail(std::string("no member in cell ") + c);
    if (cells.count("C2-st/b-odd")) o.fail("C2 st-type with odd b should not exist");
    if (kleins.size() < 12) o.fail("fewer than 12 Klein-bottle groups");
    report(3, "klein suite", o, secs, 90.0);
  }

  // 4. cover consistency
  {
    Outcome o;
    for (const auto& m : kleins)
      for (Rep r : m.q.root_system().rep_names()) {
        require(o, m, "cover-square", r);
        require(o, m, "semi-vs-walks", r);
        require(o, m, "semi-cover", r);
      }
    report(4, "cover consistency", o, 0, kNoBudget);
  }

  // 5. gallery suite
  {
    Outcome o;
    all_members([&o](const Member& m) {
      for (Rep r : m.q.root_system().rep_names()) {
        require(o, m, "gallery-semi", r);
        require(o, m, "galleries-census", r);
      }
    });
    report(5, "gallery suite", o, 0, kNoBudget);
  }

  // 6. main identity
  {
    Outcome o;
    all_members([&o](const Member& m) {
      for (Rep r : m.q.root_system().rep_names()) {
        require(o, m, main_identity(m.q, r), r);
        require(o, m, "main-correction", r);
      }
    });
    report(6, "main identity", o, 0, kNoBudget);
  }

  // 7. structural invariants
  {
    Outcome o;
    all_members([&o](const Member& m) {
      const bool c2 = m.q.root_system().kind() == RootKind::C2;
      for (Rep r : m.q.root_system().rep_names()) {
        require(o, m, "bijectivity", r);
        require(o, m, "integrality", r);
      }
      if (c2) require(o, m, "parity-spin-walks", Rep::spin);
      if (c2 && m.q.is_klein()) require(o, m, "parity-type-galleries", *m.q.type_rep());
    });
    for (const auto& m : kleins) {
      const int need = required_order(m.q);
      try {
        verify(m.q, need - 1);
        o.fail(m.entry.name + ": order " + std::to_string(need - 1) + " accepted");
      } catch (const InsufficientOrderError& e) {
        if (e.required() != need) o.fail(m.entry.name + ": wrong required order");
      }
    }
    report(7, "structural invariants", o, 0, kNoBudget);
  }

  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
