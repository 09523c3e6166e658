#include "azeta/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "azeta/errors.hpp"

namespace azeta {

std::vector<GroupSpec> enumerate_klein_specs(RootKind kind, const CorpusOptions& opt) {
  const RootSystem& rs = RootSystem::get(kind);
  std::vector<GroupSpec> out;
  for (const auto& rep : rs.reps())
    for (auto al : rep.nontrivial_weights) {
      const auto& comp = rs.weights(rs.dual(rep.name));
      i64 best = rs.pairing(al, comp.front());
      for (auto w : comp) best = std::max(best, rs.pairing(al, w));
      for (auto be : comp) {
        if (rs.pairing(al, be) != best) continue;
        for (i64 a = -opt.klein_ab_bound; a <= opt.klein_ab_bound; ++a)
          for (i64 b = -opt.klein_ab_bound; b <= opt.klein_ab_bound; ++b) {
            if (!rs.in_coroot_lattice(a * al + b * be)) continue;
            const i64 n = 2 * rs.pairing(al, be) / rs.pairing(al, al);
            if (2 * a + n * b == 0) continue;
            for (i64 m = -opt.klein_m_bound; m <= opt.klein_m_bound; ++m) {
              if (m == 0) continue;
              GroupSpec s = GroupSpec::klein(kind, al, be, a, b, m);
              const QuotientGroup q = QuotientGroup::build(rs, s);
              if (q.N() <= opt.max_N) out.push_back(s);
            }
          }
      }
    }
  return out;
}

std::string klein_cell(const QuotientGroup& q) {
  const KleinSpec& k = q.klein_spec();
  std::string type = q.root_system().kind() == RootKind::A2 ? "A2" : "C2-" + std::string(to_string(*q.type_rep()));
  return type + (k.b % 2 == 0 ? "/b-even" : "/b-odd");
}

std::vector<CorpusEntry> generate_corpus(const CorpusOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<CorpusEntry> out;
  for (RootKind kind : {RootKind::A2, RootKind::C2}) {
    const RootSystem& rs = RootSystem::get(kind);
    const std::string root(to_string(kind));
    std::uniform_int_distribution<i64> coord(-opt.torus_entry_bound, opt.torus_entry_bound);
    std::set<std::pair<i64, std::vector<LatticeVector>>> seen;
    int made = 0;
    for (int attempts = 0; made < opt.tori_per_root && attempts < 100000; ++attempts) {
      const LatticeVector v1{coord(rng), coord(rng)}, v2{coord(rng), coord(rng)};
      if (!rs.in_coroot_lattice(v1) || !rs.in_coroot_lattice(v2)) continue;
      const i64 d = det2(v1, v2);
      if (d == 0 || std::abs(d) > opt.max_N) continue;
      if (!seen.insert({0, {v1, v2}}).second) continue;
      ++made;
      out.push_back({root + "-torus-" + std::to_string(made), root + "/torus", GroupSpec::torus(kind, v1, v2)});
    }
    std::map<std::string, std::vector<GroupSpec>> cells;
    for (const auto& s : enumerate_klein_specs(kind, opt))
      cells[klein_cell(QuotientGroup::build(rs, s))].push_back(s);
    for (auto& [cell, specs] : cells) {
      std::shuffle(specs.begin(), specs.end(), rng);
      const int take = std::min<int>(opt.kleins_per_cell, static_cast<int>(specs.size()));
      for (int i = 0; i < take; ++i)
        out.push_back({cell + "-klein-" + std::to_string(i + 1), cell, specs[static_cast<std::size_t>(i)]});
    }
  }
  return out;
}

std::vector<CorpusResult> verify_corpus(const std::vector<CorpusEntry>& entries, const VerifyOptions& options,
                                        unsigned threads) {
  std::vector<CorpusResult> results(entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      CorpusResult& r = results[i];
      r.entry = entries[i];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const QuotientGroup q = QuotientGroup::build(RootSystem::get(entries[i].spec.root), entries[i].spec);
        r.report = verify(q, options);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace azeta
