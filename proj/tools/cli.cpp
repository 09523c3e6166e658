#include "cli.hpp"

#include <ostream>

#include "CLI11.hpp"

#include "azeta/errors.hpp"
#include "azeta/spec_file.hpp"
#include "render.hpp"

namespace azeta::cli {

namespace {

struct Options {
  std::string input;
  std::optional<int> order;
  std::string format = "text";
  int max_n = 12;
  std::uint64_t seed = 1;
  int tori = 20;
  int kleins_per_cell = 3;
  unsigned threads = 0;
};

QuotientGroup load(const Options& o, std::optional<int>& order) {
  const QuotientSpecFile f = load_spec_file(o.input);
  order = o.order ? o.order : f.order;
  return QuotientGroup::build(RootSystem::get(f.group.root), f.group);
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    out << j.dump() << "\n";
  else
    out << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of walks and galleries on rank-2 apartment quotients"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool input) {
    if (input) sub->add_option("--input,-i", o.input, "quotient spec file")->required()->check(CLI::ExistingFile);
    sub->add_option("--order", o.order, "series order in u")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* describe = app.add_subcommand("describe", "print the invariants of the quotient group");
  add_common(describe, true);
  CLI::App* counts = app.add_subcommand("counts", "brute-force walk, semi-rational and gallery counts");
  add_common(counts, true);
  counts->add_option("--max-n", o.max_n, "largest walk length")->check(CLI::Range(1, 10000));
  CLI::App* zeta = app.add_subcommand("zeta", "zeta functions, L-function polynomial and correction factors");
  add_common(zeta, true);
  CLI::App* ver = app.add_subcommand("verify", "verify every applicable identity exactly");
  add_common(ver, true);
  CLI::App* corpus = app.add_subcommand("corpus", "generate and verify a randomized corpus");
  add_common(corpus, false);
  corpus->add_option("--seed", o.seed, "random seed");
  corpus->add_option("--tori", o.tori, "tori per root system")->check(CLI::Range(0, 1000));
  corpus->add_option("--kleins-per-cell", o.kleins_per_cell, "Klein bottles per cell")->check(CLI::Range(0, 1000));
  corpus->add_option("--threads", o.threads, "worker threads (0: hardware)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (corpus->parsed()) {
      CorpusOptions co;
      co.seed = o.seed;
      co.tori_per_root = o.tori;
      co.kleins_per_cell = o.kleins_per_cell;
      VerifyOptions vo;
      vo.order = o.order;
      const auto results = verify_corpus(generate_corpus(co), vo, o.threads);
      emit(out, o, corpus_json(o.seed, results), corpus_text(o.seed, results));
      for (const auto& r : results)
        if (!r.ok()) return 1;
      return 0;
    }

    std::optional<int> order;
    const QuotientGroup q = load(o, order);
    if (describe->parsed()) {
      emit(out, o, Json{{"invariants", invariants_json(q)}}, invariants_text(q));
      return 0;
    }
    if (counts->parsed()) {
      emit(out, o, Json{{"invariants", invariants_json(q)}, {"counts", counts_json(q, o.max_n)}},
           counts_text(q, o.max_n));
      return 0;
    }
    if (zeta->parsed()) {
      const int K = effective_order(q, order);
      const ZetaBundle b = compute_zeta_bundle(q, K);
      Json j{{"invariants", invariants_json(q)}};
      const Json z = zeta_json(q, b, K);
      for (const auto& [k, v] : z.items()) j[k] = v;
      emit(out, o, j, zeta_text(q, b, K));
      return 0;
    }
    const VerificationReport r = verify(q, order);
    emit(out, o, report_json(q, r), report_text(r));
    return r.all_hold() ? 0 : 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientOrderError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace azeta::cli
