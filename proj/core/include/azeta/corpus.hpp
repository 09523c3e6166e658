#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "azeta/quotient_group.hpp"
#include "azeta/verify.hpp"

namespace azeta {

struct CorpusEntry {
  std::string name;
  std::string cell;  // e.g. "A2/torus", "C2-spin/b-odd"
  GroupSpec spec;
};

struct CorpusOptions {
  std::uint64_t seed = 1;
  int tori_per_root = 20;
  int kleins_per_cell = 3;
  i64 max_N = 60;
  i64 torus_entry_bound = 6;
  i64 klein_ab_bound = 4;
  i64 klein_m_bound = 3;
};

// every valid Klein spec within the bounds, in a fixed order
std::vector<GroupSpec> enumerate_klein_specs(RootKind kind, const CorpusOptions& opt);
std::string klein_cell(const QuotientGroup& q);
std::vector<CorpusEntry> generate_corpus(const CorpusOptions& opt);

struct CorpusResult {
  CorpusEntry entry;
  std::optional<VerificationReport> report;
  std::string error;
  double seconds = 0;
  bool ok() const { return report && report->all_hold() && error.empty(); }
};

// verified on a thread pool; results keep the input order
std::vector<CorpusResult> verify_corpus(const std::vector<CorpusEntry>& entries, const VerifyOptions& options,
                                        unsigned threads = 0);

}  // namespace azeta
