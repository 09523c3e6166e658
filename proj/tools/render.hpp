#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "azeta/corpus.hpp"
#include "azeta/exact/rational_function.hpp"
#include "azeta/quotient_group.hpp"
#include "azeta/verify.hpp"
#include "azeta/walk_census.hpp"
#include "azeta/zeta_engine.hpp"

namespace azeta::cli {

using Json = nlohmann::ordered_json;

Json coefficient_list(const Poly& p);
// {"num": [...], "den": [...], "var": "u"|"w"}; u-lists when even in w
Json rational_json(const RationalFunctionW& f);
Json spec_json(const GroupSpec& spec);
Json invariants_json(const QuotientGroup& q);
Json counts_json(const QuotientGroup& q, int max_n);
Json zeta_json(const QuotientGroup& q, const ZetaBundle& b, int order);
Json record_json(const IdentityRecord& r);
Json report_json(const QuotientGroup& q, const VerificationReport& r);
Json corpus_json(std::uint64_t seed, const std::vector<CorpusResult>& results);

std::string invariants_text(const QuotientGroup& q);
std::string counts_text(const QuotientGroup& q, int max_n);
std::string zeta_text(const QuotientGroup& q, const ZetaBundle& b, int order);
std::string report_text(const VerificationReport& r);
std::string corpus_text(std::uint64_t seed, const std::vector<CorpusResult>& results);

}  // namespace azeta::cli
