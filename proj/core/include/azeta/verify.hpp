#pragma once

#include <optional>
#include <string>
#include <vector>

#include "azeta/quotient_group.hpp"

namespace azeta {

struct IdentityRecord {
  std::string id;
  std::optional<Rep> rep;
  std::string statement;
  bool holds = false;
  std::string lhs;    // filled when a rational identity fails
  std::string rhs;
  int mismatch = -1;  // first differing series exponent, when known
  std::string detail;
};

struct VerificationReport {
  GroupSpec spec;
  int order = 0;
  std::vector<IdentityRecord> records;

  bool all_hold() const;
  const IdentityRecord* find(const std::string& id, std::optional<Rep> rep = std::nullopt) const;
  std::vector<const IdentityRecord*> failures() const;
};

struct VerifyOptions {
  std::optional<int> order;
  int gallery_census_max = 10;
  int semi_census_max = 24;
  int walk_census_max = 0;            // 0: the full series order
  int determinant_state_limit = 128;  // Berkowitz cross-check only for small systems
};

VerificationReport verify(const QuotientGroup& q, const VerifyOptions& options = {});
VerificationReport verify(const QuotientGroup& q, std::optional<int> order);

}  // namespace azeta
