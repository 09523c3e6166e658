#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "azeta/quotient_group.hpp"

namespace azeta {

// key = value lines, '#' starts a comment.
struct QuotientSpecFile {
  GroupSpec group;
  std::optional<int> order;
};

QuotientSpecFile parse_spec(std::string_view text);
QuotientSpecFile load_spec_file(const std::string& path);
std::string format_spec(const GroupSpec& spec, std::optional<int> order = std::nullopt);

}  // namespace azeta
