#pragma once

#include <string>
#include <vector>

#include "clans/clan.hpp"

namespace testing_helpers {

inline clans::Clan C(const std::string& text) { return clans::parse_clan(text); }

inline std::vector<std::string> texts(const std::vector<clans::Clan>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(clans::format_clan(c));
  return out;
}

/// 1-based positions, as written in the docs, to library positions.
inline std::vector<std::size_t> zero_based(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (std::size_t v : one_based) out.push_back(v - 1);
  return out;
}

}  // namespace testing_helpers
