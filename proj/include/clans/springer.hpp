#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "clans/clan.hpp"
#include "clans/patterns.hpp"
#include "clans/poset.hpp"

namespace clans {

/// Positions (i, j), i < j, of opposite signs in a closed clan.
using Reflection = std::pair<std::size_t, std::size_t>;

/// A reflection count exceeding the budget means the closure of gamma is
/// not rationally smooth. The comparison is strict.
inline constexpr auto kExceedsBudget = std::greater<int>{};

struct ReflectionWitness {
  Clan closed;
  Clan gamma;
  int budget = 0;  // dimension(gamma) - base_dimension(p, q)
  int count = 0;
  std::vector<Reflection> hits;
};

/// All opposite-sign position pairs in lexicographic order. Throws ClanError
/// if `closed` contains a pair.
std::vector<Reflection> noncompact_reflections(const Clan& closed);

/// Replaces the opposite signs at i and j by a fresh pair. Throws ClanError
/// unless both positions hold signs and the signs differ.
Clan apply_reflection(const Clan& closed, std::size_t i, std::size_t j);

/// Counts the reflections of `closed` whose image lies below gamma. Throws
/// ClanError unless `closed` is a closed clan below gamma.
ReflectionWitness springer_count(const OrbitPoset& poset, const Clan& closed, const Clan& gamma);

/// Scans the closed orbits below gamma in enumeration order and returns the
/// first witness whose count exceeds its budget; nullopt means gamma passes.
std::optional<ReflectionWitness> springer_diagnosis(const OrbitPoset& poset, const Clan& gamma);

/// Heuristic starting point for witness hunting: the closed clan obtained
/// from gamma by turning the embedded pattern's pair numbers into "-,+" (or
/// "-,+,-,+" for two pairs) in position order, then every remaining pair into
/// "+" at its left end and "-" at its right end.
Clan pattern_closed_orbit(const Clan& gamma, const Embedding& embedding);

}  // namespace clans
