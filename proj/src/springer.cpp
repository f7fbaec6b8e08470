#include "clans/springer.hpp"

#include <algorithm>

namespace clans {

std::vector<Reflection> noncompact_reflections(const Clan& closed) {
  if (!is_closed(closed)) throw ClanError("clan " + format_clan(closed) + " is not closed");
  std::vector<Reflection> out;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      if (closed[i] != closed[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

Clan apply_reflection(const Clan& closed, std::size_t i, std::size_t j) {
  if (i >= j || j >= closed.size()) throw ClanError("reflection positions out of range");
  if (!closed[i].is_sign() || !closed[j].is_sign() || closed[i] == closed[j])
    throw ClanError("reflection needs opposite signs at positions " + std::to_string(i + 1) + "," +
                    std::to_string(j + 1));
  std::vector<Entry> raw(closed.entries().begin(), closed.entries().end());
  const int fresh = closed.pair_count() + 1;
  raw[i] = Entry::pair(fresh);
  raw[j] = Entry::pair(fresh);
  return Clan::from_entries(raw, closed.p(), closed.q());
}

ReflectionWitness springer_count(const OrbitPoset& poset, const Clan& closed, const Clan& gamma) {
  const std::size_t g = poset.index_of(gamma);
  const std::size_t c = poset.index_of(closed);
  if (!is_closed(closed) || !poset.leq(c, g))
    throw ClanError(format_clan(closed) + " is not a closed orbit below " + format_clan(gamma));
  ReflectionWitness w{closed, gamma, poset.dimension(g) - base_dimension(gamma.p(), gamma.q()), 0, {}};
  for (const auto& [i, j] : noncompact_reflections(closed)) {
    if (poset.leq(poset.index_of(apply_reflection(closed, i, j)), g)) w.hits.emplace_back(i, j);
  }
  w.count = static_cast<int>(w.hits.size());
  return w;
}

std::optional<ReflectionWitness> springer_diagnosis(const OrbitPoset& poset, const Clan& gamma) {
  const std::size_t g = poset.index_of(gamma);
  for (std::size_t c : poset.closed_below(g)) {
    ReflectionWitness w = springer_count(poset, poset.element(c), gamma);
    if (kExceedsBudget(w.count, w.budget)) return w;
  }
  return std::nullopt;
}

Clan pattern_closed_orbit(const Clan& gamma, const Embedding& embedding) {
  std::vector<Entry> raw(gamma.entries().begin(), gamma.entries().end());
  std::vector<std::size_t> pattern_pair_positions;
  for (std::size_t pos : embedding) {
    if (gamma[pos].is_pair()) pattern_pair_positions.push_back(pos);
  }
  std::sort(pattern_pair_positions.begin(), pattern_pair_positions.end());
  bool next_minus = true;
  for (std::size_t pos : pattern_pair_positions) {
    raw[pos] = next_minus ? Entry::minus() : Entry::plus();
    next_minus = !next_minus;
  }
  for (std::size_t pos = 0; pos < raw.size(); ++pos) {
    if (!raw[pos].is_pair()) continue;
    raw[pos] = gamma.mate(pos) > static_cast<int>(pos) ? Entry::plus() : Entry::minus();
  }
  return Clan::from_entries(raw, gamma.p(), gamma.q());
}

}  // namespace clans
