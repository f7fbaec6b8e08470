#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "clans/clan.hpp"

namespace clans {

enum class MoveKind {
  PairCreation,   // two opposite signs become a fresh pair
  EndpointSlide,  // a pair endpoint trades places with a sign, moving away from its mate
  PairExchange,   // endpoints of two pairs trade places, mate order preserved
};

struct Move {
  MoveKind kind;
  std::size_t first;   // smaller position
  std::size_t second;  // larger position
  Clan result;
};

/// Every move of the three kinds that applies to `clan`, in generation order.
/// Throws InvariantViolation if some result does not have larger dimension.
std::vector<Move> moves(const Clan& clan);

/// Distinct move results, sorted.
std::vector<Clan> successors(const Clan& clan);

inline constexpr int kDefaultMaxN = 9;

struct PosetOptions {
  int max_n = kDefaultMaxN;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

struct CoverEdge {
  std::size_t low;
  std::size_t high;

  bool operator==(const CoverEdge&) const = default;
};

/// Closure order on the clans of one signature, generated by the moves.
///
/// Elements are indexed in enumeration order. `up(i)` holds every element
/// above or equal to element i.
class OrbitPoset {
 public:
  static OrbitPoset build(int p, int q, const PosetOptions& options = {});

  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Clan>& elements() const { return elements_; }
  const Clan& element(std::size_t i) const { return elements_[i]; }
  int dimension(std::size_t i) const { return dims_[i]; }

  std::optional<std::size_t> find(const Clan& clan) const;
  /// Throws ClanError for clans outside the poset.
  std::size_t index_of(const Clan& clan) const;

  const boost::dynamic_bitset<>& up(std::size_t i) const { return up_[i]; }
  std::span<const std::size_t> successor_indices(std::size_t i) const { return succ_[i]; }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool leq(const Clan& a, const Clan& b) const { return leq(index_of(a), index_of(b)); }

  std::vector<std::size_t> lower_set(std::size_t c) const;
  std::vector<Clan> lower_set(const Clan& c) const;
  /// All-sign clans below c, in enumeration order.
  std::vector<std::size_t> closed_below(std::size_t c) const;
  std::vector<Clan> closed_below(const Clan& c) const;

  /// Transitive reduction, sorted by (low, high).
  const std::vector<CoverEdge>& covers() const { return covers_; }

  std::vector<std::size_t> maximal_elements() const;
  std::vector<std::size_t> minimal_elements() const;

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<Clan> elements_;
  std::vector<int> dims_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<CoverEdge> covers_;
};

std::vector<CoverEdge> hasse_covers(const OrbitPoset& poset);

/// Graphviz digraph of the cover relation; nodes labelled with clan and dimension.
void export_dot(const OrbitPoset& poset, std::ostream& out);

/// One row per element: clan, dim, closed, cover targets joined by ';'.
void export_tsv(const OrbitPoset& poset, std::ostream& out);

}  // namespace clans
