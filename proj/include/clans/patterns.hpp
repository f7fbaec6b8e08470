#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "clans/clan.hpp"

namespace clans {

/// Host positions, strictly increasing, one per pattern entry.
using Embedding = std::vector<std::size_t>;

/// The seven forbidden patterns, in the order the classifier tries them:
/// (1,+,-,1), (1,-,+,1), (1,2,1,2), (1,+,2,2,1), (1,-,2,2,1), (1,2,2,+,1), (1,2,2,-,1).
const std::array<Clan, 7>& theorem_patterns();

/// Lexicographically least embedding of `pattern` into `host`, if any.
///
/// Signs map to identical signs; each pattern pair maps onto both endpoints
/// of a single host pair.
std::optional<Embedding> find_embedding(const Clan& host, const Clan& pattern);

struct PatternHit {
  std::size_t pattern_index;  // into the list passed to includes_any
  Embedding embedding;
};

/// First pattern in list order that embeds, with its least embedding.
std::optional<PatternHit> includes_any(const Clan& host, std::span<const Clan> patterns);

enum class StructuralCondition {
  Laminar,      // pair intervals nest or are disjoint
  UniformSigns, // signs inside one pair all agree
  NestedSigns,  // a sign inside a pair lies inside every pair nested there
};

/// First failed condition, checked in the order Laminar, UniformSigns, NestedSigns.
///   Laminar:      `outer`, `inner` are the two crossing pairs.
///   UniformSigns: `outer` is the pair, `signs` two disagreeing sign positions.
///   NestedSigns:  `outer` encloses `inner` and the sign in `signs`, which
///                 lies outside `inner`.
struct StructuralViolation {
  StructuralCondition condition;
  PairSpan outer;
  std::optional<PairSpan> inner;
  std::vector<std::size_t> signs;
};

std::optional<StructuralViolation> structural_check(const Clan& clan);

/// One node of a smoothness certificate, covering host positions [begin, end).
///
///   ClosedLeaf  - only signs (possibly empty); no children.
///   SignDelete  - `sign_position` holds a sign enclosed by no pair of the
///                 range; children are the parts left and right of it.
///   BlockSplit  - two or more consecutive blocks tiling the range, each
///                 opening and closing with mates.
///   OuterStrip  - first and last positions are mates; one child for the
///                 interior.
struct Certificate {
  enum class Kind { ClosedLeaf, SignDelete, BlockSplit, OuterStrip };

  Kind kind = Kind::ClosedLeaf;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t sign_position = 0;
  std::vector<Certificate> children;

  bool operator==(const Certificate&) const = default;
};

using CertificateOutcome = std::variant<Certificate, StructuralViolation>;

/// Recursive smooth decomposition, available once structural_check passes.
CertificateOutcome build_certificate(const Clan& clan);

/// Checks a certificate against `clan` without trusting how it was built.
/// Besides the node invariants, every OuterStrip node must enclose only one
/// kind of sign, and each such sign must lie inside every pair nested there.
bool verify_certificate(const Clan& clan, const Certificate& cert);

struct NotRationallySmooth {
  std::size_t pattern_index;  // into theorem_patterns()
  Embedding embedding;
};

struct Smooth {
  Certificate certificate;
};

using SmoothnessVerdict = std::variant<NotRationallySmooth, Smooth>;

/// Throws InvariantViolation if the clan avoids every pattern but no valid
/// certificate can be built for it.
SmoothnessVerdict classify(const Clan& clan);

inline bool is_smooth(const SmoothnessVerdict& v) { return std::holds_alternative<Smooth>(v); }

}  // namespace clans
