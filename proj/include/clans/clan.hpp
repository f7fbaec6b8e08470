#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clans {

/// Raised for malformed user input: bad tokens, broken pairing, wrong signature.
class ClanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed object breaks a combinatorial invariant the
/// algorithms rely on, e.g. a move that does not raise the dimension.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One symbol of a clan: a plus sign, a minus sign, or a pair label.
///
/// The encoding orders Plus < Minus < pair labels ascending, which is the
/// token order used for enumeration.
class Entry {
 public:
  static constexpr Entry plus() { return Entry(kPlusCode); }
  static constexpr Entry minus() { return Entry(kMinusCode); }
  static constexpr Entry pair(int id) { return Entry(static_cast<std::int32_t>(id)); }

  constexpr bool is_plus() const { return code_ == kPlusCode; }
  constexpr bool is_minus() const { return code_ == kMinusCode; }
  constexpr bool is_sign() const { return code_ < 0; }
  constexpr bool is_pair() const { return code_ > 0; }
  /// Pair label; only meaningful when is_pair().
  constexpr int id() const { return code_; }

  /// The opposite sign. Only meaningful for signs.
  constexpr Entry flipped() const { return is_plus() ? minus() : plus(); }

  constexpr auto operator<=>(const Entry&) const = default;

 private:
  static constexpr std::int32_t kPlusCode = -2;
  static constexpr std::int32_t kMinusCode = -1;

  constexpr explicit Entry(std::int32_t code) : code_(code) {}

  std::int32_t code_;
};

inline constexpr int kNoMate = -1;

/// A canonical clan with signature (p, q).
///
/// Pair labels are renumbered 1, 2, ... by order of first occurrence, so two
/// clans that differ only in the choice of labels compare equal. Positions are
/// 0-based throughout the library; text and JSON output use 1-based positions.
class Clan {
 public:
  Clan() = default;

  /// Canonicalizes `raw` and checks it against the signature (p, q).
  static Clan from_entries(std::span<const Entry> raw, int p, int q);
  /// Canonicalizes `raw`, inferring the signature from its contents.
  static Clan from_entries(std::span<const Entry> raw);

  std::span<const Entry> entries() const { return entries_; }
  const Entry& operator[](std::size_t pos) const { return entries_[pos]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int p() const { return p_; }
  int q() const { return q_; }

  /// Position of the other endpoint of the pair at `pos`, or kNoMate for signs.
  int mate(std::size_t pos) const { return mates_[pos]; }
  int pair_count() const { return pair_count_; }

  /// Token-lexicographic comparison of entries, then signature.
  std::strong_ordering operator<=>(const Clan& other) const;
  bool operator==(const Clan& other) const;

 private:
  std::vector<Entry> entries_;
  std::vector<int> mates_;
  int p_ = 0;
  int q_ = 0;
  int pair_count_ = 0;
};

/// Position interval of one pair: left < right.
struct PairSpan {
  std::size_t left;
  std::size_t right;

  bool operator==(const PairSpan&) const = default;
};

/// Pairs indexed by canonical label minus one (so ordered by left endpoint).
std::vector<PairSpan> pair_map(const Clan& clan);

/// Relabels pairs by first occurrence; signature inferred.
Clan canonicalize(std::span<const Entry> raw);

/// Accepts "1,+,1,-" (optionally wrapped in parentheses) and, when every
/// label is a single digit, the compact form "1+1-".
Clan parse_clan(std::string_view text, int p, int q);
Clan parse_clan(std::string_view text);

std::string format_clan(const Clan& clan);

/// All canonical clans of signature (p, q) in token-lexicographic order.
std::vector<Clan> enumerate_clans(int p, int q);

/// Closed-form clan count: sum over k of C(n,2k) (2k-1)!! C(n-2k, p-k).
std::uint64_t count_clans(int p, int q);

std::uint64_t binomial(int n, int k);

/// Common dimension of the closed orbits, (p(p-1) + q(q-1)) / 2.
int base_dimension(int p, int q);

/// Dimension of the orbit of `clan`: base_dimension plus, for every pair
/// (i, j), the span j - i less the number of pairs (s, t) with s < i < t < j.
int dimension(const Clan& clan);

/// Dimension of the whole flag variety, n(n-1)/2.
int full_dimension(int p, int q);

/// Prefix counts read off the first i entries, i = 1..n. `plus[i-1]` counts
/// plus signs and completed pairs; `minus[i-1]` counts minus signs and
/// completed pairs.
struct SignaturePrefix {
  std::vector<int> plus;
  std::vector<int> minus;

  bool operator==(const SignaturePrefix&) const = default;
};

SignaturePrefix prefix_signature(const Clan& clan);

bool is_closed(const Clan& clan);

/// (1,2,...,q,+,...,+,q,...,1) for p >= q; the mirror with minus signs for p < q.
Clan open_clan(int p, int q);

}  // namespace clans
