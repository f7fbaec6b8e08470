#include "clans/patterns.hpp"

namespace clans {

const std::array<Clan, 7>& theorem_patterns() {
  static const std::array<Clan, 7> patterns = {
      parse_clan("1,+,-,1"),   parse_clan("1,-,+,1"),   parse_clan("1,2,1,2"),
      parse_clan("1,+,2,2,1"), parse_clan("1,-,2,2,1"), parse_clan("1,2,2,+,1"),
      parse_clan("1,2,2,-,1"),
  };
  return patterns;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Clan& host, const Clan& pattern)
      : host_(host), pattern_(pattern), chosen_(pattern.size(), kUnset) {}

  std::optional<Embedding> run() {
    if (pattern_.size() > host_.size()) return std::nullopt;
    if (!extend(0, 0)) return std::nullopt;
    return chosen_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Chooses a host position for pattern index k, at or after `from`.
  bool extend(std::size_t k, std::size_t from) {
    const std::size_t m = pattern_.size();
    if (k == m) return true;
    const Entry want = pattern_[k];
    const int pattern_mate = pattern_.mate(k);

    // Right endpoint: fixed when its left endpoint was placed.
    if (want.is_pair() && pattern_mate < static_cast<int>(k)) {
      if (chosen_[k] < from) return false;
      return extend(k + 1, chosen_[k] + 1);
    }

    const std::size_t last = host_.size() - (m - k);
    for (std::size_t pos = from; pos <= last; ++pos) {
      const Entry have = host_[pos];
      if (want.is_sign()) {
        if (have != want) continue;
        chosen_[k] = pos;
        if (extend(k + 1, pos + 1)) return true;
      } else {
        const int host_mate = host_.mate(pos);
        if (!have.is_pair() || host_mate < static_cast<int>(pos)) continue;
        const auto slot = static_cast<std::size_t>(pattern_mate);
        chosen_[k] = pos;
        chosen_[slot] = static_cast<std::size_t>(host_mate);
        if (extend(k + 1, pos + 1)) return true;
        chosen_[slot] = kUnset;
      }
    }
    chosen_[k] = kUnset;
    return false;
  }

  const Clan& host_;
  const Clan& pattern_;
  Embedding chosen_;
};

bool strictly_inside(std::size_t pos, const PairSpan& span) {
  return span.left < pos && pos < span.right;
}

bool nested_in(const PairSpan& inner, const PairSpan& outer) {
  return outer.left < inner.left && inner.right < outer.right;
}

}  // namespace

std::optional<Embedding> find_embedding(const Clan& host, const Clan& pattern) {
  return EmbeddingSearch(host, pattern).run();
}

std::optional<PatternHit> includes_any(const Clan& host, std::span<const Clan> patterns) {
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (auto e = find_embedding(host, patterns[k])) return PatternHit{k, std::move(*e)};
  }
  return std::nullopt;
}

std::optional<StructuralViolation> structural_check(const Clan& clan) {
  const auto spans = pair_map(clan);

  for (std::size_t a = 0; a < spans.size(); ++a) {
    for (std::size_t b = a + 1; b < spans.size(); ++b) {
      // spans are ordered by left endpoint
      if (spans[b].left < spans[a].right && spans[a].right < spans[b].right)
        return StructuralViolation{StructuralCondition::Laminar, spans[a], spans[b], {}};
    }
  }

  for (const PairSpan& span : spans) {
    std::optional<std::size_t> first_sign;
    for (std::size_t pos = span.left + 1; pos < span.right; ++pos) {
      if (!clan[pos].is_sign()) continue;
      if (!first_sign) {
        first_sign = pos;
      } else if (clan[pos] != clan[*first_sign]) {
        return StructuralViolation{StructuralCondition::UniformSigns, span, std::nullopt,
                                   {*first_sign, pos}};
      }
    }
  }

  for (const PairSpan& outer : spans) {
    for (const PairSpan& inner : spans) {
      if (!nested_in(inner, outer)) continue;
      for (std::size_t pos = outer.left + 1; pos < outer.right; ++pos) {
        if (clan[pos].is_sign() && !strictly_inside(pos, inner))
          return StructuralViolation{StructuralCondition::NestedSigns, outer, inner, {pos}};
      }
    }
  }
  return std::nullopt;
}

namespace {

Certificate build_node(const Clan& clan, std::size_t begin, std::size_t end) {
  Certificate node;
  node.begin = begin;
  node.end = end;

  bool all_signs = true;
  std::optional<std::size_t> free_sign;
  int depth = 0;
  for (std::size_t pos = begin; pos < end; ++pos) {
    if (clan[pos].is_sign()) {
      if (depth == 0 && !free_sign) free_sign = pos;
      continue;
    }
    all_signs = false;
    depth += clan.mate(pos) > static_cast<int>(pos) ? 1 : -1;
  }
  if (all_signs) return node;

  if (free_sign) {
    node.kind = Certificate::Kind::SignDelete;
    node.sign_position = *free_sign;
    node.children.push_back(build_node(clan, begin, *free_sign));
    node.children.push_back(build_node(clan, *free_sign + 1, end));
    return node;
  }

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t pos = begin; pos < end;) {
    const int m = clan.mate(pos);
    if (m <= static_cast<int>(pos) || static_cast<std::size_t>(m) >= end)
      throw InvariantViolation("range of " + format_clan(clan) + " is not a union of pair blocks");
    blocks.emplace_back(pos, static_cast<std::size_t>(m) + 1);
    pos = static_cast<std::size_t>(m) + 1;
  }
  if (blocks.size() >= 2) {
    node.kind = Certificate::Kind::BlockSplit;
    for (const auto& [b, e] : blocks) node.children.push_back(build_node(clan, b, e));
    return node;
  }
  node.kind = Certificate::Kind::OuterStrip;
  node.children.push_back(build_node(clan, begin + 1, end - 1));
  return node;
}

bool pair_closed(const Clan& clan, std::size_t begin, std::size_t end) {
  for (std::size_t pos = begin; pos < end; ++pos) {
    const int m = clan.mate(pos);
    if (m != kNoMate && (static_cast<std::size_t>(m) < begin || static_cast<std::size_t>(m) >= end))
      return false;
  }
  return true;
}

bool verify_node(const Clan& clan, const Certificate& node, std::size_t begin, std::size_t end) {
  if (node.begin != begin || node.end != end || begin > end || end > clan.size()) return false;
  if (!pair_closed(clan, begin, end)) return false;

  switch (node.kind) {
    case Certificate::Kind::ClosedLeaf: {
      if (!node.children.empty()) return false;
      for (std::size_t pos = begin; pos < end; ++pos) {
        if (!clan[pos].is_sign()) return false;
      }
      return true;
    }
    case Certificate::Kind::SignDelete: {
      const std::size_t s = node.sign_position;
      if (node.children.size() != 2 || s < begin || s >= end || !clan[s].is_sign()) return false;
      for (std::size_t pos = begin; pos < s; ++pos) {
        if (clan.mate(pos) > static_cast<int>(s)) return false;
      }
      return verify_node(clan, node.children[0], begin, s) &&
             verify_node(clan, node.children[1], s + 1, end);
    }
    case Certificate::Kind::BlockSplit: {
      if (node.children.size() < 2) return false;
      std::size_t cursor = begin;
      for (const Certificate& child : node.children) {
        if (child.begin != cursor || child.end <= child.begin) return false;
        if (clan.mate(child.begin) != static_cast<int>(child.end - 1)) return false;
        if (!verify_node(clan, child, child.begin, child.end)) return false;
        cursor = child.end;
      }
      return cursor == end;
    }
    case Certificate::Kind::OuterStrip: {
      if (node.children.size() != 1 || end - begin < 2) return false;
      if (clan.mate(begin) != static_cast<int>(end - 1)) return false;
      std::optional<Entry> sign;
      for (std::size_t pos = begin + 1; pos + 1 < end; ++pos) {
        if (!clan[pos].is_sign()) continue;
        if (sign && *sign != clan[pos]) return false;
        sign = clan[pos];
        for (std::size_t inner = begin + 1; inner + 1 < end; ++inner) {
          const int m = clan.mate(inner);
          if (m > static_cast<int>(inner) && !(inner < pos && pos < static_cast<std::size_t>(m)))
            return false;
        }
      }
      return verify_node(clan, node.children[0], begin + 1, end - 1);
    }
  }
  return false;
}

}  // namespace

CertificateOutcome build_certificate(const Clan& clan) {
  if (auto violation = structural_check(clan)) return *violation;
  return build_node(clan, 0, clan.size());
}

bool verify_certificate(const Clan& clan, const Certificate& cert) {
  return verify_node(clan, cert, 0, clan.size());
}

SmoothnessVerdict classify(const Clan& clan) {
  if (auto hit = includes_any(clan, theorem_patterns()))
    return NotRationallySmooth{hit->pattern_index, std::move(hit->embedding)};
  auto outcome = build_certificate(clan);
  if (auto* cert = std::get_if<Certificate>(&outcome); cert && verify_certificate(clan, *cert))
    return Smooth{std::move(*cert)};
  throw InvariantViolation("clan " + format_clan(clan) +
                           " avoids every forbidden pattern but admits no smoothness certificate");
}

}  // namespace clans
