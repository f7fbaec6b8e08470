#include "clans/poset.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "clans/parallel.hpp"

namespace clans {

namespace {

const char* kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::PairCreation:
      return "pair creation";
    case MoveKind::EndpointSlide:
      return "endpoint slide";
    case MoveKind::PairExchange:
      return "pair exchange";
  }
  return "?";
}

Clan swapped(const Clan& clan, std::size_t a, std::size_t b) {
  std::vector<Entry> raw(clan.entries().begin(), clan.entries().end());
  std::swap(raw[a], raw[b]);
  return Clan::from_entries(raw, clan.p(), clan.q());
}

Clan with_new_pair(const Clan& clan, std::size_t a, std::size_t b) {
  std::vector<Entry> raw(clan.entries().begin(), clan.entries().end());
  const int fresh = clan.pair_count() + 1;
  raw[a] = Entry::pair(fresh);
  raw[b] = Entry::pair(fresh);
  return Clan::from_entries(raw, clan.p(), clan.q());
}

}  // namespace

std::vector<Move> moves(const Clan& clan) {
  std::vector<Move> out;
  const std::size_t n = clan.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Entry x = clan[u];
      const Entry y = clan[v];
      if (x.is_sign() && y.is_sign()) {
        if (x != y) out.push_back({MoveKind::PairCreation, u, v, with_new_pair(clan, u, v)});
      } else if (x.is_sign() != y.is_sign()) {
        // The pair endpoint moves to the sign's slot; it must end up farther
        // from its mate without crossing it.
        const std::size_t from = x.is_pair() ? u : v;
        const std::size_t to = x.is_pair() ? v : u;
        const auto m = static_cast<std::size_t>(clan.mate(from));
        const bool same_side = (from < m) == (to < m);
        const auto dist = [m](std::size_t pos) { return pos > m ? pos - m : m - pos; };
        if (same_side && dist(to) > dist(from))
          out.push_back({MoveKind::EndpointSlide, u, v, swapped(clan, u, v)});
      } else if (x != y && clan.mate(u) < clan.mate(v)) {
        out.push_back({MoveKind::PairExchange, u, v, swapped(clan, u, v)});
      }
    }
  }
  const int dim = dimension(clan);
  for (const Move& mv : out) {
    if (dimension(mv.result) <= dim) {
      throw InvariantViolation(std::string(kind_name(mv.kind)) + " at positions " +
                               std::to_string(mv.first + 1) + "," + std::to_string(mv.second + 1) +
                               " takes " + format_clan(clan) + " to " + format_clan(mv.result) +
                               " without raising the dimension");
    }
  }
  return out;
}

std::vector<Clan> successors(const Clan& clan) {
  std::vector<Clan> out;
  for (Move& mv : moves(clan)) out.push_back(std::move(mv.result));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitPoset OrbitPoset::build(int p, int q, const PosetOptions& options) {
  if (p < 0 || q < 0) throw ClanError("signature must be nonnegative");
  if (p + q > options.max_n) {
    throw ClanError("p + q = " + std::to_string(p + q) + " exceeds the poset size bound " +
                    std::to_string(options.max_n));
  }
  OrbitPoset poset;
  poset.p_ = p;
  poset.q_ = q;
  poset.elements_ = enumerate_clans(p, q);
  const std::size_t count = poset.elements_.size();
  poset.dims_.resize(count);
  poset.succ_.resize(count);

  parallel_for(count, options.jobs, [&](std::size_t i) {
    poset.dims_[i] = clans::dimension(poset.elements_[i]);
    auto& targets = poset.succ_[i];
    for (const Clan& s : successors(poset.elements_[i])) targets.push_back(poset.index_of(s));
    std::sort(targets.begin(), targets.end());
  });

  // Moves raise the dimension, so a pass from the top dimension down sees
  // every successor's up-set complete before it is needed.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return poset.dims_[a] > poset.dims_[b]; });
  poset.up_.assign(count, boost::dynamic_bitset<>(count));
  for (std::size_t i : order) {
    auto& row = poset.up_[i];
    row.set(i);
    for (std::size_t s : poset.succ_[i]) row |= poset.up_[s];
  }

  // Cover edges are exactly the successor edges not implied through another successor.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t s : poset.succ_[i]) {
      bool via_other = false;
      for (std::size_t t : poset.succ_[i]) {
        if (t != s && poset.up_[t].test(s)) {
          via_other = true;
          break;
        }
      }
      if (!via_other) poset.covers_.push_back({i, s});
    }
  }
  return poset;
}

std::optional<std::size_t> OrbitPoset::find(const Clan& clan) const {
  if (clan.p() != p_ || clan.q() != q_) return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), clan);
  if (it == elements_.end() || *it != clan) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t OrbitPoset::index_of(const Clan& clan) const {
  if (auto idx = find(clan)) return *idx;
  throw ClanError("clan " + format_clan(clan) + " is not in the poset for (" + std::to_string(p_) +
                  "," + std::to_string(q_) + ")");
}

std::vector<std::size_t> OrbitPoset::lower_set(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (up_[x].test(c)) out.push_back(x);
  }
  return out;
}

std::vector<Clan> OrbitPoset::lower_set(const Clan& c) const {
  std::vector<Clan> out;
  for (std::size_t x : lower_set(index_of(c))) out.push_back(elements_[x]);
  return out;
}

std::vector<std::size_t> OrbitPoset::closed_below(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (is_closed(elements_[x]) && up_[x].test(c)) out.push_back(x);
  }
  return out;
}

std::vector<Clan> OrbitPoset::closed_below(const Clan& c) const {
  std::vector<Clan> out;
  for (std::size_t x : closed_below(index_of(c))) out.push_back(elements_[x]);
  return out;
}

std::vector<std::size_t> OrbitPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (succ_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> OrbitPoset::minimal_elements() const {
  std::vector<bool> has_lower(size(), false);
  for (const auto& targets : succ_) {
    for (std::size_t s : targets) has_lower[s] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!has_lower[i]) out.push_back(i);
  }
  return out;
}

std::vector<CoverEdge> hasse_covers(const OrbitPoset& poset) { return poset.covers(); }

void export_dot(const OrbitPoset& poset, std::ostream& out) {
  out << "digraph clans_p" << poset.p() << "_q" << poset.q() << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"(" << format_clan(poset.element(i)) << ")\\ndim "
        << poset.dimension(i) << "\"];\n";
  }
  for (const auto& [low, high] : poset.covers()) out << "  n" << low << " -> n" << high << ";\n";
  out << "}\n";
}

void export_tsv(const OrbitPoset& poset, std::ostream& out) {
  out << "clan\tdim\tclosed\tcovers\n";
  std::vector<std::vector<std::size_t>> targets(poset.size());
  for (const auto& [low, high] : poset.covers()) targets[low].push_back(high);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << format_clan(poset.element(i)) << '\t' << poset.dimension(i) << '\t'
        << (is_closed(poset.element(i)) ? "yes" : "no") << '\t';
    for (std::size_t k = 0; k < targets[i].size(); ++k) {
      if (k > 0) out << ';';
      out << format_clan(poset.element(targets[i][k]));
    }
    out << '\n';
  }
}

}  // namespace clans
