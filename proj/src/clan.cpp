#include "clans/clan.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

namespace clans {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

Entry parse_token(std::string_view token) {
  token = trim(token);
  if (token == "+") return Entry::plus();
  if (token == "-") return Entry::minus();
  if (token.empty()) throw ClanError("empty token in clan text");
  int id = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec != std::errc() || end != token.data() + token.size() || id < 1)
    throw ClanError("invalid clan token '" + std::string(token) + "'");
  return Entry::pair(id);
}

}  // namespace

Clan Clan::from_entries(std::span<const Entry> raw) {
  std::map<int, int> relabel;
  std::map<int, int> occurrences;
  Clan clan;
  clan.entries_.reserve(raw.size());
  clan.mates_.assign(raw.size(), kNoMate);
  std::vector<int> open_at;  // indexed by canonical label - 1
  int plus = 0;
  int minus = 0;
  for (std::size_t pos = 0; pos < raw.size(); ++pos) {
    const Entry e = raw[pos];
    if (e.is_plus()) {
      ++plus;
      clan.entries_.push_back(e);
      continue;
    }
    if (e.is_minus()) {
      ++minus;
      clan.entries_.push_back(e);
      continue;
    }
    const int count = ++occurrences[e.id()];
    if (count > 2)
      throw ClanError("label " + std::to_string(e.id()) + " occurs more than twice");
    auto [it, fresh] = relabel.try_emplace(e.id(), static_cast<int>(relabel.size()) + 1);
    if (fresh) {
      open_at.push_back(static_cast<int>(pos));
    } else {
      const int left = open_at[it->second - 1];
      clan.mates_[left] = static_cast<int>(pos);
      clan.mates_[pos] = left;
    }
    clan.entries_.push_back(Entry::pair(it->second));
  }
  for (const auto& [label, count] : occurrences) {
    if (count != 2) throw ClanError("label " + std::to_string(label) + " occurs only once");
  }
  clan.pair_count_ = static_cast<int>(relabel.size());
  clan.p_ = plus + clan.pair_count_;
  clan.q_ = minus + clan.pair_count_;
  return clan;
}

Clan Clan::from_entries(std::span<const Entry> raw, int p, int q) {
  if (p < 0 || q < 0) throw ClanError("signature must be nonnegative");
  Clan clan = from_entries(raw);
  if (clan.p_ != p || clan.q_ != q) {
    throw ClanError("clan has signature (" + std::to_string(clan.p_) + "," +
                    std::to_string(clan.q_) + "), expected (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
  }
  return clan;
}

std::strong_ordering Clan::operator<=>(const Clan& other) const {
  if (auto c = std::lexicographical_compare_three_way(entries_.begin(), entries_.end(),
                                                      other.entries_.begin(), other.entries_.end());
      c != 0)
    return c;
  if (auto c = p_ <=> other.p_; c != 0) return c;
  return q_ <=> other.q_;
}

bool Clan::operator==(const Clan& other) const {
  return p_ == other.p_ && q_ == other.q_ && entries_ == other.entries_;
}

std::vector<PairSpan> pair_map(const Clan& clan) {
  std::vector<PairSpan> spans(static_cast<std::size_t>(clan.pair_count()));
  for (std::size_t pos = 0; pos < clan.size(); ++pos) {
    const int m = clan.mate(pos);
    if (m > static_cast<int>(pos))
      spans[static_cast<std::size_t>(clan[pos].id() - 1)] = {pos, static_cast<std::size_t>(m)};
  }
  return spans;
}

Clan canonicalize(std::span<const Entry> raw) { return Clan::from_entries(raw); }

Clan parse_clan(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = trim(text.substr(1, text.size() - 2));
  std::vector<Entry> raw;
  if (text.empty()) return Clan::from_entries(raw);
  if (text.find(',') == std::string_view::npos && text.size() > 1) {
    for (char c : text) raw.push_back(parse_token(std::string_view(&c, 1)));
  } else {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      raw.push_back(parse_token(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Clan::from_entries(raw);
}

Clan parse_clan(std::string_view text, int p, int q) {
  const Clan clan = parse_clan(text);
  return Clan::from_entries(clan.entries(), p, q);
}

std::string format_clan(const Clan& clan) {
  std::string out;
  for (std::size_t pos = 0; pos < clan.size(); ++pos) {
    if (pos > 0) out += ',';
    const Entry e = clan[pos];
    if (e.is_plus())
      out += '+';
    else if (e.is_minus())
      out += '-';
    else
      out += std::to_string(e.id());
  }
  return out;
}

namespace {

struct Enumerator {
  int p;
  int q;
  std::vector<Entry> current;
  std::vector<int> open_ids;  // ascending
  int plus = 0;
  int minus = 0;
  int opened = 0;
  std::vector<Clan> out;

  void run(std::size_t n) {
    if (current.size() == n) {
      out.push_back(Clan::from_entries(current, p, q));
      return;
    }
    // Every partial prefix obeying these two bounds completes.
    if (plus + opened < p) {
      ++plus;
      current.push_back(Entry::plus());
      run(n);
      current.pop_back();
      --plus;
    }
    if (minus + opened < q) {
      ++minus;
      current.push_back(Entry::minus());
      run(n);
      current.pop_back();
      --minus;
    }
    for (std::size_t k = 0; k < open_ids.size(); ++k) {
      const int id = open_ids[k];
      open_ids.erase(open_ids.begin() + static_cast<std::ptrdiff_t>(k));
      current.push_back(Entry::pair(id));
      run(n);
      current.pop_back();
      open_ids.insert(open_ids.begin() + static_cast<std::ptrdiff_t>(k), id);
    }
    if (plus + opened < p && minus + opened < q) {
      ++opened;
      open_ids.push_back(opened);
      current.push_back(Entry::pair(opened));
      run(n);
      current.pop_back();
      open_ids.pop_back();
      --opened;
    }
  }
};

}  // namespace

std::vector<Clan> enumerate_clans(int p, int q) {
  if (p < 0 || q < 0) throw ClanError("signature must be nonnegative");
  Enumerator e{p, q, {}, {}, 0, 0, 0, {}};
  e.run(static_cast<std::size_t>(p + q));
  return std::move(e.out);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t count_clans(int p, int q) {
  if (p < 0 || q < 0) throw ClanError("signature must be nonnegative");
  const int n = p + q;
  std::uint64_t total = 0;
  std::uint64_t double_factorial = 1;  // (2k-1)!!
  for (int k = 0; k <= std::min(p, q); ++k) {
    if (k > 0) double_factorial *= static_cast<std::uint64_t>(2 * k - 1);
    total += binomial(n, 2 * k) * double_factorial * binomial(n - 2 * k, p - k);
  }
  return total;
}

int base_dimension(int p, int q) { return (p * (p - 1) + q * (q - 1)) / 2; }

int full_dimension(int p, int q) {
  const int n = p + q;
  return n * (n - 1) / 2;
}

int dimension(const Clan& clan) {
  const auto spans = pair_map(clan);
  int dim = base_dimension(clan.p(), clan.q());
  for (const auto& [i, j] : spans) {
    int crossing = 0;
    for (const auto& [s, t] : spans) {
      if (s < i && i < t && t < j) ++crossing;
    }
    dim += static_cast<int>(j - i) - crossing;
  }
  return dim;
}

SignaturePrefix prefix_signature(const Clan& clan) {
  SignaturePrefix sig;
  sig.plus.reserve(clan.size());
  sig.minus.reserve(clan.size());
  int a = 0;
  int b = 0;
  for (std::size_t pos = 0; pos < clan.size(); ++pos) {
    const Entry e = clan[pos];
    if (e.is_plus()) {
      ++a;
    } else if (e.is_minus()) {
      ++b;
    } else if (clan.mate(pos) < static_cast<int>(pos)) {
      ++a;
      ++b;
    }
    sig.plus.push_back(a);
    sig.minus.push_back(b);
  }
  return sig;
}

bool is_closed(const Clan& clan) { return clan.pair_count() == 0; }

Clan open_clan(int p, int q) {
  if (p < 0 || q < 0) throw ClanError("signature must be nonnegative");
  if (p == 0 && q == 0) throw ClanError("open orbit requires p + q > 0");
  const int pairs = std::min(p, q);
  const Entry sign = p >= q ? Entry::plus() : Entry::minus();
  std::vector<Entry> raw;
  for (int k = 1; k <= pairs; ++k) raw.push_back(Entry::pair(k));
  for (int k = 0; k < std::abs(p - q); ++k) raw.push_back(sign);
  for (int k = pairs; k >= 1; --k) raw.push_back(Entry::pair(k));
  return Clan::from_entries(raw, p, q);
}

}  // namespace clans
