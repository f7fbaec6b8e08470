#include "doctest.h"

#include <random>

#include "clans/patterns.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace clans;
using testing_helpers::C;
using testing_helpers::zero_based;

namespace {

std::vector<Clan> all_clans_up_to(int max_n) {
  std::vector<Clan> out;
  for (int n = 0; n <= max_n; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (Clan& c : enumerate_clans(p, n - p)) out.push_back(std::move(c));
    }
  }
  return out;
}

Clan restrict_to(const Clan& host, const Embedding& e) {
  std::vector<Entry> raw;
  for (std::size_t pos : e) raw.push_back(host[pos]);
  return canonicalize(raw);
}

Certificate leaf(std::size_t b, std::size_t e) { return {Certificate::Kind::ClosedLeaf, b, e, 0, {}}; }

Certificate strip(std::size_t b, std::size_t e, Certificate child) {
  return {Certificate::Kind::OuterStrip, b, e, 0, {std::move(child)}};
}

}  // namespace

TEST_CASE("theorem patterns") {
  const auto& pats = theorem_patterns();
  CHECK(format_clan(pats[0]) == "1,+,-,1");
  CHECK(format_clan(pats[1]) == "1,-,+,1");
  CHECK(format_clan(pats[2]) == "1,2,1,2");
  CHECK(format_clan(pats[3]) == "1,+,2,2,1");
  CHECK(format_clan(pats[4]) == "1,-,2,2,1");
  CHECK(format_clan(pats[5]) == "1,2,2,+,1");
  CHECK(format_clan(pats[6]) == "1,2,2,-,1");
}

TEST_CASE("find_embedding examples") {
  CHECK(find_embedding(C("1,+,-,1"), C("1,+,-,1")) == Embedding{0, 1, 2, 3});
  CHECK_FALSE(find_embedding(C("1,+,1,-"), C("1,+,-,1")).has_value());
  CHECK(find_embedding(C("1,2,+,-,2,1"), C("1,+,-,1")) == zero_based({1, 3, 4, 6}));
  // a sign may not stand in for a pair endpoint, nor one endpoint for a pair
  CHECK_FALSE(find_embedding(C("1,1"), C("+,-")).has_value());
  CHECK_FALSE(find_embedding(C("1,+,1"), C("+,1,1")).has_value());
  CHECK(find_embedding(C("+,1,-,1"), C("+,1,1")) == Embedding{0, 1, 3});
  CHECK(find_embedding(C("+,1,-,1"), C("+,-")) == Embedding{0, 2});
}

TEST_CASE("find_embedding matches subset-scan oracle") {
  const auto hosts = all_clans_up_to(6);
  auto patterns = all_clans_up_to(4);
  for (const Clan& t : theorem_patterns()) patterns.push_back(t);
  for (const Clan& host : hosts) {
    const auto host_tokens = oracle::tokens(format_clan(host));
    for (const Clan& pat : patterns) {
      const auto got = find_embedding(host, pat);
      const auto want = oracle::least_embedding(host_tokens, oracle::tokens(format_clan(pat)));
      REQUIRE(got.has_value() == want.found);
      if (got) {
        CHECK(*got == want.positions);
        CHECK(restrict_to(host, *got) == pat);
      }
    }
  }
}

TEST_CASE("inclusion is reflexive and transitive") {
  const auto all = all_clans_up_to(6);
  for (const Clan& c : all) {
    Embedding identity(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) identity[i] = i;
    CHECK(find_embedding(c, c) == identity);
  }

  // chains c >= b >= a built by deleting random mate-closed subsets
  const auto shrink = [](const Clan& host, std::mt19937& g) {
    std::bernoulli_distribution keep(0.7);
    std::vector<char> kept(host.size(), 0);
    for (std::size_t i = 0; i < host.size(); ++i) {
      const auto m = host.mate(i);
      if (m != kNoMate && static_cast<std::size_t>(m) < i) kept[i] = kept[m];
      else kept[i] = keep(g);
    }
    std::vector<Entry> raw;
    for (std::size_t i = 0; i < host.size(); ++i) {
      if (kept[i]) raw.push_back(host[i]);
    }
    return canonicalize(raw);
  };
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 5000; ++trial) {
    const Clan& c = all[pick(rng)];
    const Clan b = shrink(c, rng);
    const Clan a = shrink(b, rng);
    REQUIRE(find_embedding(c, b).has_value());
    REQUIRE(find_embedding(b, a).has_value());
    CHECK(find_embedding(c, a).has_value());
  }
}

TEST_CASE("includes_any reports the first theorem pattern") {
  const auto hit = includes_any(C("1,2,1,2"), theorem_patterns());
  REQUIRE(hit.has_value());
  CHECK(hit->pattern_index == 2);
  CHECK(hit->embedding == Embedding{0, 1, 2, 3});
  CHECK_FALSE(includes_any(C("+,-,+,-"), theorem_patterns()).has_value());
  const auto hit2 = includes_any(C("1,-,2,2,1"), theorem_patterns());
  REQUIRE(hit2.has_value());
  CHECK(hit2->pattern_index == 4);
}

TEST_CASE("structural_check") {
  const auto s1 = structural_check(C("1,2,1,2"));
  REQUIRE(s1.has_value());
  CHECK(s1->condition == StructuralCondition::Laminar);
  CHECK(s1->outer == PairSpan{0, 2});
  CHECK(s1->inner == PairSpan{1, 3});

  const auto s2 = structural_check(C("1,+,-,1"));
  REQUIRE(s2.has_value());
  CHECK(s2->condition == StructuralCondition::UniformSigns);
  CHECK(s2->outer == PairSpan{0, 3});
  CHECK(s2->signs == std::vector<std::size_t>{1, 2});

  const auto s3 = structural_check(C("1,2,2,+,1"));
  REQUIRE(s3.has_value());
  CHECK(s3->condition == StructuralCondition::NestedSigns);
  CHECK(s3->outer == PairSpan{0, 4});
  CHECK(s3->inner == PairSpan{1, 2});
  CHECK(s3->signs == std::vector<std::size_t>{3});

  CHECK_FALSE(structural_check(C("1,2,2,3,3,1")).has_value());
}

TEST_CASE("build_certificate shapes") {
  CHECK(std::get<Certificate>(build_certificate(C("+,-"))) == leaf(0, 2));
  CHECK(std::get<Certificate>(build_certificate(C("1,+,1"))) == strip(0, 3, leaf(1, 2)));
  CHECK(std::get<Certificate>(build_certificate(C("1,1,2,2"))) ==
        Certificate{Certificate::Kind::BlockSplit, 0, 4, 0, {strip(0, 2, leaf(1, 1)), strip(2, 4, leaf(3, 3))}});
  CHECK(std::get<Certificate>(build_certificate(C("1,1,-,+"))) ==
        Certificate{Certificate::Kind::SignDelete, 0, 4, 2, {strip(0, 2, leaf(1, 1)), leaf(3, 4)}});
  CHECK(std::get<Certificate>(build_certificate(Clan{})) == leaf(0, 0));

  const auto failed = build_certificate(C("1,+,-,1"));
  REQUIRE(std::holds_alternative<StructuralViolation>(failed));
  CHECK(std::get<StructuralViolation>(failed).condition == StructuralCondition::UniformSigns);
}

TEST_CASE("verify_certificate rejects malformed trees") {
  const Clan blocks = C("1,1,2,2");
  const Certificate lone{Certificate::Kind::BlockSplit, 0, 4, 0, {strip(0, 4, leaf(1, 3))}};
  CHECK_FALSE(verify_certificate(blocks, lone));
  CHECK_FALSE(verify_certificate(C("1,+,1,-"), strip(0, 4, leaf(1, 3))));
  // the bare decomposition of (1,+,-,1) looks fine but the strip encloses mixed signs
  CHECK_FALSE(verify_certificate(C("1,+,-,1"), strip(0, 4, leaf(1, 3))));
  // wrong range
  CHECK_FALSE(verify_certificate(C("+,-"), leaf(0, 1)));
  // a leaf holding a pair
  CHECK_FALSE(verify_certificate(C("1,1"), leaf(0, 2)));
  // SignDelete on a sign enclosed by a pair
  CHECK_FALSE(verify_certificate(
      C("1,+,1"), Certificate{Certificate::Kind::SignDelete, 0, 3, 1, {leaf(0, 1), leaf(2, 3)}}));
  CHECK(verify_certificate(C("1,+,1"), strip(0, 3, leaf(1, 2))));
}

TEST_CASE("classify") {
  const auto v1 = classify(C("1,+,-,1"));
  REQUIRE(std::holds_alternative<NotRationallySmooth>(v1));
  CHECK(std::get<NotRationallySmooth>(v1).pattern_index == 0);
  CHECK(is_smooth(classify(C("+,-,+,-"))));
  CHECK(std::get<Smooth>(classify(C("+,-,+,-"))).certificate == leaf(0, 4));
  CHECK(is_smooth(classify(C("1,2,2,1"))));
  const auto v2 = classify(C("1,+,2,2,1"));
  REQUIRE(std::holds_alternative<NotRationallySmooth>(v2));
  CHECK(std::get<NotRationallySmooth>(v2).pattern_index == 3);
}

TEST_CASE("pattern avoidance, structural conditions and certificates agree, n <= 6") {
  for (const Clan& c : all_clans_up_to(6)) {
    CAPTURE(format_clan(c));
    const bool avoids = !includes_any(c, theorem_patterns()).has_value();
    const bool structural = !structural_check(c).has_value();
    const auto outcome = build_certificate(c);
    const auto* cert = std::get_if<Certificate>(&outcome);
    CHECK(avoids == structural);
    CHECK(avoids == (cert != nullptr));
    if (cert) CHECK(verify_certificate(c, *cert));
    if (c.size() <= 3) CHECK(is_smooth(classify(c)));
  }
}
