#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "linkcat/compose.hpp"
#include "linkcat/error.hpp"
#include "linkcat/families.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace linkcat;
using linkcat::testing::load_fixture;
using linkcat::testing::Rng;

namespace {

const FamilyTag kPartFlat{Family::Part, true};
const FamilyTag kBrauFlat{Family::Brau, true};
const FamilyTag kTLiebFlat{Family::TLieb, true};

Linking cups(std::vector<Link> links, std::size_t nx, std::size_t ny) {
  return Linking(VertexSet(nx), VertexSet(ny), std::move(links));
}

}  // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("family names") {
  CHECK(parse_family("tlieb-flat") == kTLiebFlat);
  CHECK(parse_family("brau") == FamilyTag{Family::Brau, false});
  CHECK(to_string(parse_family("natplus")) == "natplus");
  CHECK(to_string(kPartFlat) == "part-flat");
  CHECK_THROWS_AS(parse_family("brauer"), InvalidArgument);
  CHECK_THROWS_AS(parse_family("-flat"), InvalidArgument);
}

TEST_CASE("totality") {
  CHECK(is_total_linking(identity_linking(VertexSet(4))));
  CHECK_FALSE(is_total_linking(load_fixture("chain_S.json")));
  CHECK(is_total_linking(Linking()));
  CHECK(is_total_linking(load_fixture("brauer_R.json")));
}

TEST_CASE("binary") {
  CHECK(is_binary(load_fixture("brauer_R.json")));
  CHECK(is_binary(load_fixture("brauer_S.json")));
  CHECK_FALSE(is_binary(cups({{{0}, {}}}, 1, 0)));
  CHECK(is_binary(Linking(VertexSet(0), VertexSet(0), {}, 4)));
}

TEST_CASE("planarity") {
  CHECK(is_planar(identity_linking(VertexSet(5))));
  CHECK_FALSE(is_planar(cups({{{0}, {1}}, {{1}, {0}}}, 2, 2)));
  CHECK(is_planar(cups({{{}, {0, 3}}, {{}, {1, 2}}}, 0, 4)));
  CHECK_FALSE(is_planar(cups({{{}, {0, 2}}, {{}, {1, 3}}}, 0, 4)));
  // A cap on top over a through-line is fine; one straddling it is not.
  CHECK(is_planar(cups({{{0, 1}, {}}, {{2}, {0}}}, 3, 1)));
  CHECK_FALSE(is_planar(cups({{{0, 2}, {}}, {{1}, {0}}}, 3, 1)));
  // Non-binary blocks: {0,2} against {1,3} interleave.
  CHECK_FALSE(is_planar(cups({{{0, 2}, {}}, {{1, 3}, {}}}, 4, 0)));
  CHECK(is_planar(cups({{{0, 3}, {}}, {{1, 2}, {}}}, 4, 0)));
}

TEST_CASE("membership") {
  const Linking r = load_fixture("brauer_R.json");
  const Linking s = load_fixture("brauer_S.json");
  CHECK(member_of(r, kBrauFlat));
  CHECK(member_of(s, kBrauFlat));
  CHECK(member_of(add_loops(r, 2), FamilyTag{Family::Brau, false}));
  CHECK_FALSE(member_of(add_loops(r, 2), kBrauFlat));
  CHECK(membership_failures(add_loops(r, 2), kBrauFlat) ==
        std::vector<std::string>{"loopless"});

  const Linking general = load_fixture("general_upper.json");
  CHECK(member_of(general, FamilyTag{Family::Link, true}));
  CHECK_FALSE(member_of(general, kPartFlat));
  CHECK_FALSE(member_of(general, kBrauFlat));
  CHECK(membership_failures(general, kTLiebFlat) ==
        std::vector<std::string>{"total", "binary", "planar"});

  CHECK(member_of(Linking(VertexSet(0), VertexSet(0), {}, 3),
                  FamilyTag{Family::NatPlus, false}));
  CHECK_FALSE(member_of(identity_linking(VertexSet(1)),
                        FamilyTag{Family::NatPlus, false}));
  CHECK_FALSE(member_of(load_fixture("chain_S.json"), kPartFlat));
}

TEST_CASE("naive composition") {
  const Linking r = load_fixture("brauer_R.json");
  const Linking s = load_fixture("brauer_S.json");
  const NaiveComposite c = naive_compose(s, r);
  CHECK(c.linking == load_fixture("brauer_SR.json"));
  CHECK(c.loops_formed == 2);

  const NaiveComposite id = naive_compose(identity_linking(VertexSet(3)),
                                          identity_linking(VertexSet(3)));
  CHECK(id.linking == identity_linking(VertexSet(3)));
  CHECK(id.loops_formed == 0);

  const Linking whole_xy = cups({{{0, 1}, {0, 1, 2}}}, 2, 3);
  const Linking whole_yz = cups({{{0, 1, 2}, {0}}}, 3, 1);
  const NaiveComposite one = naive_compose(whole_yz, whole_xy);
  CHECK(one.linking == cups({{{0, 1}, {0}}}, 2, 1));
  CHECK(one.loops_formed == 0);

  CHECK_THROWS_AS(naive_compose(load_fixture("chain_S.json"), load_fixture("chain_R.json")),
                  PreconditionFailed);
  CHECK_THROWS_AS(naive_compose(add_loops(s, 1), r), PreconditionFailed);
  CHECK_THROWS_AS(naive_compose(r, r), InterfaceMismatch);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate(kBrauFlat, 0).size() == 1);
  CHECK(enumerate(kBrauFlat, 3).size() == 15);
  CHECK(enumerate(kBrauFlat, 4).size() == 105);
  CHECK(enumerate(kTLiebFlat, 3).size() == 5);
  CHECK(enumerate(kTLiebFlat, 4).size() == 14);
  CHECK(enumerate(kTLiebFlat, 5).size() == 42);
  CHECK(enumerate(kPartFlat, 2).size() == 15);
  CHECK(enumerate(kPartFlat, 3).size() == 203);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(enumerate(kBrauFlat, n).size() == testing::double_factorial_odd(n));
    CHECK(enumerate(kTLiebFlat, n).size() == testing::catalan(n));
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(enumerate(kPartFlat, n).size() == testing::bell(2 * n));
  }
}

TEST_CASE("enumerations are canonical and agree with each other") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const std::vector<Linking> part = enumerate(kPartFlat, n);
    std::vector<Linking> binary;
    std::copy_if(part.begin(), part.end(), std::back_inserter(binary),
                 [](const Linking& l) { return is_binary(l); });
    CHECK(binary == enumerate(kBrauFlat, n));
    CHECK(std::is_sorted(part.begin(), part.end()));
    CHECK(std::adjacent_find(part.begin(), part.end()) == part.end());
    for (const Linking& l : part) CHECK(member_of(l, kPartFlat));
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate(kPartFlat, 4), PreconditionFailed);
  CHECK_THROWS_AS(enumerate(kBrauFlat, 6), PreconditionFailed);
  CHECK_THROWS_AS(enumerate(FamilyTag{Family::Brau, false}, 2), PreconditionFailed);
  CHECK_THROWS_AS(enumerate(FamilyTag{Family::Link, true}, 2), PreconditionFailed);
  CHECK_THROWS_AS(enumerate(kBrauFlat, 1, std::size_t{0}), PreconditionFailed);
  CHECK(enumerate(kBrauFlat, 6, std::size_t{6}).size() == 10395);
}

TEST_CASE("Temperley-Lieb on two points") {
  const std::vector<Linking> tl = enumerate(kTLiebFlat, 2);
  REQUIRE(tl.size() == 2);
  const std::size_t id = tl[0] == identity_linking(VertexSet(2)) ? 0 : 1;
  const std::size_t e1 = 1 - id;
  CHECK(tl[e1] == cups({{{0, 1}, {}}, {{}, {0, 1}}}, 2, 2));

  const std::vector<TableEntry> table = multiplication_table(tl);
  REQUIRE(table.size() == 4);
  auto entry = [&](std::size_t i, std::size_t j) { return table[i * 2 + j]; };
  CHECK(entry(e1, e1) == TableEntry{e1, e1, e1, 1});
  CHECK(entry(id, e1) == TableEntry{id, e1, e1, 0});
  CHECK(entry(e1, id) == TableEntry{e1, id, e1, 0});
  CHECK(entry(id, id) == TableEntry{id, id, id, 0});
}

TEST_CASE("multiplication tables") {
  const std::vector<Linking> brau2 = enumerate(kBrauFlat, 2);
  REQUIRE(brau2.size() == 3);
  const std::vector<TableEntry> table = multiplication_table(brau2);
  CHECK(table.size() == 9);

  const std::vector<Linking> brau3 = enumerate(kBrauFlat, 3);
  const auto id = static_cast<std::size_t>(
      std::find(brau3.begin(), brau3.end(), identity_linking(VertexSet(3))) - brau3.begin());
  const std::vector<TableEntry> t3 = multiplication_table(brau3);
  for (std::size_t k = 0; k < brau3.size(); ++k) {
    CHECK(t3[id * brau3.size() + k] == TableEntry{id, k, k, 0});
    CHECK(t3[k * brau3.size() + id] == TableEntry{k, id, k, 0});
  }

  CHECK(multiplication_table({}).empty());
  CHECK_THROWS_AS(multiplication_table({identity_linking(VertexSet(1)),
                                        identity_linking(VertexSet(2))}),
                  InterfaceMismatch);
  CHECK_THROWS_AS(multiplication_table({add_loops(identity_linking(VertexSet(1)), 1)}),
                  PreconditionFailed);
  // Without the identity, the transposition squares out of the set.
  std::vector<Linking> no_identity;
  for (const Linking& l : brau2) {
    if (l != identity_linking(VertexSet(2))) no_identity.push_back(l);
  }
  CHECK_THROWS_AS(multiplication_table(no_identity), PreconditionFailed);
}

TEST_CASE("families are closed under composition") {
  for (const FamilyTag tag : {kPartFlat, kBrauFlat, kTLiebFlat}) {
    const std::size_t n = tag.family == Family::Part ? 2 : 3;
    const std::vector<Linking> elems = enumerate(tag, n);
    for (const Linking& a : elems) {
      for (const Linking& b : elems) {
        CHECK(member_of(compose_flat(b, a), tag));
      }
    }
  }
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t x = 2 * testing::uniform(rng, 0, 3);
    const std::size_t y = 2 * testing::uniform(rng, 0, 3);
    const std::size_t z = 2 * testing::uniform(rng, 0, 3);
    const Linking a = testing::random_brauer(rng, x, y);
    const Linking b = testing::random_brauer(rng, y, z);
    CHECK(member_of(compose_flat(b, a), kBrauFlat));
    if (is_planar(a) && is_planar(b)) CHECK(is_planar(compose_flat(b, a)));
  }
}

TEST_CASE("pullback composition agrees with the classical composite") {
  const std::vector<Linking> part2 = enumerate(kPartFlat, 2);
  for (const Linking& a : part2) {
    for (const Linking& b : part2) {
      const Composite c = compose_with_loops(b, a);
      const NaiveComposite naive = naive_compose(b, a);
      CHECK(flatten(c.linking) == naive.linking);
      CHECK(c.new_loops == naive.loops_formed);
    }
  }
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t x = testing::uniform(rng, 0, 8);
    const std::size_t y = testing::uniform(rng, 0, 8);
    const std::size_t z = testing::uniform(rng, 0, 8);
    const Linking a = testing::random_partition(rng, x, y, 6);
    const Linking b = testing::random_partition(rng, y, z, 6);
    const Composite c = compose_with_loops(b, a);
    const NaiveComposite naive = naive_compose(b, a);
    CHECK(compose_flat(b, a) == naive.linking);
    CHECK(c.new_loops == naive.loops_formed);
  }
}

TEST_SUITE_END();
