#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "linkcat/compose.hpp"
#include "linkcat/error.hpp"
#include "linkcat/linking.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace linkcat;
using linkcat::testing::load_fixture;
using linkcat::testing::Rng;

TEST_SUITE_BEGIN("linking");

TEST_CASE("constructor validates and canonicalises") {
  CHECK_THROWS_AS(Linking(VertexSet(2), VertexSet(2), {{{0}, {0}}, {{0}, {1}}}),
                  InvalidArgument);
  CHECK_THROWS_AS(Linking(VertexSet(1), VertexSet(1), {{{}, {}}}), InvalidArgument);
  CHECK_THROWS_AS(Linking(VertexSet(1), VertexSet(1), {{{}, {1}}}), InvalidArgument);

  const Linking l(VertexSet(2), VertexSet(2), {{{}, {1, 0}}, {{1, 0}, {}}});
  REQUIRE(l.links().size() == 2);
  CHECK(l.links()[0] == Link{{0, 1}, {}});
  CHECK(l.links()[1] == Link{{}, {0, 1}});
  CHECK(l.left_owner(1) == 0u);
  CHECK(l.right_owner(0) == 1u);
  CHECK_FALSE(Linking(VertexSet(1), VertexSet(0), {}).left_owner(0).has_value());
}

TEST_CASE("from_span") {
  const InjRel none(VertexSet(0), VertexSet(0), {});
  const Linking empty = from_span(none, none);
  CHECK(empty.links().empty());
  CHECK(empty.loops() == 0);

  const InjRel f(VertexSet(1), VertexSet(0), {});
  const InjRel g(VertexSet(1), VertexSet(0), {});
  CHECK(from_span(f, g).loops() == 1);

  CHECK_THROWS_AS(from_span(InjRel(VertexSet(1), VertexSet(0), {}),
                            InjRel(VertexSet(2), VertexSet(0), {})),
                  InterfaceMismatch);
}

TEST_CASE("general example with unary and ternary links") {
  const Linking upper = load_fixture("general_upper.json");
  CHECK(upper.left().size() == 5);
  CHECK(upper.right().size() == 11);
  CHECK(upper.links().size() == 6);
  CHECK(upper.loops() == 0);
  const Span span = to_span(upper);
  CHECK(from_span(span.left_leg, span.right_leg) == upper);

  const Linking lower = load_fixture("general_lower.json");
  CHECK(lower.links().size() == 7);
  CHECK(lower.loops() == 1);
}

TEST_CASE("to_span") {
  const Span empty = to_span(Linking());
  CHECK(empty.apex().size() == 0);

  const Span id = to_span(identity_linking(VertexSet(2)));
  CHECK(id.left_leg.pairs() == std::vector<InjRel::Pair>{{0, 0}, {1, 1}});
  CHECK(id.right_leg.pairs() == std::vector<InjRel::Pair>{{0, 0}, {1, 1}});

  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Linking l = testing::random_linking(rng, testing::uniform(rng, 0, 6),
                                              testing::uniform(rng, 0, 6));
    const Span s = to_span(l);
    CHECK(s.apex().size() == l.links().size() + l.loops());
    CHECK(from_span(s.left_leg, s.right_leg) == l);
  }
}

TEST_CASE("identity linking") {
  CHECK(identity_linking(VertexSet(0)).links().empty());
  const Linking id3 = identity_linking(VertexSet(3));
  CHECK(id3.links().size() == 3);
  CHECK(id3.links()[2] == Link{{2}, {2}});
  const Linking r = load_fixture("brauer_R.json");
  CHECK(is_isomorphic(compose_link(identity_linking(r.right()), r), r));
}

TEST_CASE("isomorphism") {
  const Linking l = load_fixture("brauer_R.json");
  CHECK(is_isomorphic(l, l));
  CHECK_FALSE(is_isomorphic(add_loops(l, 1), add_loops(l, 2)));

  Rng rng(8);
  std::vector<Link> links = l.links();
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(links.begin(), links.end(), rng);
    CHECK(is_isomorphic(Linking(l.left(), l.right(), links), l));
  }
  const Linking labelled(VertexSet(std::vector<std::string>{"a"}), VertexSet(1),
                         {{{0}, {0}}});
  CHECK(is_isomorphic(labelled, identity_linking(VertexSet(1))));
  CHECK_FALSE(is_isomorphic(Linking(VertexSet(1), VertexSet(2), {}),
                            Linking(VertexSet(2), VertexSet(1), {})));
}

TEST_CASE("flatten and add_loops") {
  const Linking r = load_fixture("brauer_R.json");
  const Linking looped = add_loops(r, 5);
  CHECK(looped.loops() == 5);
  CHECK(flatten(looped) == r);
  CHECK(flatten(flatten(looped)) == flatten(looped));
  CHECK(add_loops(r, 0) == r);
  CHECK(add_loops(add_loops(r, 2), 3) == add_loops(r, 5));
}

TEST_CASE("linkings on the empty object are loop counts under addition") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t a = testing::uniform(rng, 0, 50);
    const std::uint64_t b = testing::uniform(rng, 0, 50);
    const Linking la(VertexSet(0), VertexSet(0), {}, a);
    const Linking lb(VertexSet(0), VertexSet(0), {}, b);
    const Composite c = compose_with_loops(lb, la);
    CHECK(c.linking.loops() == a + b);
    CHECK(c.linking.links().empty());
    CHECK(c.new_loops == 0);
  }
}

TEST_CASE("isomorphism is an equivalence matching canonical equality") {
  Rng rng(4);
  std::vector<Linking> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(testing::random_linking(rng, 2, 2, 3, 0.3, 1));
  for (const Linking& a : pool) {
    CHECK(is_isomorphic(a, a));
    for (const Linking& b : pool) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      CHECK(is_isomorphic(a, b) == (a == b));
    }
  }
}

TEST_SUITE_END();
