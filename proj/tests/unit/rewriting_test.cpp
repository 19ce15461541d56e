#include <doctest.h>

#include "coclass/rewriting.hpp"

using namespace coclass;

namespace {
  Word w(std::initializer_list<Letter> letters) {
    return Word(letters);
  }
}  // namespace

TEST_CASE("word helpers") {
  CHECK(power_word(1, 3) == w({1, 1, 1}));
  CHECK(concat(w({0}), w({1, 1})) == w({0, 1, 1}));
}

TEST_CASE("weighted shortlex order") {
  WordOrder const ord({1, 3});
  CHECK(ord.weight(w({0, 1})) == 4);
  CHECK(ord.less(w({0, 0}), w({1})));        // weight 2 < 3
  CHECK(ord.less(w({1}), w({0, 0, 0})));     // equal weight, shorter
  CHECK(ord.less(w({0, 1}), w({1, 0})));     // equal weight and length
  CHECK_FALSE(ord.less(w({1, 0}), w({1, 0})));
}

TEST_CASE("completion of a commutative band") {
  // <a,b | ba = ab, aa = a, bb = b> = {a, b, ab}
  RewritingSystem const rws(WordOrder({1, 1}),
                            {{w({1, 0}), w({0, 1})}, {w({0, 0}), w({0})}, {w({1, 1}), w({1})}});
  CHECK(rws.reduce(w({1, 0, 1, 0})) == w({0, 1}));
  CHECK(rws.is_reduced(w({0, 1})));
  CHECK_FALSE(rws.is_reduced(w({1, 0})));
  auto const nf = rws.normal_forms(10);
  REQUIRE(nf.size() == 3);
  CHECK(nf[0] == w({0}));
  CHECK(nf[1] == w({1}));
  CHECK(nf[2] == w({0, 1}));

  auto const s = multiplication_table(rws, 10, 100);
  REQUIRE(s.elements.size() == 3);
  // b * a = ab
  CHECK(s.entries[1 * 3 + 0] == 2);
  CHECK(element_of(s, rws, w({1, 1, 0})) == Element{2});
}

TEST_CASE("products of normal forms reduce to normal forms") {
  // <u,v | u^4 = u^5, uv = vu, v^2 = uv, v^3 = u^2>
  RewritingSystem const rws(WordOrder({1, 10}),
                            {{power_word(0, 4), power_word(0, 5)},
                             {w({0, 1}), w({1, 0})},
                             {w({1, 1}), w({0, 1})},
                             {power_word(1, 3), power_word(0, 2)}});
  for (auto const& a : rws.normal_forms(50)) {
    for (auto const& b : rws.normal_forms(50)) {
      auto const x = rws.reduce(concat(a, b));
      CHECK(rws.is_reduced(x));
    }
  }
}

TEST_CASE("limits turn divergence into errors") {
  // free monogenic semigroup: infinitely many normal forms
  RewritingSystem const free(WordOrder({1}), {});
  CHECK_THROWS_AS((void) free.normal_forms(10), RewriteDiverged);

  // the braid relation has no finite completion under shortlex
  RewritingSystem::Limits limits;
  limits.max_rules = 40;
  CHECK_THROWS_AS(RewritingSystem(WordOrder({1, 1}), {{w({0, 1, 0}), w({1, 0, 1})}}, limits),
                  RewriteDiverged);
}
