#include <doctest.h>

#include <random>

#include "coclass/bruteforce.hpp"
#include "coclass/families.hpp"
#include "coclass/tables.hpp"
#include "support.hpp"

using namespace coclass;
using coclass::test::monogenic;
using coclass::test::pick;

TEST_CASE("validate_table accepts small associative tables") {
  auto const t = validate_table(1, {0});
  CHECK(t.order() == 1);
  auto const lz = validate_table(2, {0, 0, 1, 1});
  CHECK(lz(0, 1) == 0);
  CHECK(lz(1, 0) == 1);
}

TEST_CASE("validate_table reports the first non-associative triple") {
  // x*x = y, every other product x: (x x) y = y y = x but x (x y) = x x = y
  try {
    (void) validate_table(2, {1, 0, 0, 0});
    FAIL("expected NotAssociative");
  } catch (NotAssociative const& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.k == 1);
  }
  // (0,0,1), (0,1,1), (1,0,0) and (1,1,0) fail
  std::vector<Element> const e{1, 0, 0, 0};
  auto mul = [&](Element a, Element b) { return e[a * 2 + b]; };
  int bad = 0;
  for (Element i = 0; i < 2; ++i)
    for (Element j = 0; j < 2; ++j)
      for (Element k = 0; k < 2; ++k)
        bad += mul(mul(i, j), k) != mul(i, mul(j, k));
  CHECK(bad == 4);
}

TEST_CASE("validate_table range errors") {
  try {
    (void) validate_table(2, {0, 2, 0, 0});
    FAIL("expected IndexOutOfRange");
  } catch (IndexOutOfRange const& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);
    CHECK(e.value == 2);
  }
  CHECK_THROWS_AS(validate_table(2, {0, 0, 0}), Error);
}

TEST_CASE("power ideals") {
  auto const z = zero_semigroup(3);
  CHECK(power_ideal(z, 2).size() == 1);

  auto const m = monogenic(5);  // u = 0, u^5 = 4
  CHECK(power_ideal(m, 3) == ElementSet({2, 3, 4}));
  CHECK(power_ideal(m, 1) == m.all());

  auto const lz = left_zero_semigroup(2);
  CHECK(power_ideal(lz, 7) == ElementSet({0, 1}));
}

TEST_CASE("analyze") {
  SUBCASE("coclass 0 of order 6") {
    auto const info = analyze(monogenic(6));
    REQUIRE(info.is_nilpotent);
    CHECK(*info.class_c == 5);
    CHECK(*info.coclass_r == 0);
    CHECK(info.min_gen_set.size() == 1);
  }
  SUBCASE("zero semigroup of order 4") {
    auto const info = analyze(zero_semigroup(4));
    REQUIRE(info.is_nilpotent);
    CHECK(*info.class_c == 1);
    CHECK(*info.coclass_r == 2);
    CHECK(info.min_gen_set == ElementSet({0, 1, 2}));
    CHECK(*info.zero == 3);
  }
  SUBCASE("left zero is not nilpotent") {
    auto const info = analyze(left_zero_semigroup(2));
    CHECK_FALSE(info.is_nilpotent);
    CHECK_FALSE(info.class_c.has_value());
    CHECK(info.layers.empty());
  }
  SUBCASE("trivial semigroup") {
    auto const info = analyze(validate_table(1, {0}));
    CHECK(info.is_nilpotent);
    CHECK(*info.class_c == 0);
    CHECK(*info.coclass_r == 0);
    CHECK(info.min_gen_set.empty());
  }
}

TEST_CASE("dual") {
  auto const lz = left_zero_semigroup(2);
  auto const rz = dual(lz);
  CHECK(rz(0, 1) == 1);
  CHECK(rz(1, 0) == 0);
  CHECK(dual(rz) == lz);

  auto const z = zero_semigroup(4);
  CHECK(dual(z) == z);

  auto const n1 = realize(pick(coclass1_list(7), Family::N1));
  CHECK_FALSE(dual(n1) == n1);
  CHECK(dual(dual(n1)) == n1);
}

TEST_CASE("is_commutative") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(is_commutative(zero_semigroup(n)));
  }
  for (std::size_t n = 5; n <= 9; ++n) {
    for (int k = 2; k < static_cast<int>(n); ++k) {
      CHECK(is_commutative(realize(pick(coclass1_list(n), Family::H, {{"k", k}}))));
    }
  }
  CHECK_FALSE(is_commutative(realize(pick(coclass2_gen2_list(7), Family::T3))));
}

TEST_CASE("subsemigroup_generated") {
  auto const z = zero_semigroup(4);
  CHECK(subsemigroup_generated(z, z.all()) == z.all());
  CHECK(subsemigroup_generated(monogenic(6), {0}).size() == 6);

  // H3 at order 6: v^2 = u^4, v^3 = v u^4 = u^6 = u^5.
  auto const r = realize_with_words(pick(coclass1_list(6), Family::H, {{"k", 3}}));
  auto const closure = subsemigroup_generated(r.table, {1});
  REQUIRE(closure.size() == 3);
  std::vector<Word> words;
  for (Element x : closure) {
    words.push_back(r.words[x]);
  }
  CHECK(std::count(words.begin(), words.end(), Word{1}) == 1);
  CHECK(std::count(words.begin(), words.end(), power_word(0, 4)) == 1);
  CHECK(std::count(words.begin(), words.end(), power_word(0, 5)) == 1);
  CHECK_THROWS_AS((void) subsemigroup_generated(z, {}), Error);
}

TEST_CASE("monogenic_witness") {
  CHECK(monogenic_witness(monogenic(5)) == 0);
  // H2 at order 7: both u and v have class 5; the smaller index wins
  auto const h2 = realize(pick(coclass1_list(7), Family::H, {{"k", 2}}));
  auto const zero = *analyze(h2).zero;
  CHECK(power(h2, 0, 5) != zero);
  CHECK(power(h2, 1, 5) != zero);
  CHECK(monogenic_witness(h2) == 0);
  CHECK_THROWS_AS((void) monogenic_witness(zero_semigroup(4)), PremiseNotSatisfied);
}

TEST_CASE("relabel") {
  std::mt19937 rng(7);
  auto const t = realize(pick(coclass1_list(6), Family::N2));
  for (int rep = 0; rep < 20; ++rep) {
    auto const sigma = coclass::test::random_permutation(6, rng);
    auto const s = relabel(t, sigma);
    for (Element i = 0; i < 6; ++i)
      for (Element j = 0; j < 6; ++j)
        CHECK(s(sigma[i], sigma[j]) == sigma[t(i, j)]);
  }
}

TEST_CASE("table text format") {
  auto const t = realize(pick(coclass1_list(5), Family::J, {{"k", 3}}));
  std::string const text = format_table(t);
  CHECK(text.back() == '\n');
  CHECK(text.find(" \n") == std::string::npos);
  CHECK(parse_table(text) == t);
  CHECK(format_table(zero_semigroup(2)) == "2\n1 1\n1 1\n");
  CHECK(parse_table("2\n1 1\n1 1") == zero_semigroup(2));
  CHECK_THROWS_AS((void) parse_table("2\n1 1\n1\n"), ParseError);
  CHECK_THROWS_AS((void) parse_table("x\n"), ParseError);
  CHECK_THROWS_AS((void) parse_table("2\n1 0\n0 0\n"), NotAssociative);
}

namespace {
  void check_layers(MulTable const& t) {
    ClassInfo const info = analyze(t);
    REQUIRE(info.is_nilpotent);
    std::size_t const c = *info.class_c;
    for (std::size_t k = 1; k <= t.order() + 1; ++k) {
      CHECK(power_ideal(t, k + 1).is_subset_of(power_ideal(t, k)));
    }
    if (t.order() == 1) {
      return;
    }
    REQUIRE(info.layers.size() == c + 1);
    std::size_t total = 0;
    for (std::size_t k = 1; k <= c; ++k) {
      CHECK(info.layers[k - 1] == power_ideal(t, k).minus(power_ideal(t, k + 1)));
      CHECK_FALSE(info.layers[k - 1].empty());
      total += info.layers[k - 1].size();
    }
    CHECK(total + 1 == t.order());
    CHECK(*info.coclass_r == t.order() - 1 - c);
    ClassInfo const d = analyze(dual(t));
    CHECK(d.layers == info.layers);
    CHECK(d.class_c == info.class_c);
    CHECK(d.min_gen_set == info.min_gen_set);
  }
}  // namespace

TEST_CASE("layer properties on every nilpotent table of order 5") {
  std::size_t seen = 0;
  for (auto const& t : enumerate_nilpotent({5, {}, {}, false, CountMode::UpToIso})) {
    check_layers(t);
    ++seen;
  }
  CHECK(seen > 100);
}

TEST_CASE("coclass 0 characterisations agree up to order 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& t : enumerate_nilpotent({n, {}, {}, false, CountMode::UpToIso})) {
      ClassInfo const info = analyze(t);
      bool const is_coclass0 = *info.coclass_r == 0;
      bool const monogenic_nilpotent = n == 1 || info.min_gen_set.size() == 1;
      bool period_one = false, model = false;
      if (n == 1) {
        period_one = model = true;
      } else if (info.min_gen_set.size() == 1) {
        Element const u = info.min_gen_set[0];
        // index n, period 1: u^n = u^{n+1} and the powers u..u^n are distinct
        period_one = power(t, u, n) == power(t, u, n + 1);
        std::vector<Element> ps;
        for (std::size_t k = 1; k <= n; ++k) {
          ps.push_back(power(t, u, k));
        }
        model = ElementSet(ps).size() == n
                && satisfies(t, coclass0(n), {u});
      }
      CHECK(is_coclass0 == monogenic_nilpotent);
      CHECK(is_coclass0 == period_one);
      CHECK(is_coclass0 == model);
    }
  }
}
