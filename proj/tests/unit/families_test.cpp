#include <doctest.h>

#include <algorithm>
#include <set>

#include "coclass/canon.hpp"
#include "coclass/families.hpp"
#include "support.hpp"

using namespace coclass;
using coclass::test::pick;

TEST_CASE("coclass0") {
  auto const p1 = coclass0(1);
  CHECK(format_presentation(p1) == "<u | u=u^2>");
  CHECK(realize(p1).order() == 1);

  auto const t4 = realize(coclass0(4));
  CHECK(*analyze(t4).class_c == 3);
  // element i is u^(i+1)
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j)
      CHECK(t4(i, j) == std::min<Element>(i + j + 1, 3));

  auto const info = analyze(realize(coclass0(7)));
  for (std::size_t k = 0; k < info.layers.size(); ++k) {
    CHECK(info.layers[k].size() == 1);
  }
  CHECK_THROWS_AS((void) coclass0(0), InvalidParams);
}

TEST_CASE("list lengths") {
  CHECK(coclass1_list(4).size() == 8);
  for (std::size_t n = 5; n <= 30; ++n) {
    CHECK(coclass1_list(n).size() == n + n / 2);
  }
  CHECK(coclass2_gen2_list(7).size() == 34);
  CHECK(coclass2_gen2_list(10).size() == 50);
  CHECK(coclass2_gen2_list(13).size() == 65);
  CHECK(coclass2_gen3_list(6).size() == 99);
  CHECK(coclass2_gen3_list(7).size() == 150);
  CHECK(coclass2_gen3_list(12).size() == 399);

  CHECK_THROWS_AS((void) coclass1_list(3), UnsupportedOrder);
  CHECK_THROWS_AS((void) coclass2_gen2_list(6), UnsupportedOrder);
  CHECK_THROWS_AS((void) coclass2_gen3_list(5), UnsupportedOrder);
}

TEST_CASE("lemma families") {
  auto count = [](std::vector<Presentation> const& l, Family f) {
    return std::count_if(l.begin(), l.end(), [f](auto const& p) { return p.family == f; });
  };
  CHECK(count(lemma_family_list(9, 2), Family::LemN) == 14);
  CHECK(count(lemma_family_list(3, 2), Family::LemJ) == 0);

  auto const small = lemma_family_list(4, 1);
  REQUIRE(count(small, Family::LemH) == 2);
  auto const c1 = coclass1_list(6);
  for (int k : {2, 3}) {
    auto const lem = realize(pick(small, Family::LemH, {{"k", k}}));
    auto const h = realize(pick(c1, Family::H, {{"k", k}}));
    CHECK(lem.order() == 6);
    CHECK(are_equivalent(lem, h, CountMode::UpToIso));
  }
  for (auto const& p : lemma_family_list(5, 3)) {
    CHECK(p.num_generators() == 4);
    CHECK(p.expected_order == 9);
    auto const info = analyze(realize(p));
    CHECK(*info.coclass_r == 3);
    CHECK(info.min_gen_set.size() == 4);
  }
  CHECK_THROWS_AS((void) lemma_family_list(2, 1), InvalidParams);
  CHECK_THROWS_AS((void) lemma_family_list(3, 0), InvalidParams);
}

TEST_CASE("nomenclature overlap with the lemma families") {
  for (std::size_t n = 5; n <= 11; ++n) {
    auto const c1 = coclass1_list(n);
    auto const lem = lemma_family_list(n - 2, 1);
    auto lem_n = [&](int klm, int e) {
      return realize(pick(lem, Family::LemN, {{"k", klm}, {"l", klm}, {"m", klm}, {"e", e}}));
    };
    int const a = static_cast<int>(n) - 2, b = static_cast<int>(n) - 1;
    CHECK(are_equivalent(realize(pick(c1, Family::H, {{"k", a}})), lem_n(0, 1), CountMode::UpToIso));
    CHECK(are_equivalent(realize(pick(c1, Family::H, {{"k", b}})), lem_n(1, 1), CountMode::UpToIso));
    CHECK(are_equivalent(realize(pick(c1, Family::J, {{"k", a}})), lem_n(0, 0), CountMode::UpToIso));
    CHECK(are_equivalent(realize(pick(c1, Family::J, {{"k", b}})), lem_n(1, 0), CountMode::UpToIso));
  }
}

TEST_CASE("H2 at order 5") {
  auto const p = pick(coclass1_list(5), Family::H, {{"k", 2}});
  auto const r = realize_with_words(p);
  auto const& t = r.table;
  CHECK(t.order() == 5);
  // independent associativity check
  std::vector<Element> entries(t.entries().begin(), t.entries().end());
  CHECK_NOTHROW((void) validate_table(5, entries));
  auto const el = [&](Word const& w) { return evaluate(t, w, {0, 1}); };
  CHECK(el(power_word(0, 4)) == el(power_word(0, 5)));
  CHECK(el({0, 1}) == el(power_word(0, 2)));
  CHECK(el({1, 0}) == el(power_word(0, 2)));
  CHECK(el({1, 1}) == el(power_word(0, 2)));
  auto const info = analyze(t);
  CHECK(*info.class_c == 3);
  CHECK(*info.coclass_r == 1);
}

TEST_CASE("T3 at order 8 follows the product rules") {
  // Symbols: u^a (1 <= a <= 6, u^6 the zero), v, y = uv = v^2.
  struct Sym {
    char kind;  // 'u', 'v' or 'y'
    int  a = 0;
    bool operator==(Sym const&) const = default;
  };
  auto U = [](int a) { return Sym{'u', std::min(a, 6)}; };
  auto mul = [&](Sym x, Sym z) -> Sym {
    if (x.kind == 'u' && z.kind == 'u') return U(x.a + z.a);
    if (x.kind == 'v' && z.kind == 'u') return U(z.a + 1);          // v u^k = u^(k+1)
    if (x.kind == 'u' && z.kind == 'v') return x.a == 1 ? Sym{'y'} : U(x.a + 1);
    if (x.kind == 'y' && z.kind == 'u') return U(z.a + 2);          // u v u^k
    if (x.kind == 'u' && z.kind == 'y') return U(x.a + 2);          // u^k u v
    if (x.kind == 'v' && z.kind == 'v') return Sym{'y'};
    if (x.kind == 'y' && z.kind == 'y') return U(4);
    return U(3);                                                    // vy = yv = u^3
  };

  auto const r = realize_with_words(pick(coclass2_gen2_list(8), Family::T3));
  REQUIRE(r.table.order() == 8);
  std::vector<Sym> sym;
  for (auto const& w : r.words) {
    if (std::all_of(w.begin(), w.end(), [](Letter x) { return x == 0; })) {
      sym.push_back(U(static_cast<int>(w.size())));
    } else if (w == Word{1}) {
      sym.push_back({'v'});
    } else {
      sym.push_back({'y'});
    }
  }
  CHECK(std::count(sym.begin(), sym.end(), Sym{'y'}) == 1);
  for (Element i = 0; i < 8; ++i)
    for (Element j = 0; j < 8; ++j)
      CHECK(sym[r.table(i, j)] == mul(sym[i], sym[j]));
}

TEST_CASE("satisfies") {
  for (auto const& p : coclass2_gen2_list(8)) {
    auto const t = realize(p);
    std::vector<Element> ident(p.num_generators());
    std::iota(ident.begin(), ident.end(), Element{0});
    CHECK(satisfies(t, p, ident));
  }
  auto const c1 = coclass1_list(7);
  auto const n1 = realize(pick(c1, Family::N1));
  auto const n2 = pick(c1, Family::N2);
  CHECK_FALSE(satisfies(n1, n2, {0, 1}));
  for (Element a = 0; a < 7; ++a)
    for (Element b = 0; b < 7; ++b)
      CHECK_FALSE(satisfies(n1, n2, {a, b}));

  auto const h2 = pick(coclass1_list(4), Family::H, {{"k", 2}});
  CHECK_FALSE(satisfies(zero_semigroup(4), h2, {0, 1}));
}

TEST_CASE("realized lists: structure, claims and distinctness") {
  auto run = [](std::vector<Presentation> const& list) {
    std::set<CanonicalKey> keys;
    for (auto const& p : list) {
      CAPTURE(format_presentation(p));
      auto const t = realize(p);
      auto const info = analyze(t);
      CHECK(t.order() == p.expected_order);
      REQUIRE(info.is_nilpotent);
      CHECK(*info.coclass_r == p.expected_coclass);
      CHECK(*info.class_c == p.expected_order - 1 - p.expected_coclass);
      CHECK(info.min_gen_set.size() == p.num_generators());
      CHECK(is_commutative(t) == p.claimed_commutative);
      CHECK(is_self_dual(t) == p.claimed_self_dual);
      keys.insert(canonical_key(t, CountMode::UpToAntiIso));
    }
    CHECK(keys.size() == list.size());
  };
  for (std::size_t n = 4; n <= 10; ++n) {
    run(coclass1_list(n));
  }
  for (std::size_t n = 6; n <= 10; ++n) {
    run(coclass2_gen3_list(n));
  }
  for (std::size_t n = 7; n <= 10; ++n) {
    run(coclass2_gen2_list(n));
  }
  run(lemma_family_list(6, 3));
}

TEST_CASE("order 4 extras and N1") {
  auto const list = coclass1_list(4);
  CHECK(pick(list, Family::N1).claimed_self_dual);
  CHECK(is_self_dual(realize(pick(list, Family::N1))));
  CHECK(pick(list, Family::N4a).claimed_commutative);
  CHECK_FALSE(pick(list, Family::N4b).claimed_commutative);
  CHECK_FALSE(pick(coclass1_list(5), Family::N1).claimed_self_dual);
}

TEST_CASE("presentation text") {
  auto const p = pick(coclass1_list(7), Family::H, {{"k", 3}});
  CHECK(format_presentation(p) == "<u,v | u^6=u^7, uv=u^3, vu=u^3, v^2=u^4>");
  CHECK(format_metadata(p) == "family=H k=3 n=7 selfdual=true commutative=true");
  CHECK(format_word({0, 0, 0, 1}, {"u", "v"}) == "u^3v");

  auto const q = parse_presentation("<u,v | u^6=u^7, uv=vu=u^3, v^2=u^4>");
  CHECK(q.generators == std::vector<std::string>{"u", "v"});
  CHECK(q.relations.size() == 4);

  for (auto const& orig : coclass2_gen3_list(8)) {
    auto const line = format_presentation(orig) + " " + format_metadata(orig);
    auto const back = parse_listing_line(line);
    CHECK(back.generators == orig.generators);
    CHECK(back.relations == orig.relations);
    CHECK(back.family == orig.family);
    CHECK(back.params == orig.params);
    CHECK(back.parts == orig.parts);
    CHECK(back.expected_order == orig.expected_order);
    CHECK(back.expected_coclass == orig.expected_coclass);
    CHECK(back.claimed_self_dual == orig.claimed_self_dual);
    CHECK(back.claimed_commutative == orig.claimed_commutative);
  }
  CHECK_THROWS_AS((void) parse_presentation("<u | u^2>"), ParseError);
  CHECK_THROWS_AS((void) parse_listing_line("<u | u=u^2> family=Nope"), ParseError);
}

TEST_CASE("certification rejects wrong orders") {
  auto p = pick(coclass1_list(7), Family::H, {{"k", 3}});
  p.expected_order = 8;
  CHECK_THROWS_AS((void) realize(p), CertificationFailed);
  // a redundant generator
  Presentation q = parse_presentation("<u,v | u^3=u^4, v=u^2>");
  q.expected_order = 3;
  CHECK_THROWS_AS((void) realize(q), CertificationFailed);
}
