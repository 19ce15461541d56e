#include <doctest.h>

#include "coclass/counting.hpp"

using namespace coclass;

namespace {
  constexpr CountType kTypes[] = {CountType::Coclass1, CountType::Coclass2,
                                  CountType::Coclass2Gen2, CountType::Coclass2Gen3};
  constexpr Convention kModes[] = {Convention::UpToAntiIso, Convention::UpToIso,
                                   Convention::CommutativeUpToIso};
}  // namespace

TEST_CASE("formula examples") {
  CHECK(formula_count({CountType::Coclass1, 8, Convention::UpToAntiIso}) == 12);
  CHECK(formula_count({CountType::Coclass2, 13, Convention::UpToIso}) == 813);
  CHECK(formula_count({CountType::Coclass2Gen3, 12, Convention::CommutativeUpToIso}) == 186);
}

TEST_CASE("reference table examples") {
  CHECK(table1_reference(CountType::Coclass2, Convention::UpToAntiIso, 9) == 288);
  CHECK(table1_reference(CountType::Coclass1, Convention::CommutativeUpToIso, 4) == 5);
  CHECK(table1_reference(CountType::Coclass2Gen2, Convention::UpToAntiIso, 6) == 43);
  CHECK_THROWS_AS((void) table1_reference(CountType::Coclass1, Convention::UpToIso, 2), NotTabulated);
  CHECK_THROWS_AS((void) table1_reference(CountType::Coclass1, Convention::UpToIso, 14), NotTabulated);
}

TEST_CASE("formulas reproduce the reference table") {
  for (auto t : kTypes) {
    for (auto m : kModes) {
      for (std::size_t n = formula_min_order(t); n <= 13; ++n) {
        CAPTURE(to_string(t));
        CAPTURE(to_string(m));
        CAPTURE(n);
        CHECK(formula_count({t, n, m}) == table1_reference(t, m, n));
      }
    }
  }
}

TEST_CASE("totals are the sum of the 2- and 3-generated counts") {
  for (auto m : kModes) {
    for (std::size_t n = 7; n <= 200; ++n) {
      CHECK(formula_count({CountType::Coclass2, n, m})
            == formula_count({CountType::Coclass2Gen2, n, m})
                   + formula_count({CountType::Coclass2Gen3, n, m}));
    }
  }
}

TEST_CASE("mode ordering") {
  for (auto t : kTypes) {
    for (std::size_t n = formula_min_order(t); n <= 200; ++n) {
      auto const anti = formula_count({t, n, Convention::UpToAntiIso});
      CHECK(formula_count({t, n, Convention::UpToIso}) >= anti);
      CHECK(anti >= formula_count({t, n, Convention::CommutativeUpToIso}));
    }
  }
}

TEST_CASE("domain bounds") {
  CHECK(formula_min_order(CountType::Coclass1) == 5);
  CHECK(formula_min_order(CountType::Coclass2) == 7);
  CHECK(formula_min_order(CountType::Coclass2Gen2) == 7);
  CHECK(formula_min_order(CountType::Coclass2Gen3) == 6);
  CHECK_THROWS_AS((void) formula_count({CountType::Coclass1, 4, Convention::UpToIso}), OutOfDomain);
  CHECK_THROWS_AS((void) formula_count({CountType::Coclass2, 6, Convention::UpToIso}), OutOfDomain);
  try {
    (void) formula_count({CountType::Coclass2Gen3, 5, Convention::UpToIso});
    FAIL("expected OutOfDomain");
  } catch (OutOfDomain const& e) {
    CHECK(std::string(e.what()).find("n >= 6") != std::string::npos);
  }
}

TEST_CASE("names") {
  for (auto m : kModes) {
    CHECK(convention_from_string(to_string(m)) == m);
  }
  CHECK_FALSE(convention_from_string("both").has_value());
  CHECK(to_string(CountType::Coclass2Gen2) == "coclass2-gen2");
}
