#include "coclass/counting.hpp"

#include <array>

namespace coclass {

  std::string_view to_string(Convention c) {
    switch (c) {
      case Convention::UpToAntiIso:
        return "anti-iso";
      case Convention::UpToIso:
        return "iso";
      case Convention::CommutativeUpToIso:
        return "commutative";
    }
    return "?";
  }

  std::string_view to_string(CountType t) {
    switch (t) {
      case CountType::Coclass1:
        return "coclass1";
      case CountType::Coclass2:
        return "coclass2";
      case CountType::Coclass2Gen2:
        return "coclass2-gen2";
      case CountType::Coclass2Gen3:
        return "coclass2-gen3";
    }
    return "?";
  }

  std::optional<Convention> convention_from_string(std::string_view s) {
    for (auto c : {Convention::UpToAntiIso, Convention::UpToIso,
                   Convention::CommutativeUpToIso}) {
      if (to_string(c) == s) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::size_t formula_min_order(CountType t) {
    switch (t) {
      case CountType::Coclass1:
        return 5;
      case CountType::Coclass2:
      case CountType::Coclass2Gen2:
        return 7;
      case CountType::Coclass2Gen3:
        return 6;
    }
    return 0;
  }

  namespace {
    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      return a / b;  // only used with a >= 0
    }
    std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
      return (a + b - 1) / b;
    }

    // (a n^2 + b n + c) / 8, which must be exact.
    std::int64_t eighth(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t n) {
      std::int64_t const num = a * n * n + b * n + c;
      if (num % 8 != 0) {
        throw Error("formula_count: " + std::to_string(num)
                    + " is not divisible by 8");
      }
      return num / 8;
    }

    struct Quadratic {
      std::int64_t a, b, c;
    };

    // Coefficients for even and odd n of the three-generated counts, indexed
    // by convention.
    constexpr std::array<std::array<Quadratic, 2>, 3> kGen3{{
        {{{21, 22, -96}, {21, 36, -81}}},
        {{{27, 94, -280}, {27, 112, -243}}},
        {{{15, -58, 24}, {15, -48, 9}}},
    }};
    constexpr std::array<std::array<Quadratic, 2>, 3> kTotal{{
        {{{21, 66, -104}, {21, 80, -93}}},
        {{{27, 150, -240}, {27, 168, -203}}},
        {{{15, -26, -40}, {15, -16, -63}}},
    }};

    std::size_t index(Convention c) {
      return static_cast<std::size_t>(c);
    }
  }  // namespace

  std::int64_t formula_count(CountQuery const& q) {
    if (q.n < formula_min_order(q.type)) {
      throw OutOfDomain("formula for " + std::string(to_string(q.type))
                        + " requires n >= "
                        + std::to_string(formula_min_order(q.type)) + ", got "
                        + std::to_string(q.n));
    }
    auto const        n    = static_cast<std::int64_t>(q.n);
    std::size_t const odd  = q.n % 2;
    std::int64_t const fl2 = floor_div(n, 2);
    std::int64_t const ce3 = ceil_div(n, 3);
    switch (q.type) {
      case CountType::Coclass1:
        switch (q.mode) {
          case Convention::UpToAntiIso:
            return n + fl2;
          case Convention::UpToIso:
            return n + fl2 + 2;
          case Convention::CommutativeUpToIso:
            return n + fl2 - 2;
        }
        break;
      case CountType::Coclass2Gen2:
        switch (q.mode) {
          case Convention::UpToAntiIso:
            return 5 * n + fl2 - ce3 - 1;
          case Convention::UpToIso:
            return 7 * n - ce3 + 5;
          case Convention::CommutativeUpToIso:
            return 3 * n + 2 * fl2 - ce3 - 8;
        }
        break;
      case CountType::Coclass2Gen3: {
        auto const [a, b, c] = kGen3[index(q.mode)][odd];
        return eighth(a, b, c, n);
      }
      case CountType::Coclass2: {
        auto const [a, b, c] = kTotal[index(q.mode)][odd];
        return eighth(a, b, c, n) - ce3;
      }
    }
    throw Error("formula_count: unknown query");
  }

  namespace {
    // Rows: coclass 1, coclass 2, 2-generated, 3-generated; orders 3..13.
    using Row = std::array<std::int64_t, 11>;
    constexpr std::array<std::array<Row, 4>, 3> kTable1{{
        // up to (anti-)isomorphism
        {{{1, 8, 7, 9, 10, 12, 13, 15, 16, 18, 19},
          {0, 1, 84, 142, 184, 218, 288, 328, 412, 460, 557},
          {0, 0, 11, 43, 34, 40, 45, 50, 55, 61, 65},
          {0, 1, 73, 99, 150, 178, 243, 278, 357, 399, 492}}},
        // up to isomorphism
        {{{1, 9, 9, 11, 12, 14, 15, 17, 18, 20, 21},
          {0, 1, 118, 219, 284, 333, 434, 491, 610, 677, 813},
          {0, 0, 15, 62, 51, 58, 65, 71, 78, 85, 91},
          {0, 1, 103, 157, 233, 275, 369, 420, 532, 592, 722}}},
        // commutative up to isomorphism
        {{{1, 5, 5, 7, 8, 10, 11, 13, 14, 16, 17},
          {0, 1, 23, 42, 67, 86, 123, 146, 193, 222, 278},
          {0, 0, 4, 15, 16, 21, 24, 28, 31, 36, 38},
          {0, 1, 19, 27, 51, 65, 99, 118, 162, 186, 240}}},
    }};
  }  // namespace

  std::int64_t table1_reference(CountType t, Convention mode, std::size_t n) {
    if (n < 3 || n > 13) {
      throw NotTabulated("no reference value for order " + std::to_string(n));
    }
    return kTable1[index(mode)][static_cast<std::size_t>(t)][n - 3];
  }

}  // namespace coclass
