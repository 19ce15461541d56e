// Cross-checks between the presentation lists, the exhaustive search, the
// closed formulas and the reference table. Used by the cli verify command
// and by the acceptance binary.

#ifndef COCLASS_VERIFY_HPP_
#define COCLASS_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coclass/canon.hpp"
#include "coclass/counting.hpp"
#include "coclass/families.hpp"
#include "coclass/tables.hpp"

namespace coclass {

  // Least order for which the lists cover the given type.
  std::size_t families_min_order(CountType t);

  // Presentations of the given type and order; coclass 2 is the
  // concatenation of the 2- and 3-generated lists.
  std::vector<Presentation> family_list(CountType t, std::size_t n);

  struct ModeCounts {
    std::int64_t anti_iso    = 0;
    std::int64_t iso         = 0;
    std::int64_t commutative = 0;

    [[nodiscard]] std::int64_t get(Convention c) const;
  };

  // Counts derived from the claims alone: every entry is one class up to
  // (anti-)isomorphism, non-self-dual entries contribute their dual up to
  // isomorphism, commutative entries count once.
  ModeCounts claimed_counts(std::vector<Presentation> const& list);

  // The same counts obtained from realized tables by deduplication.
  ModeCounts realized_counts(std::vector<MulTable> const& tables);

  // Every nilpotent semigroup of order n <= 7 up to isomorphism, keyed by
  // its canonical key.
  struct Census {
    std::size_t                      order = 0;
    std::map<CanonicalKey, MulTable> by_iso_key;

    [[nodiscard]] std::vector<MulTable> select(CountType t) const;
    [[nodiscard]] ModeCounts            counts(CountType t) const;
  };
  Census bruteforce_census(std::size_t n);

  // First violated structural property of a nilpotent table, if any: layer
  // partition, layer size monotonicity, uniqueness of the minimal generating
  // set, and the monogenic witness.
  std::optional<std::string> structural_violation(MulTable const& t);

  // Direct search for an isomorphism a -> b (or a -> dual(b) when anti)
  // obtained by extending a bijection of minimal generating sets.
  bool generator_bijection_exists(MulTable const& a, MulTable const& b,
                                  bool anti);

  struct CheckResult {
    std::string name;
    bool        passed = true;
    std::size_t items  = 0;
    // First failure: order and family (or count row) plus a reason.
    std::size_t order = 0;
    std::string subject;
    std::string reason;
  };

  struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool                ok() const;
    [[nodiscard]] CheckResult const*  first_failure() const;
  };

  inline constexpr std::size_t kVerifyMinOrder = 5;
  inline constexpr std::size_t kVerifyMaxOrder = 13;

  // Runs the five checks for all orders up to max_order (5..13). If log is
  // given, a pass/fail line per check is written to it as it completes.
  VerifyReport run_verification(std::size_t max_order, std::ostream* log);

  std::string format_check(CheckResult const& c);

}  // namespace coclass

#endif  // COCLASS_VERIFY_HPP_
