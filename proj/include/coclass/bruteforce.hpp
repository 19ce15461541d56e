// Exhaustive enumeration of small nilpotent semigroups by backtracking over
// multiplication tables. Independent of the presentation lists, which makes
// it the reference the families are checked against.

#ifndef COCLASS_BRUTEFORCE_HPP_
#define COCLASS_BRUTEFORCE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "coclass/canon.hpp"
#include "coclass/tables.hpp"

namespace coclass {

  class OrderTooLarge : public Error {
   public:
    using Error::Error;
  };

  inline constexpr std::size_t kMaxBruteforceOrder = 7;

  struct SearchConfig {
    std::size_t                order = 1;
    std::optional<std::size_t> coclass_filter;
    std::optional<std::size_t> gen_size_filter;
    bool                       commutative_only = false;
    CountMode                  mode             = CountMode::UpToAntiIso;
  };

  // Calls visit on every associative table of order n in which element n-1
  // is a zero and no other element x satisfies xy = x or yx = x. Tables are
  // labelled: isomorphic copies are all visited. If commutative_only, only
  // symmetric tables are visited.
  void for_each_nilpotent_table(
      std::size_t n, bool commutative_only,
      std::function<void(MulTable const&)> const& visit);

  // One representative per class (cfg.mode) of the nilpotent semigroups
  // matching cfg, sorted by canonical key.
  std::vector<MulTable> enumerate_nilpotent(SearchConfig const& cfg);

  std::size_t count_nilpotent(SearchConfig const& cfg);

}  // namespace coclass

#endif  // COCLASS_BRUTEFORCE_HPP_
