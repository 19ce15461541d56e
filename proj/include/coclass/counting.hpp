// Closed-form counts of nilpotent semigroups of coclass 1 and 2, and the
// published reference table for orders 3..13.

#ifndef COCLASS_COUNTING_HPP_
#define COCLASS_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coclass/tables.hpp"

namespace coclass {

  enum class Convention { UpToAntiIso, UpToIso, CommutativeUpToIso };

  // Which semigroups are counted: coclass 1, all of coclass 2, or coclass 2
  // with a minimal generating set of size 2 or 3.
  enum class CountType { Coclass1, Coclass2, Coclass2Gen2, Coclass2Gen3 };

  struct CountQuery {
    CountType   type;
    std::size_t n;
    Convention  mode;
  };

  class OutOfDomain : public Error {
   public:
    using Error::Error;
  };

  class NotTabulated : public Error {
   public:
    using Error::Error;
  };

  std::string_view to_string(Convention c);
  std::string_view to_string(CountType t);
  std::optional<Convention> convention_from_string(std::string_view s);

  // Least order for which the formula of the given type holds.
  std::size_t formula_min_order(CountType t);

  std::int64_t formula_count(CountQuery const& q);

  // Published values for orders 3..13.
  std::int64_t table1_reference(CountType t, Convention mode, std::size_t n);

}  // namespace coclass

#endif  // COCLASS_COUNTING_HPP_
