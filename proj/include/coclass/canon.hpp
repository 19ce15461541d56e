// Canonical labelling of nilpotent multiplication tables.
//
// Any isomorphism between nilpotent semigroups maps the unique minimal
// generating set S \ S^2 onto itself and is determined by that bijection.
// The key therefore only has to range over the g! orderings of the
// generators, with every other label fixed by a deterministic traversal.

#ifndef COCLASS_CANON_HPP_
#define COCLASS_CANON_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "coclass/tables.hpp"

namespace coclass {

  enum class CountMode { UpToIso, UpToAntiIso };

  class NotNilpotent : public Error {
   public:
    using Error::Error;
  };

  class GeneratorBound : public Error {
   public:
    using Error::Error;
  };

  // [n] followed by the n*n entries of the canonically relabelled table.
  struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    [[nodiscard]] std::string hex() const;

    friend bool operator==(CanonicalKey const&, CanonicalKey const&) = default;
    friend auto operator<=>(CanonicalKey const&, CanonicalKey const&) = default;
  };

  // Largest admissible number of generator orderings.
  inline constexpr std::uint64_t kMaxOrderings = 1'000'000;

  CanonicalKey canonical_key(MulTable const& t, CountMode mode);

  // The relabelling of t induced by the generator order gens: gens[i] gets
  // label i and the remaining elements are labelled by the pair scan. Returns
  // label[x] for every element x. gens must generate t.
  std::vector<Element> traversal_labels(MulTable const&             t,
                                        std::vector<Element> const& gens);

  bool are_equivalent(MulTable const& a, MulTable const& b, CountMode mode);

  bool is_self_dual(MulTable const& t);

  // One representative per class, sorted by ascending key. The first
  // occurrence of each class is kept.
  std::vector<MulTable> dedup(std::vector<MulTable> const& tables,
                              CountMode                    mode);

}  // namespace coclass

#endif  // COCLASS_CANON_HPP_
