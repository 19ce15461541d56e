// Presentations of the nilpotent semigroups of coclass 0, 1 and 2, and their
// realization as certified multiplication tables.

#ifndef COCLASS_FAMILIES_HPP_
#define COCLASS_FAMILIES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coclass/rewriting.hpp"
#include "coclass/tables.hpp"

namespace coclass {

  class UnsupportedOrder : public Error {
   public:
    using Error::Error;
  };

  class InvalidParams : public Error {
   public:
    using Error::Error;
  };

  class CertificationFailed : public Error {
   public:
    using Error::Error;
  };

  enum class Family {
    Coclass0,
    // coclass 1
    H,
    J,
    X,
    N1,
    N2,
    N4a,
    N4b,
    // coclass 2, two generators
    T1_i,
    T2_k,
    T2_ik,
    T3,
    T3_i,
    T4_k,
    T4_ik,
    T4_ijk,
    T5_k,
    T5_ik,
    T5_ijk,
    // class c, coclass r, r + 1 generators
    LemH,
    LemJ,
    LemX,
    LemN,
    // coclass 2, three generators, built from two coclass 1 semigroups
    Comp_i,
    Comp_ii,
    Comp_iii,
    Comp_iv,
  };

  std::string_view         to_string(Family f);
  std::optional<Family>    family_from_string(std::string_view s);

  struct Relation {
    Word lhs;
    Word rhs;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation>    relations;

    Family                                           family = Family::Coclass0;
    std::vector<std::pair<std::string, int>>         params;
    // Named constituents, e.g. V=H3 W=dual(N1) for the compositions.
    std::vector<std::pair<std::string, std::string>> parts;

    std::size_t expected_order      = 0;
    std::size_t expected_coclass    = 0;
    bool        claimed_self_dual   = false;
    bool        claimed_commutative = false;

    [[nodiscard]] std::size_t num_generators() const noexcept {
      return generators.size();
    }
    [[nodiscard]] std::optional<int> param(std::string_view name) const;
    // Short human readable name such as "H3", "T4,2,3,2" or "N^1_{0,1,2}".
    [[nodiscard]] std::string name() const;
  };

  ////////////////////////////////////////////////////////////////////////
  // The classified lists
  ////////////////////////////////////////////////////////////////////////

  // <u | u^n = u^{n+1}>
  Presentation coclass0(std::size_t n);

  // Order n >= 4. For n >= 5 there are n + floor(n/2) entries; n = 4 has 8.
  std::vector<Presentation> coclass1_list(std::size_t n);

  // Order n >= 7, coclass 2, minimal generating set of size 2.
  std::vector<Presentation> coclass2_gen2_list(std::size_t n);

  // Class c >= 3, coclass r >= 1, r + 1 generators, at least r of which
  // generate a monogenic subsemigroup of class c.
  std::vector<Presentation> lemma_family_list(std::size_t c, std::size_t r);

  // Order n >= 6, coclass 2, minimal generating set of size 3.
  std::vector<Presentation> coclass2_gen3_list(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Realization
  ////////////////////////////////////////////////////////////////////////

  // The semigroup defined by p as a multiplication table whose elements
  // 0..g-1 are the generators. Certifies associativity, the relations,
  // generation, and the expected order; throws CertificationFailed (or
  // RewriteDiverged) otherwise.
  MulTable realize(Presentation const& p);

  // Same, also returning the normal-form word of every element.
  struct Realization {
    MulTable          table;
    std::vector<Word> words;
  };
  Realization realize_with_words(Presentation const& p);

  // Evaluates a word in t with letter g mapped to assignment[g].
  Element evaluate(MulTable const& t, Word const& w,
                   std::vector<Element> const& assignment);

  // True iff every relation of p holds in t under the assignment and the
  // assigned elements generate t.
  bool satisfies(MulTable const& t, Presentation const& p,
                 std::vector<Element> const& assignment);

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  // "u^3v" style rendering of a word.
  std::string format_word(Word const& w, std::vector<std::string> const& names);

  // <u,v | u^6=u^7, uv=u^3, ...>
  std::string format_presentation(Presentation const& p);

  // family=H k=3 n=7 selfdual=true commutative=true
  std::string format_metadata(Presentation const& p);

  // Parses "<...>" into generators and relations only.
  Presentation parse_presentation(std::string_view text);

  // Parses a listing line "<...> family=..." as produced by the cli, restoring
  // the metadata as well.
  Presentation parse_listing_line(std::string_view line);

}  // namespace coclass

#endif  // COCLASS_FAMILIES_HPP_
