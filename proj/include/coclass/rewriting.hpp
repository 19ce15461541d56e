// String rewriting for finitely presented semigroups that are known to be
// finite: Knuth-Bendix completion under a weighted length-lexicographic
// order, and normal-form enumeration.
//
// Only what realization of the classified families needs; there is no
// attempt at being a general purpose engine.

#ifndef COCLASS_REWRITING_HPP_
#define COCLASS_REWRITING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coclass/tables.hpp"

namespace coclass {

  using Letter = std::uint8_t;
  using Word   = std::vector<Letter>;

  // u^k as a word over letter g.
  Word power_word(Letter g, std::size_t k);
  Word concat(Word a, Word const& b);

  class RewriteDiverged : public Error {
   public:
    using Error::Error;
  };

  // Weighted shortlex: total weight, then length, then lexicographic on
  // letter indices. Positive weights make it a reduction order.
  class WordOrder {
   public:
    explicit WordOrder(std::vector<std::size_t> weights);

    [[nodiscard]] bool less(Word const& a, Word const& b) const;
    [[nodiscard]] std::size_t weight(Word const& w) const;
    [[nodiscard]] std::size_t num_letters() const noexcept {
      return weights_.size();
    }

   private:
    std::vector<std::size_t> weights_;
  };

  struct Rule {
    Word lhs;
    Word rhs;
  };

  class RewritingSystem {
   public:
    struct Limits {
      std::size_t max_rules        = 4096;
      std::size_t max_word_length  = 512;
      std::size_t max_steps_reduce = 100000;
    };

    // Runs completion on the given equations. Throws RewriteDiverged when a
    // limit is hit.
    RewritingSystem(WordOrder order, std::vector<Rule> const& equations,
                    Limits limits);
    RewritingSystem(WordOrder order, std::vector<Rule> const& equations)
        : RewritingSystem(std::move(order), equations, Limits{}) {}

    // Normal form of w. max_steps caps the number of rule applications.
    [[nodiscard]] Word reduce(Word w, std::size_t max_steps) const;
    [[nodiscard]] Word reduce(Word w) const {
      return reduce(std::move(w), limits_.max_steps_reduce);
    }
    [[nodiscard]] bool is_reduced(Word const& w) const;

    [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
      return rules_;
    }
    [[nodiscard]] WordOrder const& order() const noexcept { return order_; }

    // All normal forms of the semigroup generated by the letters, in
    // increasing word order. Throws RewriteDiverged if there are more than
    // limit of them.
    [[nodiscard]] std::vector<Word> normal_forms(std::size_t limit) const;

   private:
    void add_equation(Word a, Word b);
    void interreduce();
    bool resolve_overlaps();

    WordOrder         order_;
    Limits            limits_;
    std::vector<Rule> rules_;
  };

  // The multiplication table of a finite semigroup given by a complete
  // rewriting system. Elements are ordered: the letters first, then the
  // other normal forms in word order. max_steps caps the rewrites per
  // product.
  struct RealizedSemigroup {
    std::vector<Word>    elements;
    std::vector<Element> entries;  // row-major, not yet validated
  };
  RealizedSemigroup multiplication_table(RewritingSystem const& rws,
                                         std::size_t            max_elements,
                                         std::size_t            max_steps);

  // Element index of w's normal form, if w's normal form is an element.
  std::optional<Element> element_of(RealizedSemigroup const& s,
                                    RewritingSystem const& rws, Word const& w);

}  // namespace coclass

#endif  // COCLASS_REWRITING_HPP_
