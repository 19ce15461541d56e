// Finite semigroups given by complete multiplication tables.
//
// Elements are the indices 0..n-1 with no distinguished position for the
// zero; the zero of a nilpotent table is discovered by analyze().

#ifndef COCLASS_TABLES_HPP_
#define COCLASS_TABLES_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coclass {

  using Element = std::uint32_t;

  // Base class for every error thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class IndexOutOfRange : public Error {
   public:
    IndexOutOfRange(std::size_t row, std::size_t col, std::size_t value);
    std::size_t row, col, value;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(Element i, Element j, Element k);
    Element i, j, k;
  };

  class PremiseNotSatisfied : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // Sorted, duplicate-free set of element indices.
  class ElementSet {
   public:
    ElementSet() = default;
    ElementSet(std::initializer_list<Element> init);
    explicit ElementSet(std::vector<Element> members);

    [[nodiscard]] bool contains(Element x) const;
    [[nodiscard]] bool is_subset_of(ElementSet const& other) const;
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] Element operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }
    [[nodiscard]] std::vector<Element> const& members() const noexcept {
      return members_;
    }

    // Elements of *this that are not in other.
    [[nodiscard]] ElementSet minus(ElementSet const& other) const;

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::vector<Element> members_;
  };

  class MulTable {
   public:
    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] Element operator()(Element i, Element j) const noexcept {
      return entries_[i * n_ + j];
    }
    [[nodiscard]] std::span<Element const> entries() const noexcept {
      return entries_;
    }
    [[nodiscard]] ElementSet all() const;

    // For tables whose associativity is established by construction
    // (e.g. the backtracking search). Entries are range-checked only.
    static MulTable trusted(std::size_t n, std::vector<Element> entries);

    friend bool operator==(MulTable const&, MulTable const&) = default;

   private:
    MulTable(std::size_t n, std::vector<Element> entries)
        : n_(n), entries_(std::move(entries)) {}
    friend MulTable validate_table(std::size_t, std::vector<Element>);

    std::size_t          n_ = 0;
    std::vector<Element> entries_;
  };

  struct ClassInfo {
    bool is_nilpotent = false;
    // Present only when is_nilpotent.
    std::optional<std::size_t> class_c;
    std::optional<std::size_t> coclass_r;
    std::optional<Element>     zero;
    // layers[k-1] = S^k \ S^{k+1} for k = 1..c; the last entry is the zero
    // singleton S^{c+1}. Empty when not nilpotent.
    std::vector<ElementSet> layers;
    // S \ S^2 when nilpotent and n >= 2, empty otherwise.
    ElementSet min_gen_set;
  };

  // Checks ranges and associativity (all n^3 triples). Throws
  // IndexOutOfRange or NotAssociative for the first violation in
  // lexicographic order.
  MulTable validate_table(std::size_t n, std::vector<Element> entries);

  // S^k, computed iteratively as S * S^{k-1}.
  ElementSet power_ideal(MulTable const& t, std::size_t k);

  // The product set A * B.
  ElementSet product_set(MulTable const& t, ElementSet const& a,
                         ElementSet const& b);

  ClassInfo analyze(MulTable const& t);

  // The table of the dual semigroup, i.e. the transpose.
  MulTable dual(MulTable const& t);

  bool is_commutative(MulTable const& t);

  // Least subsemigroup containing gens.
  ElementSet subsemigroup_generated(MulTable const& t, ElementSet const& gens);

  // Smallest element generating a subsemigroup of the same class as t.
  // Requires class c >= 2 and |S^{c-1} \ S^c| == 1.
  Element monogenic_witness(MulTable const& t);

  // The table of sigma . t, where sigma maps old element i to sigma[i].
  MulTable relabel(MulTable const& t, std::span<Element const> sigma);

  // s^k by iterated right multiplication, k >= 1.
  Element power(MulTable const& t, Element s, std::size_t k);

  // Plain-text table format: the order on the first line, then one row per
  // line with space separated 0-based entries. LF line endings.
  std::string format_table(MulTable const& t);
  MulTable    parse_table(std::string_view text);

  // Common small tables.
  MulTable zero_semigroup(std::size_t n);
  MulTable left_zero_semigroup(std::size_t n);

}  // namespace coclass

#endif  // COCLASS_TABLES_HPP_
