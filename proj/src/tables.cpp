#include "coclass/tables.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace coclass {

  IndexOutOfRange::IndexOutOfRange(std::size_t r, std::size_t c, std::size_t v)
      : Error("entry at (" + std::to_string(r) + "," + std::to_string(c)
              + ") is " + std::to_string(v) + ", out of range"),
        row(r),
        col(c),
        value(v) {}

  NotAssociative::NotAssociative(Element a, Element b, Element c)
      : Error("not associative: (" + std::to_string(a) + "*"
              + std::to_string(b) + ")*" + std::to_string(c) + " != "
              + std::to_string(a) + "*(" + std::to_string(b) + "*"
              + std::to_string(c) + ")"),
        i(a),
        j(b),
        k(c) {}

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(std::initializer_list<Element> init)
      : ElementSet(std::vector<Element>(init)) {}

  ElementSet::ElementSet(std::vector<Element> members)
      : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  bool ElementSet::contains(Element x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  bool ElementSet::is_subset_of(ElementSet const& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  ElementSet ElementSet::minus(ElementSet const& other) const {
    ElementSet result;
    std::set_difference(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(result.members_));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // MulTable
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_shape(std::size_t n, std::vector<Element> const& entries) {
      if (n == 0) {
        throw Error("table order must be positive");
      }
      if (entries.size() != n * n) {
        throw Error("expected " + std::to_string(n * n) + " entries, got "
                    + std::to_string(entries.size()));
      }
      for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        if (entries[idx] >= n) {
          throw IndexOutOfRange(idx / n, idx % n, entries[idx]);
        }
      }
    }
  }  // namespace

  ElementSet MulTable::all() const {
    std::vector<Element> v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = static_cast<Element>(i);
    }
    return ElementSet(std::move(v));
  }

  MulTable MulTable::trusted(std::size_t n, std::vector<Element> entries) {
    check_shape(n, entries);
    return MulTable(n, std::move(entries));
  }

  MulTable validate_table(std::size_t n, std::vector<Element> entries) {
    check_shape(n, entries);
    MulTable t(n, std::move(entries));
    auto const m = static_cast<Element>(n);
    for (Element i = 0; i < m; ++i) {
      for (Element j = 0; j < m; ++j) {
        Element const ij = t(i, j);
        for (Element k = 0; k < m; ++k) {
          if (t(ij, k) != t(i, t(j, k))) {
            throw NotAssociative(i, j, k);
          }
        }
      }
    }
    return t;
  }

  ElementSet product_set(MulTable const& t, ElementSet const& a,
                         ElementSet const& b) {
    std::vector<bool> seen(t.order(), false);
    for (Element x : a) {
      for (Element y : b) {
        seen[t(x, y)] = true;
      }
    }
    std::vector<Element> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) {
        out.push_back(static_cast<Element>(i));
      }
    }
    return ElementSet(std::move(out));
  }

  ElementSet power_ideal(MulTable const& t, std::size_t k) {
    if (k == 0) {
      throw Error("power_ideal requires k >= 1");
    }
    ElementSet const s  = t.all();
    ElementSet       sk = s;
    for (std::size_t i = 1; i < k; ++i) {
      ElementSet next = product_set(t, s, sk);
      if (next == sk) {
        break;  // the chain is stationary from here on
      }
      sk = std::move(next);
    }
    return sk;
  }

  ClassInfo analyze(MulTable const& t) {
    ClassInfo  info;
    ElementSet s = t.all();
    // chain[k-1] = S^k
    std::vector<ElementSet> chain{s};
    while (chain.back().size() > 1) {
      ElementSet next = product_set(t, s, chain.back());
      if (next == chain.back()) {
        return info;  // stationary above size 1: not nilpotent
      }
      chain.push_back(std::move(next));
    }
    info.is_nilpotent = true;
    std::size_t const c = chain.size() - 1;
    info.class_c        = c;
    info.coclass_r      = t.order() - 1 - c;
    info.zero           = chain.back()[0];
    for (std::size_t k = 0; k < c; ++k) {
      info.layers.push_back(chain[k].minus(chain[k + 1]));
    }
    info.layers.push_back(chain.back());
    if (t.order() >= 2) {
      info.min_gen_set = info.layers.front();
    }
    return info;
  }

  MulTable dual(MulTable const& t) {
    std::size_t const    n = t.order();
    std::vector<Element> e(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        e[i * n + j] = t(j, i);
      }
    }
    return MulTable::trusted(n, std::move(e));
  }

  bool is_commutative(MulTable const& t) {
    auto const n = static_cast<Element>(t.order());
    for (Element i = 0; i < n; ++i) {
      for (Element j = i + 1; j < n; ++j) {
        if (t(i, j) != t(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet subsemigroup_generated(MulTable const& t, ElementSet const& gens) {
    if (gens.empty()) {
      throw Error("subsemigroup_generated requires a non-empty generating set");
    }
    std::vector<bool>    in(t.order(), false);
    std::vector<Element> elts;
    for (Element g : gens) {
      if (g >= t.order()) {
        throw IndexOutOfRange(g, 0, g);
      }
      in[g] = true;
      elts.push_back(g);
    }
    // Right Cayley closure: every element is a product of generators.
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (Element g : gens) {
        Element const x = t(elts[i], g);
        if (!in[x]) {
          in[x] = true;
          elts.push_back(x);
        }
      }
    }
    return ElementSet(std::move(elts));
  }

  Element power(MulTable const& t, Element s, std::size_t k) {
    Element x = s;
    for (std::size_t i = 1; i < k; ++i) {
      x = t(x, s);
    }
    return x;
  }

  Element monogenic_witness(MulTable const& t) {
    ClassInfo const info = analyze(t);
    if (!info.is_nilpotent) {
      throw PremiseNotSatisfied("table is not nilpotent");
    }
    std::size_t const c = *info.class_c;
    if (c < 2) {
      throw PremiseNotSatisfied("class " + std::to_string(c) + " < 2");
    }
    if (info.layers[c - 2].size() != 1) {
      throw PremiseNotSatisfied("|S^(c-1) \\ S^c| = "
                                + std::to_string(info.layers[c - 2].size()));
    }
    for (Element s = 0; s < t.order(); ++s) {
      if (power(t, s, c) != *info.zero) {
        return s;
      }
    }
    // Unreachable for a nilpotent table satisfying the premise.
    throw Error("monogenic_witness: no witness found");
  }

  MulTable relabel(MulTable const& t, std::span<Element const> sigma) {
    std::size_t const n = t.order();
    if (sigma.size() != n) {
      throw Error("relabel: permutation has wrong length");
    }
    std::vector<Element> e(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        e[sigma[i] * n + sigma[j]] = sigma[t(i, j)];
      }
    }
    return MulTable::trusted(n, std::move(e));
  }

  std::string format_table(MulTable const& t) {
    std::string out = std::to_string(t.order()) + "\n";
    auto const  n   = static_cast<Element>(t.order());
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (j > 0) {
          out += ' ';
        }
        out += std::to_string(t(i, j));
      }
      out += '\n';
    }
    return out;
  }

  namespace {
    std::vector<std::string_view> split_lines(std::string_view text) {
      std::vector<std::string_view> lines;
      while (!text.empty()) {
        auto const pos = text.find('\n');
        lines.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) {
          break;
        }
        text.remove_prefix(pos + 1);
      }
      return lines;
    }

    std::vector<std::size_t> parse_numbers(std::string_view line,
                                           std::size_t      lineno) {
      std::vector<std::size_t> nums;
      std::size_t              pos = 0;
      while (pos < line.size()) {
        if (line[pos] == ' ') {
          ++pos;
          continue;
        }
        std::size_t value = 0;
        auto [ptr, ec]
            = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ')) {
          throw ParseError("line " + std::to_string(lineno)
                           + ": expected non-negative integers");
        }
        nums.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
      }
      return nums;
    }
  }  // namespace

  MulTable parse_table(std::string_view text) {
    auto lines = split_lines(text);
    // tolerate a trailing empty line produced by the final LF
    while (!lines.empty() && lines.back().empty()) {
      lines.pop_back();
    }
    if (lines.empty()) {
      throw ParseError("empty table file");
    }
    auto const header = parse_numbers(lines[0], 1);
    if (header.size() != 1 || header[0] == 0) {
      throw ParseError("line 1: expected a single positive order");
    }
    std::size_t const n = header[0];
    if (lines.size() != n + 1) {
      throw ParseError("expected " + std::to_string(n) + " rows, got "
                       + std::to_string(lines.size() - 1));
    }
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      auto const row = parse_numbers(lines[r + 1], r + 2);
      if (row.size() != n) {
        throw ParseError("line " + std::to_string(r + 2) + ": expected "
                         + std::to_string(n) + " entries");
      }
      for (auto v : row) {
        if (v >= n) {
          throw IndexOutOfRange(r, entries.size() % n, v);
        }
        entries.push_back(static_cast<Element>(v));
      }
    }
    return validate_table(n, std::move(entries));
  }

  MulTable zero_semigroup(std::size_t n) {
    return MulTable::trusted(
        n, std::vector<Element>(n * n, static_cast<Element>(n - 1)));
  }

  MulTable left_zero_semigroup(std::size_t n) {
    std::vector<Element> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] = static_cast<Element>(i);
      }
    }
    return MulTable::trusted(n, std::move(e));
  }

}  // namespace coclass
