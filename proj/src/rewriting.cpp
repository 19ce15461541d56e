#include "coclass/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace coclass {

  Word power_word(Letter g, std::size_t k) {
    return Word(k, g);
  }

  Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // WordOrder
  ////////////////////////////////////////////////////////////////////////

  WordOrder::WordOrder(std::vector<std::size_t> weights)
      : weights_(std::move(weights)) {
    for (auto w : weights_) {
      if (w == 0) {
        throw Error("WordOrder: letter weights must be positive");
      }
    }
  }

  std::size_t WordOrder::weight(Word const& w) const {
    std::size_t total = 0;
    for (Letter x : w) {
      total += weights_.at(x);
    }
    return total;
  }

  bool WordOrder::less(Word const& a, Word const& b) const {
    auto const wa = weight(a);
    auto const wb = weight(b);
    if (wa != wb) {
      return wa < wb;
    }
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  ////////////////////////////////////////////////////////////////////////
  // RewritingSystem
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Position of the first occurrence of needle in hay, or npos.
    std::size_t find_factor(Word const& hay, Word const& needle) {
      if (needle.size() > hay.size()) {
        return npos;
      }
      auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
      return it == hay.end() ? npos
                             : static_cast<std::size_t>(it - hay.begin());
    }

    Word reduce_with(std::vector<Rule> const& rules, Word w,
                     std::size_t max_steps) {
      std::size_t steps = 0;
      bool        changed = true;
      while (changed) {
        changed = false;
        for (std::size_t r = 0; r < rules.size(); ++r) {
          auto const pos = find_factor(w, rules[r].lhs);
          if (pos == npos) {
            continue;
          }
          if (++steps > max_steps) {
            throw RewriteDiverged("rewriting exceeded "
                                  + std::to_string(max_steps) + " steps");
          }
          Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          next.insert(next.end(), rules[r].rhs.begin(), rules[r].rhs.end());
          next.insert(next.end(),
                      w.begin()
                          + static_cast<std::ptrdiff_t>(pos + rules[r].lhs.size()),
                      w.end());
          w       = std::move(next);
          changed = true;
          break;
        }
      }
      return w;
    }
  }  // namespace

  RewritingSystem::RewritingSystem(WordOrder                order,
                                   std::vector<Rule> const& equations,
                                   Limits                   limits)
      : order_(std::move(order)), limits_(limits) {
    for (auto const& eq : equations) {
      for (Letter x : eq.lhs) {
        if (x >= order_.num_letters()) {
          throw Error("RewritingSystem: letter out of range");
        }
      }
      for (Letter x : eq.rhs) {
        if (x >= order_.num_letters()) {
          throw Error("RewritingSystem: letter out of range");
        }
      }
      add_equation(eq.lhs, eq.rhs);
    }
    interreduce();
    while (resolve_overlaps()) {
      interreduce();
    }
  }

  Word RewritingSystem::reduce(Word w, std::size_t max_steps) const {
    return reduce_with(rules_, std::move(w), max_steps);
  }

  bool RewritingSystem::is_reduced(Word const& w) const {
    return std::none_of(rules_.begin(), rules_.end(), [&](Rule const& r) {
      return find_factor(w, r.lhs) != npos;
    });
  }

  void RewritingSystem::add_equation(Word a, Word b) {
    a = reduce_with(rules_, std::move(a), limits_.max_steps_reduce);
    b = reduce_with(rules_, std::move(b), limits_.max_steps_reduce);
    if (a == b) {
      return;
    }
    if (order_.less(a, b)) {
      std::swap(a, b);
    }
    if (a.size() > limits_.max_word_length) {
      throw RewriteDiverged("completion produced a rule of length "
                            + std::to_string(a.size()));
    }
    rules_.push_back(Rule{std::move(a), std::move(b)});
    if (rules_.size() > limits_.max_rules) {
      throw RewriteDiverged("completion exceeded "
                            + std::to_string(limits_.max_rules) + " rules");
    }
  }

  void RewritingSystem::interreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        bool reducible = false;
        for (std::size_t j = 0; j < rules_.size() && !reducible; ++j) {
          reducible = j != i && find_factor(rules_[i].lhs, rules_[j].lhs) != npos;
        }
        if (reducible) {
          Rule r = std::move(rules_[i]);
          rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
          add_equation(std::move(r.lhs), std::move(r.rhs));
          changed = true;
          break;
        }
      }
    }
    for (auto& r : rules_) {
      r.rhs = reduce_with(rules_, std::move(r.rhs), limits_.max_steps_reduce);
    }
  }

  bool RewritingSystem::resolve_overlaps() {
    // Snapshot: critical pairs are computed against the rules at the start
    // of the pass and resolved against the growing set.
    std::vector<Rule> const snapshot = rules_;
    bool                    added    = false;
    for (auto const& a : snapshot) {
      for (auto const& b : snapshot) {
        std::size_t const max_overlap = std::min(a.lhs.size(), b.lhs.size());
        for (std::size_t k = 1; k < max_overlap; ++k) {
          if (!std::equal(a.lhs.end() - static_cast<std::ptrdiff_t>(k),
                          a.lhs.end(), b.lhs.begin())) {
            continue;
          }
          // a.lhs = p s, b.lhs = s q; the word p s q reduces two ways.
          Word left = a.rhs;
          left.insert(left.end(), b.lhs.begin() + static_cast<std::ptrdiff_t>(k),
                      b.lhs.end());
          Word right(a.lhs.begin(),
                     a.lhs.end() - static_cast<std::ptrdiff_t>(k));
          right.insert(right.end(), b.rhs.begin(), b.rhs.end());
          std::size_t const before = rules_.size();
          add_equation(std::move(left), std::move(right));
          added = added || rules_.size() != before;
        }
      }
    }
    return added;
  }

  std::vector<Word> RewritingSystem::normal_forms(std::size_t limit) const {
    auto const        letters = static_cast<Letter>(order_.num_letters());
    std::set<Word>    seen;
    std::deque<Word>  queue;
    auto              visit = [&](Word w) {
      w = reduce(std::move(w));
      if (seen.insert(w).second) {
        if (seen.size() > limit) {
          throw RewriteDiverged("more than " + std::to_string(limit)
                                + " normal forms");
        }
        queue.push_back(std::move(w));
      }
    };
    for (Letter g = 0; g < letters; ++g) {
      visit(Word{g});
    }
    while (!queue.empty()) {
      Word x = std::move(queue.front());
      queue.pop_front();
      for (Letter g = 0; g < letters; ++g) {
        visit(concat(x, Word{g}));
      }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [this](Word const& a, Word const& b) {
      return order_.less(a, b);
    });
    return out;
  }

  RealizedSemigroup multiplication_table(RewritingSystem const& rws,
                                         std::size_t            max_elements,
                                         std::size_t            max_steps) {
    auto forms = rws.normal_forms(max_elements);
    std::stable_partition(forms.begin(), forms.end(),
                          [](Word const& w) { return w.size() == 1; });
    std::sort(forms.begin(),
              std::find_if(forms.begin(), forms.end(),
                           [](Word const& w) { return w.size() != 1; }));

    std::map<Word, Element> index;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      index.emplace(forms[i], static_cast<Element>(i));
    }
    RealizedSemigroup s;
    std::size_t const n = forms.size();
    s.entries.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Word const p  = rws.reduce(concat(forms[i], forms[j]), max_steps);
        auto const it = index.find(p);
        if (it == index.end()) {
          throw Error("multiplication_table: normal forms are not closed");
        }
        s.entries[i * n + j] = it->second;
      }
    }
    s.elements = std::move(forms);
    return s;
  }

  std::optional<Element> element_of(RealizedSemigroup const& s,
                                    RewritingSystem const& rws, Word const& w) {
    Word const nf = rws.reduce(w);
    auto const it = std::find(s.elements.begin(), s.elements.end(), nf);
    if (it == s.elements.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - s.elements.begin());
  }

}  // namespace coclass
