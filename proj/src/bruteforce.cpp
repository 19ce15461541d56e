#include "coclass/bruteforce.hpp"

#include <map>
#include <utility>

namespace coclass {

  namespace {
    constexpr int kUnset = -1;

    class TableSearch {
     public:
      TableSearch(std::size_t n, bool commutative_only,
                  std::function<void(MulTable const&)> const& visit)
          : n_(static_cast<int>(n)),
            zero_(static_cast<int>(n) - 1),
            symmetric_(commutative_only),
            visit_(visit),
            t_(n * n, kUnset) {
        for (int x = 0; x < n_; ++x) {
          at(zero_, x) = zero_;
          at(x, zero_) = zero_;
        }
        for (int i = 0; i < zero_; ++i) {
          for (int j = symmetric_ ? i : 0; j < zero_; ++j) {
            cells_.emplace_back(i, j);
          }
        }
      }

      void run() {
        search(0);
      }

     private:
      int& at(int i, int j) {
        return t_[static_cast<std::size_t>(i * n_ + j)];
      }
      int get(int i, int j) const {
        return t_[static_cast<std::size_t>(i * n_ + j)];
      }

      // Checks every associativity triple that uses cell (a, b) and whose
      // other cells are all set.
      bool consistent(int a, int b) const {
        int const v = get(a, b);
        for (int x = 0; x < n_; ++x) {
          // (a b) x = a (b x)
          int const vx = get(v, x), bx = get(b, x);
          if (vx != kUnset && bx != kUnset) {
            int const r = get(a, bx);
            if (r != kUnset && r != vx) {
              return false;
            }
          }
          // (x a) b = x (a b)
          int const xa = get(x, a), xv = get(x, v);
          if (xa != kUnset && xv != kUnset) {
            int const l = get(xa, b);
            if (l != kUnset && l != xv) {
              return false;
            }
          }
        }
        for (int i = 0; i < n_; ++i) {
          for (int j = 0; j < n_; ++j) {
            // (i j) b = i (j b) with i j = a
            if (get(i, j) == a) {
              int const jb = get(j, b);
              if (jb != kUnset) {
                int const r = get(i, jb);
                if (r != kUnset && r != v) {
                  return false;
                }
              }
            }
            // (a i) j = a (i j) with i j = b
            if (get(i, j) == b) {
              int const ai = get(a, i);
              if (ai != kUnset) {
                int const l = get(ai, j);
                if (l != kUnset && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      void search(std::size_t idx) {
        if (idx == cells_.size()) {
          std::vector<Element> entries(t_.begin(), t_.end());
          visit_(MulTable::trusted(static_cast<std::size_t>(n_),
                                   std::move(entries)));
          return;
        }
        auto const [a, b] = cells_[idx];
        for (int v = 0; v < n_; ++v) {
          // xy = x or xy = y forces x = 0 or y = 0 in a nilpotent semigroup
          if (v == a || v == b) {
            continue;
          }
          at(a, b) = v;
          if (a != b && symmetric_) {
            at(b, a) = v;
          }
          if (consistent(a, b) && (a == b || !symmetric_ || consistent(b, a))) {
            search(idx + 1);
          }
        }
        at(a, b) = kUnset;
        if (symmetric_) {
          at(b, a) = kUnset;
        }
      }

      int                                         n_;
      int                                         zero_;
      bool                                        symmetric_;
      std::function<void(MulTable const&)> const& visit_;
      std::vector<int>                            t_;
      std::vector<std::pair<int, int>>            cells_;
    };

    void check_order(std::size_t n) {
      if (n == 0) {
        throw Error("bruteforce: order must be positive");
      }
      if (n > kMaxBruteforceOrder) {
        throw OrderTooLarge("bruteforce: order " + std::to_string(n)
                            + " exceeds " + std::to_string(kMaxBruteforceOrder));
      }
    }
  }  // namespace

  void for_each_nilpotent_table(
      std::size_t n, bool commutative_only,
      std::function<void(MulTable const&)> const& visit) {
    check_order(n);
    TableSearch(n, commutative_only, visit).run();
  }

  std::vector<MulTable> enumerate_nilpotent(SearchConfig const& cfg) {
    check_order(cfg.order);
    std::map<CanonicalKey, MulTable> reps;
    for_each_nilpotent_table(
        cfg.order, cfg.commutative_only, [&](MulTable const& t) {
          ClassInfo const info = analyze(t);
          if (!info.is_nilpotent) {
            return;
          }
          if (cfg.coclass_filter && *info.coclass_r != *cfg.coclass_filter) {
            return;
          }
          if (cfg.gen_size_filter
              && info.min_gen_set.size() != *cfg.gen_size_filter) {
            return;
          }
          reps.try_emplace(canonical_key(t, cfg.mode), t);
        });
    std::vector<MulTable> out;
    out.reserve(reps.size());
    for (auto& [key, t] : reps) {
      out.push_back(std::move(t));
    }
    return out;
  }

  std::size_t count_nilpotent(SearchConfig const& cfg) {
    return enumerate_nilpotent(cfg).size();
  }

}  // namespace coclass
