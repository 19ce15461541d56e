#include "coclass/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coclass {

  std::string CanonicalKey::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string           out;
    out.reserve(2 * bytes.size());
    for (auto b : bytes) {
      out += digits[b >> 4];
      out += digits[b & 0xF];
    }
    return out;
  }

  std::vector<Element> traversal_labels(MulTable const&             t,
                                        std::vector<Element> const& gens) {
    std::size_t const    n = t.order();
    auto const           unlabelled = static_cast<Element>(n);
    std::vector<Element> label(n, unlabelled);
    std::vector<Element> by_label;  // inverse of label
    by_label.reserve(n);

    auto visit = [&](Element x) {
      if (label[x] == unlabelled) {
        label[x] = static_cast<Element>(by_label.size());
        by_label.push_back(x);
      }
    };

    if (gens.empty()) {
      visit(0);  // trivial semigroup
    }
    for (Element g : gens) {
      visit(g);
    }
    // Pairs (i, j) with j <= i in label order; i*j is evaluated before j*i.
    for (std::size_t i = 0; i < by_label.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        visit(t(by_label[i], by_label[j]));
        if (j != i) {
          visit(t(by_label[j], by_label[i]));
        }
      }
    }
    if (by_label.size() != n) {
      throw Error("traversal_labels: generators do not generate the table");
    }
    return label;
  }

  namespace {
    std::vector<std::uint8_t> relabelled_bytes(MulTable const&             t,
                                               std::vector<Element> const& label) {
      std::size_t const         n = t.order();
      std::vector<std::uint8_t> out(n * n + 1);
      out[0] = static_cast<std::uint8_t>(n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          out[1 + label[i] * n + label[j]]
              = static_cast<std::uint8_t>(label[t(i, j)]);
        }
      }
      return out;
    }

    std::uint64_t factorial_capped(std::size_t g) {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i <= g; ++i) {
        f *= i;
        if (f > kMaxOrderings) {
          return kMaxOrderings + 1;
        }
      }
      return f;
    }

    CanonicalKey iso_key(MulTable const& t) {
      if (t.order() > 255) {
        throw Error("canonical_key: order exceeds 255");
      }
      ClassInfo const info = analyze(t);
      if (!info.is_nilpotent) {
        throw NotNilpotent("canonical_key: table is not nilpotent");
      }
      std::vector<Element> gens = info.min_gen_set.members();
      if (factorial_capped(gens.size()) > kMaxOrderings) {
        throw GeneratorBound("canonical_key: " + std::to_string(gens.size())
                             + "! generator orderings exceed the bound");
      }
      CanonicalKey best;
      do {
        auto candidate = relabelled_bytes(t, traversal_labels(t, gens));
        if (best.bytes.empty() || candidate < best.bytes) {
          best.bytes = std::move(candidate);
        }
      } while (std::next_permutation(gens.begin(), gens.end()));
      return best;
    }
  }  // namespace

  CanonicalKey canonical_key(MulTable const& t, CountMode mode) {
    CanonicalKey key = iso_key(t);
    if (mode == CountMode::UpToAntiIso) {
      key = std::min(key, iso_key(dual(t)));
    }
    return key;
  }

  bool are_equivalent(MulTable const& a, MulTable const& b, CountMode mode) {
    if (a.order() != b.order()) {
      // still validates both inputs
      (void) canonical_key(a, mode);
      (void) canonical_key(b, mode);
      return false;
    }
    return canonical_key(a, mode) == canonical_key(b, mode);
  }

  bool is_self_dual(MulTable const& t) {
    return are_equivalent(t, dual(t), CountMode::UpToIso);
  }

  std::vector<MulTable> dedup(std::vector<MulTable> const& tables,
                              CountMode                    mode) {
    std::map<CanonicalKey, std::size_t> first;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      first.try_emplace(canonical_key(tables[i], mode), i);
    }
    std::vector<MulTable> out;
    out.reserve(first.size());
    for (auto const& [key, idx] : first) {
      out.push_back(tables[idx]);
    }
    return out;
  }

}  // namespace coclass
