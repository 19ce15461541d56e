#include "coclass/verify.hpp"

#include <algorithm>
#include <set>

#include "coclass/bruteforce.hpp"

namespace coclass {

  std::size_t families_min_order(CountType t) {
    switch (t) {
      case CountType::Coclass1:
        return 4;
      case CountType::Coclass2:
      case CountType::Coclass2Gen2:
        return 7;
      case CountType::Coclass2Gen3:
        return 6;
    }
    return 0;
  }

  std::vector<Presentation> family_list(CountType t, std::size_t n) {
    switch (t) {
      case CountType::Coclass1:
        return coclass1_list(n);
      case CountType::Coclass2Gen2:
        return coclass2_gen2_list(n);
      case CountType::Coclass2Gen3:
        return coclass2_gen3_list(n);
      case CountType::Coclass2: {
        auto out  = coclass2_gen2_list(n);
        auto more = coclass2_gen3_list(n);
        out.insert(out.end(), more.begin(), more.end());
        return out;
      }
    }
    return {};
  }

  std::int64_t ModeCounts::get(Convention c) const {
    switch (c) {
      case Convention::UpToAntiIso:
        return anti_iso;
      case Convention::UpToIso:
        return iso;
      case Convention::CommutativeUpToIso:
        return commutative;
    }
    return 0;
  }

  ModeCounts claimed_counts(std::vector<Presentation> const& list) {
    ModeCounts c;
    for (auto const& p : list) {
      c.anti_iso += 1;
      c.iso += p.claimed_self_dual ? 1 : 2;
      c.commutative += p.claimed_commutative ? 1 : 0;
    }
    return c;
  }

  ModeCounts realized_counts(std::vector<MulTable> const& tables) {
    std::set<CanonicalKey> anti, iso, comm;
    for (auto const& t : tables) {
      auto const k  = canonical_key(t, CountMode::UpToIso);
      auto const kd = canonical_key(dual(t), CountMode::UpToIso);
      anti.insert(std::min(k, kd));
      iso.insert(k);
      iso.insert(kd);
      if (is_commutative(t)) {
        comm.insert(k);
      }
    }
    return {static_cast<std::int64_t>(anti.size()),
            static_cast<std::int64_t>(iso.size()),
            static_cast<std::int64_t>(comm.size())};
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool matches(CountType t, ClassInfo const& info) {
      if (!info.is_nilpotent) {
        return false;
      }
      std::size_t const r = *info.coclass_r;
      std::size_t const g = info.min_gen_set.size();
      switch (t) {
        case CountType::Coclass1:
          return r == 1;
        case CountType::Coclass2:
          return r == 2;
        case CountType::Coclass2Gen2:
          return r == 2 && g == 2;
        case CountType::Coclass2Gen3:
          return r == 2 && g == 3;
      }
      return false;
    }
  }  // namespace

  std::vector<MulTable> Census::select(CountType t) const {
    std::vector<MulTable> out;
    for (auto const& [key, table] : by_iso_key) {
      if (matches(t, analyze(table))) {
        out.push_back(table);
      }
    }
    return out;
  }

  ModeCounts Census::counts(CountType t) const {
    return realized_counts(select(t));
  }

  Census bruteforce_census(std::size_t n) {
    Census c;
    c.order = n;
    for_each_nilpotent_table(n, false, [&](MulTable const& t) {
      if (analyze(t).is_nilpotent) {
        c.by_iso_key.try_emplace(canonical_key(t, CountMode::UpToIso), t);
      }
    });
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural properties
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> structural_violation(MulTable const& t) {
    ClassInfo const info = analyze(t);
    if (!info.is_nilpotent) {
      return "not nilpotent";
    }
    std::size_t const n = t.order();
    std::size_t const c = *info.class_c;
    if (n == 1) {
      return std::nullopt;
    }
    if (info.layers.size() != c + 1) {
      return "expected " + std::to_string(c + 1) + " layers including zero";
    }
    std::vector<int> seen(n, 0);
    for (std::size_t k = 0; k <= c; ++k) {
      if (info.layers[k].size() == 0) {
        return "layer " + std::to_string(k + 1) + " is empty";
      }
      for (Element x : info.layers[k]) {
        if (seen[x]++ != 0) {
          return "element " + std::to_string(x) + " lies in two layers";
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      return "layers do not cover the semigroup";
    }
    for (std::size_t k = 0; k + 1 < c; ++k) {
      if (info.layers[k].size() == 1 && info.layers[k + 1].size() != 1) {
        return "layer " + std::to_string(k + 2)
               + " has more than one element after a singleton layer";
      }
    }

    ElementSet const& gens = info.min_gen_set;
    if (!(gens == info.layers[0])) {
      return "minimal generating set is not the first layer";
    }
    if (subsemigroup_generated(t, gens).size() != n) {
      return "minimal generating set does not generate";
    }
    for (Element g : gens) {
      if (n == 2) {
        break;
      }
      std::vector<Element> rest;
      for (Element x = 0; x < n; ++x) {
        if (x != g) {
          rest.push_back(x);
        }
      }
      if (subsemigroup_generated(t, ElementSet(rest)).contains(g)) {
        return "generator " + std::to_string(g) + " is a product of others";
      }
    }
    // Layer k consists of products of exactly k generators.
    ElementSet products = gens;
    for (std::size_t k = 1; k <= c; ++k) {
      if (!info.layers[k - 1].is_subset_of(products)) {
        return "layer " + std::to_string(k) + " is not made of products of "
               + std::to_string(k) + " generators";
      }
      products = product_set(t, products, gens);
    }

    if (c >= 2 && info.layers[c - 2].size() == 1) {
      Element const s   = monogenic_witness(t);
      auto const    sub = subsemigroup_generated(t, ElementSet({s}));
      if (sub.size() != c + 1 || power(t, s, c) == *info.zero) {
        return "monogenic witness " + std::to_string(s) + " does not have class "
               + std::to_string(c);
      }
    }
    return std::nullopt;
  }

  bool generator_bijection_exists(MulTable const& a, MulTable const& b_in,
                                  bool anti) {
    std::size_t const n = a.order();
    if (b_in.order() != n) {
      return false;
    }
    if (n == 1) {
      return true;
    }
    MulTable const b  = anti ? dual(b_in) : b_in;
    // S \ S^2, without the rest of analyze()
    auto const generators = [n](MulTable const& t) {
      std::vector<bool> square(n, false);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          square[t(x, y)] = true;
        }
      }
      std::vector<Element> g;
      for (Element x = 0; x < n; ++x) {
        if (!square[x]) {
          g.push_back(x);
        }
      }
      return g;
    };
    auto const ga = generators(a);
    auto       gb = generators(b);
    if (ga.size() != gb.size()) {
      return false;
    }
    constexpr Element kNone = static_cast<Element>(-1);
    std::sort(gb.begin(), gb.end());
    do {
      std::vector<Element> phi(n, kNone);
      std::vector<Element> mapped;
      for (std::size_t i = 0; i < ga.size(); ++i) {
        phi[ga[i]] = gb[i];
        mapped.push_back(ga[i]);
      }
      bool ok = true;
      for (std::size_t i = 0; ok && i < mapped.size(); ++i) {
        for (std::size_t j = 0; ok && j <= i; ++j) {
          for (auto [x, y] : {std::pair{mapped[i], mapped[j]},
                              std::pair{mapped[j], mapped[i]}}) {
            Element const z = a(x, y);
            Element const w = b(phi[x], phi[y]);
            if (phi[z] == kNone) {
              phi[z] = w;
              mapped.push_back(z);
            } else if (phi[z] != w) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok || mapped.size() != n) {
        continue;
      }
      std::vector<Element> image(phi);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != n) {
        continue;
      }
      bool hom = true;
      for (Element x = 0; hom && x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (phi[a(x, y)] != b(phi[x], phi[y])) {
            hom = false;
            break;
          }
        }
      }
      if (hom) {
        return true;
      }
    } while (std::next_permutation(gb.begin(), gb.end()));
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Harness
  ////////////////////////////////////////////////////////////////////////

  bool VerifyReport::ok() const {
    return first_failure() == nullptr;
  }

  CheckResult const* VerifyReport::first_failure() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return &c;
      }
    }
    return nullptr;
  }

  std::string format_check(CheckResult const& c) {
    std::string out = (c.passed ? "PASS " : "FAIL ") + c.name;
    if (c.passed) {
      out += ": " + std::to_string(c.items) + " checked";
    } else {
      out += ": order " + std::to_string(c.order) + ", " + c.subject;
      if (!c.reason.empty()) {
        out += ": " + c.reason;
      }
    }
    return out;
  }

  namespace {
    struct Entry {
      Presentation p;
      bool         realized = false;
      MulTable     table    = MulTable::trusted(1, {0});
      CanonicalKey iso, iso_dual;

      [[nodiscard]] CanonicalKey anti() const {
        return std::min(iso, iso_dual);
      }
    };

    Entry entry(Presentation p) {
      Entry e;
      e.p = std::move(p);
      return e;
    }

    struct ListRun {
      std::string        label;
      std::size_t        order = 0;
      std::optional<CountType> type;
      std::vector<Entry> entries;
    };

    void fail(CheckResult& r, std::size_t order, std::string subject,
              std::string reason) {
      if (r.passed) {
        r.passed  = false;
        r.order   = order;
        r.subject = std::move(subject);
        r.reason  = std::move(reason);
      }
    }

    std::string row_name(CountType t, Convention m) {
      return std::string(to_string(t)) + " " + std::string(to_string(m));
    }

    constexpr CountType kTypes[] = {CountType::Coclass1, CountType::Coclass2,
                                    CountType::Coclass2Gen2,
                                    CountType::Coclass2Gen3};
    constexpr Convention kModes[] = {Convention::UpToAntiIso,
                                     Convention::UpToIso,
                                     Convention::CommutativeUpToIso};

    std::size_t expected_gens(Presentation const& p) {
      return p.expected_order == 1 ? 0 : p.num_generators();
    }
  }  // namespace

  VerifyReport run_verification(std::size_t max_order, std::ostream* log) {
    if (max_order < kVerifyMinOrder || max_order > kVerifyMaxOrder) {
      throw OutOfDomain("verify: max order must lie in "
                        + std::to_string(kVerifyMinOrder) + ".."
                        + std::to_string(kVerifyMaxOrder));
    }
    VerifyReport report;
    auto const   emit = [&](CheckResult const& c) {
      report.checks.push_back(c);
      if (log != nullptr) {
        *log << format_check(c) << '\n' << std::flush;
      }
    };

    std::vector<ListRun> runs;
    for (std::size_t n = 1; n <= max_order; ++n) {
      runs.push_back({"coclass0", n, std::nullopt, {entry(coclass0(n))}});
      if (n >= families_min_order(CountType::Coclass1)) {
        ListRun run{"coclass1", n, CountType::Coclass1, {}};
        for (auto& p : coclass1_list(n)) {
          run.entries.push_back(entry(std::move(p)));
        }
        runs.push_back(std::move(run));
      }
      if (n >= families_min_order(CountType::Coclass2Gen2)) {
        ListRun run{"coclass2-gen2", n, CountType::Coclass2Gen2, {}};
        for (auto& p : coclass2_gen2_list(n)) {
          run.entries.push_back(entry(std::move(p)));
        }
        runs.push_back(std::move(run));
      }
      if (n >= families_min_order(CountType::Coclass2Gen3)) {
        ListRun run{"coclass2-gen3", n, CountType::Coclass2Gen3, {}};
        for (auto& p : coclass2_gen3_list(n)) {
          run.entries.push_back(entry(std::move(p)));
        }
        runs.push_back(std::move(run));
      }
    }

    // (a) realization and certification
    {
      CheckResult r;
      r.name = "certify";
      for (auto& run : runs) {
        for (auto& e : run.entries) {
          ++r.items;
          try {
            e.table = realize(e.p);
          } catch (Error const& ex) {
            fail(r, run.order, e.p.name(), ex.what());
            continue;
          }
          ClassInfo const info = analyze(e.table);
          if (!info.is_nilpotent || *info.coclass_r != e.p.expected_coclass) {
            fail(r, run.order, e.p.name(), "wrong coclass");
            continue;
          }
          if (info.min_gen_set.size() != expected_gens(e.p)) {
            fail(r, run.order, e.p.name(), "wrong generating set size");
            continue;
          }
          if (auto v = structural_violation(e.table)) {
            fail(r, run.order, e.p.name(), *v);
            continue;
          }
          e.realized = true;
          e.iso      = canonical_key(e.table, CountMode::UpToIso);
          e.iso_dual = canonical_key(dual(e.table), CountMode::UpToIso);
        }
      }
      emit(r);
    }

    // (b) pairwise distinctness within each list
    {
      CheckResult r;
      r.name = "distinct";
      for (auto const& run : runs) {
        std::map<CanonicalKey, std::string> seen;
        for (auto const& e : run.entries) {
          if (!e.realized) {
            continue;
          }
          ++r.items;
          auto [it, fresh] = seen.try_emplace(e.anti(), e.p.name());
          if (!fresh) {
            fail(r, run.order, run.label + " " + e.p.name(),
                 "equivalent to " + it->second);
          }
        }
      }
      emit(r);
    }

    // (c) list counts against the formulas and the reference table
    std::map<std::pair<CountType, std::size_t>, std::vector<Entry const*>>
        by_type;
    for (auto const& run : runs) {
      if (!run.type) {
        continue;
      }
      for (auto const& e : run.entries) {
        by_type[{*run.type, run.order}].push_back(&e);
        if (*run.type != CountType::Coclass1) {
          by_type[{CountType::Coclass2, run.order}].push_back(&e);
        }
      }
    }
    auto list_counts = [](std::vector<Entry const*> const& es) {
      std::set<CanonicalKey> anti, iso, comm;
      for (auto const* e : es) {
        if (!e->realized) {
          continue;
        }
        anti.insert(e->anti());
        iso.insert(e->iso);
        iso.insert(e->iso_dual);
        if (is_commutative(e->table)) {
          comm.insert(e->iso);
        }
      }
      return ModeCounts{static_cast<std::int64_t>(anti.size()),
                        static_cast<std::int64_t>(iso.size()),
                        static_cast<std::int64_t>(comm.size())};
    };
    {
      CheckResult r;
      r.name = "counts";
      for (std::size_t n = 1; n <= max_order; ++n) {
        for (CountType t : kTypes) {
          if (n < families_min_order(t)) {
            continue;
          }
          ModeCounts const got = list_counts(by_type[{t, n}]);
          for (Convention m : kModes) {
            ++r.items;
            std::int64_t const v = got.get(m);
            std::int64_t const ref = table1_reference(t, m, n);
            if (v != ref) {
              fail(r, n, row_name(t, m),
                   "lists give " + std::to_string(v) + ", table gives "
                       + std::to_string(ref));
            }
            if (n >= formula_min_order(t)) {
              std::int64_t const f = formula_count({t, n, m});
              if (v != f) {
                fail(r, n, row_name(t, m),
                     "lists give " + std::to_string(v) + ", formula gives "
                         + std::to_string(f));
              }
            }
          }
        }
      }
      emit(r);
    }

    // (d) exhaustive search
    {
      CheckResult r;
      r.name = "bruteforce";
      for (std::size_t n = 3; n <= std::min<std::size_t>(max_order, 6); ++n) {
        Census const census = bruteforce_census(n);
        for (CountType t : kTypes) {
          auto const selected = census.select(t);
          ModeCounts const got = realized_counts(selected);
          for (Convention m : kModes) {
            ++r.items;
            std::int64_t const ref = table1_reference(t, m, n);
            if (got.get(m) != ref) {
              fail(r, n, row_name(t, m),
                   "search gives " + std::to_string(got.get(m))
                       + ", table gives " + std::to_string(ref));
            }
          }
          if (n < families_min_order(t)) {
            continue;
          }
          // Class-by-class agreement with the lists.
          std::vector<CanonicalKey> from_search, from_lists;
          for (auto const& s : selected) {
            from_search.push_back(canonical_key(s, CountMode::UpToAntiIso));
          }
          for (auto const* e : by_type[{t, n}]) {
            if (e->realized) {
              from_lists.push_back(e->anti());
            }
          }
          std::sort(from_search.begin(), from_search.end());
          from_search.erase(
              std::unique(from_search.begin(), from_search.end()),
              from_search.end());
          std::sort(from_lists.begin(), from_lists.end());
          ++r.items;
          if (from_search != from_lists) {
            fail(r, n, std::string(to_string(t)),
                 "canonical keys of lists and search differ");
          }
        }
      }
      emit(r);
    }

    // (e) self-duality and commutativity claims
    {
      CheckResult r;
      r.name = "claims";
      for (auto const& run : runs) {
        for (auto const& e : run.entries) {
          if (!e.realized) {
            continue;
          }
          ++r.items;
          bool const sd = e.iso == e.iso_dual;
          if (sd != e.p.claimed_self_dual) {
            fail(r, run.order, e.p.name(),
                 sd ? "self-dual but claimed not" : "not self-dual but claimed");
          }
          bool const comm = is_commutative(e.table);
          if (comm != e.p.claimed_commutative) {
            fail(r, run.order, e.p.name(),
                 comm ? "commutative but claimed not"
                      : "not commutative but claimed");
          }
        }
      }
      emit(r);
    }
    return report;
  }

}  // namespace coclass
