#include "coclass/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace coclass {

  namespace {
    constexpr std::array<std::pair<Family, std::string_view>, 27> kFamilyNames{{
        {Family::Coclass0, "Coclass0"}, {Family::H, "H"},
        {Family::J, "J"},               {Family::X, "X"},
        {Family::N1, "N1"},             {Family::N2, "N2"},
        {Family::N4a, "N4a"},           {Family::N4b, "N4b"},
        {Family::T1_i, "T1_i"},         {Family::T2_k, "T2_k"},
        {Family::T2_ik, "T2_ik"},       {Family::T3, "T3"},
        {Family::T3_i, "T3_i"},         {Family::T4_k, "T4_k"},
        {Family::T4_ik, "T4_ik"},       {Family::T4_ijk, "T4_ijk"},
        {Family::T5_k, "T5_k"},         {Family::T5_ik, "T5_ik"},
        {Family::T5_ijk, "T5_ijk"},     {Family::LemH, "LemH"},
        {Family::LemJ, "LemJ"},         {Family::LemX, "LemX"},
        {Family::LemN, "LemN"},         {Family::Comp_i, "Comp_i"},
        {Family::Comp_ii, "Comp_ii"},   {Family::Comp_iii, "Comp_iii"},
        {Family::Comp_iv, "Comp_iv"},
    }};
  }  // namespace

  std::string_view to_string(Family f) {
    for (auto const& [fam, name] : kFamilyNames) {
      if (fam == f) {
        return name;
      }
    }
    return "?";
  }

  std::optional<Family> family_from_string(std::string_view s) {
    for (auto const& [fam, name] : kFamilyNames) {
      if (name == s) {
        return fam;
      }
    }
    return std::nullopt;
  }

  std::optional<int> Presentation::param(std::string_view key) const {
    for (auto const& [k, v] : params) {
      if (k == key) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::string Presentation::name() const {
    auto joined = [this](std::initializer_list<char const*> keys) {
      std::string out;
      for (auto key : keys) {
        if (auto v = param(key)) {
          out += (out.empty() ? "" : ",") + std::to_string(*v);
        }
      }
      return out;
    };
    switch (family) {
      case Family::Coclass0:
        return "C" + std::to_string(expected_order);
      case Family::H:
        return "H" + joined({"k"});
      case Family::J:
        return "J" + joined({"k"});
      case Family::X:
      case Family::N1:
      case Family::N2:
      case Family::N4a:
      case Family::N4b:
      case Family::T3:
        return std::string(to_string(family));
      case Family::T1_i:
      case Family::T3_i:
        return "T" + std::string(1, to_string(family)[1]) + "," + joined({"i"});
      case Family::T2_k:
      case Family::T4_k:
      case Family::T5_k:
        return "T" + std::string(1, to_string(family)[1]) + "," + joined({"k"});
      case Family::T2_ik:
      case Family::T4_ik:
      case Family::T5_ik:
        return "T" + std::string(1, to_string(family)[1]) + ","
               + joined({"i", "k"});
      case Family::T4_ijk:
      case Family::T5_ijk:
        return "T" + std::string(1, to_string(family)[1]) + ","
               + joined({"i", "j", "k"});
      case Family::LemH:
        return "LemH" + joined({"k"});
      case Family::LemJ:
        return "LemJ" + joined({"k"});
      case Family::LemX:
        return "LemX";
      case Family::LemN:
        return "LemN^" + joined({"e"}) + "_" + joined({"k", "l", "m"});
      case Family::Comp_i:
      case Family::Comp_ii:
      case Family::Comp_iii:
      case Family::Comp_iv: {
        std::string out(to_string(family));
        for (auto const& [k, v] : parts) {
          out += " " + k + "=" + v;
        }
        if (auto i = param("i")) {
          out += " " + joined({"i", "j"});
        }
        return out;
      }
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr Letter kU = 0;
    constexpr Letter kV = 1;
    constexpr Letter kW = 2;

    Word u(std::size_t e) {
      return power_word(kU, e);
    }

    Word word(std::initializer_list<Letter> letters) {
      return Word(letters);
    }

    // Products of two letters as exponents of u, for a two-generated
    // coclass 1 semigroup: uv = u^uv, vu = u^vu, v^2 = u^vv.
    struct Coclass1Entry {
      Family      family;
      int         k;  // family parameter, 0 if none
      std::size_t uv, vu, vv;
      bool        self_dual;
      bool        commutative;

      [[nodiscard]] std::string label() const {
        switch (family) {
          case Family::H:
            return "H" + std::to_string(k);
          case Family::J:
            return "J" + std::to_string(k);
          default:
            return std::string(to_string(family));
        }
      }
    };

    // The theorem's list for order n >= 4 in its order of appearance, which
    // is also the total order used for the compositions.
    std::vector<Coclass1Entry> coclass1_entries(std::size_t n) {
      std::vector<Coclass1Entry> out;
      for (std::size_t k = 2; k <= n - 1; ++k) {
        out.push_back({Family::H, static_cast<int>(k), k, k, 2 * k - 2, true, true});
      }
      for (std::size_t k = n / 2 + 1; k <= n - 1; ++k) {
        out.push_back({Family::J, static_cast<int>(k), k, k, n - 2, true, true});
      }
      if (n % 2 == 0) {
        out.push_back({Family::X, 0, n / 2, n / 2, n - 1, true, true});
      }
      // N1 is self-dual at order 4 only.
      out.push_back({Family::N1, 0, n - 1, n - 2, n - 2, n == 4, false});
      out.push_back({Family::N2, 0, n - 1, n - 2, n - 1, false, false});
      return out;
    }

    // Relations of a coclass 1 entry at order m, with second generator g:
    // u^{m-1} = u^m, ug = u^a, gu = u^b, g^2 = u^c.
    std::vector<Relation> coclass1_relations(Coclass1Entry const& e,
                                             std::size_t m, Letter g,
                                             bool with_base) {
      std::vector<Relation> rels;
      if (with_base) {
        rels.push_back({u(m - 1), u(m)});
      }
      rels.push_back({word({kU, g}), u(e.uv)});
      rels.push_back({word({g, kU}), u(e.vu)});
      rels.push_back({word({g, g}), u(e.vv)});
      return rels;
    }

    Presentation make(std::vector<std::string> gens, Family f,
                      std::vector<std::pair<std::string, int>> params,
                      std::size_t n, std::size_t coclass, bool self_dual,
                      bool commutative) {
      Presentation p;
      p.generators          = std::move(gens);
      p.family              = f;
      p.params              = std::move(params);
      p.expected_order      = n;
      p.expected_coclass    = coclass;
      p.claimed_self_dual   = self_dual;
      p.claimed_commutative = commutative;
      return p;
    }

    Word reversed(Word w) {
      std::reverse(w.begin(), w.end());
      return w;
    }

    int as_int(std::size_t x) {
      return static_cast<int>(x);
    }
  }  // namespace

  Presentation coclass0(std::size_t n) {
    if (n == 0) {
      throw InvalidParams("coclass0: order must be positive");
    }
    Presentation p = make({"u"}, Family::Coclass0, {}, n, 0, true, true);
    p.relations.push_back({u(n), u(n + 1)});
    return p;
  }

  std::vector<Presentation> coclass1_list(std::size_t n) {
    if (n < 4) {
      throw UnsupportedOrder("coclass 1 presentations need order >= 4, got "
                             + std::to_string(n));
    }
    std::vector<Presentation> out;
    for (auto const& e : coclass1_entries(n)) {
      std::vector<std::pair<std::string, int>> params;
      if (e.k != 0) {
        params.emplace_back("k", e.k);
      }
      Presentation p = make({"u", "v"}, e.family, std::move(params), n, 1,
                            e.self_dual, e.commutative);
      p.relations    = coclass1_relations(e, n, kV, true);
      out.push_back(std::move(p));
    }
    if (n == 4) {
      // Two further self-dual semigroups exist only at order 4.
      Presentation a = make({"u", "v"}, Family::N4a, {}, 4, 1, true, true);
      a.relations    = {{u(2), u(3)},
                        {u(2), word({kV, kV})},
                        {word({kU, kV}), word({kV, kU})},
                        {u(2), power_word(kV, 3)}};
      Presentation b = make({"u", "v"}, Family::N4b, {}, 4, 1, true, false);
      b.relations    = {{u(2), u(3)},
                        {u(2), word({kV, kV})},
                        {u(2), word({kU, kV})},
                        {u(2), power_word(kV, 3)}};
      out.push_back(std::move(a));
      out.push_back(std::move(b));
    }
    return out;
  }

  std::vector<Presentation> coclass2_gen2_list(std::size_t n) {
    if (n < 7) {
      throw UnsupportedOrder(
          "two-generated coclass 2 presentations need order >= 7, got "
          + std::to_string(n));
    }
    std::vector<Presentation> out;
    Relation const            base{u(n - 2), u(n - 1)};
    Word const                uv = word({kU, kV});
    Word const                vu = word({kV, kU});
    Word const                vv = word({kV, kV});
    Relation const            commute{uv, vu};

    auto add = [&](Family f, std::vector<std::pair<std::string, int>> params,
                   std::vector<Relation> rels, bool self_dual, bool comm) {
      Presentation p = make({"u", "v"}, f, std::move(params), n, 2, self_dual,
                            comm);
      p.relations.push_back(base);
      for (auto& r : rels) {
        p.relations.push_back(std::move(r));
      }
      out.push_back(std::move(p));
    };

    // y = v^2 = uv = vu
    for (std::size_t i : {2, 3}) {
      add(Family::T1_i, {{"i", as_int(i)}},
          {commute, {vv, uv}, {power_word(kV, 3), u(n - i)}}, true, true);
    }
    // y = uv = vu
    for (std::size_t k = 3; 2 * k < n; ++k) {
      add(Family::T2_k, {{"k", as_int(k)}},
          {commute, {vv, u(2 * k - 4)}, {word({kU, kU, kV}), u(k)}}, true, true);
    }
    for (std::size_t i : {2, 3, 4}) {
      for (std::size_t k = (n + 1) / 2; k <= n - 2; ++k) {
        add(Family::T2_ik, {{"i", as_int(i)}, {"k", as_int(k)}},
            {commute, {vv, u(n - i)}, {word({kU, kU, kV}), u(k)}}, true, true);
      }
    }
    // y = uv = v^2
    add(Family::T3, {}, {{vv, uv}, {vu, u(2)}, {word({kU, kV, kV}), u(3)}},
        false, false);
    for (std::size_t i : {2, 3}) {
      add(Family::T3_i, {{"i", as_int(i)}},
          {{vv, uv}, {vu, u(n - i)}, {word({kU, kV, kV}), u(n - 2)}}, false,
          false);
    }
    // y = v^2
    for (std::size_t k = 2; 3 * k < n; ++k) {
      add(Family::T4_k, {{"k", as_int(k)}},
          {commute, {uv, u(k)}, {power_word(kV, 3), u(3 * k - 3)}}, true, true);
    }
    for (std::size_t i : {2, 3}) {
      for (std::size_t k = (n + 2) / 3; k <= n - 4; ++k) {
        add(Family::T4_ik, {{"i", as_int(i)}, {"k", as_int(k)}},
            {commute, {uv, u(k)}, {power_word(kV, 3), u(n - i)}}, true, true);
      }
    }
    // The choices (i, j) and (j, i) are anti-isomorphic; keep i <= j.
    for (std::size_t i : {2, 3}) {
      for (std::size_t j = i; j <= 3; ++j) {
        for (std::size_t k : {2, 3}) {
          add(Family::T4_ijk,
              {{"i", as_int(i)}, {"j", as_int(j)}, {"k", as_int(k)}},
              {{uv, u(n - i)}, {vu, u(n - j)}, {power_word(kV, 3), u(n - k)}},
              i == j, i == j);
        }
      }
    }
    // y = vu
    std::size_t const half = n / 2;  // ceil((n-1)/2)
    for (std::size_t k = 2; k < half; ++k) {
      add(Family::T5_k, {{"k", as_int(k)}},
          {{uv, u(k)}, {vv, u(2 * k - 2)}, {word({kV, kU, kU}), u(k + 1)}},
          k == 2, false);
    }
    for (std::size_t i : {2, 3}) {
      for (std::size_t k = half; k + 5 <= n; ++k) {
        add(Family::T5_ik, {{"i", as_int(i)}, {"k", as_int(k)}},
            {{uv, u(k)}, {vv, u(n - i)}, {word({kV, kU, kU}), u(k + 1)}},
            false, false);
      }
    }
    for (std::size_t i : {2, 3, 4}) {
      for (std::size_t j : {2, 3}) {
        for (std::size_t k : {2, 3}) {
          add(Family::T5_ijk,
              {{"i", as_int(i)}, {"j", as_int(j)}, {"k", as_int(k)}},
              {{uv, u(n - i)}, {vv, u(n - j)}, {word({kV, kU, kU}), u(n - k)}},
              false, false);
        }
      }
    }
    return out;
  }

  std::vector<Presentation> lemma_family_list(std::size_t c, std::size_t r) {
    if (c < 3 || r < 1) {
      throw InvalidParams("lemma families need c >= 3 and r >= 1, got c="
                          + std::to_string(c) + " r=" + std::to_string(r));
    }
    if (r + 1 > 32) {
      throw InvalidParams("lemma families: too many generators");
    }
    std::size_t const n = c + r + 1;
    // letters 0..r-1 are u_1..u_r, letter r is v
    auto const v = static_cast<Letter>(r);
    std::vector<std::string> gens;
    if (r == 1) {
      gens = {"u", "v"};
    } else {
      for (std::size_t i = 1; i <= r; ++i) {
        gens.push_back("u" + std::to_string(i));
      }
      gens.push_back("v");
    }
    std::vector<Relation> common{{u(c + 1), u(c + 2)}};
    for (std::size_t i = 1; i < r; ++i) {
      auto const ui = static_cast<Letter>(i);
      common.push_back({u(2), word({ui, ui})});
      for (std::size_t j = 0; j < i; ++j) {
        auto const uj = static_cast<Letter>(j);
        common.push_back({u(2), word({ui, uj})});
        common.push_back({u(2), word({uj, ui})});
      }
    }
    // u_i v = u^a_i, v u_i = u^b_i, v^2 = u^vv
    auto build = [&](Family f, std::vector<std::pair<std::string, int>> params,
                     std::vector<std::size_t> const& a,
                     std::vector<std::size_t> const& b, std::size_t vv,
                     bool self_dual, bool comm) {
      Presentation p = make(gens, f, std::move(params), n, r, self_dual, comm);
      p.relations    = common;
      for (std::size_t i = 0; i < r; ++i) {
        auto const ui = static_cast<Letter>(i);
        p.relations.push_back({word({ui, v}), u(a[i])});
        p.relations.push_back({word({v, ui}), u(b[i])});
      }
      p.relations.push_back({word({v, v}), u(vv)});
      return p;
    };

    std::vector<Presentation> out;
    for (std::size_t k = 2; k + 1 <= c; ++k) {
      std::vector<std::size_t> const a(r, k);
      out.push_back(build(Family::LemH, {{"k", as_int(k)}}, a, a, 2 * k - 2,
                          true, true));
    }
    for (std::size_t k = c / 2 + 2; k + 1 <= c; ++k) {
      std::vector<std::size_t> const a(r, k);
      out.push_back(build(Family::LemJ, {{"k", as_int(k)}}, a, a, c, true, true));
    }
    if (c % 2 == 0) {
      std::vector<std::size_t> const a(r, (c + 2) / 2);
      out.push_back(build(Family::LemX, {}, a, a, c + 1, true, true));
    }
    for (std::size_t k = 0; k <= r; ++k) {
      for (std::size_t l = k; l <= r; ++l) {
        for (std::size_t m = k; m <= r; ++m) {
          if (l > (k + m) / 2) {
            continue;
          }
          for (std::size_t e : {0, 1}) {
            // generator index i (1-based) falls into one of four types
            std::vector<std::size_t> a(r), b(r);
            for (std::size_t i = 1; i <= r; ++i) {
              bool const uv_zero = i <= k || (i > l && i <= m);
              bool const vu_zero = i <= l;
              a[i - 1]           = uv_zero ? c + 1 : c;
              b[i - 1]           = vu_zero ? c + 1 : c;
            }
            out.push_back(build(Family::LemN,
                                {{"k", as_int(k)},
                                 {"l", as_int(l)},
                                 {"m", as_int(m)},
                                 {"e", as_int(e)}},
                                a, b, c + e, 2 * l == k + m, k == m));
          }
        }
      }
    }
    for (auto& p : out) {
      p.params.insert(p.params.begin(), {{"c", as_int(c)}, {"r", as_int(r)}});
    }
    return out;
  }

  std::vector<Presentation> coclass2_gen3_list(std::size_t n) {
    if (n < 6) {
      throw UnsupportedOrder(
          "three-generated coclass 2 presentations need order >= 6, got "
          + std::to_string(n));
    }
    std::vector<Presentation> out = lemma_family_list(n - 3, 2);

    std::size_t const          m = n - 1;
    std::vector<Coclass1Entry> entries;
    for (auto const& e : coclass1_entries(m)) {
      if (!(e.family == Family::H && e.k == 2)) {
        entries.push_back(e);
      }
    }
    Word const vw = word({kV, kW});
    Word const wv = word({kW, kV});

    auto compose = [&](Family f, std::size_t a, std::size_t b, bool dual_w,
                       std::vector<Relation> extra,
                       std::vector<std::pair<std::string, int>> params,
                       bool self_dual, bool comm) {
      Presentation p = make({"u", "v", "w"}, f, std::move(params), n, 2,
                            self_dual, comm);
      p.relations    = coclass1_relations(entries[a], m, kV, true);
      for (auto& rel : coclass1_relations(entries[b], m, kW, false)) {
        if (dual_w) {
          rel.lhs = reversed(std::move(rel.lhs));
          rel.rhs = reversed(std::move(rel.rhs));
        }
        p.relations.push_back(std::move(rel));
      }
      for (auto& rel : extra) {
        p.relations.push_back(std::move(rel));
      }
      p.parts = {{"V", entries[a].label()},
                 {"W", dual_w ? "dual(" + entries[b].label() + ")"
                              : entries[b].label()}};
      out.push_back(std::move(p));
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < entries.size(); ++a) {
      for (std::size_t b = a; b < entries.size(); ++b) {
        pairs.emplace_back(a, b);
      }
    }
    // (i)
    for (auto [a, b] : pairs) {
      std::size_t const k = entries[a].uv, l = entries[b].uv;
      if (k + l <= n - 2) {
        bool const comm = entries[a].commutative && entries[b].commutative;
        compose(Family::Comp_i, a, b, false, {{vw, u(k + l - 2)}, {vw, wv}}, {},
                comm, comm);
      }
    }
    // (ii)
    for (auto [a, b] : pairs) {
      std::size_t const k = entries[a].uv, l = entries[b].uv;
      if (k + l >= n - 1 && (entries[b].self_dual || a == b)) {
        for (std::size_t i : {2, 3}) {
          for (std::size_t j = i; j <= 3; ++j) {
            bool const comm
                = entries[a].commutative && entries[b].commutative && i == j;
            // With V = W commutative, swapping v and w maps the dual onto
            // the semigroup itself.
            bool const self_dual = comm || (a == b && entries[a].commutative);
            compose(Family::Comp_ii, a, b, false,
                    {{vw, u(n - i)}, {wv, u(n - j)}},
                    {{"i", as_int(i)}, {"j", as_int(j)}}, self_dual, comm);
          }
        }
      }
    }
    // (iii)
    for (auto [a, b] : pairs) {
      if (a < b && !entries[b].self_dual) {
        for (std::size_t i : {2, 3}) {
          for (std::size_t j : {2, 3}) {
            compose(Family::Comp_iii, a, b, false,
                    {{vw, u(n - i)}, {wv, u(n - j)}},
                    {{"i", as_int(i)}, {"j", as_int(j)}}, false, false);
          }
        }
      }
    }
    // (iv)
    for (auto [a, b] : pairs) {
      if (!entries[a].self_dual && !entries[b].self_dual) {
        for (std::size_t i : {2, 3}) {
          for (std::size_t j : {2, 3}) {
            compose(Family::Comp_iv, a, b, true,
                    {{vw, u(n - i)}, {wv, u(n - j)}},
                    {{"i", as_int(i)}, {"j", as_int(j)}}, a == b, false);
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Realization
  ////////////////////////////////////////////////////////////////////////

  Element evaluate(MulTable const& t, Word const& w,
                   std::vector<Element> const& assignment) {
    if (w.empty()) {
      throw Error("evaluate: empty word");
    }
    Element x = assignment.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = t(x, assignment.at(w[i]));
    }
    return x;
  }

  bool satisfies(MulTable const& t, Presentation const& p,
                 std::vector<Element> const& assignment) {
    if (assignment.size() != p.num_generators()) {
      throw Error("satisfies: assignment has wrong length");
    }
    for (Element x : assignment) {
      if (x >= t.order()) {
        return false;
      }
    }
    for (auto const& rel : p.relations) {
      if (evaluate(t, rel.lhs, assignment) != evaluate(t, rel.rhs, assignment)) {
        return false;
      }
    }
    return subsemigroup_generated(t, ElementSet(assignment)).size() == t.order();
  }

  Realization realize_with_words(Presentation const& p) {
    std::size_t const n = p.expected_order;
    std::size_t const g = p.num_generators();
    if (n == 0 || g == 0) {
      throw InvalidParams("realize: empty presentation");
    }
    // u-like generators are light so that relations orient towards powers
    // of u; every other generator outweighs any normal form power of u.
    std::vector<std::size_t> weights(g, n + 2);
    for (std::size_t i = 0; i < g; ++i) {
      if (p.generators[i].front() == 'u') {
        weights[i] = 1;
      }
    }
    std::vector<Rule> equations;
    for (auto const& rel : p.relations) {
      if (rel.lhs.empty() || rel.rhs.empty()) {
        throw InvalidParams("realize: empty word in relation");
      }
      equations.push_back({rel.lhs, rel.rhs});
    }
    RewritingSystem const rws(WordOrder(std::move(weights)), equations);

    RealizedSemigroup s;
    try {
      s = multiplication_table(rws, 4 * n + 8, 4 * n);
    } catch (RewriteDiverged const& e) {
      throw CertificationFailed(p.name() + ": " + e.what());
    }
    std::size_t const order = s.elements.size();
    if (order != n) {
      throw CertificationFailed(p.name() + ": presented semigroup has order "
                                + std::to_string(order) + ", expected "
                                + std::to_string(n));
    }
    for (std::size_t i = 0; i < g; ++i) {
      if (s.elements[i] != Word{static_cast<Letter>(i)}) {
        throw CertificationFailed(p.name() + ": generator "
                                  + p.generators[i] + " is redundant");
      }
    }
    MulTable t = [&] {
      try {
        return validate_table(order, std::move(s.entries));
      } catch (Error const& e) {
        throw CertificationFailed(p.name() + ": " + e.what());
      }
    }();
    std::vector<Element> ident(g);
    for (std::size_t i = 0; i < g; ++i) {
      ident[i] = static_cast<Element>(i);
    }
    if (!satisfies(t, p, ident)) {
      throw CertificationFailed(p.name()
                                + ": relations or generation do not hold");
    }
    return {std::move(t), std::move(s.elements)};
  }

  MulTable realize(Presentation const& p) {
    return realize_with_words(p).table;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  std::string format_word(Word const& w, std::vector<std::string> const& names) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      out += names.at(w[i]);
      if (j - i > 1) {
        out += "^" + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      out += (i ? "," : "") + p.generators[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      out += (i ? ", " : "") + format_word(p.relations[i].lhs, p.generators)
             + "=" + format_word(p.relations[i].rhs, p.generators);
    }
    out += ">";
    return out;
  }

  std::string format_metadata(Presentation const& p) {
    std::string out = "family=" + std::string(to_string(p.family));
    for (auto const& [k, v] : p.parts) {
      out += " " + k + "=" + v;
    }
    for (auto const& [k, v] : p.params) {
      out += " " + k + "=" + std::to_string(v);
    }
    out += " n=" + std::to_string(p.expected_order);
    out += std::string(" selfdual=") + (p.claimed_self_dual ? "true" : "false");
    out += std::string(" commutative=")
           + (p.claimed_commutative ? "true" : "false");
    return out;
  }

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
      }
      return s;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      while (true) {
        auto const pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) {
          return out;
        }
        s.remove_prefix(pos + 1);
      }
    }

    bool is_digit(char c) {
      return c >= '0' && c <= '9';
    }

    Word parse_word(std::string_view s, std::vector<std::string> const& names) {
      s = trim(s);
      Word w;
      while (!s.empty()) {
        // longest generator name matching at the front
        std::size_t best = names.size(), best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (s.starts_with(names[i]) && names[i].size() > best_len) {
            // "u1" must not match the prefix of "u12"
            std::size_t const len = names[i].size();
            if (is_digit(names[i].back()) && len < s.size() && is_digit(s[len])) {
              continue;
            }
            best     = i;
            best_len = len;
          }
        }
        if (best == names.size()) {
          throw ParseError("unknown generator in word \"" + std::string(s)
                           + "\"");
        }
        s.remove_prefix(best_len);
        std::size_t exponent = 1;
        if (!s.empty() && s.front() == '^') {
          s.remove_prefix(1);
          auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), exponent);
          if (ec != std::errc() || exponent == 0) {
            throw ParseError("bad exponent in word");
          }
          s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
        }
        w.insert(w.end(), exponent, static_cast<Letter>(best));
      }
      if (w.empty()) {
        throw ParseError("empty word");
      }
      return w;
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
      throw ParseError("presentation must be enclosed in <...>");
    }
    text = text.substr(1, text.size() - 2);
    auto const bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw ParseError("presentation lacks '|'");
    }
    Presentation p;
    for (auto g : split(text.substr(0, bar), ',')) {
      g = trim(g);
      if (g.empty()) {
        throw ParseError("empty generator name");
      }
      p.generators.emplace_back(g);
    }
    if (p.generators.size() > 255) {
      throw ParseError("too many generators");
    }
    auto const body = trim(text.substr(bar + 1));
    if (!body.empty()) {
      for (auto rel : split(body, ',')) {
        auto const sides = split(rel, '=');
        if (sides.size() < 2) {
          throw ParseError("relation without '='");
        }
        // a=b=c is shorthand for a=b, a=c
        Word const first = parse_word(sides[0], p.generators);
        for (std::size_t i = 1; i < sides.size(); ++i) {
          p.relations.push_back({first, parse_word(sides[i], p.generators)});
        }
      }
    }
    return p;
  }

  Presentation parse_listing_line(std::string_view line) {
    auto const close = line.find('>');
    if (close == std::string_view::npos) {
      throw ParseError("listing line lacks a presentation");
    }
    Presentation p = parse_presentation(line.substr(0, close + 1));
    for (auto field : split(trim(line.substr(close + 1)), ' ')) {
      if (field.empty()) {
        continue;
      }
      auto const eq = field.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("bad metadata field \"" + std::string(field) + "\"");
      }
      auto const key = field.substr(0, eq);
      auto const val = field.substr(eq + 1);
      if (key == "family") {
        auto f = family_from_string(val);
        if (!f) {
          throw ParseError("unknown family \"" + std::string(val) + "\"");
        }
        p.family = *f;
      } else if (key == "selfdual" || key == "commutative") {
        if (val != "true" && val != "false") {
          throw ParseError("bad boolean \"" + std::string(val) + "\"");
        }
        (key == "selfdual" ? p.claimed_self_dual : p.claimed_commutative)
            = val == "true";
      } else if (key == "V" || key == "W") {
        p.parts.emplace_back(key, val);
      } else {
        int  v = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || ptr != val.data() + val.size()) {
          throw ParseError("bad integer in metadata field \"" + std::string(field)
                           + "\"");
        }
        if (key == "n") {
          p.expected_order = static_cast<std::size_t>(v);
        } else {
          p.params.emplace_back(key, v);
        }
      }
    }
    switch (p.family) {
      case Family::Coclass0:
        p.expected_coclass = 0;
        break;
      case Family::H:
      case Family::J:
      case Family::X:
      case Family::N1:
      case Family::N2:
      case Family::N4a:
      case Family::N4b:
        p.expected_coclass = 1;
        break;
      case Family::LemH:
      case Family::LemJ:
      case Family::LemX:
      case Family::LemN:
        p.expected_coclass = static_cast<std::size_t>(p.param("r").value_or(0));
        break;
      default:
        p.expected_coclass = 2;
    }
    return p;
  }

}  // namespace coclass
