// coclass: list, realize, inspect and count nilpotent semigroups of small
// coclass. Exit codes: 0 ok, 1 verification mismatch, 2 usage or domain.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coclass/bruteforce.hpp"
#include "coclass/canon.hpp"
#include "coclass/counting.hpp"
#include "coclass/families.hpp"
#include "coclass/tables.hpp"
#include "coclass/verify.hpp"

using namespace coclass;

namespace {

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string out_of_range(std::size_t n, int coclass,
                           std::optional<int> gen_size) {
    std::string s = "out of classified range: order " + std::to_string(n)
                    + ", coclass " + std::to_string(coclass);
    if (gen_size) {
      s += ", generating set size " + std::to_string(*gen_size);
    }
    return s;
  }

  std::vector<Presentation> select_list(std::size_t n, int coclass,
                                        std::optional<int> gen_size) {
    auto const bad = [&] { return UsageError(out_of_range(n, coclass, gen_size)); };
    if (n == 0) {
      throw bad();
    }
    switch (coclass) {
      case 0:
        if (gen_size && *gen_size != 1) {
          throw bad();
        }
        return {coclass0(n)};
      case 1:
        if (n < 4 || (gen_size && *gen_size != 2)) {
          throw bad();
        }
        return coclass1_list(n);
      case 2:
        if (!gen_size) {
          if (n < 7) {
            throw bad();
          }
          return family_list(CountType::Coclass2, n);
        }
        if (*gen_size == 2 && n >= 7) {
          return coclass2_gen2_list(n);
        }
        if (*gen_size == 3 && n >= 6) {
          return coclass2_gen3_list(n);
        }
        throw bad();
      default:
        throw bad();
    }
  }

  CountType count_type(int coclass, std::optional<int> gen_size) {
    if (coclass == 1 && (!gen_size || *gen_size == 2)) {
      return CountType::Coclass1;
    }
    if (coclass == 2) {
      if (!gen_size) {
        return CountType::Coclass2;
      }
      if (*gen_size == 2) {
        return CountType::Coclass2Gen2;
      }
      if (*gen_size == 3) {
        return CountType::Coclass2Gen3;
      }
    }
    throw UsageError("no counts for coclass " + std::to_string(coclass)
                     + (gen_size ? " with generating set size "
                                       + std::to_string(*gen_size)
                                 : std::string()));
  }

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  char const* yes_no(bool b) {
    return b ? "yes" : "no";
  }

  std::string join(ElementSet const& s) {
    std::string out;
    for (Element x : s) {
      out += (out.empty() ? "" : " ") + std::to_string(x);
    }
    return out;
  }

  void inspect(MulTable const& t, std::ostream& out) {
    ClassInfo const info = analyze(t);
    out << "order: " << t.order() << '\n';
    out << "nilpotent: " << yes_no(info.is_nilpotent) << '\n';
    out << "commutative: " << yes_no(is_commutative(t)) << '\n';
    if (!info.is_nilpotent) {
      return;
    }
    out << "class: " << *info.class_c << '\n';
    out << "coclass: " << *info.coclass_r << '\n';
    out << "zero: " << *info.zero << '\n';
    out << "layer sizes:";
    for (auto const& layer : info.layers) {
      out << ' ' << layer.size();
    }
    out << '\n';
    out << "generators: " << join(info.min_gen_set) << '\n';
    try {
      auto const iso  = canonical_key(t, CountMode::UpToIso);
      auto const anti = canonical_key(t, CountMode::UpToAntiIso);
      out << "self-dual: "
          << yes_no(iso == canonical_key(dual(t), CountMode::UpToIso)) << '\n';
      out << "key iso: " << iso.hex() << '\n';
      out << "key anti-iso: " << anti.hex() << '\n';
    } catch (GeneratorBound const& e) {
      out << "self-dual: unknown\n";
      out << "keys: unavailable (" << e.what() << ")\n";
    }
  }

  struct Mode {
    CountMode mode             = CountMode::UpToAntiIso;
    bool      commutative_only = false;
  };

  Mode parse_mode(std::string const& s) {
    auto c = convention_from_string(s);
    if (!c) {
      throw UsageError("unknown mode " + s);
    }
    switch (*c) {
      case Convention::UpToAntiIso:
        return {CountMode::UpToAntiIso, false};
      case Convention::UpToIso:
        return {CountMode::UpToIso, false};
      case Convention::CommutativeUpToIso:
        return {CountMode::UpToIso, true};
    }
    return {};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent semigroups of coclass 0, 1 and 2"};
  app.require_subcommand(1);

  std::size_t        order = 0;
  int                coclass_r = 0;
  std::optional<int> gen_size;
  std::string        mode_name = "anti-iso";

  auto* list = app.add_subcommand("list", "print the presentations of a class");
  list->add_option("--order", order, "order n")->required();
  list->add_option("--coclass", coclass_r, "coclass 0, 1 or 2")->required();
  list->add_option("--gen-size", gen_size, "size of the minimal generating set");

  auto*       real = app.add_subcommand("realize", "print a multiplication table");
  std::size_t index = 0;
  std::string presentation;
  auto*       real_order   = real->add_option("--order", order, "order n");
  auto*       real_coclass = real->add_option("--coclass", coclass_r, "coclass");
  real->add_option("--gen-size", gen_size, "size of the minimal generating set");
  auto* real_index = real->add_option("--index", index, "0-based position in the list");
  auto* real_pres  = real->add_option(
      "--presentation", presentation,
      "a listing line, or a bare presentation together with --order");
  real_pres->excludes(real_index)->excludes(real_coclass);

  auto*       insp = app.add_subcommand("inspect", "describe a table file");
  std::string path;
  insp->add_option("file", path, "table file, - for stdin")->required();

  auto*       cnt = app.add_subcommand("count", "counts as CSV");
  std::size_t max_order = 0;
  std::string source    = "all";
  std::string cmode     = "all";
  cnt->add_option("--order", order, "order n (first order of a range)")->required();
  cnt->add_option("--max-order", max_order, "last order of the range");
  cnt->add_option("--coclass", coclass_r, "coclass 1 or 2")->required();
  cnt->add_option("--gen-size", gen_size, "2 or 3, coclass 2 only");
  cnt->add_option("--mode", cmode, "iso, anti-iso, commutative or all");
  cnt->add_option("--source", source, "formula, table1, families, bruteforce or all")
      ->check(CLI::IsMember({"formula", "table1", "families", "bruteforce", "all"}));

  auto* bf = app.add_subcommand("bruteforce", "exhaustive search");
  std::optional<std::size_t> bf_coclass, bf_gens;
  bool                       print_tables = false;
  bf->add_option("--order", order, "order n <= 7")->required();
  bf->add_option("--coclass", bf_coclass, "keep only this coclass");
  bf->add_option("--gen-size", bf_gens, "keep only this generating set size");
  bf->add_option("--mode", mode_name, "iso, anti-iso or commutative");
  bf->add_flag("--tables", print_tables, "print the representatives");

  auto* ver = app.add_subcommand("verify", "run all cross-checks");
  ver->add_option("--max-order", max_order, "largest order, 5..13")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto& out = std::cout;
  try {
    if (list->parsed()) {
      for (auto const& p : select_list(order, coclass_r, gen_size)) {
        out << format_presentation(p) << ' ' << format_metadata(p) << '\n';
      }
    } else if (real->parsed()) {
      Presentation p;
      if (real_pres->count() > 0) {
        p = presentation.find('>') != std::string::npos
                    && presentation.find("family=") != std::string::npos
                ? parse_listing_line(presentation)
                : parse_presentation(presentation);
        if (real_order->count() > 0) {
          p.expected_order = order;
        }
        if (p.expected_order == 0) {
          throw UsageError("the order of the presentation is unknown; pass --order");
        }
      } else {
        if (real_order->count() == 0 || real_coclass->count() == 0) {
          throw UsageError("realize needs --presentation or --order and --coclass");
        }
        auto const ps = select_list(order, coclass_r, gen_size);
        if (index >= ps.size()) {
          throw UsageError("index " + std::to_string(index) + " out of range, list has "
                           + std::to_string(ps.size()) + " entries");
        }
        p = ps[index];
      }
      out << format_table(realize(p));
    } else if (insp->parsed()) {
      inspect(parse_table(read_input(path)), out);
    } else if (cnt->parsed()) {
      CountType const type = count_type(coclass_r, gen_size);
      std::size_t const last = max_order == 0 ? order : max_order;
      if (last < order) {
        throw UsageError("--max-order is below --order");
      }
      std::vector<Convention> modes;
      if (cmode == "all") {
        modes = {Convention::UpToAntiIso, Convention::UpToIso,
                 Convention::CommutativeUpToIso};
      } else if (auto c = convention_from_string(cmode)) {
        modes = {*c};
      } else {
        throw UsageError("unknown mode " + cmode);
      }
      bool const all = source == "all";
      std::ostringstream csv;
      csv << "type,mode,order,count,source\n";
      for (std::size_t n = order; n <= last; ++n) {
        std::optional<ModeCounts> fam, brute;
        bool const want_fam
            = (all || source == "families") && n >= families_min_order(type);
        // the default range stays quick; an explicit request may go to 7
        bool const want_brute = (source == "bruteforce" && n <= kMaxBruteforceOrder)
                                || (all && n <= 6);
        if (want_fam) {
          std::vector<MulTable> tables;
          for (auto const& p : family_list(type, n)) {
            tables.push_back(realize(p));
          }
          fam = realized_counts(tables);
        }
        if (want_brute) {
          brute = bruteforce_census(n).counts(type);
        }
        bool any = false;
        for (Convention m : modes) {
          auto row = [&](std::int64_t v, char const* src) {
            csv << to_string(type) << ',' << to_string(m) << ',' << n << ','
                << v << ',' << src << '\n';
            any = true;
          };
          if ((all || source == "formula") && n >= formula_min_order(type)) {
            row(formula_count({type, n, m}), "formula");
          }
          if ((all || source == "table1") && n >= 3 && n <= 13) {
            row(table1_reference(type, m, n), "table1");
          }
          if (fam) {
            row(fam->get(m), "families");
          }
          if (brute) {
            row(brute->get(m), "bruteforce");
          }
        }
        if (!any) {
          throw UsageError("no " + (all ? std::string("source") : source)
                           + " covers " + std::string(to_string(type))
                           + " at order " + std::to_string(n));
        }
      }
      out << csv.str();
    } else if (bf->parsed()) {
      Mode const   m = parse_mode(mode_name);
      SearchConfig cfg;
      cfg.order            = order;
      cfg.coclass_filter   = bf_coclass;
      cfg.gen_size_filter  = bf_gens;
      cfg.commutative_only = m.commutative_only;
      cfg.mode             = m.mode;
      auto const reps = enumerate_nilpotent(cfg);
      if (print_tables) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
          out << (i == 0 ? "" : "\n") << format_table(reps[i]);
        }
      } else {
        out << reps.size() << '\n';
      }
    } else if (ver->parsed()) {
      if (max_order < kVerifyMinOrder || max_order > kVerifyMaxOrder) {
        throw UsageError("--max-order " + std::to_string(max_order)
                         + " is outside the supported range "
                         + std::to_string(kVerifyMinOrder) + ".."
                         + std::to_string(kVerifyMaxOrder));
      }
      VerifyReport const report = run_verification(max_order, &out);
      if (auto const* f = report.first_failure()) {
        std::cerr << "first failure: check " << f->name << ", order " << f->order
                  << ", " << f->subject << '\n';
        return 1;
      }
      out << "all checks passed up to order " << max_order << '\n';
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (CertificationFailed const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (RewriteDiverged const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (Error const& e) {
    // bad input: parse errors, unsupported orders, parameters out of range
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
