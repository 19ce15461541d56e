#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coclass/bruteforce.hpp"
#include "coclass/canon.hpp"
#include "coclass/counting.hpp"
#include "coclass/families.hpp"
#include "coclass/tables.hpp"

namespace py = pybind11;
using namespace coclass;

namespace {

  CountMode count_mode(std::string const& s) {
    if (s == "iso") {
      return CountMode::UpToIso;
    }
    if (s == "anti-iso") {
      return CountMode::UpToAntiIso;
    }
    throw py::value_error("mode must be 'iso' or 'anti-iso'");
  }

  Convention convention(std::string const& s) {
    auto c = convention_from_string(s);
    if (!c) {
      throw py::value_error("mode must be 'anti-iso', 'iso' or 'commutative'");
    }
    return *c;
  }

  CountType count_type(std::string const& s) {
    for (auto t : {CountType::Coclass1, CountType::Coclass2,
                   CountType::Coclass2Gen2, CountType::Coclass2Gen3}) {
      if (to_string(t) == s) {
        return t;
      }
    }
    throw py::value_error("unknown count type: " + s);
  }

  std::vector<std::size_t> as_indices(ElementSet const& s) {
    return {s.begin(), s.end()};
  }

  py::dict presentation_dict(Presentation const& p) {
    py::dict d;
    d["name"]         = p.name();
    d["family"]       = std::string(to_string(p.family));
    d["presentation"] = format_presentation(p);
    d["generators"]   = p.generators;
    d["order"]        = p.expected_order;
    d["coclass"]      = p.expected_coclass;
    d["self_dual"]    = p.claimed_self_dual;
    d["commutative"]  = p.claimed_commutative;
    py::dict params;
    for (auto const& [k, v] : p.params) {
      params[py::str(k)] = v;
    }
    d["params"] = params;
    return d;
  }

  py::list presentation_list(std::vector<Presentation> const& ps) {
    py::list out;
    for (auto const& p : ps) {
      out.append(presentation_dict(p));
    }
    return out;
  }

  // a line printed by `coclass list` carries metadata after the presentation
  Presentation read_presentation(std::string const& text) {
    return text.find("family=") != std::string::npos ? parse_listing_line(text)
                                                      : parse_presentation(text);
  }

  MulTable table_from_rows(std::vector<std::vector<Element>> const& rows) {
    std::vector<Element> entries;
    for (auto const& r : rows) {
      if (r.size() != rows.size()) {
        throw py::value_error("table must be square");
      }
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return validate_table(rows.size(), std::move(entries));
  }

}  // namespace

PYBIND11_MODULE(_coclass, m) {
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<MulTable>(m, "MulTable")
      .def(py::init(&table_from_rows), py::arg("rows"))
      .def_property_readonly("order", &MulTable::order)
      .def("__call__", [](MulTable const& t, Element i, Element j) {
        if (i >= t.order() || j >= t.order()) {
          throw py::index_error("element out of range");
        }
        return t(i, j);
      })
      .def("rows",
           [](MulTable const& t) {
             std::vector<std::vector<Element>> rows(t.order());
             for (std::size_t i = 0; i < t.order(); ++i) {
               for (std::size_t j = 0; j < t.order(); ++j) {
                 rows[i].push_back(t(static_cast<Element>(i), static_cast<Element>(j)));
               }
             }
             return rows;
           })
      .def("__eq__", [](MulTable const& a, MulTable const& b) { return a == b; })
      .def("__repr__", [](MulTable const& t) {
        return "<MulTable order " + std::to_string(t.order()) + ">";
      });

  m.def("parse_table", &parse_table, py::arg("text"));
  m.def("format_table", &format_table, py::arg("table"));
  m.def("dual", &dual, py::arg("table"));

  m.def(
      "analyze",
      [](MulTable const& t) {
        auto const info = analyze(t);
        py::dict d;
        d["nilpotent"]   = info.is_nilpotent;
        d["commutative"] = is_commutative(t);
        d["class"]       = info.class_c;
        d["coclass"]     = info.coclass_r;
        d["zero"]        = info.zero;
        std::vector<std::vector<std::size_t>> layers;
        for (auto const& l : info.layers) {
          layers.push_back(as_indices(l));
        }
        d["layers"]     = layers;
        d["generators"] = as_indices(info.min_gen_set);
        return d;
      },
      py::arg("table"));

  m.def(
      "canonical_key",
      [](MulTable const& t, std::string const& mode) {
        auto const key = canonical_key(t, count_mode(mode));
        return py::bytes(reinterpret_cast<char const*>(key.bytes.data()),
                         key.bytes.size());
      },
      py::arg("table"), py::arg("mode") = "iso");
  m.def(
      "are_equivalent",
      [](MulTable const& a, MulTable const& b, std::string const& mode) {
        return are_equivalent(a, b, count_mode(mode));
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "iso");
  m.def("is_self_dual", &is_self_dual, py::arg("table"));

  m.def("coclass1_list", [](std::size_t n) { return presentation_list(coclass1_list(n)); },
        py::arg("n"));
  m.def("coclass2_gen2_list",
        [](std::size_t n) { return presentation_list(coclass2_gen2_list(n)); },
        py::arg("n"));
  m.def("coclass2_gen3_list",
        [](std::size_t n) { return presentation_list(coclass2_gen3_list(n)); },
        py::arg("n"));
  m.def(
      "parse_presentation",
      [](std::string const& text) {
        return presentation_dict(read_presentation(text));
      },
      py::arg("text"));
  m.def(
      "realize",
      [](std::string const& text, std::optional<std::size_t> order) {
        auto p = read_presentation(text);
        if (order) {
          p.expected_order = *order;
        }
        if (p.expected_order == 0) {
          throw py::value_error("order is required for a bare presentation");
        }
        py::gil_scoped_release release;
        return realize(p);
      },
      py::arg("presentation"), py::arg("order") = py::none());

  m.def(
      "formula_count",
      [](std::string const& type, std::size_t n, std::string const& mode) {
        return formula_count({count_type(type), n, convention(mode)});
      },
      py::arg("type"), py::arg("n"), py::arg("mode") = "anti-iso");
  m.def(
      "table1_reference",
      [](std::string const& type, std::size_t n, std::string const& mode) {
        return table1_reference(count_type(type), convention(mode), n);
      },
      py::arg("type"), py::arg("n"), py::arg("mode") = "anti-iso");

  m.def(
      "bruteforce_count",
      [](std::size_t n, std::optional<std::size_t> coclass,
         std::optional<std::size_t> gen_size, std::string const& mode) {
        SearchConfig cfg;
        cfg.order           = n;
        cfg.coclass_filter  = coclass;
        cfg.gen_size_filter = gen_size;
        auto const c        = convention(mode);
        cfg.commutative_only = c == Convention::CommutativeUpToIso;
        cfg.mode = c == Convention::UpToAntiIso ? CountMode::UpToAntiIso
                                                : CountMode::UpToIso;
        py::gil_scoped_release release;
        return count_nilpotent(cfg);
      },
      py::arg("n"), py::arg("coclass") = py::none(),
      py::arg("gen_size") = py::none(), py::arg("mode") = "anti-iso");
}
