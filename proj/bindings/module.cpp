#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ltsg/catalog.hpp"
#include "ltsg/dfa.hpp"
#include "ltsg/report.hpp"
#include "ltsg/sgp_format.hpp"

namespace py = pybind11;
using namespace ltsg;

namespace {

Semigroup semigroup_from_rows(
    std::vector<std::vector<element_id>> const& rows,
    std::vector<std::string> const& names, bool validate) {
  std::size_t const order = rows.size();
  std::vector<element_id> table;
  table.reserve(order * order);
  for (auto const& row : rows) {
    if (row.size() != order) {
      throw invalid_input("the table must be square");
    }
    table.insert(table.end(), row.begin(), row.end());
  }
  return Semigroup(order, std::move(table), names, validate);
}

std::vector<std::vector<element_id>> semigroup_rows(Semigroup const& s) {
  std::vector<std::vector<element_id>> rows;
  for (element_id i = 0; i < s.order(); ++i) {
    auto row = s.row(i);
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

std::string witness_json(std::optional<Witness> const& w) {
  if (!w) {
    return "";
  }
  Report scratch;  // reuse the report serialiser for the witness alone
  scratch.verdict.witness = *w;
  return to_json(scratch)["verdict"]["witness"].dump();
}

}  // namespace

PYBIND11_MODULE(ltsg, m) {
  m.doc() = "local testability analysis for finite semigroups";

  py::register_exception<invalid_input>(m, "InvalidInput",
                                        PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError",
                                         PyExc_RuntimeError);
  py::register_exception<not_locally_testable>(m, "NotLocallyTestable",
                                               PyExc_ValueError);

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init(&semigroup_from_rows), py::arg("table"),
           py::arg("names") = std::vector<std::string>{},
           py::arg("validate") = true)
      .def_property_readonly("order", &Semigroup::order)
      .def_property_readonly("table", &semigroup_rows)
      .def_property_readonly("names", &Semigroup::names)
      .def("product", &Semigroup::product, py::arg("a"), py::arg("b"))
      .def("name_of", &Semigroup::name_of, py::arg("a"))
      .def("__len__", &Semigroup::order)
      .def("__repr__", [](Semigroup const& s) {
        std::ostringstream out;
        out << "Semigroup(order=" << s.order() << ")";
        return out.str();
      });

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("locally_testable", &Verdict::locally_testable)
      .def_property_readonly(
          "method", [](Verdict const& v) { return to_string(v.method); })
      .def_property_readonly(
          "witness", [](Verdict const& v) { return witness_json(v.witness); })
      .def("__bool__",
           [](Verdict const& v) { return v.locally_testable; });

  py::class_<LevelBreakdown>(m, "LevelBreakdown")
      .def_readonly("n_bound", &LevelBreakdown::n_bound)
      .def_readonly("l_bound", &LevelBreakdown::l_bound)
      .def_readonly("r_bound", &LevelBreakdown::r_bound)
      .def_readonly("level", &LevelBreakdown::level);

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("name", &CatalogEntry::name)
      .def_readonly("semigroup", &CatalogEntry::semigroup)
      .def_readonly("expected_locally_testable",
                    &CatalogEntry::expected_locally_testable)
      .def_readonly("expected_level", &CatalogEntry::expected_level);

  py::class_<TransformationClosure>(m, "TransformationClosure")
      .def_readonly("semigroup", &TransformationClosure::semigroup)
      .def_readonly("generator_map", &TransformationClosure::generator_map)
      .def_readonly("elements", &TransformationClosure::elements);

  py::class_<Dfa>(m, "Dfa")
      .def_readonly("state_count", &Dfa::state_count)
      .def_readonly("letters", &Dfa::letters)
      .def_readonly("transitions", &Dfa::transitions);

  m.def("parse_sgp",
        py::overload_cast<std::string const&>(&parse_semigroup),
        py::arg("text"), "parse a .sgp multiplication table");
  m.def("to_sgp", &to_sgp, py::arg("semigroup"));
  m.def("idempotents", &idempotents, py::arg("semigroup"));
  m.def(
      "multiply_word",
      [](Semigroup const& s, std::vector<element_id> const& word) {
        return multiply_word(s, std::span<element_id const>(word));
      },
      py::arg("semigroup"), py::arg("word"));

  m.def("is_locally_testable", &is_locally_testable, py::arg("semigroup"));
  m.def("is_locally_testable_semilattice", &is_locally_testable_semilattice,
        py::arg("semigroup"));
  m.def("level",
        py::overload_cast<Semigroup const&>(&level),
        py::arg("semigroup"),
        "exact level of local testability (B-sense); raises "
        "NotLocallyTestable otherwise");

  m.def(
      "min_level",
      [](Semigroup const& s, std::string const& sense, std::size_t cap) {
        return min_level(s, sense_from_string(sense), cap);
      },
      py::arg("semigroup"), py::arg("sense") = "B", py::arg("cap") = 12,
      "brute-force minimal level; None when no level <= cap works");
  m.def(
      "in_variety_B",
      [](Semigroup const& s, std::size_t n) { return in_variety_B(s, n); },
      py::arg("semigroup"), py::arg("n"));
  m.def(
      "in_variety_T",
      [](Semigroup const& s, std::size_t n) { return in_variety_T(s, n); },
      py::arg("semigroup"), py::arg("n"));

  m.def(
      "is_locally_idempotent",
      [](Semigroup const& s) {
        auto const check = is_locally_idempotent(s);
        return py::make_tuple(check.holds, check.witness);
      },
      py::arg("semigroup"));
  m.def(
      "word_probe",
      [](Semigroup const& s,
         std::vector<std::pair<std::string, element_id>> const& generators,
         std::size_t n, std::size_t max_len, std::string const& sense) {
        auto const result =
            word_probe(s, generators, n, max_len, sense_from_string(sense));
        return py::make_tuple(result.ok, result.words_checked);
      },
      py::arg("semigroup"), py::arg("generators"), py::arg("n"),
      py::arg("max_len") = 8, py::arg("sense") = "B");

  m.def("catalog", &catalog, py::arg("key"),
        py::arg("size") = std::nullopt);
  m.def("catalog_keys", &catalog_keys);
  m.def("enumerate_semigroups", &enumerate_semigroups, py::arg("order"));
  m.def("transformation_subsemigroup", &transformation_subsemigroup,
        py::arg("degree"), py::arg("generators"), py::arg("cap") = 4096,
        py::arg("letters") = std::vector<std::string>{});

  m.def("parse_dfa", py::overload_cast<std::string const&>(&parse_dfa),
        py::arg("text"));
  m.def("transition_semigroup", &transition_semigroup, py::arg("dfa"),
        py::arg("cap") = 4096);

  m.def(
      "analyze_json",
      [](Semigroup const& s, std::string const& input, bool with_level,
         bool verify) {
        AnalyzeOptions options;
        options.input = input;
        options.with_level = with_level;
        options.verify = verify;
        return to_json(analyze(s, options)).dump();
      },
      py::arg("semigroup"), py::arg("input") = "semigroup",
      py::arg("with_level") = true, py::arg("verify") = false,
      "full analysis serialised as a JSON report string");

#ifdef LTSG_VERSION
  m.attr("__version__") = LTSG_VERSION;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
