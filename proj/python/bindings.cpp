#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "postlie/acceptance.hpp"
#include "postlie/dispatch.hpp"

namespace py = pybind11;
using namespace postlie;

namespace {

Verbosity parse_verbosity(const std::string& v) {
  if (v == "quiet") return Verbosity::quiet;
  if (v == "full") return Verbosity::full;
  if (v == "normal") return Verbosity::normal;
  throw py::value_error("verbosity must be quiet, normal or full");
}

/// {(i, j, k): "scalar"} with 1-based indices, nonzero entries only.
py::dict table_entries(const Document& d, const std::string& name) {
  const Array& a = d.table(name);
  py::dict out;
  std::vector<std::size_t> idx(a.shape.size());
  for (std::size_t off = 0; off < a.size(); ++off) {
    if (a.values[off].is_zero()) continue;
    std::size_t rest = off;
    for (std::size_t k = a.shape.size(); k-- > 0;) {
      idx[k] = rest % a.shape[k] + 1;
      rest /= a.shape[k];
    }
    py::tuple key(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) key[k] = idx[k];
    out[key] = a.values[off].str();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks and constructions for post-Lie type algebras over Q(i)";

  static py::exception<Error> base(m, "Error");
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  static py::exception<UsageError> usage_exc(m, "UsageError", base.ptr());
  static py::exception<PreconditionError> pre_exc(m, "PreconditionError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const UsageError& e) {
      py::set_error(usage_exc, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(pre_exc, (std::string(e.what()) + "\n" + e.report().render()).c_str());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& s) { return Scalar::parse(s); }), py::arg("text") = "0")
      .def(py::init([](long v) { return Scalar(v); }))
      .def_static("i", &Scalar::i)
      .def_property_readonly("re", [](const Scalar& s) { return s.re().get_str(); })
      .def_property_readonly("im", [](const Scalar& s) { return s.im().get_str(); })
      .def("is_zero", &Scalar::is_zero)
      .def("conj", &Scalar::conj)
      .def("inverse", &Scalar::inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__hash__", [](const Scalar& s) { return py::hash(py::str(s.str())); })
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; });

  py::class_<Violation>(m, "Violation")
      .def_readonly("identity", &Violation::identity)
      .def_readonly("indices", &Violation::indices)
      .def_property_readonly("lhs", [](const Violation& v) { return to_string(v.lhs); })
      .def_property_readonly("rhs", [](const Violation& v) { return to_string(v.rhs); });

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("subject", &CheckReport::subject)
      .def_readonly("passed", &CheckReport::passed)
      .def_readonly("violations", &CheckReport::violations)
      .def_readonly("total_violations", &CheckReport::total_violations)
      .def_readonly("failed_ids", &CheckReport::failed_ids)
      .def("failed", &CheckReport::failed)
      .def(
          "render",
          [](const CheckReport& r, const std::string& v, const std::vector<std::string>& basis) {
            return r.render(parse_verbosity(v), basis);
          },
          py::arg("verbosity") = "normal", py::arg("basis") = std::vector<std::string>{})
      .def("__bool__", [](const CheckReport& r) { return r.passed; })
      .def("__repr__", [](const CheckReport& r) { return r.render(Verbosity::quiet); });

  py::class_<Document>(m, "Document")
      .def_static("parse", &parse_document, py::arg("text"))
      .def_static("load", &load_document, py::arg("path"))
      .def("save", [](const Document& d, const std::filesystem::path& p) { save_document(p, d); })
      .def("format", &format_document)
      .def_property_readonly("kind", [](const Document& d) { return kind_name(d.kind); })
      .def_property_readonly("field", [](const Document& d) { return field_name(d.field); })
      .def_readonly("dim", &Document::dim)
      .def_readonly("basis", &Document::basis)
      .def_property_readonly("tables",
                             [](const Document& d) {
                               std::vector<std::string> names;
                               for (const auto& [n, a] : d.tables) names.push_back(n);
                               return names;
                             })
      .def("shape", [](const Document& d, const std::string& n) { return d.table(n).shape; })
      .def("entries", &table_entries, py::arg("table"))
      .def(py::self == py::self)
      .def("__repr__", [](const Document& d) {
        return "<Document " + kind_name(d.kind) + " dim " + std::to_string(d.dim) + ">";
      });

  m.def("check_kinds", &check_kinds);
  m.def("construction_names", &construction_names);
  m.def(
      "check",
      [](const std::string& kind, const std::vector<Document>& docs, const std::string& weight,
         const std::string& mode) {
        CheckOptions opt;
        opt.weight = Scalar::parse(weight);
        if (mode == "direct")
          opt.mode = CoalgebraMode::direct;
        else if (mode != "dual")
          throw py::value_error("mode must be dual or direct");
        return run_check(kind, docs, opt);
      },
      py::arg("kind"), py::arg("docs"), py::arg("weight") = "1", py::arg("mode") = "dual");
  m.def("derive", &run_derive, py::arg("construction"), py::arg("docs"));

  m.def("default_corpus_dir", &default_corpus_dir);
  m.def(
      "run_acceptance",
      [](const std::filesystem::path& dir) {
        py::list out;
        for (const auto& c : run_acceptance(Corpus(dir)).criteria) {
          py::dict row;
          row["id"] = c.id;
          row["passed"] = c.passed();
          row["failed_clauses"] = c.failed_clauses();
          row["line"] = c.line();
          out.append(row);
        }
        return out;
      },
      py::arg("dir"));
}
