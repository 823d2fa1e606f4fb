// Thin pybind11 layer over grpcore. Structured results cross the boundary as
// JSON strings (decoded in ordgrp/__init__.py) so the wire shape stays
// byte-compatible with the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grp/cocycle.hpp"
#include "grp/enumerator.hpp"
#include "grp/errors.hpp"
#include "grp/finite_group.hpp"
#include "grp/intmatrix.hpp"
#include "grp/knots.hpp"
#include "grp/orderability.hpp"
#include "grp/presentation.hpp"
#include "grp/report.hpp"
#include "grp/tensor.hpp"

namespace py = pybind11;

namespace {

grp::FiniteGroup group_from_text(const std::string& text,
                                 std::size_t max_cosets) {
  grp::Presentation p = grp::parse_presentation(text);
  auto res = grp::todd_coxeter(p, {}, grp::Limits{max_cosets});
  return grp::group_from_coset_table(grp::require_table(res));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "coset enumeration, tensor squares and orderability verdicts";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const grp::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const grp::OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const grp::Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "canonical",
      [](const std::string& text) {
        return grp::to_text(grp::parse_presentation(text));
      },
      py::arg("presentation"));

  m.def(
      "abelianization",
      [](const std::string& text) {
        return grp::to_string(grp::abelianization(grp::parse_presentation(text)));
      },
      py::arg("presentation"));

  m.def(
      "enumerate_cosets",
      [](const std::string& text, std::size_t max_cosets) {
        grp::Presentation p = grp::parse_presentation(text);
        auto res = grp::todd_coxeter(p, {}, grp::Limits{max_cosets});
        return grp::require_table(res).coset_count();
      },
      py::arg("presentation"), py::arg("max_cosets") = 500000);

  m.def(
      "fingerprint_json",
      [](const std::string& text, std::size_t max_cosets) {
        return grp::json_fingerprint(
                   grp::fingerprint(group_from_text(text, max_cosets)))
            .dump();
      },
      py::arg("presentation"), py::arg("max_cosets") = 500000);

  m.def(
      "tensor_json",
      [](const std::string& text, std::size_t max_cosets) {
        grp::FiniteGroup g = group_from_text(text, max_cosets);
        grp::TensorSquare t = grp::tensor_square(g);
        grp::Json out;
        out["group_order"] = g.order();
        out["tensor_order"] = t.carrier.order();
        out["fingerprint"] = grp::json_fingerprint(grp::fingerprint(t.carrier));
        return out.dump();
      },
      py::arg("presentation"), py::arg("max_cosets") = 500000);

  m.def(
      "exterior_json",
      [](const std::string& text, std::size_t max_cosets) {
        grp::FiniteGroup g = group_from_text(text, max_cosets);
        grp::ExteriorSquare e = grp::exterior_square(g);
        grp::Json out;
        out["group_order"] = g.order();
        out["exterior_order"] = e.carrier.order();
        out["fingerprint"] = grp::json_fingerprint(grp::fingerprint(e.carrier));
        return out.dump();
      },
      py::arg("presentation"), py::arg("max_cosets") = 500000);

  m.def(
      "schur",
      [](const std::string& text, std::size_t max_cosets) {
        return grp::to_string(
            grp::schur_multiplier(group_from_text(text, max_cosets)));
      },
      py::arg("presentation"), py::arg("max_cosets") = 500000);

  m.def(
      "classify_json",
      [](const std::string& text, std::size_t max_cosets) {
        grp::Presentation p = grp::parse_presentation(text);
        grp::Verdict v = grp::classify(p, grp::Limits{max_cosets});
        return grp::json_verdict(grp::to_text(p), v).dump();
      },
      py::arg("presentation"), py::arg("max_cosets") = 500000);

  m.def(
      "classify_id_json",
      [](const std::string& id, std::size_t max_cosets) {
        grp::Verdict v = grp::classify(id, grp::Limits{max_cosets});
        return grp::json_verdict(id, v).dump();
      },
      py::arg("green_id"), py::arg("max_cosets") = 500000);

  m.def(
      "wirtinger",
      [](const std::string& gauss) {
        return grp::to_text(
            grp::wirtinger_presentation(grp::parse_gauss_code(gauss)));
      },
      py::arg("gauss_code"));

  m.def("green_ids", [] { return grp::green_ids(); });

  m.def(
      "green_presentation",
      [](const std::string& id) {
        const auto& table = grp::green_table();
        auto it = table.find(id);
        if (it == table.end()) throw grp::Error("unknown table id: " + id);
        return grp::to_text(it->second);
      },
      py::arg("green_id"));

  m.def(
      "maeda",
      [](long m, long n) {
        grp::MaedaGroup g = grp::maeda_group(m, n);
        py::dict out;
        out["metacyclic"] = grp::to_text(g.metacyclic);
        out["wirtinger"] = grp::to_text(g.wirtinger);
        out["q"] = g.q;
        return out;
      },
      py::arg("m"), py::arg("n"));

  m.def(
      "carry_check",
      [](long n) {
        grp::CocycleTable t = grp::carry_cocycle(n);
        auto bad = grp::validate_inhomogeneous(t);
        if (bad) throw grp::Error(*bad);
        grp::homogeneous_from_inhomogeneous(t);
        grp::ExtensionGroup ext(t);
        return ext.power({0, 1}, static_cast<int>(n)) ==
               grp::ExtensionGroup::Elem{1, 0};
      },
      py::arg("n"));
}
