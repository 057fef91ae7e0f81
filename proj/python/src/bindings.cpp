#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "olog/bundled.hpp"
#include "olog/chain.hpp"
#include "olog/commands.hpp"
#include "olog/dsl.hpp"
#include "olog/evaluation.hpp"
#include "olog/generator.hpp"
#include "olog/isomorphism.hpp"

namespace py = pybind11;
using namespace olog;

namespace {

py::object payload_to_py(const Payload& p) {
  return std::visit(
      [](const auto& v) -> py::object {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return py::none();
        } else if constexpr (std::is_same_v<T, double>) {
          return py::float_(v);
        } else if constexpr (std::is_same_v<T, RealPair>) {
          return py::make_tuple(v.x, v.y);
        } else if constexpr (std::is_same_v<T, Graph>) {
          py::dict d;
          d["nodes"] = std::vector<std::string>(v.nodes.begin(), v.nodes.end());
          d["edges"] = v.edges;
          return d;
        } else {
          return py::str(v.value);
        }
      },
      p);
}

py::dict diagnostic_to_py(const Diagnostic& d) {
  py::dict out;
  out["severity"] = std::string(to_string(d.severity));
  out["code"] = d.code;
  out["message"] = d.message;
  out["location"] = d.location;
  return out;
}

py::list diagnostics_to_py(const std::vector<Diagnostic>& ds) {
  py::list out;
  for (const auto& d : ds) out.append(diagnostic_to_py(d));
  return out;
}

Comparators comparators(double eps_rel, double kappa) {
  Comparators c{eps_rel, kappa};
  validate_comparators(c);
  return c;
}

py::tuple command_to_py(const CommandResult& r) {
  return py::make_tuple(r.exit_code, r.report.comparable());
}

GlobalOptions options(double eps_rel, double kappa) {
  GlobalOptions g;
  g.comparators = Comparators{eps_rel, kappa};
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ologs, set-valued instances and the brick/glue/lifeline chain model";

  // Instances carry the stable error code as `code`.
  py::exception<OlogError> error(m, "OlogError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OlogError& e) {
      const py::object type = py::module_::import("olog._core").attr("OlogError");
      py::object exc = type(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::enum_<Domain>(m, "Domain").value("Protein", Domain::Protein).value("Social", Domain::Social);
  py::enum_<Classification>(m, "Classification")
      .value("Brittle", Classification::Brittle)
      .value("Ductile", Classification::Ductile)
      .value("Neither", Classification::Neither);

  py::class_<OlogSchema>(m, "Schema")
      .def_readonly("name", &OlogSchema::name)
      .def_property_readonly("boxes",
                             [](const OlogSchema& s) {
                               py::list out;
                               for (const auto& b : s.boxes) {
                                 out.append(py::dict(py::arg("id") = b.id, py::arg("label") = b.label,
                                                     py::arg("tags") = b.tags));
                               }
                               return out;
                             })
      .def_property_readonly("arrows",
                             [](const OlogSchema& s) {
                               py::list out;
                               for (const auto& a : s.arrows) {
                                 out.append(py::dict(py::arg("id") = a.id, py::arg("src") = a.src,
                                                     py::arg("dst") = a.dst, py::arg("label") = a.label,
                                                     py::arg("tags") = a.tags));
                               }
                               return out;
                             })
      .def_property_readonly("equation_count", [](const OlogSchema& s) { return s.equations.size(); })
      .def_property_readonly("fiber_product_count",
                             [](const OlogSchema& s) { return s.fiber_products.size(); })
      .def("validate", [](const OlogSchema& s) { return diagnostics_to_py(validate_schema(s)); })
      .def("__eq__", [](const OlogSchema& a, const OlogSchema& b) { return a == b; });

  py::class_<Instance>(m, "Instance")
      .def_readonly("name", &Instance::name)
      .def_readonly("schema_name", &Instance::schema_name)
      .def("elements",
           [](const Instance& i, const std::string& box) {
             py::dict out;
             for (const auto& [e, p] : i.set(box)) out[py::str(e)] = payload_to_py(p);
             return out;
           })
      .def("table",
           [](const Instance& i, const std::string& arrow) {
             const auto& t = i.table(arrow);
             return std::vector<std::pair<std::string, std::string>>(t.begin(), t.end());
           })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  m.def(
      "parse_schema",
      [](const std::string& text, const std::string& file) {
        auto p = parse_schema(text, file);
        return py::make_tuple(std::move(p.schema), diagnostics_to_py(p.diagnostics));
      },
      py::arg("text"), py::arg("file") = "<input>");
  m.def(
      "parse_instance",
      [](const std::string& text, const std::string& file) { return parse_instance(text, file); },
      py::arg("text"), py::arg("file") = "<input>");
  m.def("serialize_schema", &serialize_schema);
  m.def("serialize_instance", &serialize_instance);
  m.def("bundled_schema", [] { return bundled_schema(); });
  m.def("bundled_schema_text", [] { return std::string(bundled_schema_text()); });

  m.def("validate_instance", [](const OlogSchema& s, const Instance& i) {
    return diagnostics_to_py(validate_instance(s, i));
  });
  m.def("check_equations", [](const OlogSchema& s, const Instance& i) {
    py::list out;
    for (const auto& r : check_all_equations(s, i)) {
      py::dict d;
      d["lhs"] = arrow_list(r.equation.lhs);
      d["rhs"] = arrow_list(r.equation.rhs);
      d["holds"] = r.verdict == EquationVerdict::AllHold;
      d["witness"] = r.witness ? py::object(py::str(r.witness->element)) : py::none();
      out.append(d);
    }
    return out;
  });
  m.def("check_fiber_products", [](const OlogSchema& s, const Instance& i) {
    py::list out;
    for (const auto& fp : s.fiber_products) {
      const auto r = verify_fiber_product(s, i, fp);
      py::dict d;
      d["apex"] = fp.apex;
      d["passes"] = r.verdict == FiberProductVerdict::Pass;
      d["failure"] = std::string(to_string(r.failure));
      out.append(d);
    }
    return out;
  });
  m.def("compute_pullback", [](const OlogSchema& s, const Instance& i, const std::string& leg1,
                               const std::string& leg2) { return compute_pullback(s, i, leg1, leg2).pairs; });
  m.def(
      "find_isomorphism",
      [](const OlogSchema& s, const Instance& a, const Instance& b) -> py::object {
        const auto r = check_instance_isomorphism(s, a, b);
        if (r.verdict == IsoVerdict::NotFound) return py::none();
        py::dict out;
        for (const auto& [box, bij] : r.bijections) {
          py::dict inner;
          for (const auto& [x, y] : bij) inner[py::str(x)] = y;
          out[py::str(box)] = inner;
        }
        return out;
      },
      "Per-box bijection dict, or None when the instances are not isomorphic.");

  m.def("roughly_equal", [](double R, double r, double eps_rel, double kappa) {
    return roughly_equal(R, r, comparators(eps_rel, kappa));
  }, py::arg("R"), py::arg("r"), py::arg("eps_rel") = 0.25, py::arg("kappa") = 3.0);
  m.def("much_greater", [](double R, double r, double eps_rel, double kappa) {
    return much_greater(R, r, comparators(eps_rel, kappa));
  }, py::arg("R"), py::arg("r"), py::arg("eps_rel") = 0.25, py::arg("kappa") = 3.0);
  m.def("link_failure_noise", &link_failure_noise, py::arg("tau"), py::arg("L"));
  m.def("estimate_link_failure_noise_mc", &estimate_link_failure_noise_mc, py::arg("L"),
        py::arg("tau"), py::arg("trials"), py::arg("seed"));

  py::class_<SimParams>(m, "SimParams")
      .def(py::init<>())
      .def_readwrite("brick_count", &SimParams::brick_count)
      .def_readwrite("glue_failure", &SimParams::glue_failure)
      .def_readwrite("lifeline_present", &SimParams::lifeline_present)
      .def_readwrite("lifeline_resting", &SimParams::lifeline_resting)
      .def_readwrite("lifeline_failure", &SimParams::lifeline_failure)
      .def_readwrite("brick_failure", &SimParams::brick_failure)
      .def_readwrite("domain", &SimParams::domain)
      .def_readwrite("seed", &SimParams::seed);
  m.def("protein_defaults", &protein_defaults);
  m.def("social_defaults", &social_defaults);
  m.def("matched_social_defaults", &matched_social_defaults);

  m.def(
      "generate",
      [](const SimParams& p, double eps_rel, double kappa) {
        auto g = generate_instance(p, bundled_schema(), comparators(eps_rel, kappa));
        py::dict out;
        out["instance"] = std::move(g.instance);
        out["system_failure"] = g.system_failure;
        out["glue_failure"] = g.glue_failure;
        out["classification"] = g.classification;
        return out;
      },
      py::arg("params"), py::arg("eps_rel") = 0.25, py::arg("kappa") = 3.0);

  // Command layer: each returns (exit_code, report text without timing).
  m.def(
      "cmd_check",
      [](const std::string& schema, std::optional<std::string> inst, double eps_rel, double kappa) {
        return command_to_py(cmd_check(schema, inst, options(eps_rel, kappa)));
      },
      py::arg("schema"), py::arg("instance") = py::none(), py::arg("eps_rel") = 0.25,
      py::arg("kappa") = 3.0);
  m.def(
      "cmd_iso",
      [](const std::string& schema, const std::string& a, const std::string& b) {
        return command_to_py(cmd_iso(schema, a, b));
      },
      py::arg("schema"), py::arg("a"), py::arg("b"));
  m.def(
      "cmd_analogy",
      [](int bricks_a, int bricks_b, double eps_rel, double kappa) {
        return command_to_py(cmd_analogy({bricks_a, bricks_b}, options(eps_rel, kappa)));
      },
      py::arg("bricks_a") = 9, py::arg("bricks_b") = 9, py::arg("eps_rel") = 0.25,
      py::arg("kappa") = 3.0);
}
