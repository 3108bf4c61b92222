#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathmorph/bijections.hpp"
#include "pathmorph/cli.hpp"
#include "pathmorph/path.hpp"
#include "pathmorph/path_sets.hpp"
#include "pathmorph/render.hpp"
#include "pathmorph/verify.hpp"

namespace py = pybind11;
using namespace pathmorph;

namespace {

py::int_ to_pyint(const Cardinality& value) {
  // through the decimal string, so counts beyond 64 bits survive
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(value.str()));
}

BijectionId resolve_bijection(const std::string& name) {
  const auto id = bijection_from_name(name);
  if (!id) raise(Errc::InvalidArgument, "unknown bijection \"" + name + "\"");
  return *id;
}

py::dict report_to_dict(const VerifyReport& r) {
  py::list cexes;
  for (const auto& c : r.counterexamples) {
    py::dict d;
    d["input"] = c.input ? py::cast(c.input->positions()) : py::object(py::none());
    d["detail"] = c.detail;
    cexes.append(d);
  }
  py::dict d;
  d["check"] = r.check_name;
  d["n"] = r.n;
  d["domain_size"] = to_pyint(r.domain_size);
  d["image_size"] = to_pyint(r.image_size);
  d["passed"] = r.passed;
  d["counterexamples"] = cexes;
  return d;
}

VerifyOptions make_options(int limit, int cap, int workers) {
  VerifyOptions opts;
  opts.exhaustive_limit = limit;
  opts.counterexample_cap = cap;
  opts.workers = workers;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_pathmorph, m) {
  m.doc() = "Bijections on 2n-step simple-random-walk paths";
  m.attr("__version__") = "0.1.0";
  m.attr("DEFAULT_EXHAUSTIVE_LIMIT") = kDefaultExhaustiveLimit;

  py::register_exception<Error>(m, "PathError");

  py::class_<Path>(m, "Path")
      .def_static("from_positions", [](std::vector<int> raw) { return validate(std::move(raw)); },
                  py::arg("positions"))
      .def_static("from_steps", [](const std::vector<int>& steps) { return Path::from_steps(steps); },
                  py::arg("steps"))
      .def_property_readonly("positions", [](const Path& p) { return p.positions(); })
      .def_property_readonly("half_length", &Path::half_length)
      .def("steps", [](const Path& p) { return p.steps(); })
      .def("negated", &Path::negated)
      .def("max_value", &Path::max_value)
      .def("min_value", &Path::min_value)
      .def("__len__", [](const Path& p) { return p.positions().size(); })
      .def("__str__", [](const Path& p) { return serialize(p); })
      .def("__repr__", [](const Path& p) { return "Path" + serialize(p); })
      .def("__hash__", [](const Path& p) { return py::hash(py::str(serialize(p))); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self);

  m.def("validate", [](std::vector<int> raw) { return validate(std::move(raw)); },
        py::arg("positions"));
  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("serialize", &serialize, py::arg("path"));
  m.def("path_from_steps", [](const std::vector<int>& steps) { return Path::from_steps(steps); },
        py::arg("steps"));
  m.def("steps_from_path", [](const Path& p) { return p.steps(); }, py::arg("path"));

  py::enum_<SetId>(m, "SetId")
      .value("S", SetId::S)
      .value("A", SetId::A)
      .value("B", SetId::B)
      .value("Aprime", SetId::Aprime)
      .value("Bprime", SetId::Bprime)
      .value("T", SetId::T)
      .value("C", SetId::C)
      .value("D", SetId::D);
  m.def("set_from_name", [](const std::string& name) {
    const auto s = set_from_name(name);
    if (!s) raise(Errc::InvalidArgument, "unknown set \"" + name + "\"");
    return *s;
  });

  m.def("is_member", &is_member, py::arg("path"), py::arg("set"));
  m.def("zero_touch_count", &zero_touch_count, py::arg("path"));
  m.def("enumerate_members", &enumerate_members, py::arg("n"), py::arg("set"),
        py::arg("limit") = kDefaultExhaustiveLimit);
  m.def("count_formula", [](int n, SetId s) { return to_pyint(count_formula(n, s)); },
        py::arg("n"), py::arg("set"));
  m.def("count_by_enumeration",
        [](int n, SetId s, int limit) { return to_pyint(count_by_enumeration(n, s, limit)); },
        py::arg("n"), py::arg("set"), py::arg("limit") = kDefaultExhaustiveLimit);
  m.def("sample", &sample, py::arg("n"), py::arg("set"), py::arg("seed"));

  py::class_<Sampler>(m, "Sampler")
      .def(py::init<int, SetId, std::uint64_t>(), py::arg("n"), py::arg("set"), py::arg("seed"))
      .def("next", &Sampler::next)
      .def_property_readonly("family_size",
                             [](const Sampler& s) { return to_pyint(s.family_size()); });

  py::class_<ValleyDecomposition>(m, "ValleyDecomposition")
      .def_readonly("M", &ValleyDecomposition::max_height)
      .def_readonly("a", &ValleyDecomposition::a)
      .def_readonly("b", &ValleyDecomposition::b);
  py::class_<AscentDecomposition>(m, "AscentDecomposition")
      .def_readonly("h", &AscentDecomposition::half_terminal)
      .def_readonly("c", &AscentDecomposition::c)
      .def_readonly("d", &AscentDecomposition::d);
  py::class_<StopTimes>(m, "StopTimes")
      .def_readonly("tau", &StopTimes::tau)
      .def_readonly("nu", &StopTimes::nu);

  m.def("decompose_valleys", &decompose_valleys, py::arg("path"));
  m.def("decompose_ascents", &decompose_ascents, py::arg("path"));
  m.def("stop_times", &stop_times, py::arg("path"));

  m.def("phi1", &phi1, py::arg("path"));
  m.def("psi1", &psi1, py::arg("path"));
  m.def("phi1_full", &phi1_full, py::arg("path"));
  m.def("psi1_full", &psi1_full, py::arg("path"));
  m.def("phi2", &phi2, py::arg("path"));
  m.def("psi2", &psi2, py::arg("path"));
  m.def("apply_bijection",
        [](const std::string& name, const Path& p) { return apply_bijection(resolve_bijection(name), p); },
        py::arg("bijection"), py::arg("path"));

  m.def(
      "check_bijection",
      [](int n, const std::string& name, int limit, int cap, int workers) {
        const BijectionId id = resolve_bijection(name);
        return report_to_dict(
            check_bijection(n, id, domain_of(id), codomain_of(id), make_options(limit, cap, workers)));
      },
      py::arg("n"), py::arg("bijection"), py::arg("limit") = kDefaultExhaustiveLimit,
      py::arg("cap") = 10, py::arg("workers") = 1);
  m.def(
      "check_counts",
      [](int n, int limit, int cap) {
        return report_to_dict(check_counts(n, make_options(limit, cap, 1)));
      },
      py::arg("n"), py::arg("limit") = kDefaultExhaustiveLimit, py::arg("cap") = 10);
  m.def("check_catalan_identity",
        [](int n_max) { return report_to_dict(check_catalan_identity(n_max)); }, py::arg("n_max"));
  m.def(
      "check_theorem_invariants",
      [](int n, int limit, int cap) {
        return report_to_dict(check_theorem_invariants(n, make_options(limit, cap, 1)));
      },
      py::arg("n"), py::arg("limit") = kDefaultExhaustiveLimit, py::arg("cap") = 10);

  py::class_<RenderSpec>(m, "RenderSpec")
      .def(py::init<>())
      .def_readwrite("cell_width", &RenderSpec::cell_width)
      .def_readwrite("cell_height", &RenderSpec::cell_height)
      .def_readwrite("columns", &RenderSpec::columns)
      .def_readwrite("original_color", &RenderSpec::original_color)
      .def_readwrite("image_color", &RenderSpec::image_color)
      .def_readwrite("show_grid", &RenderSpec::show_grid)
      .def_readwrite("show_axis", &RenderSpec::show_axis)
      .def_readwrite("unit", &RenderSpec::unit)
      .def_readwrite("margin", &RenderSpec::margin);

  m.def("render_pair", &render_pair, py::arg("original"), py::arg("image"),
        py::arg("spec") = RenderSpec{});
  m.def(
      "render_gallery",
      [](int n, const std::string& name, const RenderSpec& spec, int limit) {
        return render_gallery(n, resolve_bijection(name), spec, limit);
      },
      py::arg("n"), py::arg("bijection"), py::arg("spec") = RenderSpec{},
      py::arg("limit") = kDefaultExhaustiveLimit);
}
