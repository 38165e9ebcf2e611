#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nullkit/cli.hpp"
#include "nullkit/conjectures.hpp"
#include "nullkit/parallel.hpp"
#include "nullkit/problem.hpp"

namespace py = pybind11;
using namespace nullkit;

namespace {

std::vector<std::string> gb_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner().gens()) out.push_back(g.to_string());
  return out;
}

SpaceKind parse_kind(const std::string& kind) {
  if (kind == "affine") return SpaceKind::Affine;
  if (kind == "projective") return SpaceKind::Projective;
  throw Error(ErrorKind::InvalidArgument, "kind must be 'affine' or 'projective'");
}

py::dict method_dict(const MethodReport& r, const Ideal& ideal) {
  py::dict d;
  d["method"] = std::string(to_string(r.method));
  d["gb"] = gb_strings(ideal);
  d["quotient_rounds"] = r.quotient_rounds;
  d["gb_size"] = r.gb_size;
  d["d"] = r.d ? py::cast(*r.d) : py::none();
  d["seconds"] = r.seconds;
  return d;
}

py::dict search_dict(const SearchResult& r) {
  py::dict d;
  d["family"] = std::string(to_string(r.family));
  d["bounds"] = r.bounds.to_string();
  d["exhausted"] = r.exhausted();
  d["candidates_tested"] = r.candidates_tested;
  d["structures"] = r.structures;
  d["arg_pool"] = r.arg_pool;
  if (r.witness) {
    std::vector<std::string> stages, args;
    for (const auto& s : r.witness->stages) stages.push_back(s.to_string());
    for (const auto& a : r.witness->args) args.push_back(a.to_string());
    py::dict w;
    w["stages"] = stages;
    w["args"] = args;
    w["composite"] = r.witness->composite().to_string();
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

Problem make_problem(const std::string& field, const std::vector<std::string>& vars,
                     const std::vector<std::string>& gens, const std::string& points) {
  std::ostringstream text;
  text << "field " << field << "\n";
  if (!points.empty()) text << "points " << points << "\n";
  text << "vars";
  for (const auto& v : vars) text << ' ' << v;
  text << "\nideal:";
  for (std::size_t i = 0; i < gens.size(); ++i) text << (i ? ", " : " ") << gens[i];
  text << "\n";
  return parse_problem(text.str());
}

}  // namespace

PYBIND11_MODULE(_nullkit, m) {
  m.doc() = "Gröbner bases and Nullstellensätze over finite fields";
  m.attr("__version__") = cli::kVersion;

  // Messages start with the error kind, e.g. "SyntaxError: line 3, column 8: ...".
  py::register_exception<Error>(m, "NullkitError", PyExc_ValueError);

  py::class_<Problem>(m, "Problem")
      .def(py::init(&make_problem), py::arg("field"), py::arg("vars"), py::arg("gens"), py::arg("points") = "")
      .def_static("parse", [](const std::string& text) { return parse_problem(text); })
      .def_static("load", &load_problem)
      .def("emit", &Problem::emit)
      .def_property_readonly("field", [](const Problem& p) { return p.base->name(); })
      .def_property_readonly("coeffs", [](const Problem& p) { return p.coeffs->name(); })
      .def_property_readonly("points", [](const Problem& p) { return p.points->name(); })
      .def_property_readonly("vars", [](const Problem& p) { return p.ring->vars; })
      .def_property_readonly("gens", [](const Problem& p) {
        std::vector<std::string> out;
        for (const auto& g : p.ideal.gens()) out.push_back(g.to_string());
        return out;
      })
      .def("__repr__", [](const Problem& p) { return "<Problem " + p.ideal.to_string() + ">"; });

  m.def(
      "groebner",
      [](const Problem& p, const std::string& order) {
        const auto o = parse_order(order);
        std::vector<std::string> out;
        for (const auto& g : p.ideal.groebner(o).gens()) out.push_back(g.to_string(o));
        return out;
      },
      py::arg("problem"), py::arg("order") = "degrevlex", "Reduced Gröbner basis as strings.");

  m.def(
      "contains",
      [](const Problem& p, const std::string& f) { return p.ideal.contains(parse_polynomial(f, p.ring)); },
      py::arg("problem"), py::arg("poly"));

  m.def(
      "ideal_op",
      [](const std::string& op, const Problem& p, const std::vector<std::string>& other, std::size_t k) {
        std::vector<Polynomial> gens;
        for (const auto& g : other) gens.push_back(parse_polynomial(g, p.ring));
        const Ideal b(p.ring, gens);
        py::dict d;
        Ideal r = p.ideal;
        if (op == "sum") r = ideal_sum(p.ideal, b);
        else if (op == "intersect") r = ideal_intersect(p.ideal, b);
        else if (op == "quotient") r = ideal_quotient(p.ideal, b);
        else if (op == "saturate") {
          auto s = ideal_saturate(p.ideal, b);
          r = s.ideal;
          d["iterations"] = s.iterations;
        } else if (op == "eliminate") r = eliminate(p.ideal, k);
        else throw Error(ErrorKind::InvalidArgument, "unknown op '" + op + "'");
        d["gb"] = gb_strings(r);
        return d;
      },
      py::arg("op"), py::arg("problem"), py::arg("other") = std::vector<std::string>{}, py::arg("k") = 1);

  m.def(
      "points",
      [](const Problem& p, const std::string& kind) {
        const auto v = zero_set(p.ideal, p.points, parse_kind(kind));
        std::vector<std::string> out;
        for (const auto& pt : v.points) out.push_back(format_point(*v.field, pt, v.kind));
        return out;
      },
      py::arg("problem"), py::arg("kind") = "projective");

  m.def(
      "vanishing",
      [](const Problem& p, const std::string& kind, const std::string& method) -> py::dict {
        const auto cfg = p.config(parse_method(method));
        if (parse_kind(kind) == SpaceKind::Affine) {
          const Ideal r = cfg.method == VanishingMethod::Oracle ? affine_oracle(p.ideal, cfg)
                                                                : affine_vanishing(p.ideal, cfg);
          py::dict d;
          d["gb"] = gb_strings(r);
          return d;
        }
        const auto res = projective_vanishing(p.ideal, cfg);
        return method_dict(res.report, res.ideal);
      },
      py::arg("problem"), py::arg("kind") = "projective", py::arg("method") = "colon");

  m.def(
      "compare",
      [](const Problem& p) {
        py::list out;
        for (auto method : {VanishingMethod::Colon, VanishingMethod::Saturation, VanishingMethod::Oracle}) {
          const auto res = projective_vanishing(p.ideal, p.config(method));
          out.append(method_dict(res.report, res.ideal));
        }
        return out;
      },
      py::arg("problem"), "Projective I(V) by all three methods.");

  m.def(
      "classify_empty", [](const Problem& p) { return std::string(to_string(classify_empty(p.ideal, p.config()))); },
      py::arg("problem"));

  m.def(
      "certificate",
      [](const Problem& p, std::size_t j) {
        const auto c = make_certificate(p.ideal, j, p.config());
        py::dict d;
        d["j"] = c.j;
        d["d"] = c.d;
        d["g"] = c.g.to_string();
        d["l"] = c.l.to_string();
        return d;
      },
      py::arg("problem"), py::arg("j"));

  m.def(
      "search",
      [](const Problem& p, const std::string& family, const std::string& target, const std::string& bounds) {
        const auto f = parse_polynomial(target, p.ring);
        return search_dict(search_witness(f, p.ideal, parse_family(family), parse_bounds(bounds), p.points));
      },
      py::arg("problem"), py::arg("family"), py::arg("target"), py::arg("bounds") = "");

  m.def(
      "counterexample_suite",
      [](const std::string& bounds) {
        SuiteOptions opts;
        opts.bounds = parse_bounds(bounds);
        const auto report = counterexample_suite(opts);
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["group"] = c.group;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          d["vacuous"] = c.vacuous;
          checks.append(d);
        }
        py::list searches;
        for (const auto& s : report.searches) searches.append(search_dict(s));
        py::dict d;
        d["passed"] = report.passed();
        d["checks"] = checks;
        d["searches"] = searches;
        return d;
      },
      py::arg("bounds") = "");

  m.def(
      "find_nonradical",
      [](std::uint32_t q, std::size_t n, unsigned maxdeg) -> py::object {
        auto hit = find_nonradical_instance(q, n, maxdeg);
        if (!hit) return py::none();
        py::dict d;
        d["ideal"] = gb_strings(hit->ideal);
        d["augmented"] = gb_strings(hit->augmented);
        d["colon"] = gb_strings(hit->colon);
        d["witness"] = hit->witness.to_string();
        d["ideals_examined"] = hit->ideals_examined;
        return d;
      },
      py::arg("q") = 2, py::arg("n") = 2, py::arg("maxdeg") = 2);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");

  m.def("set_threads", &set_thread_count, py::arg("n"), "0 restores the default.");
}
