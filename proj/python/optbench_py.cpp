#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "optbench/catalog.hpp"
#include "optbench/io.hpp"

namespace py = pybind11;
using namespace optbench;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dicts.
std::string meta_json(const std::string& name) { return dump(to_json(lookup(name).meta)); }

std::vector<std::string> list_names(std::optional<int> tier, std::optional<std::string> modality,
                                    std::optional<bool> separable, std::optional<bool> differentiable,
                                    std::optional<bool> dynamic, std::optional<std::size_t> dim) {
  ListFilter f;
  f.tier = tier;
  if (modality) {
    if (*modality == "unimodal") f.modality = Modality::unimodal;
    else if (*modality == "multimodal") f.modality = Modality::multimodal;
    else if (*modality == "unknown") f.modality = Modality::unknown;
    else raise(ErrorCode::InvalidConfig, "unknown modality " + *modality);
  }
  f.separable = separable;
  f.differentiable = differentiable;
  f.dynamic = dynamic;
  f.dimension = dim;
  std::vector<std::string> out;
  for (const auto& id : list(f)) out.push_back(id.canonical_name);
  return out;
}

OptimizerConfig make_config(const std::string& optimizer, std::uint64_t budget, std::uint64_t seed,
                            std::size_t population, double F, double CR, bool synchronous) {
  OptimizerConfig c;
  c.kind = parse_optimizer(optimizer);
  c.budget = budget;
  c.seed = seed;
  c.de.population = population;
  c.de.F = F;
  c.de.CR = CR;
  c.de.synchronous = synchronous;
  c.validate();
  return c;
}

std::string run_json(const std::string& optimizer, const std::string& name, std::size_t dim, std::uint64_t seed,
                     std::uint64_t budget, std::size_t population, double F, double CR, bool synchronous,
                     std::optional<Vec> x0, bool history) {
  const OptimizerConfig c = make_config(optimizer, budget, seed, population, F, CR, synchronous);
  const std::string canonical = lookup(name).meta.id.canonical_name;
  ProblemInstance p = make_problem(canonical, dim, derive_seed(seed, canonical));
  OptRunResult r;
  {
    py::gil_scoped_release release;
    r = c.kind == OptimizerKind::nelder_mead && x0 ? nelder_mead(p, *x0, c) : run_optimizer(p, c);
  }
  Json j = to_json(r, history);
  j.update({{"function", canonical}, {"dim", dim}, {"optimizer", to_json(c)}});
  return dump(j);
}

std::string suite_json(const std::string& optimizer, const std::string& functions, std::vector<std::size_t> dims,
                       std::vector<std::uint64_t> seeds, std::uint64_t budget, std::size_t jobs) {
  const OptimizerConfig c = make_config(optimizer, budget, 0, 50, 0.5, 0.9, false);
  const auto names = resolve_function_set(functions);
  SuiteTable t;
  {
    py::gil_scoped_release release;
    t = run_suite(c, names, dims, seeds.size(), seeds, jobs);
  }
  return dump(to_json(t, false));
}

std::string verify_json(const std::string& name, std::size_t dim, std::uint64_t seed, std::uint64_t budget) {
  py::gil_scoped_release release;
  return dump(to_json(full_report(name, dim, seed, budget)));
}

}  // namespace

PYBIND11_MODULE(_optbench, m) {
  m.doc() = "Benchmark function catalog, verification and baseline optimizers";

  static py::exception<Error> exc(m, "OptbenchError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(exc.ptr())(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<ProblemInstance>(m, "Problem")
      .def(py::init([](const std::string& name, std::size_t dim, std::optional<std::uint64_t> seed) {
             return make_problem(name, dim, seed);
           }),
           py::arg("name"), py::arg("dim"), py::arg("seed") = py::none())
      .def("__call__", [](ProblemInstance& p, const Vec& x) { return p.evaluate(x); })
      .def("evaluate", [](ProblemInstance& p, const Vec& x) { return p.evaluate(x); })
      .def("gradient", [](ProblemInstance& p, const Vec& x, double h) { return gradient_fd(p, x, h); },
           py::arg("x"), py::arg("h") = 1e-6)
      .def_property_readonly("name", [](const ProblemInstance& p) { return p.meta().id.canonical_name; })
      .def_property_readonly("dim", &ProblemInstance::dimension)
      .def_property_readonly("lower", [](const ProblemInstance& p) { return p.bounds().lower(); })
      .def_property_readonly("upper", [](const ProblemInstance& p) { return p.bounds().upper(); })
      .def_property_readonly("evaluations", &ProblemInstance::evaluations)
      .def("__repr__", [](const ProblemInstance& p) {
        return "Problem('" + p.meta().id.canonical_name + "', dim=" + std::to_string(p.dimension()) + ")";
      });

  m.def("_info", &meta_json, py::arg("name"));
  m.def("_metadata", [] { return dump(catalog_metadata()); });
  m.def("list_functions", &list_names, py::arg("tier") = py::none(), py::arg("modality") = py::none(),
        py::arg("separable") = py::none(), py::arg("differentiable") = py::none(),
        py::arg("dynamic") = py::none(), py::arg("dim") = py::none());
  m.def("evaluate",
        [](const std::string& name, const Vec& x, std::optional<std::uint64_t> seed) {
          ProblemInstance p = make_problem(name, x.size(), seed);
          return p.evaluate(x);
        },
        py::arg("name"), py::arg("x"), py::arg("seed") = py::none());
  m.def("count_grid_minima",
        [](const std::string& name, std::size_t resolution) {
          ProblemInstance p = make_problem(name, 2);
          return count_grid_minima_2d(p, resolution);
        },
        py::arg("name"), py::arg("resolution") = 101);
  m.def("is_separable",
        [](const std::string& name, std::size_t dim, std::uint64_t seed) {
          ProblemInstance p = make_problem(name, dim);
          return test_separability(p, 20, 1e-4, 1e-6, seed).separable;
        },
        py::arg("name"), py::arg("dim") = 2, py::arg("seed") = 1);
  m.def("_verify", &verify_json, py::arg("name"), py::arg("dim") = 2, py::arg("seed") = 1,
        py::arg("budget") = 10000);
  m.def("_run", &run_json, py::arg("optimizer"), py::arg("name"), py::arg("dim"), py::arg("seed"),
        py::arg("budget") = 1000, py::arg("population") = 50, py::arg("F") = 0.5, py::arg("CR") = 0.9,
        py::arg("synchronous") = false, py::arg("x0") = py::none(), py::arg("history") = false);
  m.def("_suite", &suite_json, py::arg("optimizer"), py::arg("functions"), py::arg("dims"), py::arg("seeds"),
        py::arg("budget") = 1000, py::arg("jobs") = 1);
}
