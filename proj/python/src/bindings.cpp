#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coarse_embed/cli_report.hpp"
#include "coarse_embed/embedding.hpp"
#include "coarse_embed/errors.hpp"
#include "coarse_embed/exponent_schedule.hpp"
#include "coarse_embed/expander.hpp"
#include "coarse_embed/json_io.hpp"
#include "coarse_embed/metric_space.hpp"
#include "coarse_embed/mixed_norm.hpp"
#include "coarse_embed/tent_partition.hpp"

namespace py = pybind11;
namespace ce = coarse_embed;

namespace {

using EdgeTuple = std::tuple<ce::PointId, ce::PointId>;

std::vector<ce::Edge> to_edges(const std::vector<EdgeTuple>& edges) {
  std::vector<ce::Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<EdgeTuple> from_edges(const std::vector<ce::Edge>& edges) {
  std::vector<EdgeTuple> out;
  out.reserve(edges.size());
  for (const ce::Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

ce::Exponent to_exponent(double p) {
  return std::isinf(p) ? ce::Exponent::infinity() : ce::Exponent(p);
}

std::vector<double> exponent_values(const ce::ExponentSchedule& schedule) {
  std::vector<double> out;
  for (const ce::Exponent& p : schedule.exponents()) out.push_back(p.value());
  return out;
}

py::object to_python(const ce::Json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

py::dict function_dict(const ce::PointFunction& f) {
  py::dict out;
  for (const auto& [k, v] : f.entries()) out[py::int_(k)] = v;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Uniform embeddings of finite metric spaces and groups into l2-sums of lp blocks";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&m]() {
    return py::exception<ce::Error>(m, "CoarseEmbedError", PyExc_ValueError);
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ce::Error& e) {
      const py::object& type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("code") = std::string(e.code_name());
      py::set_error(type, instance);
    }
  });

  py::class_<ce::FiniteMetricSpace>(m, "MetricSpace")
      .def_static(
          "from_edges",
          [](const std::vector<EdgeTuple>& edges, std::size_t n) {
            return ce::FiniteMetricSpace::from_edge_list(to_edges(edges), n);
          },
          py::arg("edges"), py::arg("vertex_count"))
      .def_static("from_matrix", &ce::FiniteMetricSpace::from_distance_matrix, py::arg("matrix"))
      .def_static("load", &ce::load_space, py::arg("path"))
      .def("__len__", &ce::FiniteMetricSpace::size)
      .def_property_readonly("size", &ce::FiniteMetricSpace::size)
      .def("distance", &ce::FiniteMetricSpace::distance, py::arg("x"), py::arg("y"))
      .def("ball", &ce::FiniteMetricSpace::ball, py::arg("x"), py::arg("r"))
      .def_property_readonly("diameter", &ce::FiniteMetricSpace::diameter)
      .def_property_readonly("is_integral", &ce::FiniteMetricSpace::is_integral)
      .def_property_readonly("edges",
                             [](const ce::FiniteMetricSpace& s) { return from_edges(s.edges()); });

  m.def("path_graph", [](std::size_t n) { return from_edges(ce::graphs::path(n)); }, py::arg("n"));
  m.def("cycle_graph", [](std::size_t n) { return from_edges(ce::graphs::cycle(n)); }, py::arg("n"));
  m.def("grid_graph",
        [](std::size_t rows, std::size_t cols) { return from_edges(ce::graphs::grid(rows, cols)); },
        py::arg("rows"), py::arg("cols"));
  m.def("complete_graph", [](std::size_t n) { return from_edges(ce::graphs::complete(n)); },
        py::arg("n"));

  m.def("select_exponent", &ce::select_exponent, py::arg("alpha"), py::arg("beta"), py::arg("eps"),
        "Smallest integer p >= 1 with alpha * (beta**(1/p) - 1) <= eps.");
  m.def(
      "lemma1_bound",
      [](double alpha, double beta, double p) { return ce::lemma1_bound(alpha, beta, to_exponent(p)); },
      py::arg("alpha"), py::arg("beta"), py::arg("p"));
  m.def(
      "lp_norm",
      [](const std::vector<double>& values, double p) { return ce::lp_norm(values, to_exponent(p)); },
      py::arg("values"), py::arg("p"));
  m.def(
      "schedule_for_space",
      [](const ce::FiniteMetricSpace& space, std::size_t depth) {
        return exponent_values(ce::schedule_for_space(space, depth));
      },
      py::arg("space"), py::arg("depth"));

  m.def(
      "tent",
      [](const ce::FiniteMetricSpace& space, ce::PointId x, std::size_t n) {
        return function_dict(ce::tent(space, x, n));
      },
      py::arg("space"), py::arg("x"), py::arg("n"));
  m.def(
      "check_tent_conditions",
      [](const ce::FiniteMetricSpace& space, std::size_t n) {
        const ce::TentConditionReport r = ce::check_tent_conditions(space, n);
        py::dict out;
        out["unit_sup"] = r.unit_sup;
        out["support_in_ball"] = r.support_in_ball;
        out["lipschitz"] = r.lipschitz;
        out["worst_lipschitz_slack"] = r.worst_lipschitz_slack;
        out["pairs_checked"] = r.pairs_checked;
        out["ok"] = r.ok();
        return out;
      },
      py::arg("space"), py::arg("n"));

  py::class_<ce::Embedding>(m, "Embedding")
      .def(py::init([](const ce::FiniteMetricSpace& space, std::size_t depth, ce::PointId basepoint) {
             return ce::Embedding::with_default_schedule(space, depth, basepoint);
           }),
           py::arg("space"), py::arg("depth") = 0, py::arg("basepoint") = 0, py::keep_alive<1, 2>())
      .def_property_readonly("depth", &ce::Embedding::depth)
      .def_property_readonly("basepoint", &ce::Embedding::basepoint)
      .def_property_readonly("exponents",
                             [](const ce::Embedding& e) { return exponent_values(*e.schedule()); })
      .def("pair_distance", &ce::Embedding::pair_distance, py::arg("x"), py::arg("y"))
      .def("block_distance", &ce::Embedding::block_distance, py::arg("n"), py::arg("x"), py::arg("y"))
      .def(
          "embed_point",
          [](const ce::Embedding& e, ce::PointId x) {
            const ce::PointVector v = e.embed_point(x);
            py::list blocks;
            for (const ce::PointFunction& b : v.blocks()) blocks.append(function_dict(b));
            return blocks;
          },
          py::arg("x"), "Blocks of Phi(x) as {point: value} dicts.");

  m.def("truncated_upper_constant", &ce::truncated_upper_constant, py::arg("depth"));
  m.def("full_upper_constant", &ce::full_upper_constant);

  m.def(
      "embed_report",
      [](const ce::FiniteMetricSpace& space, std::size_t depth, ce::PointId basepoint,
         double tolerance) {
        bool passed = false;
        py::object report = to_python(ce::cli::embed_report(space, depth, basepoint, tolerance, passed));
        return py::make_tuple(report, passed);
      },
      py::arg("space"), py::arg("depth") = 0, py::arg("basepoint") = 0,
      py::arg("tolerance") = 1e-9, "Returns (report dict, passed).");

  m.def(
      "group_report",
      [](const std::string& spec, std::size_t depth, std::size_t samples, std::uint64_t seed,
         double tolerance) {
        ce::cli::GroupRunOptions options;
        options.depth = depth;
        options.samples = samples;
        options.seed = seed;
        options.tolerance = tolerance;
        bool passed = false;
        py::object report = to_python(ce::cli::group_report(spec, options, passed));
        return py::make_tuple(report, passed);
      },
      py::arg("group"), py::arg("depth") = 0, py::arg("samples") = 200, py::arg("seed") = 42,
      py::arg("tolerance") = 1e-9, "Returns (report dict, passed).");

  m.def(
      "random_regular",
      [](std::size_t n, int degree, std::uint64_t seed) {
        return from_edges(ce::random_regular(n, degree, seed).edges);
      },
      py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def(
      "top_two_eigenvalues",
      [](std::size_t n, const std::vector<EdgeTuple>& edges, double tol) {
        const ce::SpectralEstimate s = ce::top_two_eigenvalues(n, to_edges(edges), tol);
        return py::make_tuple(s.lambda1, s.lambda2, s.nontrivial_abs);
      },
      py::arg("n"), py::arg("edges"), py::arg("tol") = 1e-10,
      "Returns (lambda1, lambda2, largest nontrivial |lambda|).");
}
