#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracdg/basis.hpp"
#include "fracdg/experiment.hpp"
#include "fracdg/fem1d.hpp"
#include "fracdg/kernel.hpp"
#include "fracdg/mesh.hpp"
#include "fracdg/oracle.hpp"
#include "fracdg/solver.hpp"
#include "fracdg/special.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Time-stepping DG solver for diffusion with two Riemann-Liouville "
      "time-fractional terms, plus the supporting numerics";

  mod.def("gamma_fn", &fracdg::gamma_fn, py::arg("x"));
  mod.def("inc_beta_lower", &fracdg::inc_beta_lower, py::arg("z"),
          py::arg("a"), py::arg("b"));

  py::class_<fracdg::GradedMesh>(mod, "GradedMesh")
      .def_readonly("T", &fracdg::GradedMesh::T)
      .def_readonly("sigma", &fracdg::GradedMesh::sigma)
      .def_readonly("nodes", &fracdg::GradedMesh::nodes)
      .def("num_slabs", &fracdg::GradedMesh::num_slabs)
      .def("width", &fracdg::GradedMesh::width, py::arg("j"))
      .def("node", &fracdg::GradedMesh::node, py::arg("j"));
  mod.def("make_graded_mesh", &fracdg::make_graded_mesh, py::arg("J"),
          py::arg("T"), py::arg("sigma"));
  mod.def("sigma_star", &fracdg::sigma_star, py::arg("m"), py::arg("r"),
          py::arg("beta"));
  mod.def("sigma_star_star", &fracdg::sigma_star_star, py::arg("m"),
          py::arg("r"), py::arg("beta"));

  mod.def(
      "history_block",
      [](double gamma, const fracdg::GradedMesh& mesh, int degree, int j,
         int i) {
        const fracdg::LegendreBasis basis(degree);
        return fracdg::history_block(gamma, mesh, basis, j, i).entries;
      },
      py::arg("gamma"), py::arg("mesh"), py::arg("degree"), py::arg("j"),
      py::arg("i"),
      "Memory matrix coupling test polynomials on slab j with the "
      "fractional derivative of trial polynomials on slab i");

  py::class_<fracdg::SpatialFem>(mod, "SpatialFem")
      .def(py::init<int, int>(), py::arg("cells"), py::arg("degree"))
      .def("cells", &fracdg::SpatialFem::cells)
      .def("degree", &fracdg::SpatialFem::degree)
      .def("dof_count", &fracdg::SpatialFem::dof_count)
      .def("dof_coord", &fracdg::SpatialFem::dof_coord, py::arg("k"))
      .def("mass", &fracdg::SpatialFem::mass_dense)
      .def("stiffness", &fracdg::SpatialFem::stiffness_dense)
      .def("interpolate", &fracdg::SpatialFem::interpolate, py::arg("v"))
      .def("ritz_project", &fracdg::SpatialFem::ritz_project, py::arg("v_dx"),
           py::arg("quad_points") = 0)
      .def("evaluate", &fracdg::SpatialFem::evaluate, py::arg("u"),
           py::arg("x"))
      .def("l2_error", &fracdg::SpatialFem::l2_error, py::arg("u"),
           py::arg("v"), py::arg("quad_points") = 0)
      .def("l2_norm", &fracdg::SpatialFem::l2_norm, py::arg("u"));

  py::class_<fracdg::ProblemSpec>(mod, "ProblemSpec")
      .def(py::init<>())
      .def_readwrite("alpha", &fracdg::ProblemSpec::alpha)
      .def_readwrite("beta", &fracdg::ProblemSpec::beta)
      .def_readwrite("kappa1", &fracdg::ProblemSpec::kappa1)
      .def_readwrite("kappa2", &fracdg::ProblemSpec::kappa2)
      .def_readwrite("T", &fracdg::ProblemSpec::T)
      .def_readwrite("u0", &fracdg::ProblemSpec::u0)
      .def_readwrite("u0_dx", &fracdg::ProblemSpec::u0_dx)
      .def_readwrite("exact", &fracdg::ProblemSpec::exact)
      .def_readwrite("exact_dx", &fracdg::ProblemSpec::exact_dx);

  py::class_<fracdg::Forcing::PowerTerm>(mod, "PowerTerm")
      .def(py::init<>())
      .def_readwrite("coeff", &fracdg::Forcing::PowerTerm::coeff)
      .def_readwrite("exponent", &fracdg::Forcing::PowerTerm::exponent)
      .def_readwrite("profile", &fracdg::Forcing::PowerTerm::profile);

  py::class_<fracdg::Forcing>(mod, "Forcing")
      .def(py::init<>())
      .def_readwrite("power_terms", &fracdg::Forcing::power_terms)
      .def_readwrite("general", &fracdg::Forcing::general)
      .def_readwrite("general_t0_exponent",
                     &fracdg::Forcing::general_t0_exponent)
      .def_readwrite("general_time_points",
                     &fracdg::Forcing::general_time_points);

  py::class_<fracdg::SpaceTimeSolution>(mod, "SpaceTimeSolution")
      .def_readonly("mesh", &fracdg::SpaceTimeSolution::mesh)
      .def_readonly("degree", &fracdg::SpaceTimeSolution::degree)
      .def_readonly("coeffs", &fracdg::SpaceTimeSolution::coeffs)
      .def_readonly("trace", &fracdg::SpaceTimeSolution::trace)
      .def_readonly("max_residual", &fracdg::SpaceTimeSolution::max_residual)
      .def("at_time", &fracdg::SpaceTimeSolution::at_time, py::arg("t"));

  mod.def("solve", &fracdg::solve, py::arg("problem"), py::arg("forcing"),
          py::arg("mesh"), py::arg("degree"), py::arg("fem"));
  mod.def("manufactured_problem", &fracdg::manufactured_problem,
          py::arg("alpha"), py::arg("beta"), py::arg("kappa1"),
          py::arg("kappa2"), py::arg("T"), py::arg("r"));
  mod.def("manufactured_forcing", &fracdg::manufactured_forcing,
          py::arg("problem"), py::arg("r"));

  py::class_<fracdg::RunCell>(mod, "RunCell")
      .def_readonly("J", &fracdg::RunCell::J)
      .def_readonly("sigma", &fracdg::RunCell::sigma)
      .def_readonly("m", &fracdg::RunCell::m)
      .def_readonly("r", &fracdg::RunCell::r)
      .def_readonly("E1", &fracdg::RunCell::E1)
      .def_readonly("E2", &fracdg::RunCell::E2)
      .def_readonly("order1", &fracdg::RunCell::order1)
      .def_readonly("order2", &fracdg::RunCell::order2)
      .def_readonly("failure", &fracdg::RunCell::failure)
      .def("ok", &fracdg::RunCell::ok);

  py::class_<fracdg::ConvergenceReport>(mod, "ConvergenceReport")
      .def_readonly("rows", &fracdg::ConvergenceReport::rows)
      .def_readonly("config_digest", &fracdg::ConvergenceReport::config_digest)
      .def_readonly("runtime_seconds",
                    &fracdg::ConvergenceReport::runtime_seconds)
      .def("all_ok", &fracdg::ConvergenceReport::all_ok)
      .def("csv", &fracdg::ConvergenceReport::csv)
      .def("table", &fracdg::ConvergenceReport::table);

  py::class_<fracdg::ExperimentConfig>(mod, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &fracdg::ExperimentConfig::alpha)
      .def_readwrite("beta", &fracdg::ExperimentConfig::beta)
      .def_readwrite("kappa1", &fracdg::ExperimentConfig::kappa1)
      .def_readwrite("kappa2", &fracdg::ExperimentConfig::kappa2)
      .def_readwrite("T", &fracdg::ExperimentConfig::T)
      .def_readwrite("cells", &fracdg::ExperimentConfig::cells)
      .def_readwrite("degree_space", &fracdg::ExperimentConfig::degree_space)
      .def_readwrite("r", &fracdg::ExperimentConfig::r)
      .def_readwrite("J_values", &fracdg::ExperimentConfig::J_values)
      .def_readwrite("sigma_values", &fracdg::ExperimentConfig::sigma_values)
      .def_readwrite("m_values", &fracdg::ExperimentConfig::m_values);

  mod.def("error_metrics", &fracdg::error_metrics, py::arg("solution"),
          py::arg("fem"), py::arg("exact"),
          py::arg("exact_dx") = fracdg::SpaceTimeFn(),
          py::arg("quad_points") = 0);
  mod.def("observed_order", &fracdg::observed_order, py::arg("error_coarse"),
          py::arg("error_fine"));
  mod.def("run_experiment", &fracdg::run_experiment, py::arg("config"));
  mod.def("run_sweep", &fracdg::run_sweep, py::arg("blocks"));
  mod.def("experiment_preset", &fracdg::experiment_preset, py::arg("which"));

  mod.def("w_series", &fracdg::oracle::w_series, py::arg("lam"),
          py::arg("kappa1"), py::arg("kappa2"), py::arg("alpha"),
          py::arg("beta"), py::arg("t"), py::arg("tol") = 1e-12,
          "Series solution of the scalar relaxation mode w' + lam (kappa1 "
          "D^alpha + kappa2 D^beta) w = 0, w(0) = 1");
  mod.def("mittag_leffler", &fracdg::oracle::mittag_leffler, py::arg("nu"),
          py::arg("x"));
}
