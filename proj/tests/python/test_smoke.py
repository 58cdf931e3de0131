"""Smoke tests for the Python bindings."""

import math

import fracdg


def test_mesh_basics():
    mesh = fracdg.make_graded_mesh(8, 1.0, 2.0)
    assert mesh.num_slabs() == 8
    assert mesh.nodes[0] == 0.0
    assert math.isclose(mesh.nodes[-1], 1.0, rel_tol=0, abs_tol=1e-15)
    assert math.isclose(mesh.nodes[1], (1.0 / 8.0) ** 2, rel_tol=1e-14)
    assert math.isclose(mesh.width(8), mesh.nodes[8] - mesh.nodes[7], rel_tol=1e-14)


def test_special_functions():
    assert math.isclose(fracdg.gamma_fn(5.0), 24.0, rel_tol=1e-14)
    assert fracdg.w_series(0.0, 1.0, 1.0, 0.2, 0.8, 0.5) == 1.0
    val = fracdg.w_series(math.pi**2, 0.05, 0.05, 0.2, 0.8, 1.0)
    assert math.isclose(val, 0.449021393278400796, rel_tol=1e-10)


def test_memory_block_shape():
    mesh = fracdg.make_graded_mesh(4, 1.0, 1.5)
    block = fracdg.history_block(0.5, mesh, 1, 3, 2)
    assert block.shape == (2, 2)


def test_direct_solve():
    problem = fracdg.manufactured_problem(0.2, 0.8, 1.0, 1.0, 1.0, 1.0)
    forcing = fracdg.manufactured_forcing(problem, 1.0)
    mesh = fracdg.make_graded_mesh(4, 1.0, 1.0)
    fem = fracdg.SpatialFem(8, 2)
    solution = fracdg.solve(problem, forcing, mesh, 1, fem)
    assert solution.trace.shape == (5, fem.dof_count())
    assert solution.max_residual < 1e-10
    e1, e2 = fracdg.error_metrics(solution, fem, problem.exact, problem.exact_dx)
    assert 0.0 < e2 <= e1


def test_small_sweep():
    config = fracdg.ExperimentConfig()
    config.cells = 8
    config.degree_space = 2
    config.r = 1.0
    config.J_values = [4, 8]
    config.sigma_values = [1.0]
    config.m_values = [0]
    report = fracdg.run_experiment(config)
    assert report.all_ok()
    rows = report.rows
    assert len(rows) == 2
    assert rows[1].E2 < rows[0].E2
    assert rows[1].order2 is not None
    text = report.csv()
    assert text.startswith("# config ")
    assert "J,sigma,m,r,E1,order1,E2,order2" in text
