import pytest

import rado


def test_parse_and_render():
    eq = rado.parse_equation("w^2=z^2+y^2+x^2")
    assert str(eq) == "x^2+y^2+z^2=w^2"
    assert eq.degree == 2
    assert eq.lhs == [(1, "x", False), (1, "y", False), (1, "z", False)]
    assert rado.parse_equation("9x^2+16y^2=~n^2").free_vars == {"n"}
    assert rado.parse_equation(str(eq)) == eq


def test_errors_map_to_value_errors():
    with pytest.raises(rado.EquationError):
        rado.parse_equation("x^2+y=z^2")
    with pytest.raises(rado.ParseError):
        rado.parse_equation("x+y")
    with pytest.raises(ValueError):
        rado.find_coloring(rado.parse_equation("x+y=z"), 4, 0)


def test_solutions_and_edges():
    eq = rado.parse_equation("x^2+y^2=z^2")
    assert rado.solutions(eq, 5) == [[3, 4, 5], [4, 3, 5]]
    assert rado.hyperedges(eq, 13) == [[3, 4, 5], [6, 8, 10], [5, 12, 13]]
    assert rado.hyperedges(rado.parse_equation("x+y=z"), 3, minimize=False) == [[1, 2], [1, 2, 3]]
    three = rado.family_equation(3)
    assert rado.dp_feasible(three, [1, 2, 3], 3)
    assert not rado.dp_feasible(three, [1, 3], 3)


def test_schur_numbers():
    eq = rado.parse_equation("x+y=z")
    assert rado.compute_rado(eq, 1)["value"] == 2
    out = rado.compute_rado(eq, 2)
    assert (out["result"], out["value"]) == ("exact", 5)
    assert len(out["witness"]) == 4
    assert rado.oracle_colorable(eq, 4, 2)
    assert not rado.oracle_colorable(eq, 5, 2)


def test_three_squares():
    out = rado.compute_rado(rado.parse_equation("x^2+y^2+z^2=w^2"), 2)
    assert (out["result"], out["value"]) == ("exact", 105)
    cert = rado.write_certificate(rado.parse_equation("x^2+y^2+z^2=w^2"), out["witness"], 2)
    assert rado.verify_certificate(cert) == ("valid", "")


def test_coloring_and_certificates():
    eq = rado.parse_equation("x+y=z")
    found = rado.find_coloring(eq, 4, 2)
    assert found["verdict"] == "colorable"
    assert found["coloring"] == [1, 2, 2, 1]
    assert rado.find_coloring(eq, 5, 2)["coloring"] is None
    assert rado.write_certificate(eq, [1, 2, 2, 1], 2) == "rado-cert v1\ne x+y=z\nn 4\nr 2\nk 1 2 2 1\n"
    assert rado.verify_certificate(rado.write_certificate(eq, [1, 1], 2)) == ("invalid", "1+1=2")
    assert rado.verify_certificate("nonsense")[0] == "malformed"


def test_table_rows():
    rows = rado.table(4, 6)
    assert [r["value"] for r in rows] == [37, 23, 18]


def test_export_and_model_import():
    eq = rado.parse_equation("x+y=z")
    dimacs = rado.export_cnf(eq, 2, 2)
    assert dimacs.endswith("p cnf 2 3\n-1 0\n1 2 0\n-1 -2 0\n")
    cert = rado.model_to_certificate(dimacs, "s SATISFIABLE\nv -1 2 0\n")
    assert rado.verify_certificate(cert) == ("valid", "")
    with pytest.raises(rado.RadoError):
        rado.model_to_certificate(dimacs, "v 1 2 0\n")


def _solve(dimacs):
    pysat_solvers = pytest.importorskip("pysat.solvers")
    formula = pytest.importorskip("pysat.formula")
    cnf = formula.CNF(from_string=dimacs)
    with pysat_solvers.Solver(name="cadical153", bootstrap_with=cnf.clauses) as solver:
        if not solver.solve():
            return None
        model = set(solver.get_model())
    # variables absent from every clause are unconstrained
    return " ".join(str(v if v in model else -v) for v in range(1, cnf.nv + 1)) + " 0\n"


@pytest.mark.parametrize(
    "text,n,r",
    [("x^2+y^2=z^2", 1000, 2), ("x^2+y^2+z^2=w^2", 104, 2), ("x+y=z", 13, 3), ("x1^2+x2^2+x3^2+x4^2=y1^2+y2^2+y3^2", 31, 3)],
)
def test_external_solver_round_trip(text, n, r):
    dimacs = rado.export_cnf(rado.parse_equation(text), n, r)
    model = _solve(dimacs)
    assert model is not None
    assert rado.verify_certificate(rado.model_to_certificate(dimacs, model)) == ("valid", "")


def test_external_solver_agrees_on_uncolorable_bound():
    dimacs = rado.export_cnf(rado.parse_equation("x^2+y^2+z^2=w^2"), 105, 2)
    pytest.importorskip("pysat.solvers")
    assert _solve(dimacs) is None
