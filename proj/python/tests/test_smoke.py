import pytest

import dgenv


@pytest.fixture(scope="module")
def ex313():
    return dgenv.Presentation.builtin("ex313")


@pytest.fixture(scope="module")
def poly2():
    return dgenv.Presentation.builtin("poly2")


def test_presets_validate():
    for name in dgenv.Presentation.builtin_names():
        assert dgenv.Presentation.builtin(name).is_valid(), name


def test_ring_operations(ex313, poly2):
    assert ex313.psi("x1", "x1^2*x2") == "2*x1*x2"
    assert ex313.d("x1^2") == "2*x1*x2"
    assert ex313.bracket("x1", "x2") == "0"
    assert poly2.bracket("x1", "x2^2") == "2*x1*x2"


def test_text_round_trip(ex313):
    again = dgenv.Presentation.parse(ex313.text())
    assert again.generators == [("x1", 2), ("x2", 3)]
    assert again.bracket_degree == 1
    assert again.text() == ex313.text()


def test_normal_forms(poly2):
    env = dgenv.Enveloping(poly2)
    assert env.nf("x1'*x2") == "x2*x1' + x1"
    assert env.nf("x2'*x1'") == "x1'*x2' - x1'"
    assert env.right_nf("x1*x2'") == "x2'*(x1) + (x1)"
    assert env.m("x2*x1") == "x1*x2"


def test_degree_one_example(ex313):
    env = dgenv.Enveloping(ex313, 12)
    assert env.h("x1*x2") == "0"
    assert env.partial("x1'") == "x2'"
    assert "x1*x1*x2'" in env.completion_rules()
    assert [len(ws) for ws in env.basis(5)] == [1, 0, 1, 2, 2, 1]
    assert all(ok for _, _, _, ok in env.dimension_table(10))
    assert dgenv.oracle_dimensions(ex313, 5) == [1, 0, 1, 2, 2, 1]


def test_errors(poly2):
    with pytest.raises(dgenv.ParseError):
        dgenv.Enveloping(poly2).nf("x1*(x2")
    with pytest.raises(ValueError):
        dgenv.Presentation.parse("")
    bad = poly2.text() + "ideal = [x2]\n"
    with pytest.raises(dgenv.ValidationError):
        dgenv.Enveloping(dgenv.Presentation.parse(bad))


def test_cli_in_process():
    code, out, err = dgenv.run_cli(["closure", "--builtin", "ex313"])
    assert code == 3
    assert "nonzero" in out
    code, out, err = dgenv.run_cli(["nf", "--builtin", "poly2", "--expr", "x1'*"])
    assert code == 2 and out == "" and err
