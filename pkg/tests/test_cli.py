import pytest

from ribbontutte.cli import main

THETA = "ribbon v1\nedges: 2\nvertex: 1.1 2.1 1.2 2.2\nbclasses: {1}\n"
B1 = "ribbon v1\nedges: 1\nvertex: 1.1\nvertex: 1.2\n"
L1N = "ribbon v1\nedges: 1\ntwist: e1\nvertex: 1.1 1.2\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.rib"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "text, poly, expected",
    [
        (L1N, "tcs", "x^(1/2) + y^(1/2)"),
        (THETA, "P", "b_bp*b_olh + 2*b_olh + 1"),
        (THETA, "tps", "2*x*z + x + z"),
        (B1, "br", "x"),
        (B1, "U", "alpha^2*beta*gamma^2*a_bs + alpha*beta*gamma*b_bs"),
    ],
)
def test_compute(write, capsys, text, poly, expected):
    code, out, err = run(capsys, "compute", "--poly", poly, write(text))
    assert code == 0
    assert out == expected + "\n"
    assert err.startswith("boundary 1: ")


def test_compute_krushkal(write, capsys):
    path = write(B1)
    assert run(capsys, "compute", "--poly", "krushkal", "--ambient-genus", "0", path)[:2] == (0, "x + 1\n")
    code, out, err = run(capsys, "compute", "--poly", "krushkal", path)
    assert code == 2 and out == "" and "ambient-genus" in err


def test_classify_and_dual(write, capsys):
    assert run(capsys, "classify", write(B1))[:2] == (0, "e1: (bs, bs)\n")
    assert run(capsys, "classify", write(THETA))[1] == "e1: (bp, olh)\ne2: (bp, olh)\n"
    assert run(capsys, "dual", write(B1))[:2] == (0, "ribbon v1\nedges: 1\nvertex: 1.1 1.2\n")


def test_quasitrees(write, capsys):
    code, out, _ = run(capsys, "quasitrees", write(THETA))
    assert code == 0
    assert out.splitlines() == [
        "quasi-trees: {} {1,2}",
        "branch 1: Q={} [2:delete:unit 1:forced-delete:C(2)] weight b_olh + 1",
        "branch 2: Q={1,2} [2:contract:C(9) 1:forced-contract:C(5)] weight b_bp*b_olh + b_olh",
    ]
    out = run(capsys, "quasitrees", "--order", "2,1", write(THETA))[1]
    assert "[1:delete:unit 2:forced-delete:C(2)]" in out


def test_parse_errors_exit_2(write, capsys):
    code, out, err = run(capsys, "compute", "--poly", "P", write(B1 + "bclasses: {1} {2}\n"))
    assert code == 2 and out == ""
    assert "b(g) = 1" in err
    code, _, err = run(capsys, "dual", write("nonsense\n"))
    assert code == 2 and "ribbon v1" in err


def test_quasitrees_on_disconnected_graph_exit_2(write, capsys):
    assert run(capsys, "quasitrees", write(B1 + "vertex:\n"))[0] == 2


def test_check(capsys, monkeypatch):
    code, out, _ = run(capsys, "check", "--seed", "3", "--count", "15", "--max-edges", "4")
    assert code == 0
    assert out.strip() == "checked 15 graphs (seed 3): 0 failures"
    monkeypatch.setenv("RIBBON_CHECK_SEED", "11")
    code, out, _ = run(capsys, "check", "--count", "5", "--max-edges", "3", "--only", "oracle")
    assert code == 0 and "(seed 11)" in out


def test_check_reports_failures(capsys, monkeypatch):
    from ribbontutte import checks

    monkeypatch.setitem(checks.CHECKS, "always-fails", lambda cg, rng: ["broken"])
    code, out, _ = run(capsys, "check", "--count", "2", "--max-edges", "2", "--only", "always-fails")
    assert code == 1
    assert "case 0: always-fails: broken" in out
    assert out.strip().endswith("2 failures")
