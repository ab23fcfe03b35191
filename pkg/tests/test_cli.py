import pytest

from geodetic import cli
from geodetic.graphs import graph_to_dot, parse_graph
from geodetic.lang import parse_forbidden_file

C6_GROUP = "group cyclic 6\ngen a pow 1\ngen a' pow 5\nball R=3\n"
Z6_ODD = "group cyclic 6\ngen a1 pow 1\ngen a3 pow 3\ngen a5 pow 5\nball R=2\n"
Z_GROUP = "group cyclic 0\ngen a pow 1\ngen a' pow -1\nball R=3\n"
Z2Z2_GROUP = (
    "group plain Z=0 factors=2,2\n"
    "gen a word a\n"
    "gen b word b\n"
    "ball R=6\n"
)
C4_GRAPH = "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n"


def run(capsys, argv):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def c6(tmp_path):
    path = tmp_path / "c6.grp"
    path.write_text(C6_GROUP)
    return str(path)


@pytest.fixture
def c4(tmp_path):
    path = tmp_path / "c4.g"
    path.write_text(C4_GRAPH)
    return str(path)


def test_ball_summary(capsys, c6):
    code, out, err = run(capsys, ["ball", "--group", c6])
    assert code == 0 and err == ""
    assert out == "ball: radius=3 vertices=6 edges=6 complete=true\n"


def test_ball_verbose_layers(capsys, c6):
    code, out, _ = run(capsys, ["ball", "--group", c6, "--verbose"])
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "norm 0: 1 elements"
    assert lines[-1] == "reached 6 of 6 group elements"


def test_ball_radius_override(capsys, c6):
    code, out, _ = run(capsys, ["ball", "--group", c6, "--radius", "1"])
    assert code == 0
    assert "radius=1 vertices=3" in out


def test_ball_dot_output(capsys, c6, tmp_path):
    dot = tmp_path / "ball.dot"
    code, _, _ = run(capsys, ["ball", "--group", c6, "--dot", str(dot)])
    assert code == 0
    assert dot.read_text().startswith("graph G {")


def test_check_k_group_golden(capsys, tmp_path):
    path = tmp_path / "z6odd.grp"
    path.write_text(Z6_ODD)
    code, out, _ = run(capsys, ["check-k", "--group", str(path), "--k", "3"])
    assert code == 0
    assert out == "k-geodetic: true (min k = 3)\n"


def test_check_k_expect_exit_codes(capsys, c4):
    code, out, _ = run(capsys, ["check-k", "--graph", c4, "--k", "2", "--expect", "true"])
    assert code == 0 and out == "k-geodetic: true (min k = 2)\n"
    code, out, _ = run(capsys, ["check-k", "--graph", c4, "--k", "1", "--expect", "true"])
    assert code == 1 and out == "k-geodetic: false (min k = 2)\n"
    code, _, _ = run(capsys, ["check-k", "--graph", c4, "--k", "1", "--expect", "false"])
    assert code == 0


def test_check_k_verbose_witness(capsys, c4):
    code, out, _ = run(capsys, ["check-k", "--graph", c4, "--k", "1", "--verbose"])
    assert code == 0
    assert out.splitlines()[1] == "witness: 2 geodesics between vertices 0 and 2"


def test_min_k_tree(capsys, tmp_path):
    path = tmp_path / "p4.g"
    path.write_text("graph 4\ne 0 1\ne 1 2\ne 2 3\n")
    code, out, _ = run(capsys, ["min-k", "--graph", str(path)])
    assert code == 0 and out == "min k = 1\n"


def test_ladders_c4(capsys, c4):
    code, out, _ = run(capsys, ["ladders", "--graph", c4, "--m", "1"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ladders: m=1 k=2 bound=70 found=1"
    assert lines[1] == "ladder: p1=0->3 p2=1->2 len=1 m=1 height=2 bound=70 within=true"
    assert lines[2] == "scanned: pairs=6 geodesic_pairs=12 skipped=0 exhausted=false"


def test_bigons_c4(capsys, c4):
    code, out, _ = run(capsys, ["bigons", "--graph", c4])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "bigons: found=2 non_degenerate=2 max_non_degenerate_side=2"
    assert lines[1] == "bigon: u=0 v=2 len=2 degenerate=false"


def test_triangles_c4(capsys, c4):
    code, out, _ = run(capsys, ["triangles", "--graph", c4])
    assert code == 0
    assert out.splitlines()[0] == "triangles: found=36 non_degenerate=4"


def test_forbidden_round_trip(capsys, tmp_path):
    path = tmp_path / "z2z2.grp"
    path.write_text(Z2Z2_GROUP)
    code, out, _ = run(capsys, ["forbidden", "--group", str(path), "--e", "2"])
    assert code == 0
    parsed = parse_forbidden_file(out)
    assert parsed.e == 2
    assert parsed.words == {("a", "a"), ("b", "b")}


def test_automaton_group_vs_file(capsys, tmp_path):
    grp = tmp_path / "z2z2.grp"
    grp.write_text(Z2Z2_GROUP)
    code, from_group, _ = run(
        capsys, ["automaton", "--group", str(grp), "--e", "2"]
    )
    assert code == 0
    assert from_group.splitlines()[0] == "automaton states=4 start=0 dead=3"

    fset = tmp_path / "fset.txt"
    fset.write_text("forbidden e=2\naa\nbb\n")
    code, from_file, _ = run(capsys, ["automaton", str(fset)])
    assert code == 0
    assert from_file == from_group


def test_automaton_dot(capsys, tmp_path):
    fset = tmp_path / "fset.txt"
    fset.write_text("forbidden e=2\naa\nbb\n")
    dot = tmp_path / "auto.dot"
    code, _, _ = run(capsys, ["automaton", str(fset), "--dot", str(dot)])
    assert code == 0
    assert dot.read_text().startswith("digraph")


def test_powers_golden(capsys, tmp_path):
    path = tmp_path / "z2z2.grp"
    path.write_text(Z2Z2_GROUP)
    code, out, _ = run(capsys, ["powers", "ab", "--group", str(path), "--nmax", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "powers of ab: n_max=3"
    assert lines[1] == "L_0: size=1 {λ}"
    assert any(line.startswith("stabilization: n*=") for line in lines)


def test_powers_finite_order_is_an_input_error(capsys, c6):
    code, out, err = run(capsys, ["powers", "a", "--group", c6])
    assert code == 2 and out == ""
    assert err.startswith("error:") and "order" in err


def test_centraliser_golden(capsys, tmp_path):
    path = tmp_path / "z.grp"
    path.write_text(Z_GROUP)
    code, out, _ = run(capsys, ["centraliser", "a", "--group", str(path)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "centraliser of a in ball: size=7"
    assert len(lines) == 8


def test_word_tool_primitive_root(capsys):
    code, out, _ = run(capsys, ["word-tool", "primitive-root", "abab"])
    assert code == 0 and out == "ab ^ 2\n"


def test_word_tool_solve(capsys):
    code, out, _ = run(capsys, ["word-tool", "solve-zx-yz", "ab", "ba", "babab"])
    assert code == 0
    assert out == "s = a\nt = b\nq = 2\n"


def test_word_tool_solve_unsolvable(capsys):
    code, _, err = run(capsys, ["word-tool", "solve-zx-yz", "ab", "ab", "aab"])
    assert code == 2 and err.startswith("error:")


def test_word_tool_common_root(capsys):
    code, out, _ = run(capsys, ["word-tool", "common-root", "abab", "ab"])
    assert code == 0 and out == "ab\n"


def test_export_dot_matches_library(capsys, c4):
    code, out, _ = run(capsys, ["export-dot", "--graph", c4])
    assert code == 0
    assert out == graph_to_dot(parse_graph(C4_GRAPH))


def test_export_dot_file(capsys, c4, tmp_path):
    target = tmp_path / "out.dot"
    code, out, _ = run(capsys, ["export-dot", "--graph", c4, "--dot", str(target)])
    assert code == 0 and out == ""
    assert target.read_text() == graph_to_dot(parse_graph(C4_GRAPH))


def test_missing_file_is_reported(capsys):
    code, out, err = run(capsys, ["min-k", "--graph", "/nonexistent/x.g"])
    assert code == 2 and out == ""
    assert err.startswith("error:")


def test_host_required(capsys):
    code, _, err = run(capsys, ["min-k"])
    assert code == 2 and "--graph FILE or --group FILE" in err


def test_both_hosts_rejected(capsys, c4, c6):
    code, _, err = run(capsys, ["min-k", "--graph", c4, "--group", c6])
    assert code == 2 and "not both" in err


def test_radius_required_without_file_default(capsys, tmp_path):
    path = tmp_path / "nodefault.grp"
    path.write_text("group cyclic 6\ngen a pow 1\ngen a' pow 5\n")
    code, _, err = run(capsys, ["ball", "--group", str(path)])
    assert code == 2 and "radius" in err
    code, out, _ = run(capsys, ["ball", "--group", str(path), "--radius", "2"])
    assert code == 0 and "radius=2" in out


def test_ball_budget_env(capsys, c6, monkeypatch):
    monkeypatch.setenv("GEODETIC_BALL_BUDGET", "3")
    code, _, err = run(capsys, ["ball", "--group", c6])
    assert code == 2 and "budget" in err


def test_deterministic_output(capsys, c4, tmp_path):
    path = tmp_path / "z2z2.grp"
    path.write_text(Z2Z2_GROUP)
    for argv in (
        ["ladders", "--graph", c4, "--m", "2"],
        ["forbidden", "--group", str(path), "--e", "3"],
        ["min-k", "--group", str(path)],
    ):
        first = run(capsys, argv)
        second = run(capsys, argv)
        assert first == second


def test_bad_group_file_is_reported(capsys, tmp_path):
    path = tmp_path / "bad.grp"
    path.write_text("group cyclic 6\ngen a pow 1\n")
    code, _, err = run(capsys, ["ball", "--group", str(path)])
    assert code == 2 and err.startswith("error:")
