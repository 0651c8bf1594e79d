import json

import pytest

from tworoots.cli import build_parser, main
from tworoots.diagram import diagram_from_json, y_diagram
from tworoots.orbits import orbit_tables


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--y", "1", "2", "4")
    assert code == 0
    assert out == "Y(1,2,4): finite (n = 8)\n"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--path", "6", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["type"] == "finite"
    assert diagram_from_json(data["diagram"]).n == 6


def test_roots_listing(capsys):
    code, out, _ = run(capsys, "roots", "--path", "3")
    assert code == 0
    assert out.splitlines()[-1] == "total 6"
    assert "a0+a1+a2" in out


def test_roots_infinite_without_bound(capsys):
    code, _, err = run(capsys, "roots", "--y", "2", "2", "2")
    assert code == 2
    assert "height bound" in err


def test_roots_json_round_trip(capsys):
    code, out, _ = run(capsys, "roots", "--y", "1", "1", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["total"] == 12
    assert [2, 1, 1, 1] in data["roots"]


def test_basis_with_classical_numbering(capsys):
    code, out, _ = run(capsys, "basis", "--y", "1", "1", "1",
                       "--paper-numbering", "d")
    assert code == 0
    assert out.splitlines()[-1] == "total 9"
    assert "a1+2a2+a3+a4" in out  # the top root in classical labels


def test_orbits_json_matches_tables(capsys):
    code, out, _ = run(capsys, "orbits", "--y", "1", "1", "2", "--json",
                       "--members")
    data = json.loads(out)
    assert code == 0
    tabs = orbit_tables(y_diagram(1, 1, 2))
    assert data["total"] == sum(t.size for t in tabs)
    by_id = {t.id: t for t in tabs}
    for rec in data["orbits"]:
        t = by_id[rec["id"]]
        assert rec["size"] == t.size
        assert rec["height"] == t.height
        got = {(tuple(a), tuple(b)) for a, b in rec["members"]}
        assert got == set(t.members)


def test_highest_heights(capsys):
    code, out, _ = run(capsys, "highest", "--y", "1", "2", "2")
    assert code == 0
    assert "(height 28)" in out


def test_expand_golden(capsys):
    code, out, _ = run(capsys, "expand", "--path", "3",
                       "--components", "1,1,0;0,1,1")
    assert code == 0
    assert out.endswith("height 2\n")
    assert out.count("1 * ") == 2


def test_expand_rejects_bad_vector(capsys):
    code, _, err = run(capsys, "expand", "--path", "3",
                       "--components", "1,1;0,1")
    assert code == 2
    assert "length" in err


def test_matrix_involution(capsys):
    code, out, _ = run(capsys, "matrix", "--path", "3",
                       "--word", "1 1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["matrix"] == [[1, 0], [0, 1]]


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--y", "1", "1", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["complement_dim"] == 0
    assert len(data["orbit_summands"]) == 2


def test_decompose_affine(capsys):
    code, out, _ = run(capsys, "decompose", "--y", "2", "2", "2")
    assert code == 0
    assert "degenerate" in out
    assert "dimension 7" in out


def test_kernel_d4(capsys):
    code, out, _ = run(capsys, "kernel", "--y", "1", "1", "1", "--orbit", "2")
    assert code == 0
    assert "kernel order 8 (group order 192)" in out


def test_kernel_unknown_orbit(capsys):
    code, _, err = run(capsys, "kernel", "--y", "1", "1", "1", "--orbit", "9")
    assert code == 2
    assert "no orbit" in err


def test_skein_golden(capsys):
    code, out, _ = run(capsys, "skein", "--path", "3",
                       "--components", "1,1,0;0,1,1")
    assert code == 0
    assert out.startswith("input: (e1-e3)(e2-e4)\n")
    assert out.count(" * ") == 2


def test_witness_json(capsys):
    code, out, _ = run(capsys, "witness", "--y", "2", "2", "3", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["norm"] == 2
    assert data["sign_coherent"] is True


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "skein")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].endswith("0 failed")
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_matrix_sign_coherence_flag(capsys):
    code, out, _ = run(capsys, "matrix", "--y", "1", "2", "4",
                       "--word", "0 3 5 1", "--check-sign-coherence")
    assert code == 0
    assert out.splitlines()[-1] == "sign coherent: True"


def test_decompose_mod_two(capsys):
    code, out, _ = run(capsys, "decompose", "--path", "4", "--prime", "2",
                       "--json")
    data = json.loads(out)
    assert code == 0
    assert data["prime"] == 2
    assert data["orbit_summands"] == [{"id": 1, "dim": 5, "radical_dim": 1}]
    code, out, _ = run(capsys, "decompose", "--path", "3", "--prime", "2",
                       "--json")
    data = json.loads(out)
    assert code == 0
    # the whole summand dies mod 2
    assert data["orbit_summands"][0]["radical_dim"] == 2


def test_kernel_order_cap(capsys):
    code, _, err = run(capsys, "kernel", "--y", "1", "1", "1",
                       "--max-order", "3")
    assert code == 2
    assert "state cap" in err


def test_verify_kernels_order_cap(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kernels",
                       "--max-order", "200")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("PASS")]
    assert len(lines) == 1  # only the 192-element group qualifies
    assert "D4" in lines[0]


def test_verify_seed_is_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "--suite", "forms",
                           "--seed", "5")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_verify_accepts_all(capsys):
    args = build_parser().parse_args(["verify", "--suite", "all"])
    assert args.suite == ["all"]
    code, out, _ = run(capsys, "verify", "--suite", "skein",
                       "--suite", "witness")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failed")

def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["roots"])
    assert e.value.code == 2
