import json

from charfield.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


INVOLUTION = json.dumps(
    {"family": "sp", "n": 1, "q": 7,
     "orbits": [{"frac": "0/1", "mult": 1}, {"frac": "1/2", "mult": 2}],
     "minus_type": 1}
)


def test_field_subcommand(capsys):
    code, out, _ = _run(capsys, "field", "--class", INVOLUTION)
    assert code == 0
    data = json.loads(out)
    assert data["result"]["degree"] == 2
    assert data["result"]["adjoin_sqrt_omega_p"] is True
    assert data["result"]["real"] is False


def test_real_subcommand(capsys):
    code, out, _ = _run(capsys, "real", "--class", INVOLUTION)
    assert code == 0
    assert json.loads(out)["result"]["real"] is False


def test_powmap_subcommand(capsys):
    code, out, _ = _run(capsys, "powmap", "--family", "sp", "--n", "2",
                        "--q", "7", "--mu", "2,2", "--k", "3")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["rational"] is True
    assert data["result"]["criterion"] == "even-multiplicities"

    code, out, _ = _run(capsys, "powmap", "--family", "sp", "--n", "1",
                        "--q", "7", "--mu", "2", "--k", "3")
    assert json.loads(out)["result"]["rational"] is False


def test_gammadelta_subcommand(capsys):
    code, out, _ = _run(capsys, "gammadelta", "--family", "sp", "--q", "3",
                        "--a", "1", "--b", "1", "--sigma-k", "5", "--sigma-m", "12")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["gamma_delta"] == -1
    assert data["result"]["series_action"] == "twist"


def test_gammadelta_rejects_bad_sigma(capsys):
    # k = 3 is not coprime to the modulus 12
    code, _, err = _run(capsys, "gammadelta", "--family", "sp", "--q", "3",
                        "--a", "1", "--b", "1", "--sigma-k", "3", "--sigma-m", "12")
    assert code == 2
    assert "invalid input" in err


def test_symbol_and_wavefront(capsys):
    code, out, _ = _run(capsys, "symbol", "--e", "2", "--delta", "0")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["top"] == [1, 2]
    assert data["result"]["bottom"] == [0, 1]
    assert data["result"]["rank"] == 4

    code, out, _ = _run(capsys, "wavefront", "--e", "0", "--f", "1", "--delta", "1")
    assert code == 0
    assert json.loads(out)["result"]["partition"] == [3, 1, 1]


def test_kgroup_subcommand(capsys):
    code, out, _ = _run(capsys, "kgroup", "--family", "so-even", "--n", "4",
                        "--q", "3", "--twist", "1")
    assert code == 0
    assert json.loads(out)["result"]["k_group_nontrivial"] is True

    code, out, _ = _run(capsys, "kgroup", "--family", "so-even", "--n", "3",
                        "--q", "3", "--twist", "1", "--minus-dim", "2")
    data = json.loads(out)
    assert data["result"]["k_group_nontrivial"] is False
    assert data["result"]["in_spinor_kernel"] is False  # 3 = 3 mod 4


def test_classes_roundtrip_through_field(capsys):
    code, out, _ = _run(capsys, "classes", "--family", "sp", "--n", "1", "--q", "7")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert len(lines) == 8  # q + 1
    for line in lines:
        code, fout, _ = _run(capsys, "field", "--class", line)
        assert code == 0
        echoed = json.loads(fout)["input"]
        assert echoed == json.loads(line)


def test_classes_byte_stable(capsys):
    _, out1, _ = _run(capsys, "classes", "--family", "sp", "--n", "1", "--q", "5")
    _, out2, _ = _run(capsys, "classes", "--family", "sp", "--n", "1", "--q", "5")
    assert out1 == out2


def test_malformed_input_exit_code(capsys):
    code, _, err = _run(capsys, "field", "--class", "{not json")
    assert code == 2
    code, _, err = _run(capsys, "powmap", "--family", "sp", "--n", "2",
                        "--q", "7", "--mu", "3,1", "--k", "2")
    assert code == 2  # partition not admissible for sp


def test_verify_single_suite(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "gauss")
    assert code == 0
    data = json.loads(out.splitlines()[0])
    assert data["ok"] is True
