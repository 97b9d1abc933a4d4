import json

import pytest

from qmvstar.cli import main
from qmvstar.fixtures import fixture_path

FIXTURE = str(fixture_path("qmv7.alg"))
MUTATED = str(fixture_path("qmv7_mutated.alg"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_algebra_check_passes(capsys):
    code, out, _ = run(capsys, "algebra", "check", FIXTURE)
    assert code == 0
    assert out.count("pass") == 17


def test_algebra_check_mutated_fails_with_counterexample(capsys):
    code, out, _ = run(capsys, "algebra", "check", MUTATED)
    assert code == 1
    assert "FAIL" in out and "x=a" in out


def test_algebra_check_law_filter(capsys):
    code, out, _ = run(capsys, "algebra", "check", FIXTURE, "--laws", "QMV*5")
    assert code == 0
    assert out.count("pass") == 4  # the four split parts


def test_algebra_props(capsys):
    code, out, _ = run(capsys, "algebra", "props", FIXTURE)
    assert code == 0
    assert "ord-13b" in out


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["algebra", "frobnicate"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "algebra", "check", "/no/such/file.alg")
    assert code == 2 and "no such file" in err


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("kind: qmv\nelements: a a\n")
    code, _, err = run(capsys, "algebra", "check", str(bad))
    assert code == 2 and "duplicate" in err


def test_transform_quotient_product_pipeline(tmp_path, capsys):
    code, out, _ = run(capsys, "algebra", "transform", "--to", "qw", FIXTURE)
    assert code == 0
    qw_file = tmp_path / "seven.qw.alg"
    qw_file.write_text(out)

    code, out, _ = run(capsys, "algebra", "quotient", str(qw_file), "--cong", "mu")
    assert code == 0 and "elements: a b 0 d 1" in out
    mu_file = tmp_path / "mu.alg"
    mu_file.write_text(out)

    code, out, _ = run(capsys, "algebra", "quotient", str(qw_file), "--cong", "tau")
    assert code == 0
    tau_file = tmp_path / "tau.alg"
    tau_file.write_text(out)

    code, out, _ = run(capsys, "algebra", "product", str(mu_file), str(tau_file))
    assert code == 0
    assert len(out.splitlines()[1].split()[1:]) == 15

    code, out, _ = run(capsys, "algebra", "check", str(mu_file))
    assert code == 0


def test_quotient_partition_spec(capsys):
    code, out, _ = run(capsys, "algebra", "quotient", FIXTURE,
                       "--cong", "a|b,c|0|d,e|1")
    assert code == 0 and "elements: a b 0 d 1" in out
    code, _, err = run(capsys, "algebra", "quotient", FIXTURE, "--cong", "a,1|b,c|0|d,e")
    assert code == 1 and "not compatible" in err


def test_embed_and_congruences(capsys):
    code, out, _ = run(capsys, "algebra", "embed", FIXTURE)
    assert code == 0
    assert "injective: pass" in out and "h(c) = ({b,c}, {c})" in out
    code, out, _ = run(capsys, "algebra", "congruences", FIXTURE)
    assert code == 0
    assert len(out.strip().splitlines()) == 4


def test_filter_subcommand(tmp_path, capsys):
    from qmvstar import algebras, transforms
    alg = algebras.load_algebra(FIXTURE)
    qw = transforms.to_qw(alg)
    five = transforms.to_qmv(transforms.restrict_to_plain(
        transforms.quotient(qw, transforms.congruence_mu(qw))))
    path = tmp_path / "five.alg"
    path.write_text(algebras.dumps_algebra(five))
    code, out, _ = run(capsys, "algebra", "filter", str(path), "--set", "0,d,1")
    assert code == 0 and out.count("pass") == 3
    code, out, _ = run(capsys, "algebra", "filter", str(path), "--set", "1")
    assert code == 1 and "F1: FAIL" in out


def test_model_eval(capsys):
    code, out, _ = run(capsys, "model", "eval", "--model", "rstar-qmv",
                       "--op", "plus", "--args", "1/2,1/3;1/4,-1")
    assert code == 0 and out.strip() == "3/4,0"
    code, out, _ = run(capsys, "model", "eval", "--model", "r",
                       "--op", "plus", "--args", "1/2;3/4")
    assert code == 0 and out.strip() == "1"
    code, _, err = run(capsys, "model", "eval", "--model", "r",
                       "--op", "arrow", "--args", "1/2;3/4")
    assert code == 2 and "no operation" in err


def test_model_check_small_grid(capsys):
    code, out, _ = run(capsys, "model", "check", "--model", "rstar-qw", "--grid", "1")
    assert code == 0
    assert "no counterexample" in out


def test_formula_eval_and_falsify(capsys):
    code, out, _ = run(capsys, "formula", "eval", "p -> q",
                       "--val", "p=1/2,1/3", "--val", "q=1/5,-1")
    assert code == 0 and out.strip() == "-3/10,0"
    code, out, _ = run(capsys, "formula", "falsify", "p -> 1", "--grid", "2")
    assert code == 0 and "NO-COUNTEREXAMPLE" in out
    code, out, _ = run(capsys, "formula", "falsify", "p", "--grid", "2")
    assert code == 1
    assert out.startswith("COUNTEREXAMPLE p AT p=-1,-1 VALUE -1,-1")


def test_proof_check_fixture(capsys):
    path = str(fixture_path("proofs", "refl.prf"))
    code, out, _ = run(capsys, "proof", "check", path)
    assert code == 0 and "verified: p -> p" in out


def test_proof_check_rejects_bad_script(tmp_path, capsys):
    bad = tmp_path / "bad.prf"
    bad.write_text("1. p ; ax Q10 p:=p\n")
    code, out, _ = run(capsys, "proof", "check", str(bad))
    assert code == 1 and "INVALID" in out
    garbled = tmp_path / "garbled.prf"
    garbled.write_text("1. p ; wat\n")
    code, _, err = run(capsys, "proof", "check", str(garbled))
    assert code == 2


def test_proof_expand_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "proof", "expand", "--combinator", "refl",
                       "--formula", "p^+")
    assert code == 0
    expanded = tmp_path / "refl_pos.prf"
    expanded.write_text(out)
    code, out, _ = run(capsys, "proof", "check", str(expanded))
    assert code == 0 and "verified: p^+ -> p^+" in out


def test_proof_expand_consuming_combinator(tmp_path, capsys):
    code, fwd, _ = run(capsys, "proof", "expand", "--combinator", "double_neg",
                       "--formula", "p")
    assert code == 0
    code, bwd, _ = run(capsys, "proof", "expand", "--combinator", "double_neg",
                       "--formula", "p", "--direction", "bwd")
    assert code == 0
    f, b = tmp_path / "dn_fwd.prf", tmp_path / "dn_bwd.prf"
    f.write_text(fwd)
    b.write_text(bwd)
    code, out, _ = run(capsys, "proof", "expand", "--combinator", "cong_neg",
                       "--inputs", str(f), str(b))
    assert code == 0
    target = tmp_path / "out.prf"
    target.write_text(out)
    code, out, _ = run(capsys, "proof", "check", str(target))
    assert code == 0 and "verified: ~p -> ~~~p" in out


def test_fuzz_soundness_cli(capsys):
    code, out, _ = run(capsys, "--seed", "5", "fuzz", "soundness",
                       "--proofs", "100")
    assert code == 0 and "violations=0" in out


def test_json_output_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "--json", "algebra", "check", FIXTURE)
    code2, out2, _ = run(capsys, "--json", "algebra", "check", FIXTURE)
    assert code1 == code2 == 0
    assert out1 == out2
    records = [json.loads(line) for line in out1.splitlines()]
    assert all(r["passed"] for r in records)
    assert records[0]["name"] == "QMV*1"
