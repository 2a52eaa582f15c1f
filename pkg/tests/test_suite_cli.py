import json

import pytest

from braidcong import cli
from braidcong.braid import is_trivial
from braidcong.suite import (FAIL, PASS, SKIPPED, CheckRecord, SuiteConfig, SuiteReport, lift_twist,
                             run_suite, verify_comm_relation, verify_forgetful_corollary,
                             verify_squared_lantern)


def small_config(**kw):
    return SuiteConfig(random_words=200, per_stratum=50, twist_squares=50, forgetful_samples=20,
                       brunnian_samples=5, homomorphism_pairs=50, symplectic_words=30, **kw)


def test_relations_pass():
    recs = verify_squared_lantern() + verify_comm_relation()
    assert all(r.status == PASS for r in recs)
    assert {r.provenance for r in recs} <= {"STATED", "DERIVED", "TRIVIAL"}


def test_corrupted_expectation_fails_by_name():
    cfg = SuiteConfig(overrides={"relations.witt_hall": 1})
    report = run_suite(cfg, ("relations",))
    assert not report.passed and report.exit_code() == 1
    assert [r.check for r in report.failures] == ["relations.witt_hall"]


def test_skipped_records_and_strict():
    rep = SuiteReport([CheckRecord("a", "", PASS, 1, 1, "TRIVIAL"),
                       CheckRecord("b", "", SKIPPED, {"partial": 9}, 10, "DERIVED")])
    assert rep.passed and rep.exit_code() == 0 and rep.exit_code(strict=True) == 3
    rep.records.append(CheckRecord("c", "", FAIL, 0, 1, "STATED"))
    assert rep.exit_code(strict=True) == 1


def test_report_is_deterministic():
    a = run_suite(small_config(seed=5), ("forgetful", "relations")).to_json(timing=False)
    b = run_suite(small_config(seed=5), ("forgetful", "relations")).to_json(timing=False)
    assert a == b
    body = json.loads(a)
    assert body["status"] == PASS
    assert set(body["checks"][0]) == {"check", "statement", "status", "computed", "expected", "provenance"}
    assert "millis" in json.loads(run_suite(small_config(), ("relations",)).to_json())["checks"][0]


def test_unknown_group():
    with pytest.raises(KeyError):
        run_suite(small_config(), ("bogus",))


def test_lift_twist_forgets_to_target():
    from braidcong.braid import delete_strands, interval_twist
    lift = lift_twist(2, 3, 3, 5) ** 2
    assert is_trivial(delete_strands(lift, (4, 5)) * ~(interval_twist(2, 3, 3) ** 2))
    with pytest.raises(ValueError):
        lift_twist(1, 2, 5, 5)
    with pytest.raises(ValueError):
        verify_forgetful_corollary(small_config(), n=3, k=3)


def test_default_suite_passes():
    report = run_suite()
    assert report.passed and report.exit_code(strict=True) == 0, report.render()
    names = {r.check for r in report.records}
    assert {"closures.surjective.odd.n5", "closures.surjective.even.n6", "pointpush.k1.index",
            "forgetful.witnesses.n5k3", "main.level4.n7"} <= names


def test_small_main_suite():
    report = run_suite(small_config(n_values=(3, 4)), ("main",))
    assert report.passed, report.render()


# -- command line ---------------------------------------------------------------

def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_cli_burau(capsys):
    code, out = run(capsys, "burau", "n=2; 1", "--json", "--laurent")
    body = json.loads(out.out)
    assert code == 0 and body["integral_burau"] == [["2", "-1"], ["1", "0"]]
    assert body["burau"] == [["1 - t", "t"], ["1", "0"]]


def test_cli_member(capsys):
    code, out = run(capsys, "member", "1 1 1 1", "--level", "4", "--json")
    assert code == 0 and json.loads(out.out)["member"] is True
    code, out = run(capsys, "member", "1 1", "--n", "3", "--level", "4")
    assert code == 0 and "not in B_3[4]" in out.out


def test_cli_usage_errors(capsys):
    assert run(capsys, "member", "n=3; 1 q", "--level", "2")[0] == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["member", "1", "--level", "3"])
    assert err.value.code == 2
    assert run(capsys, "verify", "relations", "--g", "1")[0] == 2
    assert run(capsys, "closure", "--gens", "/nonexistent.json", "--mod", "4")[0] == 2


def test_cli_closure(tmp_path, capsys):
    f = tmp_path / "gens.json"
    # squares of the transvections along x, y and x - y fill the level-2 group mod 4 (order 8)
    gens = [[[1, -2], [0, 1]], [[1, 0], [2, 1]], [[-1, -2], [2, 3]]]
    f.write_text(json.dumps({"modulus": 4, "generators": gens}))
    code, out = run(capsys, "closure", "--gens", str(f), "--json")
    assert code == 0 and json.loads(out.out)["order"] == 8
    assert run(capsys, "closure", "--gens", str(f), "--mod", "8")[0] == 2
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps([[[0, 1], [1, 0]]]))
    code, out = run(capsys, "closure", "--gens", str(bare), "--mod", "2")
    assert code == 0 and "order 2" in out.out
    code, out = run(capsys, "closure", "--gens", str(f), "--limit", "2", "--strict")
    assert code == 3 and "skipped" in out.out
    assert run(capsys, "closure", "--gens", str(f), "--limit", "2")[0] == 0


def test_cli_verify(capsys):
    code, out = run(capsys, "verify", "relations", "--json", "--no-timing")
    assert code == 0 and json.loads(out.out)["status"] == PASS
    code, out = run(capsys, "verify", "forgetful", "--seed", "2")
    assert code == 0 and out.out.strip().endswith("overall: PASS")
