import json
from fractions import Fraction

import pytest

from gk3.checks import (
    DEFAULT_T_SAMPLES,
    DEFAULT_ZETA_SAMPLES,
    REGISTRY_NAMES,
    ConfigError,
    RunConfig,
    run_checks,
)
from gk3.cli import main
from gk3.scalar import GaussRational

FAST = RunConfig(
    t_samples=(Fraction(3, 2), Fraction(2)),
    zeta_samples=(
        GaussRational(Fraction(1, 2)),
        GaussRational(0, 1),
        GaussRational(Fraction(3, 5), Fraction(4, 5)),
    ),
    cases=25,
)


def test_default_grids():
    assert len(DEFAULT_T_SAMPLES) == 5
    assert all(t > 1 for t in DEFAULT_T_SAMPLES)
    assert len(DEFAULT_ZETA_SAMPLES) == 20
    assert GaussRational(0, 1) in DEFAULT_ZETA_SAMPLES
    assert GaussRational("3/5", "4/5") in DEFAULT_ZETA_SAMPLES
    assert sum(1 for z in DEFAULT_ZETA_SAMPLES if z.norm_sq() == 1) >= 2


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(t_samples=()).validate()
    with pytest.raises(ConfigError):
        RunConfig(t_samples=(Fraction(1, 2),)).validate()
    with pytest.raises(ConfigError):
        RunConfig(names=("no-such-check",)).validate()
    with pytest.raises(ConfigError):
        RunConfig(fmt="yaml").validate()


def test_registry_names_unique_and_filterable():
    assert len(set(REGISTRY_NAMES)) == len(REGISTRY_NAMES)
    for name in REGISTRY_NAMES:
        cfg = RunConfig(
            t_samples=FAST.t_samples,
            zeta_samples=FAST.zeta_samples,
            names=(name,),
            cases=5,
        )
        descriptors = run_checks(cfg)
        assert descriptors, name
        assert all(d.name.split("[")[0] == name for d in descriptors)


def test_phiT_table_gives_four_verdicts():
    cfg = RunConfig(names=("phiT-table",))
    descriptors = run_checks(cfg)
    assert len(descriptors) == 4
    assert all(d.verdict for d in descriptors)


def test_full_run_passes_fast_grid():
    descriptors = run_checks(FAST)
    bad = [d.name for d in descriptors if not d.verdict]
    assert not bad, bad


def test_structured_output_is_deterministic(capsys):
    assert main(["verify", "phiOmega-table", "--format", "structured"]) == 0
    first = capsys.readouterr().out
    records = json.loads(first)
    assert len(records) == 4
    assert records[0]["verdict"] == "pass"
    assert records[0]["witness"] == "0"
    assert main(["verify", "phiOmega-table", "--format", "structured"]) == 0
    assert capsys.readouterr().out == first


def test_cli_verify_unknown_name(capsys):
    assert main(["verify", "bogus"]) == 2
    assert "unknown check" in capsys.readouterr().err


def test_cli_transform(capsys):
    assert main(["transform", "--map", "phiT", "--expr", "sigma^-1*C"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "(1/4)*sigma^-1 + (1/2)*sigmabar"
    assert main(["transform", "--map", "phiOmega", "--expr", "C + eta"]) == 0
    assert capsys.readouterr().out.strip() == "(1)*one + (1)*F + (1)*eta"


def test_cli_transform_bad_expr(capsys):
    assert main(["transform", "--map", "phiT", "--expr", "C + +"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_eval(capsys):
    assert main(["eval", "--expr", "(t^2-1)/t", "--t", "2"]) == 0
    assert capsys.readouterr().out.strip() == "3/2"
    assert main(["eval", "--expr", "zeta*zetabar", "--zeta", "i"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["eval", "--expr", "(t^2+1)/t"]) == 0
    assert capsys.readouterr().out.strip() == "t + t^-1"


def test_cli_eval_pole(capsys):
    assert main(["eval", "--expr", "1/t", "--t", "0"]) == 2


def test_cli_gcs_and_spinor(capsys):
    for check in ("square", "orthogonal", "graph", "spinor-match"):
        assert main(["gcs", "--zeta", "1/2+1/3*i", "--t", "2", "--check", check]) == 0
    for check in ("purity", "annihilator-match", "exp-identity"):
        assert main(["spinor", "--zeta", "1/2", "--t", "3/2", "--check", check]) == 0
    capsys.readouterr()


def test_cli_families(capsys):
    assert main(["families", "--t", "symbolic", "--report"]) == 0
    out = capsys.readouterr().out
    assert "u_t" in out and "pass" in out
    assert main(["families", "--t", "2", "--report", "--format", "structured"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["correction"] == "(-1/4)*sigmabar"


def test_cli_mirror(capsys):
    assert main(["mirror", "--t", "symbolic", "--zeta", "symbolic"]) == 0
    assert main(["mirror", "--t", "2", "--zeta", "1/2+1/3*i"]) == 0
    capsys.readouterr()


def test_cli_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# fast grid\n"
        "t = 3/2, 2\n"
        "zeta = 1/2, i, (3+4*i)/5\n"
        "checks = kahler-arithmetic, limits\n"
        "cases = 10\n"
    )
    assert main(["verify", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert "kahler-arithmetic" in out and "limits" in out


def test_cli_config_errors(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("t = \n")
    assert main(["verify", "--config", str(cfg)]) == 2
    cfg.write_text("mystery = 1\n")
    assert main(["verify", "--config", str(cfg)]) == 2
    cfg.write_text("t = 1/2\n")
    assert main(["verify", "--config", str(cfg)]) == 2
    capsys.readouterr()


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["transform", "--map", "nope", "--expr", "C"])
    assert err.value.code == 2


def test_cli_verify_symbolic_flags(capsys):
    assert main(["verify", "mirror-thm4", "--t", "symbolic", "--zeta", "symbolic"]) == 0
    out = capsys.readouterr().out
    assert "mirror-thm4[symbolic]" in out and "pass" in out


def test_cli_verify_grid_override(capsys):
    assert main(["verify", "kahler-arithmetic", "--t", "3/2,2", "--zeta", "1/2,i"]) == 0
    capsys.readouterr()
    assert main(["verify", "gcs-family", "--t", "1/2", "--zeta", "i"]) == 2
    assert "greater than 1" in capsys.readouterr().err


def test_cli_families_summary_line(capsys):
    assert main(["families", "--t", "5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("pass") and "u_t" not in out


def test_emit_exit_code_on_failure(capsys):
    from gk3.checks import CheckDescriptor
    from gk3.cli import _emit

    bad = CheckDescriptor(
        name="demo", statement="forced failure", params={}, verdict=False, witness="x"
    )
    good = CheckDescriptor(name="ok", statement="fine", params={}, verdict=True)
    assert _emit([good, bad], "text") == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "1/2 checks passed" in out
