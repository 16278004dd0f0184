"""Command-line front end.

Commands::

    gk3 verify [name|all]        run named verification suites
    gk3 transform --map M --expr E
    gk3 eval --expr E [--t R --zeta C]
    gk3 gcs --zeta C --t R --check {square,orthogonal,graph,spinor-match}
    gk3 spinor --zeta C --t R --check {purity,annihilator-match,exp-identity}
    gk3 families --t {R|symbolic} [--report]
    gk3 mirror --t {R|symbolic} --zeta {C|symbolic}

Common flags: ``--format {text,structured}``, ``--config PATH`` (a
``key = value`` file overriding the run configuration), ``--seed N``
for the randomized suites.  Exit status: 0 when everything passes, 1
when any verdict fails, 2 for usage or configuration errors.

The structured format is deterministic: records appear in registration
order, keys are sorted, and scalars print in canonical sorted-monomial
form, so its output is stable byte for byte for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, families, gcs, mirror
from . import spinor as sp
from .checks import CheckDescriptor, ConfigError, RunConfig
from .harmonic import TRANSFORMS
from .linalg import eigenspace_i
from .parser import ExprSyntaxError, UnknownSymbol, parse_class_expr, parse_scalar_expr
from .scalar import GR_I, GaussRational, PoleAtSample, Scalar


def _parse_zeta(text: str) -> GaussRational:
    value = parse_scalar_expr(text)
    return value.eval()


def _parse_t(text: str) -> Fraction:
    return Fraction(text)


def _scalar_arg(text: str, symbolic_var) -> Scalar:
    if text == "symbolic":
        return symbolic_var()
    return Scalar.from_value(Fraction(text))


def _load_config(path: str, cfg: RunConfig) -> RunConfig:
    t_samples = cfg.t_samples
    zeta_samples = cfg.zeta_samples
    names = cfg.names
    fmt = cfg.fmt
    seed = cfg.seed
    cases = cfg.cases
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            try:
                if key == "t":
                    t_samples = tuple(Fraction(v.strip()) for v in value.split(","))
                elif key == "zeta":
                    zeta_samples = tuple(_parse_zeta(v.strip()) for v in value.split(","))
                elif key == "checks":
                    names = tuple(v.strip() for v in value.split(","))
                elif key == "format":
                    fmt = value
                elif key == "seed":
                    seed = int(value)
                elif key == "cases":
                    cases = int(value)
                else:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            except (ValueError, ExprSyntaxError, UnknownSymbol) as exc:
                if isinstance(exc, ConfigError):
                    raise
                raise ConfigError(f"{path}:{lineno}: {exc}") from exc
    return RunConfig(
        t_samples=t_samples,
        zeta_samples=zeta_samples,
        names=names,
        fmt=fmt,
        seed=seed,
        cases=cases,
    )


def _render(descriptors: list[CheckDescriptor], fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(
            [d.as_record() for d in descriptors], indent=2, sort_keys=True
        )
    width = max((len(d.name) for d in descriptors), default=4)
    lines = []
    for d in descriptors:
        status = "pass" if d.verdict else "FAIL"
        line = f"{status}  {d.name.ljust(width)}  {d.statement}"
        if not d.verdict:
            line += f"  [residual: {d.witness}]"
        lines.append(line)
    passed = sum(1 for d in descriptors if d.verdict)
    lines.append(f"{passed}/{len(descriptors)} checks passed")
    return "\n".join(lines)


def _emit(descriptors: list[CheckDescriptor], fmt: str) -> int:
    print(_render(descriptors, fmt))
    return 0 if all(d.verdict for d in descriptors) else 1


def _cmd_verify(args) -> int:
    cfg = RunConfig()
    if args.config:
        cfg = _load_config(args.config, cfg)
    # explicit flags win over the config file
    if args.seed is not None:
        cfg.seed = args.seed
    if args.format is not None:
        cfg.fmt = args.format
    # symbolic identities always run exactly; "symbolic" leaves the
    # sample grids alone, anything else replaces them
    if args.t and args.t != "symbolic":
        cfg.t_samples = tuple(Fraction(v.strip()) for v in args.t.split(","))
    if args.zeta and args.zeta != "symbolic":
        cfg.zeta_samples = tuple(
            _parse_zeta(v.strip()) for v in args.zeta.split(",")
        )
    if args.name != "all":
        if args.name not in checks.REGISTRY_NAMES:
            raise ConfigError(
                f"unknown check {args.name!r}; known: {', '.join(checks.REGISTRY_NAMES)}"
            )
        cfg.names = (args.name,)
    return _emit(checks.run_checks(cfg), cfg.fmt)


def _cmd_transform(args) -> int:
    mapping, domain, description = TRANSFORMS[args.map]
    context = "coh" if domain.__name__ == "CohClass" else "ht"
    value = parse_class_expr(args.expr, context=context)
    result = mapping(value)
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "map": args.map,
                    "domain": description,
                    "input": str(value),
                    "output": str(result),
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(result)
    return 0


def _cmd_eval(args) -> int:
    value = parse_scalar_expr(args.expr)
    if args.t is None and args.zeta is None:
        print(value)
        return 0
    t0 = Fraction(args.t) if args.t is not None else None
    z0 = _parse_zeta(args.zeta) if args.zeta is not None else None
    print(value.eval(t0=t0, zeta0=z0))
    return 0


def _pointwise_args(args):
    return _parse_zeta(args.zeta), _parse_t(args.t)


def _cmd_gcs(args) -> int:
    zeta, t = _pointwise_args(args)
    j = gcs.j_zeta(zeta, t)
    if args.check == "square":
        ok = j.squares_to_minus_identity()
        detail = "J^2 = -Id"
    elif args.check == "orthogonal":
        ok = j.is_orthogonal()
        detail = "orthogonal for the natural pairing"
    elif args.check == "graph":
        ok = gcs.deformation_graph_Y(zeta, t) == gcs.deformation_direction_matrix(
            zeta, t
        )
        detail = "eigenspace graph matches its closed form"
    else:  # spinor-match
        rho = sp.family_spinor(zeta, t)
        ok = sp.clifford_annihilator(rho) == eigenspace_i(j.matrix)
        detail = "spinor annihilator matches the +i eigenspace"
    print(f"{'pass' if ok else 'FAIL'}  {detail} at zeta={zeta}, t={t}")
    return 0 if ok else 1


def _cmd_spinor(args) -> int:
    zeta, t = _pointwise_args(args)
    if args.check == "purity":
        ok = sp.is_pure(sp.family_spinor(zeta, t))
        detail = "family spinor is pure"
    elif args.check == "annihilator-match":
        rho = sp.family_spinor(zeta, t)
        ok = sp.clifford_annihilator(rho) == eigenspace_i(gcs.j_zeta(zeta, t).matrix)
        detail = "annihilator matches the +i eigenspace"
    else:  # exp-identity
        b, om = sp.bfield_symplectic_data(zeta, t)
        lhs = sp.exp_two_form(b).wedge(sp.exp_two_form(om * GR_I))
        ok = lhs * (2 * zeta) == sp.family_spinor(zeta, t)
        detail = "exponential identity and 2*zeta rescale"
    print(f"{'pass' if ok else 'FAIL'}  {detail} at zeta={zeta}, t={t}")
    return 0 if ok else 1


def _cmd_families(args) -> int:
    t = _scalar_arg(args.t, Scalar.t)
    report = families.kahler_checks(t)
    if not args.report:
        status = "pass" if report.all_pass() else "FAIL"
        print(f"{status}  family identities at t = {report.tag}")
        return 0 if report.all_pass() else 1
    if args.format == "structured":
        record = {
            "t": report.tag,
            "direction_x": str(report.direction_x),
            "direction_y": str(report.direction_y),
            "correction": str(report.correction),
            "verdicts": {k: ("pass" if v else "fail") for k, v in sorted(report.verdicts.items())},
        }
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(f"t = {report.tag}")
        print(f"  twistor direction        u_t = {report.direction_x}")
        print(f"  interpolation direction  v_t = {report.direction_y}")
        print(f"  correction    phi_t(u_t)-v_t = {report.correction}")
        for key, verdict in report.verdicts.items():
            print(f"  {'pass' if verdict else 'FAIL'}  {key}")
    return 0 if report.all_pass() else 1


def _cmd_mirror(args) -> int:
    t = _scalar_arg(args.t, Scalar.t)
    zeta = (
        Scalar.zeta()
        if args.zeta == "symbolic"
        else Scalar.from_value(_parse_zeta(args.zeta))
    )
    ok = mirror.verify_theorem4(t, zeta)
    print(
        f"{'pass' if ok else 'FAIL'}  mirror congruence at t={args.t}, zeta={args.zeta}"
    )
    return 0 if ok else 1


def build_arg_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "structured"),
        default=None,
        help="output format (structured is deterministic JSON)",
    )
    common.add_argument("--config", help="path to a key = value run configuration")
    common.add_argument(
        "--seed", type=int, default=None, help="seed for the randomized suites"
    )

    top = argparse.ArgumentParser(
        prog="gk3",
        description="Exact verification suites for a dual pair of elliptic K3 "
        "surfaces and their deformation families.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("name", nargs="?", default="all", help="check name or 'all'")
    p.add_argument(
        "--t",
        help="comma-separated rational t samples, or 'symbolic' to keep defaults",
    )
    p.add_argument(
        "--zeta",
        help="comma-separated zeta samples, or 'symbolic' to keep defaults",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("transform", parents=[common], help="apply a transform map")
    p.add_argument("--map", required=True, choices=tuple(TRANSFORMS))
    p.add_argument("--expr", required=True, help="class expression")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("eval", parents=[common], help="evaluate a scalar expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--t", help="rational value for t")
    p.add_argument("--zeta", help="Gaussian rational value for zeta")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("gcs", parents=[common], help="pointwise structure checks")
    p.add_argument("--zeta", required=True)
    p.add_argument("--t", required=True)
    p.add_argument(
        "--check",
        required=True,
        choices=("square", "orthogonal", "graph", "spinor-match"),
    )
    p.set_defaults(func=_cmd_gcs)

    p = sub.add_parser("spinor", parents=[common], help="pointwise spinor checks")
    p.add_argument("--zeta", required=True)
    p.add_argument("--t", required=True)
    p.add_argument(
        "--check",
        required=True,
        choices=("purity", "annihilator-match", "exp-identity"),
    )
    p.set_defaults(func=_cmd_spinor)

    p = sub.add_parser("families", parents=[common], help="family report for one t")
    p.add_argument("--t", required=True, help="rational value or 'symbolic'")
    p.add_argument("--report", action="store_true", help="print the full report")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("mirror", parents=[common], help="mirror congruence check")
    p.add_argument("--t", required=True, help="rational value or 'symbolic'")
    p.add_argument("--zeta", required=True, help="Gaussian rational or 'symbolic'")
    p.set_defaults(func=_cmd_mirror)

    return top


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ExprSyntaxError, UnknownSymbol) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PoleAtSample, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
