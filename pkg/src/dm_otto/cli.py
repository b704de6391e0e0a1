"""Command-line front end.

Subcommands:

  cycle    evaluate one Otto cycle from inline flags
  sweep    run a sweep described by a TOML config, emit CSV
  figures  run a built-in preset (fig1..fig5), emit CSV
  audit    run the claims ledger, emit the JSON report
  oracle   cross-check the closed-form spectrum against the iterative solver

Exit codes: 0 success, 1 validation/usage error, 2 internal invariant
violation (first-law mismatch, failed eigensolve, non-empty second-law
scan, oracle deviation above threshold).
"""

import argparse
import random
import sys
from datetime import datetime, timezone

from ._version import __version__
from .audit import CLAIM_IDS, AuditConfig, audit_artifact
from .bounds import second_law_scan
from .cycle import BathSpec, VaryDM, VaryField, run_cycle
from .errors import DmOttoError, EigensolverError, FirstLawViolationError
from .local import heat_direction_report, local_cycle
from .spectrum import SystemParams, analytic_spectrum, build_hamiltonian, numeric_spectrum
from .sweep import FIGURE_IDS, figure_spec, grid_protocols, parse_config, run_sweep, emit

ORACLE_THRESHOLD = 1e-10


class _Parser(argparse.ArgumentParser):
    """argparse with exit code 1 for usage errors (2 is reserved)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="dm-otto", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"dm-otto {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cycle = sub.add_parser("cycle", help="evaluate a single Otto cycle")
    p_cycle.add_argument("--protocol", required=True, choices=("vary-dm", "vary-field"))
    p_cycle.add_argument("--J", type=float, required=True, dest="J")
    p_cycle.add_argument("--B", type=float, dest="B")
    p_cycle.add_argument("--D1", type=float, dest="D1")
    p_cycle.add_argument("--D2", type=float, dest="D2")
    p_cycle.add_argument("--D", type=float, dest="D")
    p_cycle.add_argument("--B1", type=float, dest="B1")
    p_cycle.add_argument("--B2", type=float, dest="B2")
    p_cycle.add_argument("--T-hot", type=float, required=True, dest="T_hot")
    p_cycle.add_argument("--T-cold", type=float, required=True, dest="T_cold")

    p_sweep = sub.add_parser("sweep", help="run a sweep from a TOML config")
    p_sweep.add_argument("--config", required=True, help="path to the sweep configuration")
    p_sweep.add_argument("--output", default="-", help="CSV destination, '-' for stdout")
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--verify", action="store_true",
                         help="run the second-law scan over the grid; violations exit 2")

    p_fig = sub.add_parser("figures", help="run a built-in figure preset")
    p_fig.add_argument("figure", choices=FIGURE_IDS)
    p_fig.add_argument("--output", default="-")
    p_fig.add_argument("--workers", type=int, default=1)
    p_fig.add_argument("--verify", action="store_true")

    p_audit = sub.add_parser("audit", help="run the claims ledger")
    p_audit.add_argument("--claims", default=",".join(CLAIM_IDS),
                         help="comma-separated subset of C1..C8")
    p_audit.add_argument("--output", default="-")

    p_oracle = sub.add_parser("oracle", help="analytic vs numeric spectrum cross-check")
    p_oracle.add_argument("--draws", type=int, default=1000)
    p_oracle.add_argument("--seed", type=int, default=12345)
    return parser


def _fmt(value) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _cmd_cycle(ns, parser) -> int:
    needed = ("B", "D1", "D2") if ns.protocol == "vary-dm" else ("D", "B1", "B2")
    banned = ("D", "B1", "B2") if ns.protocol == "vary-dm" else ("B", "D1", "D2")
    for flag in needed:
        if getattr(ns, flag) is None:
            parser.error(f"--{flag} is required with --protocol {ns.protocol}")
    for flag in banned:
        if getattr(ns, flag) is not None:
            parser.error(f"--{flag} does not apply to --protocol {ns.protocol}")

    if ns.protocol == "vary-dm":
        protocol = VaryDM(J=ns.J, B=ns.B, D_hot=ns.D1, D_cold=ns.D2)
    else:
        protocol = VaryField(J=ns.J, D=ns.D, B_hot=ns.B1, B_cold=ns.B2)
    baths = BathSpec(T_hot=ns.T_hot, T_cold=ns.T_cold)
    result = run_cycle(protocol, baths)

    print(f"Q_hot = {_fmt(result.Q_hot)}")
    print(f"Q_cold = {_fmt(result.Q_cold)}")
    print(f"W = {_fmt(result.W)}")
    print(f"eta = {_fmt(result.eta)}")
    print(f"class = {result.classification.value}")
    if isinstance(protocol, VaryField):
        local = local_cycle(protocol, baths)
        report = heat_direction_report(protocol, baths)
        print(f"q1 = {_fmt(local.q1)}")
        print(f"q2 = {_fmt(local.q2)}")
        print(f"w = {_fmt(local.w)}")
        print(f"eta_local = {_fmt(local.eta_local)}")
        print(f"opposed = {_fmt(report.opposed)}")
    return 0


def _emit_to(artifact, fmt, output):
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    if output == "-":
        emit(artifact, fmt, sys.stdout, timestamp=stamp if fmt == "csv" else None)
    else:
        emit(artifact, fmt, output, timestamp=stamp if fmt == "csv" else None)


def _run_and_emit(spec, ns) -> int:
    artifact = run_sweep(spec, workers=ns.workers)
    _emit_to(artifact, "csv", ns.output)
    if ns.verify:
        points = grid_protocols(spec)
        violations = second_law_scan(points)
        if violations:
            for v in violations:
                print(
                    f"second-law violation [{v.kind}] value {v.value!r} exceeds {v.limit!r} "
                    f"at {v.protocol!r}",
                    file=sys.stderr,
                )
            return 2
        print(f"# second-law scan: 0 violations over {len(points)} points", file=sys.stderr)
    return 0


def _cmd_audit(ns, parser) -> int:
    ids = tuple(c.strip() for c in ns.claims.split(",") if c.strip())
    for cid in ids:
        if cid not in CLAIM_IDS:
            parser.error(f"--claims: unknown claim id {cid!r} (known: {','.join(CLAIM_IDS)})")
    artifact = audit_artifact(AuditConfig(claims=ids))
    _emit_to(artifact, "json-report", ns.output)
    return 0


def _cmd_oracle(ns) -> int:
    if ns.draws < 1:
        raise DmOttoError(f"--draws must be positive, got {ns.draws}")
    rng = random.Random(ns.seed)
    worst = 0.0
    for _ in range(ns.draws):
        params = SystemParams(
            J=rng.uniform(-10.0, 10.0),
            D=rng.uniform(-10.0, 10.0),
            B=rng.uniform(-10.0, 10.0),
        )
        exact = analytic_spectrum(params)
        numeric = numeric_spectrum(build_hamiltonian(params))
        for a, b in zip(exact.energies, numeric.energies):
            worst = max(worst, abs(a - b))
    ok = worst <= ORACLE_THRESHOLD
    print(f"draws = {ns.draws}")
    print(f"seed = {ns.seed}")
    print(f"max_eigenvalue_deviation = {worst!r}")
    print(f"threshold = {ORACLE_THRESHOLD!r}")
    print(f"result = {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 2


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "cycle":
            return _cmd_cycle(ns, parser)
        if ns.command == "sweep":
            with open(ns.config, "r", encoding="utf-8") as handle:
                text = handle.read()
            spec = parse_config(text)
            return _run_and_emit(spec, ns)
        if ns.command == "figures":
            return _run_and_emit(figure_spec(ns.figure), ns)
        if ns.command == "audit":
            return _cmd_audit(ns, parser)
        if ns.command == "oracle":
            return _cmd_oracle(ns)
    except (FirstLawViolationError, EigensolverError) as exc:
        print(f"dm-otto: internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except DmOttoError as exc:
        print(f"dm-otto: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"dm-otto: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
