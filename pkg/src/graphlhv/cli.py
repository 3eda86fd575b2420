"""Command-line front end: JSON reports on stdout, human-readable text on stderr.

Exit codes: 0 when the result matches the expectation (or none was supplied),
1 when a violation or unexpected result was found, 2 on usage or parse errors.
Reports are byte-identical for identical inputs and seeds.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Sequence

from . import __version__
from .graphs import GraphFormatError, Graph, UnsupportedSizeError, grid, load_graph, named_graph
from .lhv import NO_COMMUNICATION, SYMMETRIC_RULES, STANDARD_RULES, product_report
from .nogo import (
    certify_distance,
    find_certain_submeasurements,
    gf2_solve,
    site_invariance_system,
    verify_all_submeasurements,
)
from .oracle import classify
from .pauli import Measurement
from .chain_protocol import (
    NotStabilizerShaped,
    decompose,
    decomposition_sign,
    verify_chain_exhaustive,
)

_RULES = {"standard": STANDARD_RULES, "symmetric": SYMMETRIC_RULES, "none": NO_COMMUNICATION}
_WORKERS_ENV = "GRAPHLHV_WORKERS"


class CommandError(Exception):
    """Usage-level failure; maps to exit code 2."""


def _workers() -> int:
    raw = os.environ.get(_WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise CommandError(f"{_WORKERS_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise CommandError(f"{_WORKERS_ENV} must be at least 1, got {value}")
    return value


def _resolve_graph(spec: str) -> tuple[Graph, dict]:
    """A --graph value is a family spec like ring:12 or a path to a JSON file."""
    try:
        if os.path.exists(spec):
            g = load_graph(spec)
            with open(spec, "rb") as fh:
                digest = hashlib.sha256(fh.read()).hexdigest()
            source = {"kind": "file", "path": spec, "sha256": digest}
        else:
            g = named_graph(spec)
            digest = hashlib.sha256(g.to_json().encode()).hexdigest()
            source = {"kind": "family", "spec": spec, "sha256": digest}
    except GraphFormatError as exc:
        raise CommandError(str(exc)) from exc
    return g, source


def _parse_measurement(raw: str, g: Graph) -> Measurement:
    try:
        m = Measurement(raw)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    if len(m) != g.n:
        raise CommandError(
            f"measurement has {len(m)} letters but the graph has {g.n} nodes"
        )
    return m


def _parse_subset(raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise CommandError(f"bad subset {raw!r}: {exc}") from exc


def _emit(report: dict, human: str, ok: bool | None) -> int:
    print(json.dumps(report, sort_keys=True))
    if human:
        print(human, file=sys.stderr)
    return 0 if ok in (None, True) else 1


def _report(command: str, inputs: dict, result: dict, ok: bool | None = None) -> dict:
    return {
        "schema_version": 1,
        "tool": {"name": "graphlhv", "version": __version__},
        "command": command,
        "inputs": inputs,
        "result": result,
        "ok": ok,
    }


def _cmd_oracle(args: argparse.Namespace) -> int:
    g, source = _resolve_graph(args.graph)
    m = _parse_measurement(args.measurement, g)
    verdict = classify(g, m)
    report = _report(
        "oracle",
        {"graph": source, "measurement": str(m)},
        verdict.to_json_dict(),
    )
    return _emit(report, f"{m}: {verdict}", None)


def _cmd_lhv_run(args: argparse.Namespace) -> int:
    g, source = _resolve_graph(args.graph)
    m = _parse_measurement(args.measurement, g)
    subset = _parse_subset(args.subset)
    rules = _RULES[args.rules]
    try:
        rep = product_report(g, m, subset, rules, samples=args.samples, seed=args.seed)
    except (UnsupportedSizeError, ValueError) as exc:
        raise CommandError(str(exc)) from exc
    report = _report(
        "lhv run",
        {"graph": source, "measurement": str(m), "subset": list(rep.subset)},
        rep.to_json_dict(),
    )
    return _emit(report, f"product over {list(rep.subset)}: {rep.verdict} [{rep.mode}]", None)


def _cmd_verify_sub(args: argparse.Namespace) -> int:
    g, source = _resolve_graph(args.graph)
    m = _parse_measurement(args.measurement, g)
    try:
        rep = verify_all_submeasurements(
            g, m, _RULES[args.rules], include_matches=args.include_matches,
            workers=_workers(),
        )
    except UnsupportedSizeError as exc:
        raise CommandError(str(exc)) from exc
    ok = None
    if args.expect == "clean":
        ok = rep.clean
    elif args.expect == "mismatch":
        ok = not rep.clean
    result = rep.to_json_dict()
    if args.include_matches:
        result["entries"] = [c.to_json_dict() for c in rep.entries]
    report = _report(
        "verify-sub", {"graph": source, "measurement": str(m)}, result, ok
    )
    human = (
        f"{rep.subsets_checked} subsets checked, {rep.deterministic_subsets} deterministic, "
        f"{len(rep.mismatches)} mismatches"
    )
    return _emit(report, human, ok)


def _cmd_nogo_ring(args: argparse.Namespace) -> int:
    if args.f < 1 or args.f % 2 == 0:
        raise CommandError(f"--f must be an odd positive integer, got {args.f}")
    try:
        cert = certify_distance(12 * args.f, args.d)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    report = _report(
        "nogo ring",
        {"f": args.f, "d": cert.d},
        cert.to_json_dict(),
        cert.ok,
    )
    state = "inconsistent" if not cert.solution.consistent else "consistent"
    human = f"ring n={cert.n}, d={cert.d} (bound {cert.bound}): system {state}"
    if cert.solution.certificate is not None:
        human += f"; certificate uses equations {list(cert.solution.certificate)}"
    return _emit(report, human, cert.ok)


def _cmd_nogo_site(args: argparse.Namespace) -> int:
    g, source = _resolve_graph(args.graph)
    m = _parse_measurement(args.measurement, g)
    try:
        subs = find_certain_submeasurements(g, m)
        system = site_invariance_system(g, m, subs, max_nodes=args.max_nodes)
    except UnsupportedSizeError as exc:
        raise CommandError(str(exc)) from exc
    solution = gf2_solve(system)
    ok = None
    if args.expect == "inconsistent":
        ok = not solution.consistent
    elif args.expect == "consistent":
        ok = solution.consistent
    orbs = sorted({v.sites for v in system.variables})
    result = {
        "orbits": [list(o) for o in orbs],
        "certain_submeasurements": [
            {"sites": sorted(s), "sign": sign} for s, sign in subs
        ],
        "consistent": solution.consistent,
        "certificate": list(solution.certificate) if solution.certificate else None,
        "system": system.to_json_dict(),
        "model_class": "site-invariant sign flips over parity hidden variables "
                       "whose baseline product on any signed stabilizer word is +1",
    }
    report = _report("nogo site-invariance", {"graph": source, "measurement": str(m)}, result, ok)
    state = "consistent" if solution.consistent else "inconsistent"
    return _emit(report, f"orbit flip system is {state} ({len(orbs)} orbits)", ok)


def _cmd_chain_verify(args: argparse.Namespace) -> int:
    try:
        rep = verify_chain_exhaustive(args.n, args.broadcast_y, args.sample, args.seed)
    except UnsupportedSizeError as exc:
        raise CommandError(str(exc)) from exc
    report = _report(
        "chain verify",
        {"n": args.n, "broadcast_y": args.broadcast_y, "sample": args.sample, "seed": args.seed},
        rep.to_json_dict(),
        rep.clean,
    )
    human = (
        f"n={args.n} ({rep.mode}): {rep.deterministic_subs_checked} deterministic subs, "
        f"{len(rep.violations)} violations, {len(rep.overlap_violations)} overlap violations"
    )
    return _emit(report, human, rep.clean)


def _cmd_chain_decompose(args: argparse.Namespace) -> int:
    try:
        m = Measurement(args.measurement)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    try:
        sentences = decompose(m)
    except NotStabilizerShaped as exc:
        report = _report(
            "chain decompose",
            {"measurement": str(m)},
            {"stabilizer_shaped": False, "reason": str(exc)},
        )
        return _emit(report, f"not stabilizer shaped: {exc}", None)
    result = {
        "stabilizer_shaped": True,
        "sign": decomposition_sign(sentences),
        "sentences": [
            {
                "left": s.left,
                "right": s.right,
                "left_virtual": s.left_virtual,
                "right_virtual": s.right_virtual,
                "words": [{"start": w.start, "letters": w.letters, "sign": w.sign} for w in s.words],
            }
            for s in sentences
        ],
    }
    report = _report("chain decompose", {"measurement": str(m)}, result)
    human = " | ".join(
        "".join(w.letters for w in s.words) for s in sentences
    ) or "(identity)"
    return _emit(report, f"sign {result['sign']:+d}: {human}", None)


def _render_system(system) -> list[str]:
    names: dict = {}
    for key in system.variables:
        base = key.short_name()
        c = sum(1 for v in names.values() if v == base or v.startswith(base + "'"))
        names[key] = base + "'" * c

    def order(key):
        site = getattr(key, "site", None)
        if site is None:
            site = key.sites[0]
        return (site, key.observable)

    lines = []
    for eq in system.equations:
        terms = [names[k] for k in sorted(eq.variables, key=order)]
        rhs = "-1" if eq.rhs else "+1"
        lines.append(f"[{eq.label}] {' * '.join(terms) or '1'} = {rhs}")
    return lines


def _cmd_reproduce(args: argparse.Namespace) -> int:
    if args.figure == "fig1":
        cert = certify_distance(12, 1)
        ok = (
            not cert.solution.consistent
            and cert.solution.certificate == tuple(range(5))
            and all(len(eq.variables) in (6, 7, 9) for eq in cert.system.equations)
        )
        result = cert.to_json_dict()
        result["constraints"] = _render_system(cert.system)
        report = _report("reproduce fig1", {"figure": "fig1"}, result, ok)
        human_lines = [
            "triangle-ring demonstration (n=12, d=1): five certain submeasurements",
            *result["constraints"],
            "multiplying all five equations gives 1 = -1"
            if ok else "UNEXPECTED: no contradiction found",
        ]
        return _emit(report, "\n".join(human_lines), ok)

    g = grid(2, 3)
    m = Measurement("YYYYYY")
    rep = verify_all_submeasurements(g, m, STANDARD_RULES)
    target = next((c for c in rep.mismatches if c.sites == (1, 2, 3, 5)), None)
    subs = find_certain_submeasurements(g, m)
    system = site_invariance_system(g, m, subs)
    solution = gf2_solve(system)
    ok = (
        target is not None
        and target.oracle.to_json_dict() == {"kind": "deterministic", "value": -1}
        and target.lhv.to_json_dict() == {"kind": "deterministic", "value": 1}
        and not solution.consistent
    )
    orbs = sorted({v.sites for v in system.variables})
    result = {
        "mismatches": [c.to_json_dict() for c in rep.mismatches],
        "highlight": target.to_json_dict() if target else None,
        "orbits": [list(o) for o in orbs],
        "site_invariance_consistent": solution.consistent,
        "constraints": _render_system(system),
    }
    report = _report("reproduce fig2", {"figure": "fig2"}, result, ok)
    human = (
        "2x3 grid, all-Y global measurement: sites {1,2,3,5} give oracle -1 vs rules +1; "
        f"orbit flip system {'inconsistent' if not solution.consistent else 'consistent'}"
    )
    return _emit(report, human, ok)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphlhv",
        description="Pauli measurements on graph states: exact predictions, "
                    "communication-assisted hidden-variable protocols, and "
                    "impossibility certificates.",
    )
    parser.add_argument("--version", action="version", version=f"graphlhv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", help="classify a measurement on a graph state")
    p.add_argument("--graph", required=True)
    p.add_argument("--measurement", required=True)
    p.set_defaults(func=_cmd_oracle)

    lhv = sub.add_parser("lhv", help="run the hidden-variable protocol")
    lhv_sub = lhv.add_subparsers(dest="lhv_command", required=True)
    p = lhv_sub.add_parser("run", help="verdict for the product over a subset of sites")
    p.add_argument("--graph", required=True)
    p.add_argument("--measurement", required=True)
    p.add_argument("--subset", help="comma-separated sites, default: full support")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rules", choices=sorted(_RULES), default="standard")
    p.set_defaults(func=_cmd_lhv_run)

    p = sub.add_parser("verify-sub", help="compare oracle and protocol on every subset")
    p.add_argument("--graph", required=True)
    p.add_argument("--measurement", required=True)
    p.add_argument("--rules", choices=sorted(_RULES), default="standard")
    p.add_argument("--include-matches", action="store_true")
    p.add_argument("--expect", choices=["clean", "mismatch"])
    p.set_defaults(func=_cmd_verify_sub)

    nogo = sub.add_parser("nogo", help="impossibility certificates")
    nogo_sub = nogo.add_subparsers(dest="nogo_command", required=True)
    p = nogo_sub.add_parser("ring", help="distance-bound contradiction on a ring")
    p.add_argument("--f", type=int, required=True, help="odd ring parameter (n = 12f)")
    p.add_argument("--d", type=int, help="communication distance, default: the bound")
    p.set_defaults(func=_cmd_nogo_ring)
    p = nogo_sub.add_parser("site-invariance", help="orbit-flip contradiction")
    p.add_argument("--graph", required=True)
    p.add_argument("--measurement", required=True)
    p.add_argument("--max-nodes", type=int, default=12)
    p.add_argument("--expect", choices=["consistent", "inconsistent"])
    p.set_defaults(func=_cmd_nogo_site)

    ch = sub.add_parser("chain", help="chain grammar and broadcast protocol")
    ch_sub = ch.add_subparsers(dest="chain_command", required=True)
    p = ch_sub.add_parser("verify", help="exhaustively verify all subcorrelations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--broadcast-y", action="store_true")
    p.set_defaults(func=_cmd_chain_verify)
    p = ch_sub.add_parser("decompose", help="parse a measurement into sentences")
    p.add_argument("--measurement", required=True)
    p.set_defaults(func=_cmd_chain_decompose)

    p = sub.add_parser("reproduce", help="canned demonstrations with built-in expectations")
    p.add_argument("figure", choices=["fig1", "fig2"])
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
