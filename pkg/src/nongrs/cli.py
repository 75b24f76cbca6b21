"""Batch command-line front end.

One request per process.  All primary output goes to stdout; diagnostics
(including wall time) go to stderr.  Exit status: 0 for pass/success, 1
when a produced certificate has a fail verdict, 2 for usage errors and
exceeded size guards.

JSON output is minified with sorted keys and contains no volatile fields,
so identical requests (and seeds) produce byte-identical bytes.  The env
var NONGRS_THREADS caps worker parallelism; the desk-scale kernels here
run single-threaded, which trivially respects any cap >= 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field as dc_field

from . import __version__
from .codes import Certificate, GuardError, LinearCode
from .constructions import (
    CONDITION_NAMES,
    ConstructionParams,
    EvalSet,
    admissible_deltas,
    check_condition,
    code,
    extension_vector,
    generator_matrix,
    mds_condition_names,
    parity_matrix,
    search_eval_sets,
)
from .fields import binary_field, field_from_spec, prime_field
from .hyperovals import enumerate_o_monomials, is_o_monomial
from .linalg import Matrix, row_space_equal

VERBS = ("build", "verify", "check", "deltas", "search", "omonomial", "covering")
OUTPUT_FORMATS = ("json", "csv", "pretty")


def worker_limit() -> int:
    """Parallelism cap from NONGRS_THREADS (default 1)."""
    raw = os.environ.get("NONGRS_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"NONGRS_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise ValueError("NONGRS_THREADS must be >= 1")
    return n


@dataclass
class CommandRequest:
    verb: str
    params: dict
    output: str = "json"
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "verb": self.verb,
            "params": self.params,
            "output": self.output,
            "seed": self.seed,
        }

    @staticmethod
    def from_dict(d: dict) -> "CommandRequest":
        return CommandRequest(d["verb"], d["params"], d.get("output", "json"), d.get("seed"))


@dataclass
class RunReport:
    request: CommandRequest
    certificates: list[Certificate] = dc_field(default_factory=list)
    results: dict = dc_field(default_factory=dict)
    version: str = __version__
    wall_time: float | None = None  # diagnostics only, never serialized

    @property
    def overall(self) -> str:
        return "fail" if any(c.verdict == "fail" for c in self.certificates) else "pass"

    def to_dict(self) -> dict:
        return {
            "request": self.request.to_dict(),
            "certificates": [c.to_dict() for c in self.certificates],
            "results": self.results,
            "overall": self.overall,
            "version": self.version,
        }

    @staticmethod
    def from_dict(d: dict) -> "RunReport":
        return RunReport(
            CommandRequest.from_dict(d["request"]),
            [Certificate.from_dict(c) for c in d["certificates"]],
            d.get("results", {}),
            d.get("version", __version__),
        )


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _comma_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _comma_names(text: str) -> list[str]:
    return [x.strip().lower() for x in text.split(",") if x.strip()]


def _add_field_flags(sp):
    sp.add_argument("--q", type=int, help="prime field modulus")
    sp.add_argument("--gf2m", type=int, metavar="M", help="binary extension degree")
    sp.add_argument("--poly", type=int, help="irreducible polynomial bitmask (with --gf2m)")


def _add_construction_flags(sp, with_family=True):
    if with_family:
        sp.add_argument("--family", choices=("crk", "c1", "c2"), help="code family")
    _add_field_flags(sp)
    sp.add_argument("--alphas", type=_comma_ints, help="evaluation points, comma-separated")
    sp.add_argument("--k", type=int, help="code dimension")
    sp.add_argument("--r", type=int, help="gap index (1 <= r <= k-1)")
    sp.add_argument("--delta", type=int, help="extra column parameter (family c2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nongrs",
        description="Construct and certify MDS evaluation codes and hyperoval tables.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=OUTPUT_FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    parser.add_argument("--output", choices=OUTPUT_FORMATS,
                        default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_verb(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    sp = add_verb("build", "emit generator and parity-check matrices")
    _add_construction_flags(sp)

    sp = add_verb("verify", "run MDS / distance / non-GRS / parity checks")
    _add_construction_flags(sp)
    sp.add_argument(
        "--checks", type=_comma_names, default=None,
        help="subset of: mds,distance,nongrs,parity (default all)",
    )

    sp = add_verb("check", "evaluate named subset conditions")
    _add_construction_flags(sp, with_family=False)
    sp.add_argument(
        "--which", type=_comma_names, default=None,
        help=f"conditions from: {','.join(CONDITION_NAMES)} (default: the family's MDS set)",
    )

    sp = add_verb("deltas", "sweep delta for the two-column extension")
    _add_construction_flags(sp, with_family=False)

    sp = add_verb("search", "search evaluation sets passing conditions")
    _add_field_flags(sp)
    sp.add_argument("--n", type=int, help="number of evaluation points")
    sp.add_argument("--k", type=int, help="code dimension")
    sp.add_argument("--r", type=int, help="gap index")
    sp.add_argument("--strategy", choices=("consecutive", "exhaustive", "randomized"),
                    default="consecutive")
    sp.add_argument("--require", type=_comma_names, default=["star"],
                    help="delta-free conditions the sets must pass")
    sp.add_argument("--limit", type=int, default=1)

    sp = add_verb("omonomial", "o-monomial triple test")
    sp.add_argument("--m", type=int, help="extension degree (field GF(2^m))")
    sp.add_argument("--poly", type=int, help="irreducible polynomial bitmask")
    sp.add_argument("--h", type=int, help="monomial exponent")
    sp.add_argument("--enumerate", action="store_true", help="sweep all h in 1..q-2")

    sp = add_verb("covering", "covering radius of the dual + deep-hole check")
    _add_construction_flags(sp)
    return parser


def _require_flags(parser, args, names):
    missing = [f"--{n}" for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        parser.error(f"missing required flags: {', '.join(missing)}")


def _field_params(parser, args) -> dict:
    if (args.q is None) == (args.gf2m is None):
        parser.error("exactly one of --q / --gf2m is required")
    if args.q is not None:
        if args.poly is not None:
            parser.error("--poly applies to --gf2m only")
        return {"kind": "prime", "p": args.q}
    spec = {"kind": "gf2m", "m": args.gf2m}
    if args.poly is not None:
        spec["poly"] = args.poly
    return spec


def parse_request(argv) -> CommandRequest:
    """Validated request, or SystemExit(2) naming the offending flags."""
    parser = build_parser()
    args = parser.parse_args(argv)
    verb = args.verb
    params: dict = {}

    if verb in ("build", "verify", "check", "deltas", "covering"):
        required = ["alphas", "k", "r"]
        if verb in ("build", "verify", "covering"):
            required.insert(0, "family")
        family = getattr(args, "family", None)
        if verb in ("check", "deltas"):
            family = None
        missing = [f"--{n}" for n in required if getattr(args, n, None) is None]
        if args.delta is None and (
            family == "c2" or (verb == "covering" and family == "c1")
        ):
            missing.append("--delta")
        if missing:
            parser.error(f"missing required flags: {', '.join(missing)}")
        if family in ("crk", "c1") and args.delta is not None and verb != "covering":
            parser.error(f"--delta does not apply to family {family}")
        if verb == "covering" and family == "c2":
            parser.error("covering applies to families crk and c1")
        params = {
            "field": _field_params(parser, args),
            "alphas": args.alphas,
            "k": args.k,
            "r": args.r,
        }
        if family is not None:
            params["family"] = family
        if args.delta is not None:
            params["delta"] = args.delta
        if verb == "verify" and args.checks is not None:
            bad = [c for c in args.checks if c not in ("mds", "distance", "nongrs", "parity")]
            if bad:
                parser.error(f"unknown checks: {', '.join(bad)}")
            params["checks"] = args.checks
        if verb == "check" and args.which is not None:
            bad = [c for c in args.which if c not in CONDITION_NAMES]
            if bad:
                parser.error(f"unknown conditions: {', '.join(bad)}")
            params["which"] = args.which
    elif verb == "search":
        _require_flags(parser, args, ["n", "k", "r"])
        params = {
            "field": _field_params(parser, args),
            "n": args.n,
            "k": args.k,
            "r": args.r,
            "strategy": args.strategy,
            "require": args.require,
            "limit": args.limit,
        }
        bad = [c for c in args.require if c not in ("star", "star2", "star3")]
        if bad:
            parser.error(f"--require supports star,star2,star3 only; got {', '.join(bad)}")
    elif verb == "omonomial":
        _require_flags(parser, args, ["m"])
        if (args.h is None) == (not args.enumerate):
            parser.error("exactly one of --h / --enumerate is required")
        params = {"m": args.m}
        if args.poly is not None:
            params["poly"] = args.poly
        if args.h is not None:
            params["h"] = args.h
        else:
            params["enumerate"] = True
    output = getattr(args, "output", None) or "json"
    return CommandRequest(verb, params, output, getattr(args, "seed", None))


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def _construction(params: dict, family: str) -> ConstructionParams:
    field = field_from_spec(params["field"])
    points = EvalSet(field, params["alphas"])
    delta = field.element(params["delta"]) if family == "c2" else None
    return ConstructionParams(family, points, params["k"], params["r"], delta)


def _parity_certificate(p: ConstructionParams) -> Certificate:
    gen = generator_matrix(p)
    closed = parity_matrix(p)
    kernel = gen.kernel_basis()
    orthogonal = all(
        all(int(x) == 0 for x in closed.vec_mul(row)) for row in gen.data
    )
    same_space = row_space_equal(closed, kernel)
    meta = p.base_params()
    meta.update(rows=closed.rows, orthogonal=orthogonal, matches_kernel=same_space)
    if orthogonal and same_space:
        return Certificate("pass", "parity", None, meta)
    return Certificate(
        "fail", "parity",
        {"orthogonal": orthogonal, "matches_kernel": same_space},
        meta,
    )


def execute(req: CommandRequest) -> RunReport:
    """Run a validated request; deterministic for a fixed request and seed."""
    worker_limit()  # validate the env cap before doing any work
    handler = {
        "build": _run_build,
        "verify": _run_verify,
        "check": _run_check,
        "deltas": _run_deltas,
        "search": _run_search,
        "omonomial": _run_omonomial,
        "covering": _run_covering,
    }[req.verb]
    return handler(req)


def _run_build(req: CommandRequest) -> RunReport:
    p = _construction(req.params, req.params["family"])
    gen = generator_matrix(p)
    par = parity_matrix(p)
    results = {
        "generator": gen.to_dict(),
        "parity": par.to_dict(),
        "length": gen.cols,
        "dimension": gen.rows,
    }
    return RunReport(req, [], results)


def _run_verify(req: CommandRequest) -> RunReport:
    p = _construction(req.params, req.params["family"])
    checks = req.params.get("checks", ["mds", "distance", "nongrs", "parity"])
    c = code(p)
    certs = []
    results = {"length": c.n, "dimension": c.k}
    for name in checks:
        if name == "mds":
            cert = c.is_mds("minors")
            cert.params.update(p.base_params())
            certs.append(cert)
        elif name == "distance":
            cert = c.is_mds("distance")
            cert.params.update(p.base_params())
            certs.append(cert)
            results["min_distance"] = c.min_distance()
        elif name == "nongrs":
            cert = c.non_grs_certificate()
            cert.params.update(p.base_params())
            certs.append(cert)
        elif name == "parity":
            certs.append(_parity_certificate(p))
    return RunReport(req, certs, results)


def _run_check(req: CommandRequest) -> RunReport:
    family = "c2" if "delta" in req.params else "c1"
    p = _construction(req.params, family)
    which = req.params.get("which", mds_condition_names(family, p.r))
    certs = [check_condition(name, p) for name in which]
    return RunReport(req, certs, {"conditions": which})


def _run_deltas(req: CommandRequest) -> RunReport:
    field = field_from_spec(req.params["field"])
    points = EvalSet(field, req.params["alphas"])
    sweep = admissible_deltas(points, req.params["k"], req.params["r"])
    results = {
        "admissible": sweep.deltas,
        "per_delta": [c.to_dict() for c in sweep.per_delta],
    }
    return RunReport(req, sweep.prerequisites, results)


def _run_search(req: CommandRequest) -> RunReport:
    field = field_from_spec(req.params["field"])
    found = search_eval_sets(
        field,
        req.params["n"],
        req.params["k"],
        req.params["r"],
        strategy=req.params["strategy"],
        required=req.params["require"],
        limit=req.params["limit"],
        seed=req.seed,
    )
    return RunReport(req, [], {"found": [list(es.values) for es in found]})


def _run_omonomial(req: CommandRequest) -> RunReport:
    m = req.params["m"]
    poly = req.params.get("poly")
    if "h" in req.params:
        field = binary_field(m, poly)
        report = is_o_monomial(field, req.params["h"])
        verdict = "pass" if report.passed else "fail"
        witness = None
        if verdict == "fail":
            witness = (
                {"triple": list(report.witness)}
                if report.witness is not None
                else {"reason": "gcd(h, q-1) != 1"}
            )
        cert = Certificate(verdict, "o-monomial", witness,
                           {"q": field.q, "h": report.h, "gcdOk": report.gcd_ok})
        return RunReport(req, [cert], {"report": report.to_dict()})
    reports = enumerate_o_monomials(m, poly)
    return RunReport(req, [], {
        "reports": [r.to_dict() for r in reports],
        "pass_set": [r.h for r in reports if r.passed],
    })


def _run_covering(req: CommandRequest) -> RunReport:
    family = req.params["family"]
    if family == "crk":
        p = _construction(
            {k: v for k, v in req.params.items() if k != "delta"}, "crk"
        )
        base = code(p)
        w = [e.value for e in extension_vector("c1", p)]
    else:
        p = _construction(req.params, "c2")
        base = code(ConstructionParams("c1", p.points, p.k, p.r))
        w = [e.value for e in extension_vector("c2", p)]
    dual = base.dual()
    radius = dual.covering_radius()
    meta = p.base_params()
    meta.update(covering_radius=radius, expected=base.k)
    radius_cert = (
        Certificate("pass", "covering-radius", None, meta)
        if radius == base.k
        else Certificate("fail", "covering-radius",
                         {"covering_radius": radius, "expected": base.k}, meta)
    )
    hole_cert = dual.is_deep_hole(w)
    hole_cert.params.update(p.base_params())
    return RunReport(req, [radius_cert, hole_cert],
                     {"covering_radius": radius, "w": w})


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def emit_report(rep: RunReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_dict(), sort_keys=True, separators=(",", ":"))
    if fmt == "csv":
        return _emit_csv(rep)
    if fmt == "pretty":
        return _emit_pretty(rep)
    raise ValueError(f"unknown output format {fmt!r}")


def _cert_rows(rep: RunReport):
    for cert in rep.certificates:
        yield cert.to_dict()
    for cert in rep.results.get("per_delta", []):
        yield cert


def _emit_csv(rep: RunReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "kind", "verdict", "witness", "params"])
    for i, cert in enumerate(_cert_rows(rep)):
        writer.writerow([
            i,
            cert["kind"],
            cert["verdict"],
            json.dumps(cert["witness"], sort_keys=True, separators=(",", ":")),
            json.dumps(cert["params"], sort_keys=True, separators=(",", ":")),
        ])
    return buf.getvalue()


def _emit_pretty(rep: RunReport) -> str:
    lines = [f"nongrs {rep.version} :: {rep.request.verb} -> {rep.overall}"]
    if rep.wall_time is not None:
        lines.append(f"wall time: {rep.wall_time:.3f}s")
    for cert in rep.certificates:
        lines.append(f"  [{cert.verdict}] {cert.kind}  {json.dumps(cert.params, sort_keys=True)}")
        if cert.witness is not None:
            lines.append(f"    witness: {json.dumps(cert.witness, sort_keys=True)}")
    for key, value in rep.results.items():
        if key == "per_delta":
            for cert in value:
                tag = cert["params"].get("delta")
                lines.append(f"  delta={tag}: {cert['verdict']}")
            continue
        lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    req = parse_request(sys.argv[1:] if argv is None else argv)
    started = time.perf_counter()
    try:
        rep = execute(req)
    except (GuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep.wall_time = time.perf_counter() - started
    sys.stdout.write(emit_report(rep, req.output))
    if req.output != "pretty":
        sys.stdout.write("\n")
    print(f"wall time: {rep.wall_time:.3f}s", file=sys.stderr)
    return 0 if rep.overall == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
