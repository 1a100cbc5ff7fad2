"""Command-line front end: read a JSON job, run it, print a JSON report.

Exit codes: 0 success, 1 input error, 2 hypothesis unmet, 3 resource ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .algebra.literals import format_scalar, parse_scalar
from .algebra.rings import DOMAINS
from .algebra.twist import DEFAULT_STABILITY_BOUND, Twist, genpow, make_twist
from .dynamics import (
    DEFAULT_MAX_COEFFS,
    MODE_THEOREM,
    formal_orbit,
    formal_power,
    verify_periodicity,
)
from .errors import (
    DomainMismatchError,
    HypothesisError,
    LiteralSyntaxError,
    ResourceError,
    TwistError,
)
from .laws import law_suite
from .skewpoly import SkewPoly, compose, eval_via_remainder, poly_eval

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_RESOURCE = 0, 1, 2, 3

COMMANDS = ("eval", "compose", "power", "genpow", "orbit", "certify-periodic", "lawcheck")
_REQUIRED = {
    "eval": ("poly", "point"),
    "compose": ("poly", "poly2"),
    "power": ("poly",),
    "genpow": ("point",),
    "orbit": ("poly", "point"),
    "certify-periodic": ("poly", "point"),
    "lawcheck": (),
}


class JobError(ValueError):
    """Malformed or incomplete job document."""


@dataclass
class JobSpec:
    domain: dict
    command: str
    poly: list | None = None
    poly2: list | None = None
    point: str | None = None
    params: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, doc) -> JobSpec:
        if not isinstance(doc, dict):
            raise JobError("job must be a JSON object")
        unknown = set(doc) - {"domain", "command", "poly", "poly2", "point", "params"}
        if unknown:
            raise JobError(f"unknown job fields: {sorted(unknown)}")
        if "command" not in doc or doc["command"] not in COMMANDS:
            raise JobError(f"command must be one of {list(COMMANDS)}")
        if not isinstance(doc.get("domain"), dict):
            raise JobError("domain descriptor (object) is required")
        spec = cls(
            domain=doc["domain"],
            command=doc["command"],
            poly=doc.get("poly"),
            poly2=doc.get("poly2"),
            point=doc.get("point"),
            params=dict(doc.get("params") or {}),
        )
        for name in _REQUIRED[spec.command]:
            if getattr(spec, name) is None:
                raise JobError(f"command {spec.command!r} needs field {name!r}")
        return spec


def _map_descriptor(desc, what: str) -> tuple[str, str | None]:
    if desc is None:
        return ("identity" if what == "sigma" else "zero"), None
    if isinstance(desc, str):
        return desc, None
    if isinstance(desc, dict) and "kind" in desc:
        return desc["kind"], desc.get("u" if what == "sigma" else "c")
    raise JobError(f"bad {what} descriptor {desc!r}")


def build_twist(desc: dict) -> Twist:
    kind = desc.get("kind")
    if kind not in DOMAINS:
        raise JobError(f"domain kind must be one of {sorted(DOMAINS)}")
    dom = DOMAINS[kind]
    sigma, u = _map_descriptor(desc.get("sigma"), "sigma")
    delta, c = _map_descriptor(desc.get("delta"), "delta")
    u = parse_scalar(dom, u) if u is not None else None
    c = parse_scalar(dom, c) if c is not None else None
    return make_twist(dom, sigma, delta, u=u, c=c)


def _int_param(params: dict, name: str, default=None, minimum: int = 0) -> int:
    value = params.get(name, default)
    if value is None:
        raise JobError(f"parameter {name!r} is required")
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise JobError(f"parameter {name!r} must be an integer >= {minimum}")
    return value


def _poly_json(f: SkewPoly) -> dict:
    deg = f.degree
    return {"coeffs": f.to_json(), "degree": deg if deg >= 0 else None}


def run_job(spec: JobSpec, seed: int | None = None, max_coeffs: int | None = None) -> dict:
    """Execute one job and return the report. Raises library errors unchanged."""
    params = dict(spec.params)
    if seed is not None:
        params["seed"] = seed
    if max_coeffs is not None:
        params["max_coeffs"] = max_coeffs
    ceiling = _int_param(params, "max_coeffs", DEFAULT_MAX_COEFFS, minimum=1)
    tw = build_twist(spec.domain)
    dom = tw.domain
    f = SkewPoly.from_json(tw, spec.poly) if spec.poly is not None else None
    g = SkewPoly.from_json(tw, spec.poly2) if spec.poly2 is not None else None
    a = parse_scalar(dom, spec.point) if spec.point is not None else None

    report = {"command": spec.command, "domain": tw.describe(), "input": {}}
    if f is not None:
        report["input"]["poly"] = _poly_json(f)
    if g is not None:
        report["input"]["poly2"] = _poly_json(g)
    if a is not None:
        report["input"]["point"] = format_scalar(a)
    report["input"]["params"] = {k: params[k] for k in sorted(params)}

    cmd = spec.command
    if cmd == "eval":
        value = poly_eval(f, a)
        result = {
            "value": format_scalar(value),
            "value_via_remainder": format_scalar(eval_via_remainder(f, a)),
        }
    elif cmd == "compose":
        result = _poly_json(compose(f, g))
    elif cmd == "power":
        n = _int_param(params, "n")
        result = _poly_json(formal_power(f, n, ceiling))
    elif cmd == "genpow":
        n = _int_param(params, "n")
        result = {"value": format_scalar(genpow(tw, a, n))}
    elif cmd == "orbit":
        steps = _int_param(params, "steps")
        sb = _int_param(params, "stability_bound", DEFAULT_STABILITY_BOUND, minimum=1)
        result = formal_orbit(f, a, steps, sb, ceiling).to_json()
    elif cmd == "certify-periodic":
        r = _int_param(params, "r", minimum=1)
        steps = _int_param(params, "steps", minimum=1)
        sb = _int_param(params, "stability_bound", DEFAULT_STABILITY_BOUND, minimum=1)
        cert = verify_periodicity(f, a, r, steps, sb, ceiling)
        result = cert.to_json()
        if params.get("strict") and cert.mode != MODE_THEOREM:
            err = HypothesisError("theorem hypotheses do not hold for this (f, a, r)")
            err.report = {**report, "result": result}
            raise err
    else:
        if "seed" not in params:
            raise JobError("lawcheck is randomized and needs an explicit 'seed' parameter")
        seed_v = _int_param(params, "seed")
        trials = _int_param(params, "trials", 100, minimum=1)
        result = law_suite(tw, trials, seed_v)
    report["result"] = result
    return report


def _error_report(kind: str, exc: Exception) -> dict:
    body = {"type": kind, "message": str(exc)}
    report = getattr(exc, "report", None)
    out = {"error": body}
    if report is not None:
        out.update(report)
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="oredyn", description="Run a skew-polynomial dynamics job (JSON in, JSON out)."
    )
    parser.add_argument("--job", help="job file (default: read stdin)")
    parser.add_argument("--seed", type=int, help="override params.seed")
    parser.add_argument("--max-coeffs", type=int, help="coefficient ceiling for formal powers")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON report")
    args = parser.parse_args(argv)

    def emit(doc: dict):
        sys.stdout.write(json.dumps(doc, indent=2 if args.pretty else None) + "\n")

    try:
        if args.job:
            with open(args.job, encoding="utf-8") as fh:
                doc = json.load(fh)
        else:
            doc = json.load(sys.stdin)
        spec = JobSpec.from_json(doc)
        report = run_job(spec, seed=args.seed, max_coeffs=args.max_coeffs)
    except HypothesisError as exc:
        print(f"oredyn: hypothesis unmet: {exc}", file=sys.stderr)
        emit(_error_report("hypothesis", exc))
        return EXIT_HYPOTHESIS
    except ResourceError as exc:
        print(f"oredyn: resource ceiling: {exc}", file=sys.stderr)
        emit(_error_report("resource", exc))
        return EXIT_RESOURCE
    except (OSError, json.JSONDecodeError, JobError, TwistError, LiteralSyntaxError,
            DomainMismatchError, ZeroDivisionError, ValueError) as exc:
        print(f"oredyn: input error: {exc}", file=sys.stderr)
        emit(_error_report("input", exc))
        return EXIT_INPUT
    emit(report)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
