"""Command-line interface.

    gaspin decompose   STATE [--xcheck]
    gaspin observables STATE [--xcheck]
    gaspin overlap     STATE_A STATE_B [--xcheck]
    gaspin bell-curve  --samples N

A state is a JSON document ``{"amplitudes": [[re, im], x4], "normalize": false}``
(amplitudes ordered c00, c01, c10, c11; ``-`` reads standard input) or is
given inline as eight comma-separated reals ``re00,im00,re01,im01,...``.
Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from gaspin import msta2, oracle, schmidt, spinor1
from gaspin.errors import DomainError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2
NORM_TOL = 1e-10


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class StateSpec:
    amplitudes: tuple[complex, complex, complex, complex]
    normalize: bool = False

    def resolved(self, force_normalize: bool = False) -> np.ndarray:
        v = np.array(self.amplitudes, dtype=complex)
        n = float(np.linalg.norm(v))
        if n == 0.0:
            raise DomainError("state has no nonzero amplitude")
        if self.normalize or force_normalize:
            v = v / n
        return v

    def echo(self) -> list[list[float]]:
        return [[c.real, c.imag] for c in self.amplitudes]


def parse_inline(text: str) -> StateSpec:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse amplitudes {text!r}: {exc}") from None
    if len(vals) != 8:
        raise UsageError(f"expected 8 comma-separated reals, got {len(vals)}")
    return _spec_from_pairs([vals[i : i + 2] for i in range(0, 8, 2)], False)


def parse_document(text: str, source: str = "<input>") -> StateSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "amplitudes" not in doc:
        raise UsageError(f"{source}: expected an object with an 'amplitudes' field")
    normalize = doc.get("normalize", False)
    if not isinstance(normalize, bool):
        raise UsageError(f"{source}: 'normalize' must be true or false")
    return _spec_from_pairs(doc["amplitudes"], normalize, source)


def _spec_from_pairs(pairs, normalize: bool, source: str = "<input>") -> StateSpec:
    if not isinstance(pairs, list) or len(pairs) != 4:
        raise UsageError(f"{source}: 'amplitudes' must hold 4 [re, im] pairs")
    amps = []
    for p in pairs:
        if (
            not isinstance(p, (list, tuple))
            or len(p) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in p)
        ):
            raise UsageError(f"{source}: amplitude {p!r} is not a [re, im] pair")
        if not all(math.isfinite(x) for x in p):
            raise UsageError(f"{source}: amplitude {p!r} is not finite")
        amps.append(complex(float(p[0]), float(p[1])))
    return StateSpec(tuple(amps), normalize)


def load_state(path: str | None, inline: str | None) -> StateSpec:
    if (path is None) == (inline is None):
        raise UsageError("give exactly one of a state file or inline amplitudes")
    if inline is not None:
        return parse_inline(inline)
    if path == "-":
        return parse_document(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read(), path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _require_unit(v: np.ndarray) -> None:
    n = float(np.vdot(v, v).real)
    if abs(n - 1.0) >= NORM_TOL:
        raise DomainError(f"state is not normalized (norm^2 = {n:.12g}); use --normalize")


# -- reports ---------------------------------------------------------------


def _num(x: float) -> float:
    v = float(f"{float(x):.12g}")
    return v + 0.0  # drop negative zero


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    return _num(obj)


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def render(record: dict, fmt: str) -> str:
    record = _clean(record)
    if fmt == "structured":
        return json.dumps(record, indent=2) + "\n"
    rows = list(_flatten(record))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        w.writerows((k, _fmt(v)) for k, v in rows)
        return buf.getvalue()
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in rows)


def _observable_dict(m: msta2.TwoParticleMV) -> dict:
    return {lab.replace(" ", ""): float(v) for lab, v in zip(msta2.LABELS, m.coefficients)}


# -- commands --------------------------------------------------------------


def cmd_decompose(spec: StateSpec, normalize: bool = False, xcheck: bool = False) -> dict:
    c = spec.resolved(normalize)
    f = schmidt.decompose(*c)
    recon = schmidt.reconstruct(f)
    record = {
        "command": "decompose",
        "input": {"amplitudes": spec.echo(), "normalize": spec.normalize or normalize},
        "result": {
            "rho": f.rho,
            "chi": f.chi,
            "alpha": f.alpha,
            "tau": f.tau,
            "theta1": f.theta1,
            "phi1": f.phi1,
            "theta2": f.theta2,
            "phi2": f.phi2,
            "m1": f.m1,
            "m2": f.m2,
        },
        "reconstruction_residual": float(np.max(np.abs(recon - c))),
    }
    if xcheck:
        m = oracle.schmidt_coefficients(c)
        assembled = msta2.to_complex4(schmidt.assemble(f))
        record["xcheck"] = {
            "oracle_m1": m[0],
            "oracle_m2": m[1],
            "m1_residual": abs(f.m1 - m[0]),
            "m2_residual": abs(f.m2 - m[1]),
            "rotor_form_residual": float(np.max(np.abs(assembled - c))),
        }
    return record


def cmd_observables(spec: StateSpec, normalize: bool = False, xcheck: bool = False) -> dict:
    c = spec.resolved(normalize)
    _require_unit(c)
    psi = msta2.from_complex4(*c)
    obs_e, obs_j = msta2.observable_E(psi), msta2.observable_J(psi)
    a, b, corr = msta2.density_coefficients(psi)
    p1 = msta2.reduced_polarization(psi, 1)
    p2 = msta2.reduced_polarization(psi, 2)
    record = {
        "command": "observables",
        "input": {"amplitudes": spec.echo(), "normalize": spec.normalize or normalize},
        "result": {
            "psiEpsi": _observable_dict(obs_e),
            "psiJpsi": _observable_dict(obs_j),
            "polarization_1": p1.tolist(),
            "polarization_2": p2.tolist(),
            "a": a.tolist(),
            "b": b.tolist(),
            "c": corr.tolist(),
        },
    }
    if xcheck:
        rho = oracle.density_matrix(c)
        o1 = oracle.bloch_vector(oracle.partial_trace(rho, 1))
        o2 = oracle.bloch_vector(oracle.partial_trace(rho, 2))
        rebuilt = oracle.density_from_coefficients(a, b, corr)
        record["xcheck"] = {
            "oracle_polarization_1": o1.tolist(),
            "oracle_polarization_2": o2.tolist(),
            "polarization_1_residual": float(np.max(np.abs(p1 - o1))),
            "polarization_2_residual": float(np.max(np.abs(p2 - o2))),
            "density_residual": float(np.max(np.abs(rebuilt - rho))),
        }
    return record


def cmd_overlap(
    spec_a: StateSpec, spec_b: StateSpec, normalize: bool = False, xcheck: bool = False
) -> dict:
    ca, cb = spec_a.resolved(normalize), spec_b.resolved(normalize)
    _require_unit(ca)
    _require_unit(cb)
    p = msta2.overlap_probability(msta2.from_complex4(*ca), msta2.from_complex4(*cb))
    record = {
        "command": "overlap",
        "input": {
            "a": {"amplitudes": spec_a.echo(), "normalize": spec_a.normalize or normalize},
            "b": {"amplitudes": spec_b.echo(), "normalize": spec_b.normalize or normalize},
        },
        "result": {"probability": p},
    }
    if xcheck:
        q = oracle.overlap(ca, cb)
        record["xcheck"] = {"oracle_probability": q, "residual": abs(p - q)}
    return record


def bell_curve(samples: int) -> list[tuple[float, float]]:
    """Joint-measurement probabilities on the singlet for spin axes at angle theta.

    Particle 1 is measured along Is3 and particle 2 along a direction rotated
    by theta in the Is1-Is3 plane; each row is an overlap evaluated on the
    multivector observables.
    """
    if samples < 2:
        raise UsageError("bell-curve needs at least 2 samples")
    psi = msta2.singlet()
    up = spinor1.spinor_theta_phi(0.0, 0.0)
    rows = []
    for n in range(samples):
        theta = math.pi * n / (samples - 1)
        phi = msta2.product_state(up, spinor1.spinor_theta_phi(theta, 0.0))
        rows.append((theta, msta2.overlap_probability(psi, phi)))
    return rows


def render_curve(rows, fmt: str, xcheck: bool) -> str:
    header = ["theta", "probability"]
    table = []
    for theta, p in rows:
        row = [_num(theta), _num(p)]
        if xcheck:
            closed = 0.25 * (1.0 - math.cos(theta))
            row += [_num(closed), _num(abs(p - closed))]
        table.append(row)
    if xcheck:
        header += ["closed_form", "residual"]
    if fmt == "structured":
        return json.dumps({"command": "bell-curve", "rows": [dict(zip(header, r)) for r in table]}, indent=2) + "\n"
    if fmt == "text":
        lines = ["  ".join(f"{h:>20}" for h in header)]
        lines += ["  ".join(f"{_fmt(v):>20}" for v in r) for r in table]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows([_fmt(v) for v in r] for r in table)
    return buf.getvalue()


# -- entry point -----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: usage error: {message}\n")
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--normalize", action="store_true", help="renormalize input states")
    common.add_argument("--xcheck", action="store_true", help="append oracle comparisons")

    parser = _Parser(prog="gaspin", description="Two-qubit states in geometric algebra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("decompose", "Schmidt decomposition"), ("observables", "observables and reduced states")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("state", nargs="?", help="state file (JSON), or - for stdin")
        p.add_argument("--amplitudes", help="inline state: 8 comma-separated reals")
        p.add_argument("--format", choices=("text", "structured", "csv"), default="structured")

    p = sub.add_parser("overlap", parents=[common], help="overlap probability of two states")
    p.add_argument("states", nargs="*", metavar="STATE", help="two state files")
    p.add_argument("--amplitudes-a", help="inline first state")
    p.add_argument("--amplitudes-b", help="inline second state")
    p.add_argument("--format", choices=("text", "structured", "csv"), default="structured")

    p = sub.add_parser("bell-curve", parents=[common], help="singlet joint-measurement curve")
    p.add_argument("--samples", type=int, default=181)
    p.add_argument("--format", choices=("text", "structured", "csv"), default="csv")
    return parser


def _overlap_specs(args) -> tuple[StateSpec, StateSpec]:
    files = list(args.states)
    if len(files) > 2:
        raise UsageError("overlap takes at most two state files")
    a = args.amplitudes_a
    b = args.amplitudes_b
    spec_a = load_state(files.pop(0) if a is None and files else None, a)
    spec_b = load_state(files.pop(0) if b is None and files else None, b)
    if files:
        raise UsageError("too many state arguments")
    return spec_a, spec_b


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decompose":
            out = render(cmd_decompose(load_state(args.state, args.amplitudes), args.normalize, args.xcheck), args.format)
        elif args.command == "observables":
            out = render(cmd_observables(load_state(args.state, args.amplitudes), args.normalize, args.xcheck), args.format)
        elif args.command == "overlap":
            spec_a, spec_b = _overlap_specs(args)
            out = render(cmd_overlap(spec_a, spec_b, args.normalize, args.xcheck), args.format)
        else:
            out = render_curve(bell_curve(args.samples), args.format, args.xcheck)
    except UsageError as exc:
        sys.stderr.write(f"gaspin {args.command}: usage error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"gaspin {args.command}: domain error: {exc}\n")
        return EXIT_DOMAIN
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
