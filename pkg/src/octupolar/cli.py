"""Command-line interface: spectra, surface sweeps, and algebra reports."""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
import tempfile
from dataclasses import dataclass

from .errors import (
    DegenerateConfigurationError,
    DomainError,
    NumericalFailureError,
    ParameterError,
)
from .params import OctupolarParams, PolarPoint, admissible, build_tensor, polar_to_params
from .resultants import echar_poly, resultant_closed_form, resultant_via_macaulay
from .spectra import KIND_MAXIMUM, SolverConfig, z_eigenpairs
from .surfaces import cross_section, sample_disk

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

JSON_DIGITS = 17
CSV_DIGITS = 9

CSV_HEADER = "alpha0,beta3,rho,chi,dome_alpha2,sepa_alpha2,flags"

_ANGLE_RE = re.compile(r"([+-]?)(\d+)?pi(?:/(\d+))?\Z")


@dataclass(frozen=True)
class RunConfig:
    """Validated options for one CLI invocation."""

    command: str
    params: OctupolarParams | None = None
    grid: tuple[int, int] | None = None
    xsection: float | None = None
    n: int = 100
    tol: float = 1e-11
    seed: int = 0
    fmt: str = "json"
    output: str | None = None


def parse_angle(text: str) -> float:
    """Angle in radians from a decimal literal or a pi token like -pi/2."""
    t = text.strip().replace(" ", "")
    m = _ANGLE_RE.match(t)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        num = int(m.group(2)) if m.group(2) else 1
        den = int(m.group(3)) if m.group(3) else 1
        if den == 0:
            raise ValueError(f"invalid angle {text!r}")
        return sign * num * math.pi / den
    return float(t)


def _parse_params(text: str) -> OctupolarParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected alpha0,beta3,alpha2 but got {text!r}")
    return OctupolarParams(float(parts[0]), float(parts[1]), float(parts[2]))


def _parse_polar(text: str) -> PolarPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected rho,chi but got {text!r}")
    return PolarPoint(float(parts[0]), parse_angle(parts[1]))


def _parse_grid(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise ValueError(f"expected RxC but got {text!r}")
    return int(parts[0]), int(parts[1])


def _argparse_type(fn):
    """Wrap a parser so bad values become argparse errors (exit code 2)."""

    def typed(text):
        try:
            return fn(text)
        except (ValueError, ParameterError, DomainError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc

    typed.__name__ = fn.__name__
    return typed


def _fmt(x: float, digits: int) -> str:
    if x == 0.0:
        x = 0.0
    return format(float(x), f".{digits}g")


def _json_text(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value, JSON_DIGITS)
    if isinstance(value, str):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_text(v) for v in value) + "]"
    if isinstance(value, dict):
        items = ", ".join(f'"{k}": {_json_text(v)}' for k, v in value.items())
        return "{" + items + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _solver_config(cfg: RunConfig) -> SolverConfig:
    return SolverConfig(seed=cfg.seed, residual_tol=cfg.tol)


def cmd_spectra(cfg: RunConfig) -> str:
    p = cfg.params
    result = admissible(p.alpha0, p.beta3)
    if not result.inside:
        raise ParameterError(
            f"({p.alpha0}, {p.beta3}) is not admissible "
            f"(margin {result.margin:.6g} < 0)"
        )
    solver = _solver_config(cfg)
    pairs = z_eigenpairs(build_tensor(p), solver)
    n_maxima = sum(
        1
        for e in pairs
        if e.kind == KIND_MAXIMUM and e.lam > solver.positive_tol
    )
    if cfg.fmt == "csv":
        lines = ["lambda,x1,x2,x3,mu2,mu3,kind"]
        for e in pairs:
            fields = [e.lam, e.x[0], e.x[1], e.x[2], e.mu2, e.mu3]
            lines.append(
                ",".join(_fmt(v, CSV_DIGITS) for v in fields) + f",{e.kind}"
            )
        return "\n".join(lines) + "\n"
    payload = {
        "eigenpairs": [
            {
                "lambda": e.lam,
                "x": [float(v) for v in e.x],
                "mu2": e.mu2,
                "mu3": e.mu3,
                "kind": e.kind,
            }
            for e in pairs
        ],
        "summary": {
            "max_lambda": max(e.lam for e in pairs),
            "n_maxima": n_maxima,
        },
    }
    return _json_text(payload) + "\n"


def cmd_algebra(cfg: RunConfig) -> str:
    p = cfg.params
    closed = resultant_closed_form(p)
    try:
        mac = resultant_via_macaulay(p)
        degenerate = False
    except DegenerateConfigurationError:
        mac = None
        degenerate = True
    phi = echar_poly(p)
    coeffs = [float(c) for c in phi.coeffs] + [0.0] * (15 - len(phi.coeffs))
    c0_check = abs(coeffs[0] - closed * closed) / max(1.0, closed * closed)
    if cfg.fmt == "csv":
        lines = ["name,value"]
        lines.append(f"resultant_closed_form,{_fmt(closed, CSV_DIGITS)}")
        mac_text = "" if mac is None else _fmt(mac, CSV_DIGITS)
        lines.append(f"resultant_macaulay,{mac_text}")
        lines.append(f"macaulay_degenerate,{str(degenerate).lower()}")
        for k, c in enumerate(coeffs):
            lines.append(f"echar_c{k},{_fmt(c, CSV_DIGITS)}")
        lines.append(f"c0_check,{_fmt(c0_check, CSV_DIGITS)}")
        return "\n".join(lines) + "\n"
    payload = {
        "resultant_closed_form": closed,
        "resultant_macaulay": mac,
        "macaulay_degenerate": degenerate,
        "echar_coefficients": coeffs,
        "c0_check": c0_check,
    }
    return _json_text(payload) + "\n"


def _surface_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    if cfg.grid is not None:
        n_rho, n_chi = cfg.grid
        for s in sample_disk(n_rho, n_chi, _solver_config(cfg)):
            rows.append(
                {
                    "alpha0": s.alpha0,
                    "beta3": s.beta3,
                    "rho": s.rho,
                    "chi": s.chi,
                    "dome_alpha2": s.dome_alpha2,
                    "sepa_alpha2": s.sepa_alpha2,
                    "flags": sorted(s.flags),
                }
            )
        return rows
    chi = cfg.xsection
    for rho in (0.5 * k / (cfg.n - 1) for k in range(cfg.n)):
        section = cross_section(chi, rho)
        pt = PolarPoint(rho, chi)
        alpha0, beta3 = polar_to_params(pt)
        rows.append(
            {
                "alpha0": alpha0,
                "beta3": beta3,
                "rho": rho,
                "chi": pt.chi,
                "dome_alpha2": section.dome,
                "sepa_alpha2": section.sepa,
                "flags": [],
            }
        )
    return rows


def cmd_surfaces(cfg: RunConfig) -> str:
    rows = _surface_rows(cfg)
    if cfg.fmt == "csv":
        lines = [CSV_HEADER]
        for row in rows:
            fields = []
            for key in ("alpha0", "beta3", "rho", "chi", "dome_alpha2", "sepa_alpha2"):
                v = row[key]
                fields.append("" if v is None else _fmt(v, CSV_DIGITS))
            fields.append(";".join(row["flags"]))
            lines.append(",".join(fields))
        return "\n".join(lines) + "\n"
    return _json_text({"rows": rows}) + "\n"


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".octupolar-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octupolar",
        description="Spectral and phase-surface structure of octupolar tensors.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--tol", type=_argparse_type(float), default=1e-11,
                        help="residual tolerance for the eigenpair solver")
        sp.add_argument("--seed", type=_argparse_type(int), default=0,
                        help="seed for solver start points")
        sp.add_argument("--format", choices=("csv", "json"), default="json")
        sp.add_argument("--output", default=None, help="write to PATH atomically")

    def add_point(sp):
        group = sp.add_mutually_exclusive_group(required=True)
        group.add_argument("--params", type=_argparse_type(_parse_params),
                           metavar="A0,B3,A2")
        group.add_argument("--polar", type=_argparse_type(_parse_polar),
                           metavar="RHO,CHI")
        sp.add_argument("--alpha2", type=_argparse_type(float), default=0.0,
                        help="alpha2 value used with --polar")

    sp = sub.add_parser("spectra", help="Z-eigenpairs and their classification")
    add_point(sp)
    add_common(sp)

    sp = sub.add_parser("surfaces", help="dome and separatrix over the base disk")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--grid", type=_argparse_type(_parse_grid), metavar="RxC")
    group.add_argument("--xsection", type=_argparse_type(parse_angle), metavar="CHI")
    sp.add_argument("--n", type=_argparse_type(int), default=100,
                    help="number of rho samples for --xsection")
    add_common(sp)

    sp = sub.add_parser("algebra", help="resultants and E-characteristic polynomial")
    add_point(sp)
    add_common(sp)

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    params = None
    if args.command in ("spectra", "algebra"):
        if args.params is not None:
            params = args.params
        else:
            alpha0, beta3 = polar_to_params(args.polar)
            params = OctupolarParams(alpha0, beta3, args.alpha2)
    grid = getattr(args, "grid", None)
    xsection = getattr(args, "xsection", None)
    n = getattr(args, "n", 100)
    if args.command == "surfaces" and grid is None and n < 2:
        raise ParameterError(f"--n must be at least 2, got {n}")
    if args.tol <= 0.0:
        raise ParameterError(f"--tol must be positive, got {args.tol}")
    return RunConfig(
        command=args.command,
        params=params,
        grid=grid,
        xsection=xsection,
        n=n,
        tol=args.tol,
        seed=args.seed,
        fmt=args.format,
        output=args.output,
    )


# Flags whose values may start with "-"dashes (negative numbers, -pi/2);
# joined into --flag=value form so argparse does not read them as options.
_VALUE_FLAGS = ("--params", "--polar", "--grid", "--xsection",
                "--alpha2", "--tol", "--seed", "--n")


def _merge_flag_values(argv: list[str]) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_merge_flag_values(list(argv)))
    try:
        cfg = _run_config(args)
        runners = {
            "spectra": cmd_spectra,
            "surfaces": cmd_surfaces,
            "algebra": cmd_algebra,
        }
        text = runners[cfg.command](cfg)
        _write_output(cfg.output, text)
    except (ParameterError, DomainError) as exc:
        print(f"octupolar: parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except (NumericalFailureError, DegenerateConfigurationError) as exc:
        print(f"octupolar: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"octupolar: i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
