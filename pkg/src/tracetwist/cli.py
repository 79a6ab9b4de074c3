"""Command-line front end: classification, orbits, scans, cosine relations.

Data goes to standard output (JSON, and CSV for point clouds); diagnostics
go to standard error.  Exit codes: 0 success, 1 a built-in exactness check
failed, 2 invalid input.  Exact rationals cross the process boundary as
"p/q" strings so no precision is lost; exact-mode output contains no
floating-point literals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .orbits import (
    density_scan,
    enumerate_orbit,
    exceptional_family,
    filtration,
    minimality_criterion,
)
from .rep import exceptional_representation, is_in_F, trace_coordinates
from .scalars import EXACT, FLOAT, MixedModeError, NeedsFloatModeError, Surd
from .surface import BoundaryTraces, TracePoint, classify, kappa
from .twists import TwistWord, apply_word
from .trigdioph import bounded_search, conway_jones_list, eval_exact


@dataclass
class RunConfig:
    """Validated inputs of one CLI invocation."""

    command: str
    mode: str = EXACT
    traces: tuple | None = None
    point: tuple | None = None
    word: str | None = None
    eps: float = 0.1
    budget: int = 10_000
    max_q: int = 15
    seed: int = 0
    out: str | None = None
    n: int = 4
    grid: tuple[int, int] = (24, 24)
    coeffs: tuple = (1, -1)
    max_terms: int = 4
    t: Fraction = Fraction(1, 12)
    verify_list: bool = False
    search: bool = False
    log_words: bool = False


def _parse_scalar(text: str, mode: str):
    value = Fraction(text.strip())
    return value if mode == EXACT else float(value)


def _parse_csv_values(text: str, mode: str, expect: int, what: str) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != expect:
        raise ValueError(f"{what} needs {expect} comma-separated values, got {len(parts)}")
    return tuple(_parse_scalar(p, mode) for p in parts)


def _fmt(value):
    """JSON-ready form: Fractions as 'p/q' strings, floats as numbers."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Surd):
        if value.is_rational:
            return str(value.as_fraction())
        return {"a": str(value.a), "b": str(value.b), "r": str(value.r)}
    return value


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _load_config_file(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def cmd_classify(cfg: RunConfig) -> int:
    B = BoundaryTraces(*cfg.traces)
    component, interval = classify(B)
    payload = {
        "component": component.value,
        "S": None if interval is None else [_fmt(interval[0]), _fmt(interval[1])],
        "sigma_x": _fmt(B.sigma_x),
        "sigma_y": _fmt(B.sigma_y),
        "sigma_z": _fmt(B.sigma_z),
        "s_const": _fmt(B.s_const),
    }
    if cfg.mode == EXACT:
        payload["minimality_criterion"] = minimality_criterion(B)
    _emit(payload)
    return 0


def _orbit_csv(points, mode: str) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "z"])
    keyed = sorted(points, key=lambda p: (float(p.x), float(p.y), float(p.z)))
    for p in keyed:
        if mode == EXACT:
            writer.writerow([str(p.x), str(p.y), str(p.z)])
        else:
            writer.writerow([repr(p.x), repr(p.y), repr(p.z)])
    return buf.getvalue()


def cmd_orbit(cfg: RunConfig) -> int:
    B = BoundaryTraces(*cfg.traces)
    p0 = TracePoint(*cfg.point)
    if cfg.word:
        p0 = apply_word(B, p0, TwistWord.parse(cfg.word))
    result = enumerate_orbit(B, p0, cfg.budget, log_words=cfg.log_words)
    csv_text = _orbit_csv(result.points, cfg.mode)
    summary = {
        "status": result.status,
        "cardinality": result.cardinality,
        "budget": cfg.budget,
    }
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv_text)
        _emit(summary)
    else:
        sys.stdout.write(csv_text)
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return 0


def cmd_scan(cfg: RunConfig) -> int:
    B = BoundaryTraces(*cfg.traces)
    p0 = TracePoint(*cfg.point)
    report = density_scan(B, p0, cfg.eps, cfg.budget, grid=cfg.grid, seed=cfg.seed)
    _emit(
        {
            "covered_fraction": report.covered_fraction,
            "truncated": report.truncated,
            "orbit_size": report.orbit_size,
            "grid_size": report.grid_size,
            "eps": cfg.eps,
            "budget": cfg.budget,
            "seed": cfg.seed,
        }
    )
    return 0


def cmd_filtration(cfg: RunConfig) -> int:
    level = filtration(cfg.n)
    elements = sorted(level.elements, key=lambda a: a.two_cos())
    _emit(
        {
            "n": cfg.n,
            "elements": [
                {"p": a.p, "q": a.q, "two_cos": a.two_cos()} for a in elements
            ],
        }
    )
    return 0


def cmd_cj(cfg: RunConfig) -> int:
    if cfg.verify_list:
        rows = []
        ok = True
        for idx, rel in enumerate(conway_jones_list(cfg.t), start=1):
            residual = eval_exact(rel)
            zero = residual.is_zero()
            ok = ok and zero
            rows.append(
                {
                    "family": idx,
                    "identity": rel.describe(),
                    "residual": "0" if zero else "nonzero",
                }
            )
        _emit(rows)
        return 0 if ok else 1
    if cfg.search:
        found = bounded_search(cfg.max_q, cfg.max_terms, cfg.coeffs)
        rows = []
        for rel, cls in found:
            rows.append(
                {
                    "relation": rel.describe(),
                    "value": _fmt(rel.rhs),
                    "kind": cls.kind,
                    "family": cls.family,
                    "scale": _fmt(cls.scale) if cls.scale is not None else None,
                    "t": _fmt(cls.t) if cls.t is not None else None,
                }
            )
        _emit(rows)
        return 0
    raise ValueError("cj requires --verify-list or --search")


def cmd_example5(cfg: RunConfig) -> int:
    """Built-in end-to-end self-test on the explicit finite-orbit example."""
    checks: dict[str, bool] = {}
    rep = exceptional_representation()
    boundary, point = trace_coordinates(rep)
    checks["trace_D"] = rep.D.trace() == Fraction(-7, 4)
    checks["boundary"] = (boundary.a, boundary.b, boundary.c, boundary.d) == (
        1,
        1,
        Fraction(7, 4),
        Fraction(-7, 4),
    )
    checks["point"] = (point.x, point.y, point.z) == (-1, 0, 0)
    checks["kappa_zero"] = kappa(boundary, point) == 0
    checks["in_family"] = is_in_F(Fraction(1), Fraction(7, 4))
    family_B, special = exceptional_family(Fraction(1), Fraction(7, 4))
    checks["family_boundary_matches"] = family_B == boundary
    result = enumerate_orbit(boundary, point, budget=10_000)
    checks["orbit_finite"] = result.is_finite
    checks["orbit_is_special"] = result.points == special
    ok = all(checks.values())
    _emit(
        {
            "boundary": [_fmt(t) for t in (boundary.a, boundary.b, boundary.c, boundary.d)],
            "point": [_fmt(v) for v in point.as_tuple()],
            "trace_D": _fmt(rep.D.trace()),
            "orbit": [[_fmt(v) for v in p.as_tuple()] for p in sorted(
                result.points, key=lambda p: float(p.x)
            )],
            "orbit_status": result.status,
            "checks": checks,
            "ok": ok,
        }
    )
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracetwist",
        description="Twist dynamics on the four-holed-sphere character variety",
    )
    parser.add_argument("--config", help="flat key=value config file; flags override")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        for flag, kwargs in flags.items():
            p.add_argument(f"--{flag.replace('_', '-')}", **kwargs)
        return p

    add(
        "classify",
        "component type, attainable x-interval, and sigma invariants",
        traces={"help": "a,b,c,d as rationals"},
        mode={"choices": [EXACT, FLOAT]},
    )
    add(
        "orbit",
        "breadth-first orbit closure; CSV points plus JSON summary",
        traces={"help": "a,b,c,d"},
        point={"help": "x,y,z"},
        budget={"type": int},
        mode={"choices": [EXACT, FLOAT]},
        word={"help": "twist word applied to the start point first, e.g. XYz"},
        out={"help": "CSV output path (default: CSV on stdout)"},
        log_words={"action": "store_true", "default": None},
    )
    add(
        "scan",
        "orbit exploration and surface-grid coverage (float mode)",
        traces={"help": "a,b,c,d"},
        point={"help": "x,y,z"},
        eps={"type": float},
        budget={"type": int},
        seed={"type": int},
        grid={"help": "m,k surface sample grid"},
    )
    add(
        "cj",
        "cosine-relation toolkit: verify the built-in list or search",
        verify_list={"action": "store_true", "default": None},
        search={"action": "store_true", "default": None},
        max_q={"type": int},
        max_terms={"type": int},
        coeffs={"help": "comma-separated rational coefficients"},
        t={"help": "parameter (of pi) for the three-term family"},
    )
    add(
        "filtration",
        "trace levels with twist period <= n",
        n={"type": int},
    )
    add("example5", "built-in exceptional-orbit example with exact self-checks")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    file_values = _load_config_file(args.config) if args.config else {}

    def pick(name, cast=None, default=None):
        value = getattr(args, name, None)
        if value is None and name in file_values:
            value = file_values[name]
        if value is None:
            return default
        return cast(value) if cast is not None and isinstance(value, str) else value

    mode = pick("mode", str, EXACT)
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"mode must be {EXACT!r} or {FLOAT!r}")
    cfg = RunConfig(command=args.command, mode=mode)
    if args.command == "scan":
        cfg.mode = FLOAT
    traces = pick("traces")
    if traces is not None:
        cfg.traces = _parse_csv_values(traces, cfg.mode, 4, "traces")
    point = pick("point")
    if point is not None:
        cfg.point = _parse_csv_values(point, cfg.mode, 3, "point")
    cfg.eps = pick("eps", float, cfg.eps)
    cfg.budget = pick("budget", int, cfg.budget)
    cfg.max_q = pick("max_q", int, cfg.max_q)
    cfg.max_terms = pick("max_terms", int, cfg.max_terms)
    cfg.seed = pick("seed", int, cfg.seed)
    cfg.word = pick("word")
    cfg.out = pick("out")
    cfg.n = pick("n", int, cfg.n)
    grid = pick("grid")
    if grid is not None:
        m, k = (int(v) for v in str(grid).split(","))
        cfg.grid = (m, k)
    coeffs = pick("coeffs")
    if coeffs is not None:
        cfg.coeffs = tuple(Fraction(c) for c in str(coeffs).split(","))
    t = pick("t")
    if t is not None:
        cfg.t = Fraction(str(t))
    cfg.verify_list = bool(pick("verify_list", default=False))
    cfg.search = bool(pick("search", default=False))
    cfg.log_words = bool(pick("log_words", default=False))
    return cfg


_COMMANDS = {
    "classify": cmd_classify,
    "orbit": cmd_orbit,
    "scan": cmd_scan,
    "cj": cmd_cj,
    "filtration": cmd_filtration,
    "example5": cmd_example5,
}


def _require(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ValueError(f"--{name.replace('_', '-')} is required for {cfg.command}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if cfg.command in ("classify", "orbit", "scan"):
            _require(cfg, "traces")
        if cfg.command in ("orbit", "scan"):
            _require(cfg, "point")
        return _COMMANDS[cfg.command](cfg)
    except (ValueError, MixedModeError, NeedsFloatModeError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
