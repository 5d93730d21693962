"""Command line: ``zetasaw eval | scan | verify``.

Output is CSV (``# key=value`` header lines, a column row, then data) or a
JSON mirror.  Floats are printed with 17 significant digits so identical
configurations give byte-identical files.

Exit codes: 0 success, 1 failed check, 2 usage or domain error, 3 numeric
non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import fractal, maps, reflection, roots, specfun, transforms
from .errors import ConvergenceError, DomainError, PrecisionError
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONV = 0, 1, 2, 3


@dataclass
class RunConfig:
    N: int = 100
    s: complex = 0.5 + 0j
    terms: int = 1000
    radius: float = 0.1
    samples: int = 256
    fmt: str = "csv"
    out: str | None = None
    tol: float = 1e-10

    def __post_init__(self):
        if self.samples < 64 or self.samples & (self.samples - 1):
            raise DomainError("--samples must be a power of two >= 64")
        if not (self.radius > 0 and self.tol > 0):
            raise DomainError("--radius and --tol must be positive")

    def header(self) -> dict:
        return {
            "N": self.N,
            "s": f"{_num(self.s.real)},{_num(self.s.imag)}",
            "terms": self.terms,
            "radius": _num(self.radius),
            "samples": self.samples,
            "tol": _num(self.tol),
        }


def _num(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, Fraction)):
        return str(x)
    return format(float(x), ".17g")


def parse_complex(text: str) -> complex:
    """'re,im' or a plain real."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im' or a real number, got {text!r}")


def _int_range(text: str) -> range:
    """'a:b' or 'a..b' inclusive, or a single integer."""
    text = text.replace("..", ":")
    try:
        if ":" in text:
            a, b = text.split(":")
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a:b', got {text!r}") from None


# --- tables ----------------------------------------------------------------

@dataclass
class Table:
    columns: list
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            rows = [dict(zip(self.columns, (_jsonable(v) for v in r))) for r in self.rows]
            return json.dumps({"meta": self.meta, "columns": self.columns, "rows": rows}, indent=2) + "\n"
        buf = io.StringIO()
        for k, v in self.meta.items():
            buf.write(f"# {k}={v}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_num(v) if isinstance(v, (int, float, Fraction)) and not isinstance(v, bool) else v for v in r])
        return buf.getvalue()


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def _emit(table: Table, cfg: RunConfig) -> None:
    text = table.render(cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- eval ------------------------------------------------------------------

def _value_row(name, value, error="exact", provenance="closed form", symbolic=""):
    z = complex(value)
    return [name, z.real, z.imag, error, provenance, symbolic]


def _text_row(name, symbolic, provenance):
    return [name, float("nan"), float("nan"), "exact", provenance, symbolic]


def _eval(op: str, args: list[str], cfg: RunConfig) -> list:
    N, s = cfg.N, cfg.s

    def arg(i, conv=float):
        if len(args) <= i:
            raise DomainError(f"'{op}' needs {i + 1} positional argument(s)")
        return conv(args[i])

    if op == "w":
        # decimal input is read exactly, so w(0.7) is exactly 2/5
        y = maps.w_map(arg(0, Fraction))
        return _value_row("w", y, symbolic=str(y))
    if op == "h":
        y = maps.gauss_map(arg(0, Fraction))
        return _value_row("h", y, symbolic=str(y))
    if op == "zeta":
        return _value_row("zeta", specfun.riemann_zeta(s), "1e-15", "Euler-Maclaurin")
    if op == "zeta_w":
        return _value_row("zeta_w", transforms.zeta_w_finite(N, s), "exact", "finite sum")
    if op == "zeta_h":
        return _value_row("zeta_h", transforms.zeta_h_finite(N, s), "exact", "finite sum")
    if op == "chi":
        return _value_row("chi", reflection.chi(N, s), "exact", "finite sums")
    if op == "chi-residue":
        r = reflection.chi_residue_at_0(N, cfg.radius, cfg.samples)
        finer = reflection.laurent_coeff(lambda z: reflection.chi(N, z), 0, -1, cfg.radius, 2 * cfg.samples).real
        return _value_row("chi-residue", r.contour, _num(abs(finer - r.contour)), "contour")
    if op == "geomzeta":
        parts = fractal.geometric_zeta_parts(s, cfg.terms)
        return _value_row("geomzeta", parts.value, _num(parts.tail_bound), "series + Hurwitz tail")
    if op == "geomzeta-int":
        combo = fractal.geometric_zeta_integer(arg(0, int))
        return _value_row("geomzeta-int", combo.value(), "1e-15", "partial fractions", str(combo))
    if op == "lambertw":
        return _value_row("lambertw", specfun.lambert_w(arg(0, int), s), "exact", "Halley")
    if op == "mellin":
        return _value_row("mellin", transforms.mellin_w_component(arg(0, int), s))
    if op == "laplace":
        return _value_row("laplace", transforms.laplace_w_component(arg(0, int), s))
    if op == "tube":
        t = fractal.tube_volume(Fraction(args[0]) if args else Fraction(1, 8))
        return _value_row("tube", t.volume, "exact", f"v={t.v}", str(t.volume))
    if op == "schroder":
        return _text_row("schroder", " ".join(map(str, transforms.schroder_numbers(arg(0, int)))), "exact series")
    if op == "cf":
        return _text_row("cf", " ".join(map(str, maps.continued_fraction(arg(0), arg(1, int)))), "exact rational")
    if op == "gamma-orbit":
        st = maps.gamma_orbit(arg(0, int))[-1]
        return _text_row("gamma-orbit", f"{-st.a} {-st.b}", "interval arithmetic")
    raise DomainError(f"unknown operation {op!r}; choose from {', '.join(EVAL_OPS)}")


EVAL_OPS = [
    "w", "h", "zeta", "zeta_w", "zeta_h", "chi", "chi-residue", "geomzeta", "geomzeta-int",
    "lambertw", "mellin", "laplace", "tube", "schroder", "cf", "gamma-orbit",
]


def cmd_eval(ns, cfg: RunConfig) -> int:
    row = _eval(ns.op, ns.args, cfg)
    table = Table(["op", "re", "im", "error", "provenance", "symbolic"], [row], {**cfg.header(), "command": "eval"})
    _emit(table, cfg)
    return EXIT_OK


# --- scan ------------------------------------------------------------------

def _scan_chi_residue(ns, cfg) -> Table:
    rng = ns.range or range(1, 251)
    scan = reflection.residue_sign_scan(rng.start, rng.stop - 1, cfg.radius, cfg.samples)
    flip = scan.sign_change
    rows = [[N, r, "contour", int(flip is not None and N == flip[1])] for N, r in scan.rows]
    meta = {"sign_change": f"{flip[0]}/{flip[1]}" if flip else "none"}
    return Table(["N", "residue", "error", "sign_flip"], rows, meta)


def _scan_content(ns, cfg) -> Table:
    lo, hi = ns.eps_range
    k = ns.points
    rows = []
    for i in range(k):
        eps = 10 ** (math.log10(lo) + (math.log10(hi) - math.log10(lo)) * i / max(1, k - 1))
        t = fractal.tube_volume(eps)
        rows.append([eps, t.v, float(t.volume), t.scaled, "exact"])
    return Table(["epsilon", "v", "volume", "scaled", "error"], rows)


def _scan_roots(ns, cfg) -> Table:
    rows = []
    ns_range = ns.n or range(1, 10)
    if ns.kind == "laplace":
        for n in ns_range:
            for m in ns.m or range(-5, 6):
                z = roots.laplace_root(n, m)
                res = abs(transforms.laplace_w_component(n, z)) if m not in (0, -1) else float("nan")
                rows.append([n, m, z.real, z.imag, res])
    else:
        count = max(ns.m) if ns.m else 5
        for n in ns_range:
            for m, z in roots.mellin_roots_numeric(n, count).roots:
                rows.append([n, m, z.real, z.imag, roots.mellin_residual(n, z)])
    return Table(["n", "m", "re", "im", "residual"], rows, {"kind": ns.kind})


def _scan_spacing(ns, cfg) -> Table:
    rows = []
    for n in ns.n or range(1, 11):
        d = roots.root_spacing_limit(n)
        q = roots.root_quotient_limit(n) if n >= 2 else float("nan")
        e = roots.root_exponential_spacing(n)
        rows.append([n, d.imag, q, e.real, e.imag, "exact"])
    return Table(["n", "spacing_im", "quotient", "exp_re", "exp_im", "error"], rows)


SCANS = {
    "chi-residue": _scan_chi_residue,
    "content": _scan_content,
    "roots": _scan_roots,
    "spacing": _scan_spacing,
}


def cmd_scan(ns, cfg: RunConfig) -> int:
    table = SCANS[ns.target](ns, cfg)
    table.meta = {**cfg.header(), "command": f"scan {ns.target}", **table.meta}
    _emit(table, cfg)
    return EXIT_OK


# --- verify ----------------------------------------------------------------

def cmd_verify(ns, cfg: RunConfig) -> int:
    checks = run_suite(ns.suite)
    failed = sum(not c.passed for c in checks)
    if cfg.fmt == "json":
        table = None
        text = json.dumps({"suite": ns.suite, "failed": failed, "checks": [c.as_dict() for c in checks]}, indent=2) + "\n"
    else:
        rows = [[c.suite, c.name, str(c.target), str(c.observed), c.tol, "pass" if c.passed else "FAIL"] for c in checks]
        table = Table(["suite", "check", "target", "observed", "tol", "status"], rows,
                      {"command": f"verify {ns.suite}", "failed": failed})
        text = table.render("csv")
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if failed else EXIT_OK


# --- parser ----------------------------------------------------------------

def _eps_range(text: str) -> tuple[float, float]:
    try:
        a, b = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'lo:hi', got {text!r}") from None
    if not 0 < a < b:
        raise argparse.ArgumentTypeError("need 0 < lo < hi")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=100, help="truncation order")
    common.add_argument("--s", type=parse_complex, default=complex(0.5, 0), help="complex argument 're,im'")
    common.add_argument("--terms", type=int, default=1000)
    common.add_argument("--radius", type=float, default=0.1, help="contour radius")
    common.add_argument("--samples", type=int, default=256, help="contour samples (power of two)")
    common.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")
    common.add_argument("--out", default=None, metavar="PATH")
    common.add_argument("--tol", type=float, default=1e-10)

    p = argparse.ArgumentParser(prog="zetasaw", description="Sawtooth-map zeta numerics.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate one operation")
    e.add_argument("op", help="one of: " + ", ".join(EVAL_OPS))
    e.add_argument("args", nargs="*")
    e.set_defaults(func=cmd_eval)

    sc = sub.add_parser("scan", parents=[common], help="tabulate a figure dataset")
    sc.add_argument("target", choices=sorted(SCANS))
    sc.add_argument("--range", type=_int_range, default=None, help="N range 'a:b' for chi-residue")
    sc.add_argument("--eps-range", type=_eps_range, default=(1e-6, 1e-1))
    sc.add_argument("--points", type=int, default=21)
    sc.add_argument("--kind", choices=["laplace", "mellin"], default="laplace")
    sc.add_argument("--n", type=_int_range, default=None)
    sc.add_argument("--m", type=_int_range, default=None, help="branch range; write --m=-5..5")
    sc.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    v.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        cfg = RunConfig(ns.N, ns.s, ns.terms, ns.radius, ns.samples, ns.fmt, ns.out, ns.tol)
        return ns.func(ns, cfg)
    except (ConvergenceError, PrecisionError) as exc:
        print(f"zetasaw: {exc}", file=sys.stderr)
        return EXIT_NONCONV
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"zetasaw: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
