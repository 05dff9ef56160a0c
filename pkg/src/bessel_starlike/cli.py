"""Command line interface: ``bessel-starlike {radius,zeros,verify,table}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import audit
from .family import Family, FamilyDomainError
from .kernels import KernelDomainError, KernelRangeError
from .radius import RadiusQuery, RadiusResult, radius_starlike
from .verify import verify_starlike_radius
from .zeros import (
    NoRootError,
    RegimeError,
    bessel_zeros,
    dini_function,
    dini_function_imag,
    dini_imaginary_zero,
    dini_smallest_positive_zero,
)

CSV_COLUMNS = ("family", "nu", "beta", "radius", "residual", "branch")
DOMAIN_ERRORS = (FamilyDomainError, KernelDomainError, KernelRangeError, RegimeError, NoRootError)


def fmt(x: float) -> str:
    return f"{x:.12g}"


def fmt_residual(x: float) -> str:
    return f"{x:.3e}"


def result_record(res: RadiusResult) -> dict:
    """RadiusResult as a JSON object, floats rounded to 12 significant digits."""
    d = res.to_dict()
    for key in ("nu", "beta", "radius", "defining_alpha"):
        d[key] = float(fmt(d[key]))
    d["equation_residual"] = float(fmt_residual(d["equation_residual"]))
    d["bracket"] = [float(fmt(b)) for b in d["bracket"]]
    return d


def _float_list(text: str) -> list:
    return [float(t) for t in text.split(",") if t.strip()]


def _fail(msg: str, code: int = 2) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_radius(args) -> int:
    try:
        res = radius_starlike(RadiusQuery(Family.of(args.family, args.nu), args.beta))
    except DOMAIN_ERRORS as exc:
        return _fail(str(exc))
    if args.json:
        print(json.dumps(result_record(res)))
        return 0
    print(f"family:   {res.family}")
    print(f"nu:       {fmt(res.nu)}")
    print(f"beta:     {fmt(res.beta)}")
    print(f"radius:   {fmt(res.radius)}")
    print(f"residual: {fmt_residual(res.equation_residual)}")
    print(f"bracket:  [{fmt(res.bracket[0])}, {fmt(res.bracket[1])}]")
    print(f"branch:   {res.branch.value}")
    print(f"alpha:    {fmt(res.defining_alpha)}")
    return 0


def cmd_zeros(args) -> int:
    try:
        if args.dini_alpha is None:
            table = bessel_zeros(args.nu, args.n)
            for k, (z, r) in enumerate(zip(table.zeros, table.residuals), 1):
                print(f"{k} {fmt(z)} {fmt_residual(r)}")
            return 0
        alpha = args.dini_alpha
        if alpha + args.nu >= 0:
            z = dini_smallest_positive_zero(args.nu, alpha)
            print(f"smallest_positive {fmt(z)} {fmt_residual(abs(float(dini_function(args.nu, alpha, z))))}")
        else:
            xi = dini_imaginary_zero(args.nu, alpha)
            res = abs(float(dini_function_imag(args.nu, alpha, xi)))
            print(f"imaginary +-{fmt(xi)}i {fmt_residual(res)}")
        return 0
    except (ValueError, NoRootError) as exc:
        return _fail(str(exc))


STARLIKE_CLAIMS = {
    f"starlike-{side}-{k}": (side, k) for side in ("inside", "outside") for k in "fgh"
}


def _run_claim(name: str, args):
    if name in STARLIKE_CLAIMS:
        side, kind = STARLIKE_CLAIMS[name]
        if args.nu is None:
            raise SystemExit(_fail(f"{name} needs --nu"))
        fam = Family.of(kind, args.nu)
        res = radius_starlike(RadiusQuery(fam, args.beta))
        inside, outside = verify_starlike_radius(fam, args.beta, res.radius, args.eps, args.angles)
        return [inside if side == "inside" else outside]
    if name == "halfplane":
        return audit.claim_halfplane(alpha=args.alpha, seed=args.seed)
    if name in ("mittag-leffler", "term-inequalities"):
        return audit.CLAIMS[name](seed=args.seed)
    if name == "disk-maximality":
        return audit.claim_disk_maximality(args.eps, args.angles)
    if name == "golden":
        return audit.claim_golden(args.golden)
    return audit.CLAIMS[name]()


def cmd_verify(args) -> int:
    if args.all:
        names = list(audit.CLAIMS)
    elif args.claim:
        names = [args.claim]
    else:
        return _fail("give a claim id or --all")
    known = set(audit.CLAIMS) | set(STARLIKE_CLAIMS)
    if any(n not in known for n in names):
        return _fail(f"unknown claim; choose from {', '.join(sorted(known))}")
    ok = True
    try:
        for name in names:
            for rep in _run_claim(name, args):
                print(rep.line())
                ok &= rep.passed
    except DOMAIN_ERRORS as exc:
        return _fail(str(exc))
    return 0 if ok else 1


def table_rows(family: str, nu_grid, beta_grid) -> list:
    # nu-major, then beta
    return [
        radius_starlike(RadiusQuery(Family.of(family, nu), beta))
        for nu in nu_grid
        for beta in beta_grid
    ]


def render_table(rows, form: str) -> str:
    if form == "json":
        return json.dumps([result_record(r) for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([r.family, fmt(r.nu), fmt(r.beta), fmt(r.radius),
                    fmt_residual(r.equation_residual), r.branch.value])
    return buf.getvalue()


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".table-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_table(args) -> int:
    nu_grid = _float_list(args.nu_grid)
    beta_grid = _float_list(args.beta_grid)
    if not nu_grid or not beta_grid:
        return _fail("nu and beta grids must be nonempty")
    form = args.format
    if form is None:
        form = "json" if args.out and args.out.endswith(".json") else "csv"
    try:
        rows = table_rows(args.family, nu_grid, beta_grid)
    except DOMAIN_ERRORS as exc:
        return _fail(str(exc))
    text = render_table(rows, form)
    if args.out:
        try:
            _atomic_write(args.out, text)
        except OSError as exc:
            return _fail(str(exc), 1)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bessel-starlike",
        description="Radii of starlikeness of normalized Bessel functions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("radius", help="radius of starlikeness of order beta")
    r.add_argument("family", choices=("f", "g", "h"))
    r.add_argument("--nu", type=float, required=True)
    r.add_argument("--beta", type=float, default=0.0)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_radius)

    z = sub.add_parser("zeros", help="zeros of J_nu or of a Dini function")
    z.add_argument("--nu", type=float, required=True)
    z.add_argument("--n", type=int, default=1)
    z.add_argument("--dini-alpha", type=float, default=None,
                   help="report the Dini zero of r J' + alpha J instead")
    z.set_defaults(func=cmd_zeros)

    v = sub.add_parser("verify", help="check claims numerically; exit 0 iff all pass")
    v.add_argument("claim", nargs="?")
    v.add_argument("--all", action="store_true")
    v.add_argument("--nu", type=float, default=None)
    v.add_argument("--beta", type=float, default=0.0)
    v.add_argument("--alpha", type=float, default=2.0)
    v.add_argument("--eps", type=float, default=0.01)
    v.add_argument("--angles", type=int, default=720)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--golden", default=None, help="golden CSV (default: packaged radii.csv)")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="radius table over nu and beta grids")
    t.add_argument("family", choices=("f", "g", "h"))
    t.add_argument("--nu-grid", required=True, help="comma separated")
    t.add_argument("--beta-grid", required=True, help="comma separated")
    t.add_argument("--format", choices=("csv", "json"), default=None)
    t.add_argument("--out", default=None)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
