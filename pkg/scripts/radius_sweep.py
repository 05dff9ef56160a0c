"""Sweep the radius of starlikeness over a fine nu grid for f, g and h.

Writes a CSV with one row per (family, nu, beta) and prints where each
curve crosses radius 1.  For h at beta = 0 that crossing is nu_0.

    python3 scripts/radius_sweep.py --out sweep.csv
"""

import argparse
import csv
import sys
import time

import numpy as np

from bessel_starlike.radius import radius, solve_nu0


def sweep(kinds, nus, betas):
    for kind in kinds:
        for beta in betas:
            for nu in nus:
                if kind == "f" and abs(nu) < 1e-6:
                    continue
                yield radius(kind, float(nu), float(beta))


def unit_crossings(rows):
    """Linear interpolation of nu where radius passes through 1, per (family, beta)."""
    out = {}
    by_key = {}
    for r in rows:
        by_key.setdefault((r.family, r.beta), []).append((r.nu, r.radius))
    for key, pts in by_key.items():
        pts.sort()
        for (n0, r0), (n1, r1) in zip(pts, pts[1:]):
            if (r0 - 1.0) * (r1 - 1.0) < 0:
                out[key] = n0 + (1.0 - r0) * (n1 - n0) / (r1 - r0)
                break
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--families", default="f,g,h")
    p.add_argument("--nu-min", type=float, default=-0.95)
    p.add_argument("--nu-max", type=float, default=5.0)
    p.add_argument("--n-nu", type=int, default=120)
    p.add_argument("--betas", default="0,0.25,0.5,0.75")
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    args = p.parse_args(argv)

    kinds = [k for k in args.families.split(",") if k]
    betas = [float(b) for b in args.betas.split(",") if b]
    nus = np.linspace(args.nu_min, args.nu_max, args.n_nu)

    t0 = time.perf_counter()
    rows = list(sweep(kinds, nus, betas))
    elapsed = time.perf_counter() - t0

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh)
    w.writerow(["family", "nu", "beta", "radius", "branch"])
    for r in rows:
        w.writerow([r.family, f"{r.nu:.6f}", f"{r.beta:g}", f"{r.radius:.12g}", r.branch.value])
    if args.out:
        fh.close()

    print(f"# {len(rows)} radii in {elapsed:.2f}s", file=sys.stderr)
    for (fam, beta), nu in sorted(unit_crossings(rows).items()):
        print(f"# {fam} beta={beta:g}: radius = 1 near nu = {nu:.4f}", file=sys.stderr)
    if "h" in kinds and 0.0 in betas:
        print(f"# nu_0 from h'(1) = 0: {solve_nu0():.12f}", file=sys.stderr)


if __name__ == "__main__":
    main()
