"""Regenerate golden/radii.csv with 30-digit mpmath arithmetic.

Independent of the package: roots are bracketed by a sign scan of the
Dini function built from mpmath's Bessel functions and refined by bisection.

    python scripts/make_golden.py > src/bessel_starlike/golden/radii.csv
"""

import sys

import mpmath as mp

mp.mp.dps = 30

NU_GRID = (-0.9, -0.5, -0.1, 0.1, 0.5, 1, 2, 5)
BETA_GRID = (0, 0.25, 0.5, 0.9)


def first_root(fn, hi, step):
    x = mp.mpf("1e-8")
    fx = fn(x)
    while x < hi:
        y = x + step
        fy = fn(y)
        if fx * fy < 0:
            return mp.findroot(fn, (x, y), solver="bisect", tol=mp.mpf(10) ** -28)
        x, fx = y, fy
    raise RuntimeError("no root")


def golden_radius(family, nu, beta):
    nu, beta = mp.mpf(nu), mp.mpf(beta)
    if family == "f" and nu < 0:
        a = -beta * nu
        fn = lambda x: (nu + a) * mp.besseli(nu, x) + x * mp.besseli(nu + 1, x)
        return first_root(fn, 10, mp.mpf("0.01")), "I"
    a = {"f": -beta * nu, "g": 1 - beta - nu, "h": 2 - 2 * beta - nu}[family]
    fn = lambda x: (nu + a) * mp.besselj(nu, x) - x * mp.besselj(nu + 1, x)
    root = first_root(fn, 20, mp.mpf("0.01"))
    return (root**2 if family == "h" else root), "J"


def main(out=sys.stdout):
    out.write("family,nu,beta,radius,residual,branch\n")
    for family in "fgh":
        for nu in NU_GRID:
            if family == "f" and nu == 0:
                continue
            for beta in BETA_GRID:
                r, branch = golden_radius(family, nu, beta)
                out.write(f"{family},{nu:.12g},{beta:.12g},{mp.nstr(r, 12)},0.000e+00,{branch}\n")


if __name__ == "__main__":
    main()
