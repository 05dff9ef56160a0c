"""How fast the truncated partial-fraction route converges to the direct one.

For a few (family, nu) pairs and |z| = frac * first singularity, reports the
observed gap between the two routes and the certified tail bound as the
number of zeros N grows.
"""

import argparse
import cmath

from bessel_starlike.family import Family, star_direct, star_mittag_leffler
from bessel_starlike.zeros import bessel_zeros

CASES = (("f", 2.0), ("g", -0.5), ("h", 0.0), ("h", 3.0))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--frac", type=float, default=0.9)
    p.add_argument("--theta", type=float, default=0.7)
    p.add_argument("--counts", default="4,8,16,32,64")
    args = p.parse_args(argv)
    counts = [int(c) for c in args.counts.split(",")]

    print(f"{'case':>14} {'N':>3} {'|gap|':>11} {'tail_bound':>11}")
    for kind, nu in CASES:
        fam = Family.of(kind, nu)
        tag = f"{kind}(nu={nu:g})"
        j1 = bessel_zeros(nu, 1).first
        lim = j1 * j1 if kind == "h" else j1
        z = args.frac * lim * cmath.exp(1j * args.theta)
        direct = star_direct(fam, z).value
        for n in counts:
            ml = star_mittag_leffler(fam, z, bessel_zeros(nu, n))
            gap = abs(ml.value - direct)
            print(f"{tag:>14} {n:>3} {gap:11.3e} {ml.tail_bound:11.3e}")


if __name__ == "__main__":
    main()
