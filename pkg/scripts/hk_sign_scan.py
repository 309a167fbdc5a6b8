#!/usr/bin/env python3
"""Scan the prism family for the first negative even h_k.

A prism (circular ladder) on an even ring is 3-regular and bipartite; its
largest nontrivial eigenvalue 2cos(pi/m) + 1 crosses the 2*sqrt(2) threshold
as the ring grows, so the family walks from Ramanujan to non-Ramanujan and
the sign scan shows exactly where the coefficient criterion notices.

Usage: python scripts/hk_sign_scan.py [--max-ring 30] [--k 80]
"""

import argparse
import math

from iharazeta.analysis import ramanujan_spectral
from iharazeta.census import build_census
from iharazeta.graphs import adjacency_matrix, generate, profile
from iharazeta.hk import hk_from_ck
from iharazeta.spectral import eigenvalues_symmetric, nontrivial_spectrum


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-ring", type=int, default=30)
    parser.add_argument("--k", type=int, default=80)
    args = parser.parse_args()

    print(f"{'ring':>5} {'n':>4} {'max|lam*|':>10} {'2sqrt(q)':>9} "
          f"{'ramanujan':>10} {'first h_k<0':>12}")
    for m in range(3, args.max_ring + 1):
        g = generate("prism", [m])
        prof = profile(g)
        spectrum = eigenvalues_symmetric(adjacency_matrix(g))
        ns = nontrivial_spectrum(spectrum, prof)
        verdict = ramanujan_spectral(ns, prof.q)
        census = build_census(g, prof.q, args.k)
        seq = hk_from_ck(census.c, prof.q, g.n, prof.bipartite, args.k)
        witness = next((k for k in range(1, args.k + 1) if seq.h(k) < -1e-8), None)
        print(f"{m:>5} {g.n:>4} {verdict.max_nontrivial_abs:>10.6f} "
              f"{2 * math.sqrt(prof.q):>9.6f} {str(verdict.is_ramanujan):>10} "
              f"{str(witness):>12}")


if __name__ == "__main__":
    main()
