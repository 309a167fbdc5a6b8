#!/usr/bin/env python3
"""Convergence of the tail-ratio eigenvalue estimator on a non-Ramanujan
prism.

Prints, for each adjacent pair of negative even h_k, the running estimate of
q^(-1/2) * max|lam| against the closed-form value 2cos(pi/m) + 1 scaled by
1/sqrt(2); the error decays geometrically in k.

Usage: python scripts/estimator_convergence.py [--ring 24] [--k 100]
"""

import argparse
import math

from iharazeta.graphs import adjacency_matrix, generate, profile
from iharazeta.hk import hk_spectral
from iharazeta.spectral import (eigenvalues_symmetric, nontrivial_spectrum,
                                scaled_spectrum)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ring", type=int, default=24)
    parser.add_argument("--k", type=int, default=100)
    args = parser.parse_args()

    g = generate("prism", [args.ring])
    prof = profile(g)
    spectrum = eigenvalues_symmetric(adjacency_matrix(g))
    ns = nontrivial_spectrum(spectrum, prof)
    seq = hk_spectral(scaled_spectrum(ns), args.k, prof.q, g.n, prof.bipartite)

    target = (2 * math.cos(2 * math.pi / args.ring) + 1) / math.sqrt(prof.q)
    print(f"prism({args.ring}): n={g.n}, target q^-1/2 max|lam| = {target:.10f}")
    print(f"{'k':>4} {'h_k':>16} {'estimate':>14} {'error':>12}")
    for k in range(2, args.k - 1, 2):
        a, b = seq.h(k), seq.h(k + 2)
        if a < 0 and b < 0:
            r = math.sqrt(b / a)
            est = r + 1 / r
            print(f"{k:>4} {a:>16.6g} {est:>14.10f} {abs(est - target):>12.3e}")


if __name__ == "__main__":
    main()
