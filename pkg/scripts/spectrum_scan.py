#!/usr/bin/env python3
"""Compare the finite-difference spectrum with the exact progressions.

Usage: spectrum_scan.py [K_MAX] [COUNT]
"""

from __future__ import annotations

import sys

sys.path.insert(0, "src")

from okladder.numerics import fd_eigensolve, spectrum_exact


def main(k_max: str = "2", count: str = "9") -> int:
    k_max, count = int(k_max), int(count)
    for k in range(k_max + 1):
        computed = fd_eigensolve(k, count=count)
        exact = spectrum_exact(k, count)
        worst = max(abs(c - float(e)) for c, e in zip(computed, exact))
        print(f"k = {k}   max |dE| = {worst:.3e}")
        for c, e in zip(computed, exact):
            print(f"    {c:+.12f}   exact {str(e):>6s} = {float(e):+.12f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(*sys.argv[1:]))
