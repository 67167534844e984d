#!/usr/bin/env python3
"""Write the ordinates of the first M non-trivial zeta zeros, one per line.

Uses mpmath's zetazero root finder on the completed zeta function.
Usage: gen_zeros.py [M] [digits] > zeros.txt
"""
import sys

import mpmath


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    digits = int(sys.argv[2]) if len(sys.argv) > 2 else 30
    mpmath.mp.dps = digits + 10
    print(f"# first {count} zeta zero ordinates, {digits} significant digits (mpmath.zetazero)")
    for n in range(1, count + 1):
        print(mpmath.nstr(mpmath.zetazero(n).imag, digits, min_fixed=-1, max_fixed=10))


if __name__ == "__main__":
    main()
