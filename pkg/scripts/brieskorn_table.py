#!/usr/bin/env python3
"""Print a small table of invariants for Brieskorn links: Milnor number,
signature at -1, spectrum, and agreement with the arithmetic oracle.

Usage: python scripts/brieskorn_table.py [a1 a2 [a3 ...]]
With no arguments a default selection is printed.
"""

import sys
from fractions import Fraction

from linkspec.catalog import brieskorn, brieskorn_spectrum_oracle
from linkspec.hvs import extract_spectrum, mod2_reduce
from linkspec.signatures import CirclePoint, lt_signature


def row(exponents) -> None:
    S = brieskorn(*exponents)
    sigma = lt_signature(S, CirclePoint(Fraction(1, 2)))
    sp = extract_spectrum(S)
    oracle = mod2_reduce(brieskorn_spectrum_oracle(*exponents),
                         n=len(exponents) - 1)
    agree = sp.as_exact_multiset() == oracle.as_exact_multiset()
    values = ", ".join(f"{v}^{m}" if m > 1 else f"{v}"
                       for v, m in sorted(sp.as_exact_multiset().items()))
    print(f"{str(tuple(exponents)):16} mu={S.mu:<3} sigma(-1)={sigma:<4} "
          f"oracle={'ok' if agree else 'MISMATCH'}  Sp = {{{values}}}")


def main() -> int:
    if len(sys.argv) > 1:
        cases = [tuple(int(a) for a in sys.argv[1:])]
    else:
        cases = [(2, 3), (2, 5), (3, 4), (2, 2, 2), (3, 3, 3), (2, 3, 5),
                 (2, 2, 2, 3)]
    for e in cases:
        row(e)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
