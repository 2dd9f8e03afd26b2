#!/usr/bin/env python3
"""Reference evaluator for the quintic existence inequalities.

Uses only Python's exact integers and ``math.comb``; it shares no code with
the C++ library. Its output is frozen into ``tests/fixtures/`` and the C++
tests compare against it.

    python3 tools/oracle/gv_oracle.py > tests/fixtures/gv_fixtures.json
"""

import json
import math
from fractions import Fraction


def binom0(m, num, den):
    """C(m, num/den), or 0 when num/den is not an integer in [0, m]."""
    if num % den:
        return 0
    k = num // den
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def terms(ell, e):
    return (
        math.comb(5 * ell, e),
        binom0(ell, e, 2) * (15 ** (e // 2) if e % 2 == 0 else 0),
        binom0(ell, e, 5),
    )


def check(ell, d, mode, type2):
    if mode == "literal":
        exp2 = (ell - 4) // 2 if type2 else (ell - 2) // 2
        c2 = 2 ** exp2
        c16 = 2 ** (2 * ell - 2)
        s1 = s2 = s3 = 0
        for e in range(0, d):
            t1, t2, t3 = terms(ell, e)
            s1 += t1
            s2 += t2
            s3 += t3
        lhs = s1 + c2 * s2 + c16 * s3
        rhs = (c2 + 1) * (c16 + 1)
    else:
        r2 = 2 ** (ell // 2 - 2) + 1 if type2 else 2 ** (ell // 2 - 1) + 1
        r16 = 2 ** (2 * ell - 2) + 1
        lhs = 0
        for e in range(2, d, 2):
            t1, t2, t3 = terms(ell, e)
            lhs += t1 + r2 * t2 + r16 * t3
        rhs = r2 * r16
    return lhs, rhs, lhs < rhs


def d_star(ell, mode, type2):
    d = 1
    while d <= 5 * ell and check(ell, d + 1, mode, type2)[2]:
        d += 1
    return d


def main():
    out = {"asymptote": [], "discrepancies": [], "spot_checks": []}
    for type2 in (False, True):
        for mode in ("exact", "literal"):
            for ell in (40, 80, 160, 320):
                ds = d_star(ell, mode, type2)
                out["asymptote"].append({
                    "ell": ell,
                    "mode": mode,
                    "type2": type2,
                    "d_star": ds,
                    "delta": float(Fraction(ds, 5 * ell)),
                })

    for ell in range(2, 65, 2):
        for type2 in (False, True):
            if type2 and ell % 8:
                continue
            for d in range(1, 5 * ell // 2 + 1):
                lit = check(ell, d, "literal", type2)[2]
                ex = check(ell, d, "exact", type2)[2]
                if lit != ex:
                    out["discrepancies"].append({
                        "ell": ell, "d": d, "type2": type2,
                        "literal": lit, "exact": ex,
                    })

    for ell, d, mode, type2 in [
        (2, 1, "literal", False), (2, 2, "literal", False),
        (4, 3, "exact", False), (6, 4, "exact", False),
        (6, 5, "exact", False), (8, 1, "literal", True),
        (8, 6, "exact", True), (16, 9, "literal", False),
    ]:
        lhs, rhs, holds = check(ell, d, mode, type2)
        out["spot_checks"].append({
            "ell": ell, "d": d, "mode": mode, "type2": type2,
            "lhs": str(lhs), "rhs": str(rhs), "holds": holds,
        })

    json.dump(out, __import__("sys").stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
