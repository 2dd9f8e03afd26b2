#!/usr/bin/env python3
"""Brute-force values for desk-scale unit tests.

Field arithmetic here is schoolbook polynomial multiplication with explicit
reduction, independent of the table-driven C++ implementation.

    python3 tools/oracle/small_cases.py > tests/fixtures/small_cases.json
"""

import itertools
import json
import sys


def pmul(a, b, modulus, deg):
    r = 0
    for i in range(deg):
        if (b >> i) & 1:
            r ^= a << i
    for i in range(2 * deg - 2, deg - 1, -1):
        if (r >> i) & 1:
            r ^= modulus << (i - deg)
    return r


def mul4(a, b):
    return pmul(a, b, 0b111, 2)  # w^2 = w + 1


def mul16(a, b):
    return pmul(a, b, 0b11111, 4)  # a^4 = a^3 + a^2 + a + 1


def conj16(a):
    return mul16(mul16(a, a), mul16(a, a))


def weight(bits):
    return sum(bits)


def cubic(x, s):
    a = [v & 1 for v in s]
    b = [(v >> 1) & 1 for v in s]
    return ([xi ^ ai for xi, ai in zip(x, a)] + [xi ^ bi for xi, bi in zip(x, b)]
            + [xi ^ ai ^ bi for xi, ai, bi in zip(x, a, b)])


def quintic(x, s):
    a = [[(v >> j) & 1 for v in s] for j in range(4)]
    blocks = [
        [x[i] ^ a[0][i] for i in range(len(x))],
        [x[i] ^ a[0][i] ^ a[1][i] for i in range(len(x))],
        [x[i] ^ a[1][i] ^ a[2][i] for i in range(len(x))],
        [x[i] ^ a[2][i] ^ a[3][i] for i in range(len(x))],
        [x[i] ^ a[3][i] for i in range(len(x))],
    ]
    return sum(blocks, [])


def tally(words, n):
    t = [0] * (n + 1)
    for w in words:
        t[weight(w)] += 1
    return t


def main():
    out = {}

    # c1 = {00, 11}, c2 = GF(q)-span of (1, 1)
    c1 = [(0, 0), (1, 1)]
    words = [cubic(x, (c, c)) for x in c1 for c in range(4)]
    out["cubic_rep2_tally"] = tally(words, 6)
    words = [quintic(x, (c, c)) for x in c1 for c in range(16)]
    out["quintic_rep2_tally"] = tally(words, 10)

    # extended Hamming [8,4]
    gens = [0b11110000, 0b11001100, 0b10101010, 0b11111111]
    cw = set()
    for m in range(16):
        v = 0
        for i in range(4):
            if (m >> i) & 1:
                v ^= gens[i]
        cw.add(v)
    out["ext_hamming_tally"] = tally([[(v >> i) & 1 for v in [w] for i in range(8)] for w in cw], 8)

    # Hermitian self-dual GF(16) codes of length 2: all 1-dim subspaces
    seen = set()
    count = 0
    for u in itertools.product(range(16), repeat=2):
        if u == (0, 0):
            continue
        span = frozenset(tuple(mul16(c, ui) for ui in u) for c in range(16))
        if span in seen:
            continue
        seen.add(span)
        if all((mul16(v[0], conj16(w[0])) ^ mul16(v[1], conj16(w[1]))) == 0
               for v in span for w in span):
            count += 1
    out["gf16_sd_n2"] = count

    # word-type counts for the quintic map, unrestricted, by weight
    for ell in (1, 2, 3):
        a = [[0] * (5 * ell + 1) for _ in range(3)]
        for x in itertools.product(range(2), repeat=ell):
            for s in itertools.product(range(16), repeat=ell):
                xz = not any(x)
                sz = not any(s)
                if xz and sz:
                    continue
                w = weight(quintic(list(x), list(s)))
                if not xz and not sz:
                    a[0][w] += 1
                elif xz:
                    a[1][w] += 1
                else:
                    a[2][w] += 1
        out[f"word_types_ell{ell}"] = {"a1": a[0], "a2": a[1], "a3": a[2]}

    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
