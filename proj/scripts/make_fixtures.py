#!/usr/bin/env python3
"""Regenerate the offline OEIS b-files in data/oeis/.

The sandbox that produced this repository had no route to oeis.org, so the
fixtures are computed here from each sequence's defining formula, using only
the Python standard library. Replace them with the published b-files when
network access is available (`weaksort oeis --online --id ...` caches those).
"""
from fractions import Fraction
from math import comb
from pathlib import Path

TERMS = 30
OUT = Path(__file__).resolve().parent.parent / "data" / "oeis"


def sqrt_1m4x(n):
    # sqrt(1-4x) = 1 - 2 sum_{k>=1} Catalan(k-1) x^k
    return [Fraction(1)] + [Fraction(-2 * comb(2 * (k - 1), k - 1), k) for k in range(1, n)]


def mul(f, g):
    n = min(len(f), len(g))
    return [sum(f[i] * g[k - i] for i in range(k + 1)) for k in range(n)]


def div(f, g):
    n = min(len(f), len(g))
    q = []
    for k in range(n):
        q.append((f[k] - sum(g[j] * q[k - j] for j in range(1, k + 1))) / g[0])
    return q


def a111279(n):
    # (1 - 5x + (1+x) s) / (1 - 5x + (1-x) s), s = sqrt(1-4x)
    s = sqrt_1m4x(n)
    lin = [Fraction(1), Fraction(-5)] + [Fraction(0)] * (n - 2)
    num = [a + b for a, b in zip(lin, mul([Fraction(1), Fraction(1)] + [Fraction(0)] * (n - 2), s))]
    den = [a + b for a, b in zip(lin, mul([Fraction(1), Fraction(-1)] + [Fraction(0)] * (n - 2), s))]
    return [int(c) for c in div(num, den)]


def a006318(n):
    # large Schröder numbers: r_k = r_{k-1} + sum_{i<k} r_i r_{k-1-i}
    r = [1]
    for k in range(1, n):
        r.append(r[k - 1] + sum(r[i] * r[k - 1 - i] for i in range(k)))
    return r


def a026671(n):
    # 1 / (1 - x/sqrt(1-4x)) with 1/sqrt(1-4x) = sum binom(2k,k) x^k
    inv_s = [Fraction(comb(2 * k, k)) for k in range(n)]
    x_over_s = [Fraction(0)] + inv_s[: n - 1]
    one_minus = [Fraction(1) - x_over_s[0]] + [-c for c in x_over_s[1:]]
    return [int(c) for c in div([Fraction(1)] + [Fraction(0)] * (n - 1), one_minus)]


def a060693(rows):
    # T(n,k) = binom(n,k) binom(2n-k,n) / (n-k+1), read by rows
    out = []
    for n in range(rows):
        for k in range(n + 1):
            out.append(comb(n, k) * comb(2 * n - k, n) // (n - k + 1))
    return out


def write(name, title, terms, offset=0):
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / f"b{name[1:]}.txt"
    with path.open("w") as fh:
        fh.write(f"# {name} {title}\n")
        fh.write("# generated by scripts/make_fixtures.py from the defining formula\n")
        for i, v in enumerate(terms):
            fh.write(f"{i + offset} {v}\n")


if __name__ == "__main__":
    write("A111279", "weak sorting permutations", a111279(TERMS))
    write("A006318", "large Schroeder numbers", a006318(TERMS))
    write("A026671", "coefficients of 1/(1 - x/sqrt(1-4x))", a026671(TERMS))
    write("A060693", "Schroeder paths by number of peaks, by rows", a060693(16))
