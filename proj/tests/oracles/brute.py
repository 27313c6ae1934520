"""Independent brute-force values frozen into the C++ unit tests.

Run: python3 tests/oracles/brute.py
"""
from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial

import sympy


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def canonical(e, offset):
    """Blocks of consecutive labels for multiplicity vector e = {i: count}."""
    blocks, k = [], offset
    for i in sorted(e):
        for _ in range(e[i]):
            blocks.append(frozenset(range(k, k + i)))
            k += i
    return blocks, k


def type_of(blocks):
    t = {}
    for b in blocks:
        t[len(b)] = t.get(len(b), 0) + 1
    return t


def efact(e):
    r = 1
    for i, k in e.items():
        r *= factorial(k)
    return r


def structure(e1, e2):
    """tau_e1 * tau_e2 in the divided basis, via sum over J(A, A') weighted by f!."""
    a1, n1 = canonical(e1, 0)
    a2, n2 = canonical(e2, n1)
    ground = list(range(n2))
    total = {}
    for c in set_partitions(ground):
        ok = True
        for block in c:
            block = frozenset(block)
            for part in (a1, a2):
                pieces = [p for p in part if p & block]
                inter = block & frozenset().union(*part) if part else frozenset()
                if inter and inter not in part:
                    ok = False
        if not ok:
            continue
        f = type_of([frozenset(b) for b in c])
        key = tuple(sorted(f.items()))
        total[key] = total.get(key, 0) + efact(f)
    # tau_A = e! tau_e, and both factors fixed: divide by e1! e2!
    norm = efact(e1) * efact(e2)
    return {k: Fraction(v, norm) for k, v in total.items()}


def count_m(lam, mu):
    """0-1 matrices with row sums lam and column sums mu, by exhaustive enumeration."""
    l, m = len(lam), len(mu)
    cnt = 0
    for cells in iproduct((0, 1), repeat=l * m):
        rows = [sum(cells[i * m:(i + 1) * m]) for i in range(l)]
        cols = [sum(cells[i * m + j] for i in range(l)) for j in range(m)]
        if rows == list(lam) and cols == list(mu):
            cnt += 1
    return cnt


def partitions(n, m=None):
    if m is None:
        m = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, m), 0, -1):
        for p in partitions(n - k, k):
            yield (k,) + p


def degrees(g, n):
    parts = list(partitions(n))
    chi = [(-1) ** k * sympy.binomial(-(2 - 2 * g), k) for k in range(n + 1)]
    syms = sympy.symbols("d0:%d" % len(parts))
    eqs = []
    for mu in parts:
        rhs = 1
        for j in mu:
            rhs *= chi[j]
        eqs.append(sympy.Eq((-1) ** n * sum(count_m(lam, mu) * s for lam, s in zip(parts, syms)), rhs))
    sol = sympy.solve(eqs, syms)
    return {lam: sol[s] for lam, s in zip(parts, syms)}


if __name__ == "__main__":
    for e1, e2 in [({1: 1}, {1: 1}), ({1: 2}, {1: 1}), ({2: 1}, {1: 1}), ({2: 1}, {2: 1}),
                   ({1: 1, 2: 1}, {1: 2}), ({3: 1}, {1: 1, 2: 1})]:
        print("N", e1, e2, {k: str(v) for k, v in sorted(structure(e1, e2).items())})
    for lam, mu in [((2, 1), (1, 2)), ((1, 1, 1), (2, 1)), ((2, 2, 1), (3, 2)), ((1, 1, 1, 1), (2, 2)),
                    ((3, 2, 1), (2, 2, 2)), ((2, 1, 1), (2, 1, 1))]:
        print("m", lam, mu, count_m(lam, mu))
    for g in range(3):
        for n in range(1, 5):
            print("d", g, n, {"".join(map(str, k)): int(v) for k, v in degrees(g, n).items()})
