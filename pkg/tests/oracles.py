"""Independent brute-force oracles for the test suite.

These deliberately share no code with the package's elimination routines:
determinants go through cofactor expansion, ranks through exhaustive minor
search, and characteristic polynomials through cofactor expansion over the
polynomial ring.  Desk-scale only.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from liespec.linalg import RatMatrix


def det_cofactor(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, top in enumerate(rows[0]):
        if not top:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * top * det_cofactor(minor)
    return total


def rank_by_minors(m: RatMatrix) -> int:
    """Largest s such that some s x s minor is nonzero."""
    grid = m.to_rows()
    best = 0
    for s in range(1, min(m.rows, m.cols) + 1):
        found = False
        for row_idx in combinations(range(m.rows), s):
            for col_idx in combinations(range(m.cols), s):
                sub = [[grid[i][j] for j in col_idx] for i in row_idx]
                if det_cofactor(sub):
                    found = True
                    break
            if found:
                break
        if not found:
            return best
        best = s
    return best


# -- polynomial helpers (coefficient lists by ascending degree) --------------

def _poly_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_det(rows):
    n = len(rows)
    if n == 0:
        return [Fraction(1)]
    if n == 1:
        return rows[0][0]
    total = [Fraction(0)]
    for j, top in enumerate(rows[0]):
        if not any(top):
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = _poly_mul(top, _poly_det(minor))
        if j % 2:
            term = [-x for x in term]
        total = _poly_add(total, term)
    return total


def charpoly_cofactor(m: RatMatrix) -> tuple[Fraction, ...]:
    """det(xI - m) via cofactor expansion over Q[x]."""
    n = m.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            constant = -m.at(i, j)
            linear = Fraction(1) if i == j else Fraction(0)
            row.append([constant, linear])
        rows.append(row)
    coeffs = _poly_det(rows)
    coeffs += [Fraction(0)] * (n + 1 - len(coeffs))
    return tuple(coeffs[: n + 1])
