"""Root systems, Weyl groups, highest-weight cohomology formulas, and the
closed-form Borel spectrum, all in the character coordinates of the catalog
Cartan subalgebras.

Coordinates are values on the coroot basis, so the i-th simple reflection is
s_i(x) = x - x[i] * alpha_i with no extra pairing data.  The nilradical
cohomology of a Borel entry is computed blockwise: the Cartan action commutes
with the nilradical coboundary, each cochain space splits into Cartan-weight
blocks, and Betti numbers are read off per block.  That is the only place
homology needs more than dimensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BadParamsError, RankTooLargeError, ShapeError, ToolkitError
from .homology import betti_cohomology, cochain_complex
from .linalg import RatMatrix, rat, solve_in_span
from .reporting import Report
from .reps import Representation

_Vector = tuple[Fraction, ...]


def _vec(values) -> _Vector:
    return tuple(rat(x) for x in values)


@dataclass(frozen=True)
class WeylElement:
    matrix: RatMatrix
    length: int
    word: tuple[int, ...]

    def apply(self, vector) -> _Vector:
        return self.matrix.mul_vector(_vec(vector))


class RootSystem:
    """Rank, simple roots, and positive roots in coroot coordinates."""

    __slots__ = ("rank", "simple_roots", "positive_roots")

    def __init__(self, rank: int, simple_roots, positive_roots) -> None:
        simples = tuple(_vec(r) for r in simple_roots)
        positives = tuple(_vec(r) for r in positive_roots)
        if rank < 1 or len(simples) != rank:
            raise ShapeError("need exactly rank simple roots")
        if any(len(r) != rank for r in simples + positives):
            raise ShapeError("root coordinates must have length rank")
        self.rank = rank
        self.simple_roots = simples
        self.positive_roots = positives
        self._validate()

    def simple_reflection(self, i: int) -> RatMatrix:
        alpha = self.simple_roots[i]
        entries = []
        for r in range(self.rank):
            for c in range(self.rank):
                entries.append((1 if r == c else 0) - (alpha[r] if c == i else 0))
        return RatMatrix(self.rank, self.rank, entries)

    def _validate(self) -> None:
        basis = RatMatrix.from_cols(self.rank, [list(r) for r in self.simple_roots])
        for root in self.positive_roots:
            coords = solve_in_span(basis, root)
            if coords is None or any(c.denominator != 1 or c < 0 for c in coords):
                raise ShapeError(f"{root} is not a nonnegative integer root combination")
        all_roots = set(self.positive_roots) | {
            tuple(-x for x in r) for r in self.positive_roots
        }
        for i in range(self.rank):
            refl = self.simple_reflection(i)
            for root in all_roots:
                if tuple(refl.mul_vector(root)) not in all_roots:
                    raise ShapeError(f"reflection {i} does not permute the roots")

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, positive={len(self.positive_roots)})"


def weyl_group(rs: RootSystem) -> list[WeylElement]:
    """The full reflection group by breadth-first closure over simple
    reflections; BFS depth of first discovery is the length."""
    if rs.rank > 3:
        raise RankTooLargeError("Weyl group generation is limited to rank 3")
    identity = WeylElement(RatMatrix.identity(rs.rank), 0, ())
    seen = {identity.matrix: identity}
    frontier = [identity]
    generators = [rs.simple_reflection(i) for i in range(rs.rank)]
    while frontier:
        new_frontier = []
        for element in frontier:
            for i, gen in enumerate(generators):
                candidate = gen @ element.matrix
                if candidate in seen:
                    continue
                new = WeylElement(candidate, element.length + 1, (i,) + element.word)
                seen[candidate] = new
                new_frontier.append(new)
        frontier = new_frontier
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


def rho(rs: RootSystem) -> _Vector:
    """Half the sum of the positive roots."""
    total = [Fraction(0)] * rs.rank
    for root in rs.positive_roots:
        for i, x in enumerate(root):
            total[i] += x
    return tuple(x / 2 for x in total)


def _require_dominant_integral(rs: RootSystem, lam: _Vector) -> None:
    if any(x.denominator != 1 or x < 0 for x in lam):
        raise BadParamsError(f"{lam} is not dominant integral")


def kostant_weights(rs: RootSystem, lam, k: int) -> tuple[_Vector, ...]:
    """The multiset {w(lam + rho) - rho : l(w) = k}."""
    lam = _vec(lam)
    _require_dominant_integral(rs, lam)
    r = rho(rs)
    shifted = tuple(a + b for a, b in zip(lam, r))
    out = []
    for w in weyl_group(rs):
        if w.length == k:
            moved = w.apply(shifted)
            out.append(tuple(a - b for a, b in zip(moved, r)))
    return tuple(sorted(out))


def borel_spectrum_formula(rs: RootSystem, lam) -> tuple[_Vector, ...]:
    """The set {rho + w(lam + rho) : w in the Weyl group}, deduplicated."""
    lam = _vec(lam)
    _require_dominant_integral(rs, lam)
    r = rho(rs)
    shifted = tuple(a + b for a, b in zip(lam, r))
    out = {
        tuple(a + b for a, b in zip(r, w.apply(shifted))) for w in weyl_group(rs)
    }
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Cartan-weight-graded nilradical cohomology for Borel catalog entries
# ---------------------------------------------------------------------------

def _diagonal(m: RatMatrix) -> _Vector:
    for i in range(m.rows):
        for j in range(m.cols):
            if i != j and m.at(i, j):
                raise ToolkitError("Cartan action is not diagonal on this basis")
    return tuple(m.at(i, i) for i in range(m.rows))


def _nilradical_data(entry, v: Representation):
    """Split a Borel entry into Cartan/nilradical parts plus weight data.

    Requires the catalog convention: Cartan basis first, nilradical after,
    both acting diagonally for the Cartan elements."""
    from .catalog import restrict  # local import; catalog builds on this module
    from .linalg import Subspace

    borel = entry.algebra
    r = entry.rank
    if v.algebra != borel:
        raise ToolkitError("module is not defined over the Borel entry")
    n_count = borel.dim - r
    # roots of the nilradical basis under the Cartan
    nil_roots = []
    for t in range(r, borel.dim):
        root = []
        for i in range(r):
            vec = borel.bracket_basis(i, t)
            for idx, c in enumerate(vec):
                if c and idx != t:
                    raise ToolkitError("Cartan does not act diagonally on the nilradical")
            root.append(vec[t])
        nil_roots.append(tuple(root))
    module_weights = [
        tuple(_diagonal(v.action[i])[b] for i in range(r)) for b in range(v.dim)
    ]
    unit = [Fraction(0)] * borel.dim
    columns = []
    for t in range(r, borel.dim):
        col = list(unit)
        col[t] = Fraction(1)
        columns.append(col)
    nil_subspace = Subspace(borel.dim, RatMatrix.from_cols(borel.dim, columns))
    nil_module = restrict(v, nil_subspace)
    return nil_module, nil_roots, module_weights


def nilradical_cohomology_weights(entry, v: Representation) -> list[Counter]:
    """Cartan-weight multiset of H^q(nilradical, v) for q = 0..dim n.

    The cochain spaces split into Cartan-weight blocks and the coboundary
    preserves them; Betti numbers of each block give the multiplicities."""
    nil_module, nil_roots, module_weights = _nilradical_data(entry, v)
    nil = nil_module.algebra
    n, m = nil.dim, v.dim
    complex_ = cochain_complex(nil, nil_module)

    def weight_of(codegree: int):
        subsets = list(combinations(range(n), codegree))
        out = []
        for s in subsets:
            drop = [Fraction(0)] * len(nil_roots[0]) if nil_roots else []
            for t in s:
                drop = [a + b for a, b in zip(drop, nil_roots[t])]
            for b in range(m):
                out.append(tuple(a - d for a, d in zip(module_weights[b], drop)))
        return out

    weights_by_degree = [weight_of(q) for q in range(n + 1)]
    # coboundary must preserve the grading
    for q, delta in enumerate(complex_.deltas):
        wrow = weights_by_degree[q + 1]
        wcol = weights_by_degree[q]
        for i in range(delta.rows):
            for j in range(delta.cols):
                if delta.at(i, j) and wrow[i] != wcol[j]:
                    raise ToolkitError("coboundary does not preserve Cartan weights")

    def block_rank(q: int, weight) -> int:
        if q >= len(complex_.deltas):
            return 0
        delta = complex_.deltas[q]
        rows = [i for i, w in enumerate(weights_by_degree[q + 1]) if w == weight]
        cols = [j for j, w in enumerate(weights_by_degree[q]) if w == weight]
        if not rows or not cols:
            return 0
        sub = RatMatrix(
            len(rows), len(cols), [delta.at(i, j) for i in rows for j in cols]
        )
        from .linalg import rank

        return rank(sub)

    result = []
    for q in range(n + 1):
        counter: Counter = Counter()
        for weight, total in Counter(weights_by_degree[q]).items():
            betti = total - block_rank(q, weight) - block_rank(q - 1, weight)
            if betti:
                counter[weight] = betti
        result.append(counter)
    return result


def _highest_weight(module_weights, rs: RootSystem) -> _Vector:
    weight_set = set(module_weights)
    tops = [
        w
        for w in weight_set
        if all(x >= 0 for x in w)
        and all(
            tuple(a + b for a, b in zip(w, alpha)) not in weight_set
            for alpha in rs.simple_roots
        )
    ]
    if len(tops) != 1:
        raise ToolkitError(f"expected a unique highest weight, found {sorted(tops)}")
    return tops[0]


def check_kostant(entry, v: Representation) -> Report:
    """Nilradical cohomology weights match the Weyl-orbit formula degreewise."""
    rs = entry.root_system
    _, _, module_weights = _nilradical_data(entry, v)
    lam = _highest_weight(module_weights, rs)
    computed = nilradical_cohomology_weights(entry, v)
    failures = []
    for k, counter in enumerate(computed):
        expected = Counter(kostant_weights(rs, lam, k))
        if counter != expected:
            failures.append(
                f"degree {k}: computed {sorted(counter.items())} vs formula {sorted(expected.items())}"
            )
    return Report(name="kostant-weights", passed=not failures, details=tuple(failures))


def check_semidirect_formula(entry, v: Representation) -> Report:
    """Borel cohomology dimensions match the Cartan-exterior times invariant
    nilradical cohomology count; the two sides share no computation."""
    borel = entry.algebra
    r = entry.rank
    direct = betti_cohomology(borel, v)
    graded = nilradical_cohomology_weights(entry, v)
    zero = tuple(Fraction(0) for _ in range(r))
    zeros_per_degree = [counter.get(zero, 0) for counter in graded]
    failures = []
    for k in range(borel.dim + 1):
        predicted = sum(
            comb(r, p) * zeros_per_degree[k - p]
            for p in range(max(0, k - len(zeros_per_degree) + 1), min(r, k) + 1)
        )
        if predicted != direct[k]:
            failures.append(f"degree {k}: direct {direct[k]} vs formula {predicted}")
    return Report(
        name="semidirect-cohomology", passed=not failures, details=tuple(failures)
    )
