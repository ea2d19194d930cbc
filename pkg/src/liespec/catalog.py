"""Built-in algebras and modules with their Cartan/Borel/root-system data.

Everything downstream tests against these fixtures.  sl3 is generated from
its 3x3 matrix model (commutators re-expressed on the basis), so its
structure constants are never hand-typed; the Borel entries are genuine
restrictions of their parents through the same code path users get.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import BadParamsError, NotASubalgebraError, UnknownNameError
from .liealg import Character, LieAlgebra, adjoint_rep, bracket
from .linalg import RatMatrix, Subspace, rat, solve_in_span
from .reps import Representation, check_representation, trivial_module, one_dim_module
from .roots import RootSystem


@dataclass
class CatalogEntry:
    name: str
    params: tuple[Fraction, ...]
    algebra: LieAlgebra
    cartan: Subspace | None = None
    rank: int | None = None
    root_system: RootSystem | None = None
    borel: Subspace | None = None
    parent: "CatalogEntry | None" = None
    module_names: tuple[str, ...] = ()
    _builders: dict = field(default_factory=dict, repr=False)

    def module(self, ref: str) -> Representation:
        """Build a shipped module from a reference like "irrep:2" or
        "char:1:0:0"; "restrict:<ref>" resolves против the parent entry."""
        head, _, rest = ref.partition(":")
        if head == "restrict":
            if self.parent is None or self.borel is None:
                raise BadParamsError(f"entry {self.name} has no parent to restrict from")
            return restrict(self.parent.module(rest), self.borel)
        if head == "char":
            values = [rat(x) for x in rest.split(":")] if rest else []
            if len(values) != self.algebra.dim:
                raise BadParamsError(
                    f"char needs {self.algebra.dim} values for {self.name}"
                )
            return one_dim_module(self.algebra, Character(self.algebra, values))
        builder = self._builders.get(head)
        if builder is None:
            raise BadParamsError(f"entry {self.name} has no module {ref!r}")
        args = rest.split(":") if rest else []
        return builder(*args)

    def default_modules(self) -> list[tuple[str, Representation]]:
        return [(ref, self.module(ref)) for ref in self.module_names]


def _unit_columns(dim: int, indices: Sequence[int]) -> Subspace:
    cols = []
    for t in indices:
        col = [Fraction(0)] * dim
        col[t] = Fraction(1)
        cols.append(col)
    return Subspace(dim, RatMatrix.from_cols(dim, cols))


def subalgebra_of(g: LieAlgebra, sub: Subspace) -> LieAlgebra:
    """The Lie algebra structure on a bracket-closed subspace, on sub's
    (canonical) basis order.  Unit-vector basis columns keep their names."""
    if sub.ambient_dim != g.dim:
        raise NotASubalgebraError("subspace lives in the wrong ambient space")
    cols = [list(c) for c in sub.vectors()]
    brackets: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            w = bracket(g, cols[i], cols[j])
            coords = solve_in_span(sub.basis, w)
            if coords is None:
                raise NotASubalgebraError("subspace is not closed under the bracket")
            brackets[(i, j)] = coords
    names = []
    for k, col in enumerate(cols):
        hot = [t for t, x in enumerate(col) if x]
        if len(hot) == 1 and col[hot[0]] == 1:
            names.append(g.basis_names[hot[0]])
        else:
            names.append(f"s{k + 1}")
    return LieAlgebra(len(cols), names, brackets)


def restrict(v: Representation, sub: Subspace) -> Representation:
    """Restrict a module to a bracket-closed subspace of its algebra."""
    sub_algebra = subalgebra_of(v.algebra, sub)
    cols = [list(c) for c in sub.vectors()]
    action = []
    for col in cols:
        m = RatMatrix.zeros(v.dim, v.dim)
        for t, c in enumerate(col):
            if c:
                m = m + v.action[t].scale(c)
        action.append(m)
    return Representation(sub_algebra, v.dim, v.side, action)


@lru_cache(maxsize=None)
def _sl2_algebra() -> LieAlgebra:
    return LieAlgebra(
        3,
        ("h", "e", "f"),
        {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
    )


def sl2_irrep(m: int) -> Representation:
    """The (m+1)-dimensional simple sl2 module with integer matrices."""
    m = int(m)
    if m < 0:
        raise BadParamsError("highest weight must be nonnegative")
    g = _sl2_algebra()
    n = m + 1
    h = RatMatrix(n, n, [(m - 2 * k) if k == l else 0 for k in range(n) for l in range(n)])
    e_entries = [Fraction(0)] * (n * n)
    f_entries = [Fraction(0)] * (n * n)
    for k in range(1, n):
        e_entries[(k - 1) * n + k] = Fraction(m - k + 1)  # raises v_k -> v_{k-1}
    for k in range(n - 1):
        f_entries[(k + 1) * n + k] = Fraction(k + 1)  # lowers v_k -> v_{k+1}
    rep = Representation(g, n, "left", [h, RatMatrix(n, n, e_entries), RatMatrix(n, n, f_entries)])
    return rep


def _matrix_unit(i: int, j: int) -> list[Fraction]:
    out = [Fraction(0)] * 9
    out[i * 3 + j] = Fraction(1)
    return out


def _mat3_commutator(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def mul(x, y):
        return [
            sum(x[i * 3 + k] * y[k * 3 + j] for k in range(3))
            for i in range(3)
            for j in range(3)
        ]

    ab, ba = mul(a, b), mul(b, a)
    return [p - q for p, q in zip(ab, ba)]


@lru_cache(maxsize=None)
def _sl3_algebra() -> LieAlgebra:
    h1 = [a - b for a, b in zip(_matrix_unit(0, 0), _matrix_unit(1, 1))]
    h2 = [a - b for a, b in zip(_matrix_unit(1, 1), _matrix_unit(2, 2))]
    basis = [
        h1,
        h2,
        _matrix_unit(0, 1),  # e1
        _matrix_unit(1, 2),  # e2
        _matrix_unit(0, 2),  # e12
        _matrix_unit(1, 0),  # f1
        _matrix_unit(2, 1),  # f2
        _matrix_unit(2, 0),  # f12
    ]
    names = ("h1", "h2", "e1", "e2", "e12", "f1", "f2", "f12")
    cols = RatMatrix.from_cols(9, basis)
    brackets = {}
    for i in range(8):
        for j in range(i + 1, 8):
            comm = _mat3_commutator(basis[i], basis[j])
            coords = solve_in_span(cols, comm)
            assert coords is not None
            brackets[(i, j)] = coords
    return LieAlgebra(8, names, brackets)


_A1 = lambda: RootSystem(1, [[2]], [[2]])
_A2 = lambda: RootSystem(2, [[2, -1], [-1, 2]], [[2, -1], [-1, 2], [1, 1]])
_A1XA1 = lambda: RootSystem(2, [[2, 0], [0, 2]], [[2, 0], [0, 2]])


@lru_cache(maxsize=None)
def _a1xa1_algebra() -> LieAlgebra:
    # two commuting sl2 blocks, Cartan elements first
    names = ("h1", "h2", "e1", "e2", "f1", "f2")
    brackets = {
        (0, 2): [0, 0, 2, 0, 0, 0],  # [h1, e1] = 2 e1
        (0, 4): [0, 0, 0, 0, -2, 0],
        (1, 3): [0, 0, 0, 2, 0, 0],
        (1, 5): [0, 0, 0, 0, 0, -2],
        (2, 4): [1, 0, 0, 0, 0, 0],  # [e1, f1] = h1
        (3, 5): [0, 1, 0, 0, 0, 0],
    }
    return LieAlgebra(6, names, brackets)


def a1xa1_irrep(a: int, b: int) -> Representation:
    """Outer product of two sl2 simples over the rank-2 product algebra."""
    a, b = int(a), int(b)
    va, vb = sl2_irrep(a), sl2_irrep(b)
    g = _a1xa1_algebra()
    ia = RatMatrix.identity(va.dim)
    ib = RatMatrix.identity(vb.dim)
    ha, ea, fa = va.action
    hb, eb, fb = vb.action
    action = [
        ha.kron(ib),
        ia.kron(hb),
        ea.kron(ib),
        ia.kron(eb),
        fa.kron(ib),
        ia.kron(fb),
    ]
    return Representation(g, va.dim * vb.dim, "left", action)


def _validated(entry: CatalogEntry) -> CatalogEntry:
    for ref, module in entry.default_modules():
        report = check_representation(module)
        if not report.passed:
            raise BadParamsError(f"catalog module {entry.name}:{ref} is invalid")
    return entry


def _entry_abelian(n: int) -> CatalogEntry:
    if n < 1:
        raise BadParamsError("abelian algebras need positive dimension")
    g = LieAlgebra(n, [f"a{k + 1}" for k in range(n)], {})
    entry = CatalogEntry(
        name=f"abelian:{n}",
        params=(Fraction(n),),
        algebra=g,
        module_names=("trivial", "char:" + ":".join(["1"] + ["0"] * (n - 1))),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    if n == 1:
        entry._builders["jordan2"] = lambda: Representation(
            g, 2, "left", [RatMatrix.from_rows([[0, 1], [0, 0]])]
        )
        entry._builders["rotation2"] = lambda: Representation(
            g, 2, "left", [RatMatrix.from_rows([[0, -1], [1, 0]])]
        )
        entry.module_names = entry.module_names + ("jordan2",)
    return _validated(entry)


def _entry_heisenberg3() -> CatalogEntry:
    g = LieAlgebra(3, ("x", "y", "z"), {(0, 1): [0, 0, 1]})
    entry = CatalogEntry(
        name="heisenberg3",
        params=(),
        algebra=g,
        module_names=(
            "trivial",
            "indecomposable2",
            "char:1:0:0",
            "char:0:1:0",
            "char:1/2:-1:0",
        ),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    entry._builders["indecomposable2"] = lambda: Representation(
        g,
        2,
        "left",
        [
            RatMatrix.from_rows([[0, 1], [0, 0]]),
            RatMatrix.zeros(2, 2),
            RatMatrix.zeros(2, 2),
        ],
    )
    return _validated(entry)


def _entry_solvable3(lam: Fraction) -> CatalogEntry:
    g = LieAlgebra(
        3,
        ("e1", "e2", "e3"),
        {(0, 1): [0, 1, 0], (0, 2): [0, 0, lam]},
    )
    entry = CatalogEntry(
        name=f"solvable3:{lam}",
        params=(lam,),
        algebra=g,
        module_names=("trivial", "char:1:0:0"),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    return _validated(entry)


def _entry_sl2() -> CatalogEntry:
    g = _sl2_algebra()
    entry = CatalogEntry(
        name="sl2",
        params=(),
        algebra=g,
        cartan=_unit_columns(3, [0]),
        rank=1,
        root_system=_A1(),
        borel=_unit_columns(3, [0, 1]),
        module_names=("trivial", "adjoint", "irrep:0", "irrep:1", "irrep:2", "irrep:3"),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    entry._builders["adjoint"] = lambda: adjoint_rep(g)
    entry._builders["irrep"] = lambda m: sl2_irrep(int(m))
    return _validated(entry)


def _entry_borel_sl2() -> CatalogEntry:
    parent = _entry_sl2()
    restricted = restrict(trivial_module(parent.algebra), parent.borel)
    g = restricted.algebra
    entry = CatalogEntry(
        name="borel_sl2",
        params=(),
        algebra=g,
        cartan=_unit_columns(2, [0]),
        rank=1,
        root_system=_A1(),
        borel=parent.borel,
        parent=parent,
        module_names=(
            "trivial",
            "char:1:0",
            "restrict:irrep:1",
            "restrict:irrep:2",
            "restrict:irrep:3",
        ),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    return _validated(entry)


def _entry_sl3() -> CatalogEntry:
    g = _sl3_algebra()
    entry = CatalogEntry(
        name="sl3",
        params=(),
        algebra=g,
        cartan=_unit_columns(8, [0, 1]),
        rank=2,
        root_system=_A2(),
        borel=_unit_columns(8, [0, 1, 2, 3, 4]),
        module_names=("trivial", "adjoint"),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    entry._builders["adjoint"] = lambda: adjoint_rep(g)
    return _validated(entry)


def _entry_borel_sl3() -> CatalogEntry:
    parent = _entry_sl3()
    restricted = restrict(trivial_module(parent.algebra), parent.borel)
    g = restricted.algebra
    entry = CatalogEntry(
        name="borel_sl3",
        params=(),
        algebra=g,
        cartan=_unit_columns(5, [0, 1]),
        rank=2,
        root_system=_A2(),
        borel=parent.borel,
        parent=parent,
        module_names=("trivial", "restrict:adjoint"),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    return _validated(entry)


def _entry_a1xa1() -> CatalogEntry:
    g = _a1xa1_algebra()
    entry = CatalogEntry(
        name="a1xa1",
        params=(),
        algebra=g,
        cartan=_unit_columns(6, [0, 1]),
        rank=2,
        root_system=_A1XA1(),
        borel=_unit_columns(6, [0, 1, 2, 3]),
        module_names=("trivial", "irrep:1:1"),
    )
    entry._builders["trivial"] = lambda: trivial_module(g)
    entry._builders["irrep"] = lambda a, b: a1xa1_irrep(int(a), int(b))
    return _validated(entry)


def get(name: str, params: Sequence = ()) -> CatalogEntry:
    """Fetch a fully validated catalog entry by name and parameters."""
    params = tuple(rat(p) for p in params)
    if name == "abelian":
        if len(params) != 1 or params[0].denominator != 1:
            raise BadParamsError("abelian takes one integer dimension")
        return _entry_abelian(int(params[0]))
    if name == "heisenberg3":
        _no_params(name, params)
        return _entry_heisenberg3()
    if name == "solvable3":
        if len(params) > 1:
            raise BadParamsError("solvable3 takes at most one rational parameter")
        lam = params[0] if params else Fraction(5, 3)
        return _entry_solvable3(lam)
    if name == "sl2":
        _no_params(name, params)
        return _entry_sl2()
    if name == "borel_sl2":
        _no_params(name, params)
        return _entry_borel_sl2()
    if name == "sl3":
        _no_params(name, params)
        return _entry_sl3()
    if name == "borel_sl3":
        _no_params(name, params)
        return _entry_borel_sl3()
    if name == "a1xa1":
        _no_params(name, params)
        return _entry_a1xa1()
    raise UnknownNameError(f"no catalog entry named {name!r}")


def _no_params(name: str, params: tuple) -> None:
    if params:
        raise BadParamsError(f"{name} takes no parameters")


CATALOG_NAMES = (
    "abelian",
    "heisenberg3",
    "solvable3",
    "sl2",
    "borel_sl2",
    "sl3",
    "borel_sl3",
    "a1xa1",
)
