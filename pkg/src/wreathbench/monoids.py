"""Finite monoids given by explicit Cayley tables.

The table convention is ``table[i][j] = index of element_i * element_j``
(left factor indexes rows).  The identity must be two-sided; a merely
right identity is rejected by validation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import MonoidValidationError
from .transformations import Transformation, compose, enumerate_Tn

MONOID_FILE_KEYS = {"name", "elements", "identity", "table"}


@dataclass(frozen=True)
class FiniteMonoid:
    labels: tuple[str, ...]
    identity: int
    table: tuple[tuple[int, ...], ...]
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    # alias used by the Green's-relation machinery, which accepts any
    # carrier exposing .size and .product
    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def elements(self) -> range:
        return range(self.order)

    def is_idempotent(self, i: int) -> bool:
        return self.table[i][i] == i

    def idempotents(self) -> list[int]:
        return [i for i in range(self.order) if self.table[i][i] == i]

    def left_ideal(self, i: int) -> frozenset[int]:
        """M*i; contains i since M has an identity."""
        return frozenset(self.table[m][i] for m in range(self.order))

    def label_of(self, i: int) -> str:
        return self.labels[i]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"FiniteMonoid({self.name or list(self.labels)}, order={self.order})"


def validate_monoid(labels, identity, table, name="") -> FiniteMonoid:
    """Check a raw table and wrap it.  Errors cite the first offending datum:
    the violating triple (i,j,k) for associativity, the violating element for
    the identity law."""
    labels = tuple(str(x) for x in labels)
    m = len(labels)
    if m == 0:
        raise MonoidValidationError("empty element list")
    if len(set(labels)) != m:
        raise MonoidValidationError("element labels are not distinct")
    if not isinstance(identity, int) or not 0 <= identity < m:
        raise MonoidValidationError(f"identity index {identity!r} out of range 0..{m - 1}")
    if len(table) != m:
        raise MonoidValidationError(f"table has {len(table)} rows, expected {m}")
    rows = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != m:
            raise MonoidValidationError(f"row {i} has {len(row)} entries, expected {m}", witness=i)
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < m:
                raise MonoidValidationError(f"table[{i}][{j}] = {v!r} out of range", witness=(i, j))
        rows.append(row)
    tab = tuple(rows)
    e = identity
    for x in range(m):
        if tab[e][x] != x or tab[x][e] != x:
            raise MonoidValidationError(
                f"element {labels[x]!r} violates the two-sided identity law", witness=x
            )
    for i in range(m):
        ti = tab[i]
        for j in range(m):
            tij = ti[j]
            tj = tab[j]
            for k in range(m):
                if tab[tij][k] != ti[tj[k]]:
                    raise MonoidValidationError(
                        f"associativity fails at triple ({i},{j},{k}): "
                        f"({labels[i]}*{labels[j]})*{labels[k]} != {labels[i]}*({labels[j]}*{labels[k]})",
                        witness=(i, j, k),
                    )
    return FiniteMonoid(labels, identity, tab, name)


def monoid_from_dict(data: dict) -> FiniteMonoid:
    if not isinstance(data, dict):
        raise MonoidValidationError("monoid file must hold a JSON object")
    unknown = set(data) - MONOID_FILE_KEYS
    if unknown:
        raise MonoidValidationError(f"unknown keys in monoid file: {sorted(unknown)}")
    for key in ("elements", "identity", "table"):
        if key not in data:
            raise MonoidValidationError(f"monoid file missing key {key!r}")
    return validate_monoid(
        data["elements"], data["identity"], data["table"], name=data.get("name", "")
    )


def monoid_to_dict(M: FiniteMonoid) -> dict:
    return {
        "name": M.name,
        "elements": list(M.labels),
        "identity": M.identity,
        "table": [list(row) for row in M.table],
    }


def load_monoid(path) -> FiniteMonoid:
    with open(path, "r", encoding="utf-8") as f:
        return monoid_from_dict(json.load(f))


def units(M: FiniteMonoid) -> tuple[int, ...]:
    """The group of units, by brute-force invertibility."""
    e = M.identity
    out = []
    for a in range(M.order):
        if any(M.table[a][b] == e and M.table[b][a] == e for b in range(M.order)):
            out.append(a)
    return tuple(out)


def inverse_of(M: FiniteMonoid, a: int) -> int:
    e = M.identity
    for b in range(M.order):
        if M.table[a][b] == e and M.table[b][a] == e:
            return b
    raise ValueError(f"element {M.labels[a]!r} is not invertible")


def is_group(M: FiniteMonoid) -> bool:
    return len(units(M)) == M.order


def submonoid(M: FiniteMonoid, indices, name="") -> tuple[FiniteMonoid, list[int]]:
    """Relabel a closed, identity-containing subset as a monoid of its own.

    Returns (submonoid, carrier) where carrier[i] is the M-index of the
    i-th submonoid element.
    """
    carrier = sorted(set(indices))
    if M.identity not in carrier:
        raise MonoidValidationError("subset does not contain the identity")
    pos = {m: i for i, m in enumerate(carrier)}
    table = []
    for a in carrier:
        row = []
        for b in carrier:
            c = M.table[a][b]
            if c not in pos:
                raise MonoidValidationError(
                    f"subset not closed: {M.labels[a]}*{M.labels[b]} escapes", witness=(a, b)
                )
            row.append(pos[c])
        table.append(tuple(row))
    sub = FiniteMonoid(
        tuple(M.labels[m] for m in carrier), pos[M.identity], tuple(table), name or M.name
    )
    return sub, carrier


def units_submonoid(M: FiniteMonoid) -> tuple[FiniteMonoid, list[int]]:
    return submonoid(M, units(M), name=f"U({M.name})" if M.name else "")


def power_monoid(M: FiniteMonoid, n: int) -> FiniteMonoid:
    """Direct power M^n with coordinatewise multiplication; elements ordered
    by index-tuple odometer."""
    import itertools

    tuples = list(itertools.product(range(M.order), repeat=n))
    pos = {t: i for i, t in enumerate(tuples)}
    labels = tuple("(" + ",".join(M.labels[i] for i in t) + ")" for t in tuples)
    table = tuple(
        tuple(pos[tuple(M.table[a[i]][b[i]] for i in range(n))] for b in tuples) for a in tuples
    )
    return FiniteMonoid(labels, pos[(M.identity,) * n], table, name=f"{M.name}^{n}")


def full_transformation_monoid(n: int) -> FiniteMonoid:
    """T_n as a Cayley table; elements in lexicographic image order, labelled
    by their image strings."""
    elems = enumerate_Tn(n, "full")
    pos = {t: i for i, t in enumerate(elems)}
    labels = tuple("".join(str(v) for v in t.images) for t in elems)
    table = tuple(tuple(pos[compose(s, t)] for t in elems) for s in elems)
    ident = pos[Transformation(tuple(range(1, n + 1)))]
    return FiniteMonoid(labels, ident, table, name=f"T{n}")


def _cyclic(k: int) -> FiniteMonoid:
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g{i}") for i in range(k))
    table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    return FiniteMonoid(labels, 0, table, name=f"Z{k}")


def _b01() -> FiniteMonoid:
    # {1, 0} with 0 a two-sided zero
    return FiniteMonoid(("1", "0"), 0, ((0, 1), (1, 1)), name="B01")


def _rz1() -> FiniteMonoid:
    # right-zero semigroup {x, y} with an identity adjoined: xy = y, yx = x
    return FiniteMonoid(("1", "x", "y"), 0, ((0, 1, 2), (1, 1, 2), (2, 1, 2)), name="RZ1")


def _n3() -> FiniteMonoid:
    # monogenic {1, a, a^2} with a^3 = a^2: the non-unit part is not
    # idempotent-generated, so <E(M)> is a proper subset of {1} u (M \ G)
    return FiniteMonoid(("1", "a", "a2"), 0, ((0, 1, 2), (1, 2, 2), (2, 2, 2)), name="N3")


FIXTURES = {
    "T1": lambda: full_transformation_monoid(1),
    "Z2": lambda: _cyclic(2),
    "Z3": lambda: _cyclic(3),
    "B01": _b01,
    "RZ1": _rz1,
    "T2": lambda: full_transformation_monoid(2),
    "N3": _n3,
}


@lru_cache(maxsize=None)
def fixture(name: str) -> FiniteMonoid:
    key = name.lstrip("@")
    if key not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}")
    return FIXTURES[key]()


def resolve_monoid(spec: str) -> FiniteMonoid:
    """Either a built-in fixture name like '@Z2' or a path to a JSON file."""
    if spec.startswith("@"):
        return fixture(spec)
    return load_monoid(spec)
