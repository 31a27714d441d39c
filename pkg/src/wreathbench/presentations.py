"""Presentation families for singular wreath products, with evaluation maps.

Letters carry their semantic parameters (positions, monoid-element indices),
so an emitted presentation is self-describing: the canonical evaluation map
is reconstructed from the letter parameters alone.  Chained equations
u = v = w from a family are normalized into the pairs (u, v), (v, w), which
generate the same congruence.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

from .errors import PreconditionError
from .green import has_unit_complement_E, incomparable_L_witness, is_L_chain, l_chain_element_order
from .monoids import FiniteMonoid, inverse_of, is_group, submonoid, units, units_submonoid
from .transformations import compose, epsilon, index_pairs
from .wreath import WreathContext, eps_a, eps_ab, eps_elem, validate_action

ALPHABET_LIMIT = 4096


@dataclass(frozen=True)
class Letter:
    name: str
    params: tuple[tuple[str, object], ...] = ()

    def param(self, key):
        return dict(self.params)[key]


@dataclass(frozen=True)
class Relation:
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    tag: str


@dataclass
class Presentation:
    kind: str  # "semigroup" | "monoid"
    letters: tuple[Letter, ...]
    relations: tuple[Relation, ...]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("semigroup", "monoid"):
            raise ValueError(f"unknown kind {self.kind!r}")
        na = len(self.letters)
        for rel in self.relations:
            for side in (rel.lhs, rel.rhs):
                if self.kind == "semigroup" and not side:
                    raise ValueError(f"empty word in semigroup relation {rel.tag}")
                for l in side:
                    if not 0 <= l < na:
                        raise ValueError(f"relation {rel.tag} references missing letter {l}")

    def letter_index(self) -> dict:
        return {lt.params: i for i, lt in enumerate(self.letters)}

    def family_counts(self) -> dict[str, int]:
        return dict(Counter(r.tag for r in self.relations))

    def word_str(self, word) -> str:
        return "*".join(self.letters[l].name for l in word) or "1"


@dataclass
class EvaluationMap:
    images: tuple
    multiply: object
    identity: object = None


def evaluate(word, emap: EvaluationMap):
    """Left-to-right fold of the letter images; the empty word is only legal
    when the map carries an identity (monoid targets)."""
    if not word:
        if emap.identity is None:
            raise ValueError("empty word evaluated against a semigroup target")
        return emap.identity
    val = emap.images[word[0]]
    for l in word[1:]:
        val = emap.multiply(val, emap.images[l])
    return val


@dataclass
class SoundnessReport:
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def soundness(p: Presentation, emap: EvaluationMap) -> SoundnessReport:
    """Check that every relation is preserved by the evaluation map."""
    failures = []
    for idx, rel in enumerate(p.relations):
        lv = evaluate(rel.lhs, emap)
        rv = evaluate(rel.rhs, emap)
        if lv != rv:
            failures.append(
                {
                    "index": idx,
                    "tag": rel.tag,
                    "lhs": p.word_str(rel.lhs),
                    "rhs": p.word_str(rel.rhs),
                    "lhs_value": repr(lv),
                    "rhs_value": repr(rv),
                }
            )
    return SoundnessReport(checked=len(p.relations), failures=failures)


# ---------------------------------------------------------------------------
# alphabets

def _ordered_tuples(n, k):
    return [t for t in itertools.permutations(range(1, n + 1), k)]


def _x_letters(n):
    letters = []
    index = {}
    for i, j in index_pairs(n):
        index[(i, j)] = len(letters)
        letters.append(Letter(f"e({i},{j})", (("i", i), ("j", j))))
    return letters, index


def _x1_letters(M, n):
    letters = []
    index = {}
    for i, j in index_pairs(n):
        for a in range(M.order):
            index[(i, j, a)] = len(letters)
            letters.append(Letter(f"e({i},{j};{M.labels[a]})", (("i", i), ("j", j), ("a", a))))
    return letters, index


def _x2_letters(M, n):
    letters = []
    index = {}
    for i, j in index_pairs(n):
        for a in range(M.order):
            for b in range(M.order):
                index[(i, j, a, b)] = len(letters)
                letters.append(
                    Letter(
                        f"e({i},{j};{M.labels[a]},{M.labels[b]})",
                        (("i", i), ("j", j), ("a", a), ("b", b)),
                    )
                )
    return letters, index


def _xn_letters(M, n):
    letters = []
    index = {}
    for i, j in index_pairs(n):
        for tup in itertools.product(range(M.order), repeat=n):
            index[(i, j, tup)] = len(letters)
            name = ",".join(M.labels[a] for a in tup)
            letters.append(Letter(f"e({i},{j};[{name}])", (("i", i), ("j", j), ("tup", tup))))
    return letters, index


# ---------------------------------------------------------------------------
# the presentation of the singular part itself

def emit_R(n: int) -> Presentation:
    """Defining relations of the singular part over its rank n-1 idempotents:
    idempotency/absorption, disjoint commutation, and the three- and
    four-index braid-like identities."""
    if n < 2:
        raise ValueError("n must be at least 2")
    letters, L = _x_letters(n)
    rels = []
    add = rels.append
    for i, j in index_pairs(n):
        e, f = L[(i, j)], L[(j, i)]
        add(Relation((e, e), (e,), "R1"))
        add(Relation((e,), (f, e), "R1"))
    for i, j, k, l in _ordered_tuples(n, 4):
        add(Relation((L[(i, j)], L[(k, l)]), (L[(k, l)], L[(i, j)]), "R2"))
    for i, j, k in _ordered_tuples(n, 3):
        add(Relation((L[(i, k)], L[(j, k)]), (L[(i, k)],), "R3"))
    for i, j, k in _ordered_tuples(n, 3):
        add(Relation((L[(i, j)], L[(i, k)]), (L[(i, k)], L[(i, j)]), "R4"))
        add(Relation((L[(i, k)], L[(i, j)]), (L[(j, k)], L[(i, j)]), "R4"))
    for i, j, k in _ordered_tuples(n, 3):
        add(
            Relation(
                (L[(k, i)], L[(i, j)], L[(j, k)]),
                (L[(i, k)], L[(k, j)], L[(j, i)], L[(i, k)]),
                "R5",
            )
        )
    for i, j, k, l in _ordered_tuples(n, 4):
        add(
            Relation(
                (L[(k, i)], L[(i, j)], L[(j, k)], L[(k, l)]),
                (L[(i, k)], L[(k, l)], L[(l, i)], L[(i, j)], L[(j, l)]),
                "R6",
            )
        )
    return Presentation("semigroup", tuple(letters), tuple(rels), {"family": "R", "n": n})


# ---------------------------------------------------------------------------
# full-tuple generators

def emit_Rn(M: FiniteMonoid, n: int, alphabet_limit: int = ALPHABET_LIMIT) -> Presentation:
    """The semidirect-product presentation specialized to the wreath product:
    each base relation decorated with an arbitrary tuple on its first letter,
    plus the tuple-collapse family that rewrites a product of two decorated
    letters into a single decorated letter."""
    from .errors import CapacityError

    if n < 2:
        raise ValueError("n must be at least 2")
    size = len(index_pairs(n)) * M.order**n
    if size > alphabet_limit:
        raise CapacityError("tuple alphabet too large", count=size)
    letters, L = _xn_letters(M, n)
    one = M.identity
    ones = (one,) * n
    tuples = list(itertools.product(range(M.order), repeat=n))
    rels = []
    add = rels.append
    for i, j in index_pairs(n):
        for a in tuples:
            add(Relation((L[(i, j, a)], L[(i, j, ones)]), (L[(i, j, a)],), "R1_n"))
            add(Relation((L[(i, j, a)],), (L[(j, i, a)], L[(i, j, ones)]), "R1_n"))
    for i, j, k, l in _ordered_tuples(n, 4):
        for a in tuples:
            add(
                Relation(
                    (L[(i, j, a)], L[(k, l, ones)]), (L[(k, l, a)], L[(i, j, ones)]), "R2_n"
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a in tuples:
            add(Relation((L[(i, k, a)], L[(j, k, ones)]), (L[(i, k, a)],), "R3_n"))
    for i, j, k in _ordered_tuples(n, 3):
        for a in tuples:
            add(
                Relation(
                    (L[(i, j, a)], L[(i, k, ones)]), (L[(i, k, a)], L[(i, j, ones)]), "R4_n"
                )
            )
            add(
                Relation(
                    (L[(i, k, a)], L[(i, j, ones)]), (L[(j, k, a)], L[(i, j, ones)]), "R4_n"
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a in tuples:
            add(
                Relation(
                    (L[(k, i, a)], L[(i, j, ones)], L[(j, k, ones)]),
                    (L[(i, k, a)], L[(k, j, ones)], L[(j, i, ones)], L[(i, k, ones)]),
                    "R5_n",
                )
            )
    for i, j, k, l in _ordered_tuples(n, 4):
        for a in tuples:
            add(
                Relation(
                    (L[(k, i, a)], L[(i, j, ones)], L[(j, k, ones)], L[(k, l, ones)]),
                    (
                        L[(i, k, a)],
                        L[(k, l, ones)],
                        L[(l, i, ones)],
                        L[(i, j, ones)],
                        L[(j, l, ones)],
                    ),
                    "R6_n",
                )
            )
    # collapse: e_{ij;a} e_{kl;b} = e_{ij;c} e_{kl} with c = a . (eps_ij . b),
    # i.e. c_j = a_j b_i and c_m = a_m b_m elsewhere; i,j,k,l need not be
    # distinct beyond i != j, k != l
    mul = M.mul
    for i, j in index_pairs(n):
        for a in tuples:
            for k, l in index_pairs(n):
                for b in tuples:
                    c = tuple(
                        mul(a[m], b[i - 1]) if m == j - 1 else mul(a[m], b[m])
                        for m in range(n)
                    )
                    add(
                        Relation(
                            (L[(i, j, a)], L[(k, l, b)]), (L[(i, j, c)], L[(k, l, ones)]), "R7_n"
                        )
                    )
    return Presentation(
        "semigroup", tuple(letters), tuple(rels), {"family": "Rn", "monoid": M.name, "n": n}
    )


# ---------------------------------------------------------------------------
# two-entry generators

def emit_R2(M: FiniteMonoid, n: int) -> Presentation:
    """Presentation over the generators carrying two monoid entries.  Sound
    for every monoid; certifies the wreath product at desk scale."""
    if n < 2:
        raise ValueError("n must be at least 2")
    letters, L = _x2_letters(M, n)
    mul = M.mul
    one = M.identity
    ms = range(M.order)
    rels = []
    add = rels.append
    for i, j in index_pairs(n):
        for a, b, c, d in itertools.product(ms, repeat=4):
            mid = (L[(i, j, mul(a, c), mul(b, c))],)
            add(Relation((L[(i, j, a, b)], L[(i, j, c, d)]), mid, "R1_2"))
            add(Relation(mid, (L[(j, i, b, a)], L[(i, j, d, c)]), "R1_2"))
    for i, j, k, l in _ordered_tuples(n, 4):
        for a, b, c, d in itertools.product(ms, repeat=4):
            add(
                Relation(
                    (L[(i, j, a, b)], L[(k, l, c, d)]),
                    (L[(k, l, c, d)], L[(i, j, a, b)]),
                    "R2_2",
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a, b, c in itertools.product(ms, repeat=3):
            add(Relation((L[(i, k, a, b)], L[(j, k, one, c)]), (L[(i, k, a, b)],), "R3a_2"))
    for i, j, k in _ordered_tuples(n, 3):
        for a, b, c in itertools.product(ms, repeat=3):
            add(
                Relation(
                    (L[(i, k, a, b)], L[(j, k, c, one)]),
                    (L[(k, i, b, a)], L[(j, i, c, one)], L[(i, k, one, one)]),
                    "R3b_2",
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a, b in itertools.product(ms, repeat=2):
            add(
                Relation(
                    (L[(i, k, a, a)], L[(j, k, b, one)]),
                    (L[(i, k, one, one)], L[(j, k, b, one)], L[(i, k, a, one)]),
                    "R3c_2",
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a, b, c, d in itertools.product(ms, repeat=4):
            mid = (L[(i, k, mul(a, c), d)], L[(i, j, one, mul(b, c))])
            add(Relation((L[(i, j, a, b)], L[(i, k, c, d)]), mid, "R4a_2"))
            add(Relation(mid, (L[(j, k, mul(b, c), d)], L[(i, j, mul(a, c), one)]), "R4a_2"))
    for i, j, k in _ordered_tuples(n, 3):
        for a, b, c, d in itertools.product(ms, repeat=4):
            mid = (L[(i, k, c, mul(b, d))], L[(i, j, one, mul(a, d))])
            add(Relation((L[(i, j, c, mul(a, d))], L[(i, k, one, mul(b, d))]), mid, "R4b_2"))
            add(Relation(mid, (L[(j, k, a, b)], L[(i, j, c, d)]), "R4b_2"))
    oo = (one, one)
    for i, j, k in _ordered_tuples(n, 3):
        add(
            Relation(
                (L[(k, i) + oo], L[(i, j) + oo], L[(j, k) + oo]),
                (L[(i, k) + oo], L[(k, j) + oo], L[(j, i) + oo], L[(i, k) + oo]),
                "R5_2",
            )
        )
    for i, j, k, l in _ordered_tuples(n, 4):
        add(
            Relation(
                (L[(k, i) + oo], L[(i, j) + oo], L[(j, k) + oo], L[(k, l) + oo]),
                (
                    L[(i, k) + oo],
                    L[(k, l) + oo],
                    L[(l, i) + oo],
                    L[(i, j) + oo],
                    L[(j, l) + oo],
                ),
                "R6_2",
            )
        )
    return Presentation(
        "semigroup", tuple(letters), tuple(rels), {"family": "R2", "monoid": M.name, "n": n}
    )


# ---------------------------------------------------------------------------
# idempotent generators (L-chain case)

def omega_witnesses(M: FiniteMonoid):
    """A canonical choice of the pair set Omega and factor witnesses for an
    L-chain monoid: order elements bottom-up along the chain (ties by index),
    put (a, b) in Omega when a comes no later than b, and pick the least x
    with a = x*b."""
    if not is_L_chain(M):
        raise PreconditionError("M/L is not a chain")
    order = l_chain_element_order(M)
    pos = {a: p for p, a in enumerate(order)}
    omega = set()
    for a in range(M.order):
        for b in range(M.order):
            if pos[a] <= pos[b]:
                omega.add((a, b))
    xwit = {}
    for a, b in sorted(omega):
        for x in range(M.order):
            if M.table[x][b] == a:
                xwit[(a, b)] = x
                break
    return omega, xwit


def _chain_precondition(M: FiniteMonoid):
    wit = incomparable_L_witness(M)
    raise PreconditionError(
        "M/L is not a chain: L-classes of "
        f"{M.labels[wit[0]]!r} and {M.labels[wit[1]]!r} are incomparable",
        witness=wit,
    )


def emit_R1(M: FiniteMonoid, n: int, force: bool = False) -> Presentation:
    """Presentation over the idempotent generators, valid when M/L is a
    chain.  ``force`` skips the hypothesis check (the emitted relations are
    still sound, but certification is expected to fail off-hypothesis)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not force and not is_L_chain(M):
        _chain_precondition(M)
    letters, L = _x1_letters(M, n)
    mul = M.mul
    one = M.identity
    ms = range(M.order)
    rels = []
    add = rels.append
    for i, j in index_pairs(n):
        for a, b in itertools.product(ms, repeat=2):
            add(Relation((L[(i, j, a)], L[(i, j, b)]), (L[(i, j, a)],), "R1a_1"))
    for i, j in index_pairs(n):
        for a, b in itertools.product(ms, repeat=2):
            add(
                Relation(
                    (L[(i, j, one)], L[(j, i, a)], L[(i, j, b)]),
                    (L[(j, i, one)], L[(i, j, mul(a, b))]),
                    "R1b_1",
                )
            )
    for i, j in index_pairs(n):
        for a, b, c in itertools.product(ms, repeat=3):
            if mul(a, c) == mul(b, c):
                add(
                    Relation(
                        (L[(j, i, a)], L[(i, j, c)]), (L[(j, i, b)], L[(i, j, c)]), "R1c_1"
                    )
                )
    for i, j in index_pairs(n):
        for a, b, c in itertools.product(ms, repeat=3):
            if mul(mul(a, b), c) == c:
                add(
                    Relation(
                        (L[(i, j, b)], L[(j, i, c)], L[(i, j, one)]),
                        (L[(j, i, a)], L[(i, j, mul(b, c))]),
                        "R1d_1",
                    )
                )
    for i, j in index_pairs(n):
        add(Relation((L[(j, i, one)], L[(i, j, one)]), (L[(i, j, one)],), "R1e_1"))
    rels.extend(_r1_common(M, n, L))
    return Presentation(
        "semigroup", tuple(letters), tuple(rels), {"family": "R1", "monoid": M.name, "n": n}
    )


def _r1_common(M: FiniteMonoid, n: int, L) -> list[Relation]:
    """Families shared by the chain and group presentations over the
    idempotent generators."""
    mul = M.mul
    one = M.identity
    ms = range(M.order)
    rels = []
    add = rels.append
    for i, j, k, l in _ordered_tuples(n, 4):
        for a, b in itertools.product(ms, repeat=2):
            add(Relation((L[(i, j, a)], L[(k, l, b)]), (L[(k, l, b)], L[(i, j, a)]), "R2_1"))
    for i, j, k in _ordered_tuples(n, 3):
        for a, b in itertools.product(ms, repeat=2):
            add(Relation((L[(i, k, a)], L[(j, k, b)]), (L[(i, k, a)],), "R3a_1"))
    for i, j, k in _ordered_tuples(n, 3):
        for a in ms:
            add(
                Relation(
                    (L[(i, j, one)], L[(j, k, a)], L[(k, j, one)]),
                    (L[(j, i, one)], L[(i, k, a)], L[(k, i, one)], L[(i, j, one)]),
                    "R3b_1",
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a, b in itertools.product(ms, repeat=2):
            add(
                Relation(
                    (L[(i, j, one)], L[(j, i, a)], L[(i, k, b)]),
                    (L[(j, i, one)], L[(i, k, b)], L[(k, j, a)], L[(j, k, one)]),
                    "R3c_1",
                )
            )
    for i, j, k in _ordered_tuples(n, 3):
        for a, b in itertools.product(ms, repeat=2):
            ab = mul(a, b)
            mid = (L[(i, k, ab)], L[(i, j, b)])
            add(Relation((L[(i, j, b)], L[(i, k, ab)]), mid, "R4_1"))
            add(Relation(mid, (L[(j, k, a)], L[(i, j, b)]), "R4_1"))
    for i, j, k in _ordered_tuples(n, 3):
        add(
            Relation(
                (L[(k, i, one)], L[(i, j, one)], L[(j, k, one)]),
                (L[(i, k, one)], L[(k, j, one)], L[(j, i, one)], L[(i, k, one)]),
                "R5_1",
            )
        )
    for i, j, k, l in _ordered_tuples(n, 4):
        add(
            Relation(
                (L[(k, i, one)], L[(i, j, one)], L[(j, k, one)], L[(k, l, one)]),
                (
                    L[(i, k, one)],
                    L[(k, l, one)],
                    L[(l, i, one)],
                    L[(i, j, one)],
                    L[(j, l, one)],
                ),
                "R6_1",
            )
        )
    return rels


def emit_R1p(M: FiniteMonoid, n: int) -> Presentation:
    """Group-base variant: the five chain-specific families are replaced by
    the inverse form of the idempotency relation plus the product-merging
    relation."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not is_group(M):
        raise PreconditionError(f"base monoid {M.name or M.labels} is not a group")
    letters, L = _x1_letters(M, n)
    mul = M.mul
    one = M.identity
    ms = range(M.order)
    rels = []
    add = rels.append
    for i, j in index_pairs(n):
        for a, b in itertools.product(ms, repeat=2):
            mid = (L[(i, j, a)],)
            add(Relation((L[(i, j, a)], L[(i, j, b)]), mid, "R1a'_1"))
        for a in ms:
            add(
                Relation(
                    (L[(i, j, a)],), (L[(j, i, inverse_of(M, a))], L[(i, j, a)]), "R1a'_1"
                )
            )
    for i, j in index_pairs(n):
        for a, b in itertools.product(ms, repeat=2):
            add(
                Relation(
                    (L[(i, j, one)], L[(j, i, a)], L[(i, j, b)]),
                    (L[(j, i, one)], L[(i, j, mul(a, b))]),
                    "R1b_1",
                )
            )
    rels.extend(_r1_common(M, n, L))
    return Presentation(
        "semigroup", tuple(letters), tuple(rels), {"family": "R1p", "monoid": M.name, "n": n}
    )


# ---------------------------------------------------------------------------
# substitution words

def word_E_X2(M: FiniteMonoid, n: int, i: int, j: int, tup) -> tuple[int, ...]:
    """A word over the two-entry alphabet evaluating to the element with full
    tuple ``tup`` over transformation (i, j): the head letter carries the
    (i, j) entries and one trailing letter per remaining position.  When all
    off-pair entries are the identity the word degenerates to one letter."""
    tup = tuple(tup)
    _, L = _x2_letters(M, n)
    one = M.identity
    rest = [k for k in range(1, n + 1) if k not in (i, j)]
    if all(tup[k - 1] == one for k in rest):
        return (L[(i, j, tup[i - 1], tup[j - 1])],)
    word = [L[(i, j, tup[i - 1], tup[j - 1])]]
    for k in rest:
        word.append(L[(k, j, tup[k - 1], one)])
    return tuple(word)


def word_E_X1(M: FiniteMonoid, n: int, i: int, j: int, a: int, b: int, omega, xwit) -> tuple[int, ...]:
    """A word over the idempotent alphabet evaluating to the two-entry
    element (a at i, b at j), using the chain witnesses."""
    _, L = _x1_letters(M, n)
    one = M.identity
    if (a, b) in omega:
        return (L[(j, i, xwit[(a, b)])], L[(i, j, b)])
    return (L[(i, j, xwit[(b, a)])], L[(j, i, a)], L[(i, j, one)])


# ---------------------------------------------------------------------------
# general semidirect products

def emit_semidirect(base: Presentation, S, base_images, M: FiniteMonoid, action) -> Presentation:
    """Presentation of M x| S from a presentation of S: every letter gets one
    decorated copy per monoid element; base relations are decorated on their
    first letter, and a product of two decorated letters folds the action
    into the first one."""
    if base.kind != "semigroup":
        raise ValueError("semidirect construction starts from a semigroup presentation")
    validate_action(M, S, action)
    one = M.identity
    letters = []
    index = {}
    for x, lt in enumerate(base.letters):
        for a in range(M.order):
            index[(x, a)] = len(letters)
            letters.append(
                Letter(f"{lt.name}[{M.labels[a]}]", (("x", x), ("a", a)) + lt.params)
            )
    rels = []

    def decorate(word, a):
        return (index[(word[0], a)],) + tuple(index[(x, one)] for x in word[1:])

    for rel in base.relations:
        for a in range(M.order):
            rels.append(Relation(decorate(rel.lhs, a), decorate(rel.rhs, a), f"RM1:{rel.tag}"))
    for x in range(len(base.letters)):
        sx = base_images[x]
        for y in range(len(base.letters)):
            for a in range(M.order):
                for b in range(M.order):
                    c = M.mul(a, action(sx, b))
                    rels.append(
                        Relation(
                            (index[(x, a)], index[(y, b)]),
                            (index[(x, c)], index[(y, one)]),
                            "RM2",
                        )
                    )
    return Presentation(
        "semigroup",
        tuple(letters),
        tuple(rels),
        {"family": "semidirect", "monoid": M.name, "base": base.provenance},
    )


def semidirect_map(p: Presentation, M: FiniteMonoid, S, action, base_images) -> EvaluationMap:
    images = []
    for lt in p.letters:
        d = dict(lt.params)
        images.append((d["a"], base_images[d["x"]]))

    def mult(u, v):
        from .wreath import semidirect_multiply

        return semidirect_multiply(M, S, action, u, v)

    return EvaluationMap(tuple(images), mult)


# ---------------------------------------------------------------------------
# multiplication-table presentations (used as base input for the monoid build)

def table_presentation(N: FiniteMonoid) -> tuple[Presentation, list[int]]:
    """Monoid presentation of N on its non-identity elements with all
    two-letter products rewritten; returns the presentation and the letter
    images as element indices of N."""
    gens = [i for i in range(N.order) if i != N.identity]
    pos = {m: k for k, m in enumerate(gens)}
    letters = tuple(Letter(N.labels[m], (("m", m),)) for m in gens)
    rels = []
    for x in gens:
        for y in gens:
            p = N.mul(x, y)
            rhs = () if p == N.identity else (pos[p],)
            rels.append(Relation((pos[x], pos[y]), rhs, "table"))
    pres = Presentation(
        "monoid", letters, tuple(rels), {"family": "table", "monoid": N.name}
    )
    return pres, gens


# ---------------------------------------------------------------------------
# the idempotent-generated monoid presentation

def emit_E_wreath_monoid(
    M: FiniteMonoid, n: int, base: Presentation, base_images, node_limit: int = 200_000
) -> Presentation:
    """Monoid presentation for the idempotent-generated part of the full
    wreath product, stitched from a per-coordinate copy of the base
    presentation (for the idempotent-generated part of M), the group-base
    presentation over the units, and the mixing relations between the two.

    ``base_images`` gives, per base letter, the M-index of its value; the
    base must be a certified monoid presentation of <E(M)> with no letter
    mapping to the identity.
    """
    from .todd_coxeter import todd_coxeter

    if n < 2:
        raise ValueError("n must be at least 2")
    ok, wit = has_unit_complement_E(M)
    if not ok:
        raise PreconditionError(
            f"<E(M)> != {{1}} u (M \\ G); witness element {M.labels[wit]!r}", witness=wit
        )
    if base.kind != "monoid":
        raise PreconditionError("base presentation must be a monoid presentation")
    base_images = list(base_images)
    if len(base_images) != len(base.letters):
        raise ValueError("one image per base letter required")
    if any(m == M.identity for m in base_images):
        raise PreconditionError("a base letter maps to the identity")

    unit_set = set(units(M))
    e_indices = sorted({M.identity} | (set(range(M.order)) - unit_set))
    E_mon, carrier = submonoid(M, e_indices, name="E")
    pos_in_E = {m: k for k, m in enumerate(carrier)}
    for m in base_images:
        if m not in pos_in_E:
            raise PreconditionError(f"base letter image {M.labels[m]!r} is a unit")

    base_map = EvaluationMap(
        tuple(pos_in_E[m] for m in base_images), E_mon.mul, identity=E_mon.identity
    )
    rep = soundness(base, base_map)
    if not rep.ok:
        raise PreconditionError(f"base presentation unsound: {rep.failures[0]}")
    tc = todd_coxeter(base, node_limit=node_limit)
    if tc.status != "certified" or tc.class_count != E_mon.order:
        raise PreconditionError(
            f"base presentation not certified for <E(M)> "
            f"(got {tc.status}/{tc.class_count}, want {E_mon.order})"
        )

    # shortest factorizations h_a over the base letters, ties lexicographic
    h_word = {E_mon.identity: ()}
    frontier = [E_mon.identity]
    while frontier:
        nxt = []
        for e in frontier:
            for y, m in enumerate(base_images):
                f = E_mon.mul(e, pos_in_E[m])
                if f not in h_word:
                    h_word[f] = h_word[e] + (y,)
                    nxt.append(f)
        frontier = nxt
    assert len(h_word) == E_mon.order

    G_mon, g_carrier = units_submonoid(M)
    unit_list = list(g_carrier)

    letters = []
    index = {}
    for coord in range(1, n + 1):
        for y, lt in enumerate(base.letters):
            index[("y", y, coord)] = len(letters)
            letters.append(
                Letter(
                    f"{lt.name}({coord})",
                    (("y", lt.name), ("m", base_images[y]), ("coord", coord)),
                )
            )
    for i, j in index_pairs(n):
        for a in unit_list:
            index[("e", i, j, a)] = len(letters)
            letters.append(
                Letter(f"e({i},{j};{M.labels[a]})", (("i", i), ("j", j), ("a", a)))
            )

    def h_at(m_idx, coord):
        return tuple(index[("y", y, coord)] for y in h_word[pos_in_E[m_idx]])

    rels = []
    add = rels.append
    for coord in range(1, n + 1):
        for rel in base.relations:
            add(
                Relation(
                    tuple(index[("y", y, coord)] for y in rel.lhs),
                    tuple(index[("y", y, coord)] for y in rel.rhs),
                    "Qbar",
                )
            )
    nb = len(base.letters)
    for x in range(nb):
        for y in range(nb):
            for i, j in index_pairs(n):
                add(
                    Relation(
                        (index[("y", x, i)], index[("y", y, j)]),
                        (index[("y", y, j)], index[("y", x, i)]),
                        "RC",
                    )
                )
    if len(unit_list) > 0:
        group_pres = emit_R1p(G_mon, n)
        remap = {}
        for k, lt in enumerate(group_pres.letters):
            d = dict(lt.params)
            remap[k] = index[("e", d["i"], d["j"], g_carrier[d["a"]])]
        for rel in group_pres.relations:
            add(
                Relation(
                    tuple(remap[l] for l in rel.lhs),
                    tuple(remap[l] for l in rel.rhs),
                    rel.tag,
                )
            )
    one = M.identity
    mul = M.mul
    for y in range(nb):
        ybar = base_images[y]
        for i, j in index_pairs(n):
            for a in unit_list:
                e_ija = index[("e", i, j, a)]
                e_ij1 = index[("e", i, j, one)]
                add(
                    Relation(
                        (e_ija, index[("y", y, i)]),
                        (index[("y", y, i)],) + h_at(mul(a, ybar), j) + (e_ij1,),
                        "nabla1a",
                    )
                )
                add(Relation((e_ija, index[("y", y, j)]), (e_ija,), "nabla1b"))
                for k in range(1, n + 1):
                    if k != i and k != j:
                        add(
                            Relation(
                                (e_ija, index[("y", y, k)]),
                                (index[("y", y, k)], e_ija),
                                "nabla1c",
                            )
                        )
                add(
                    Relation(
                        (index[("y", y, j)], e_ija),
                        h_at(mul(ybar, a), j) + (e_ij1,),
                        "nabla2",
                    )
                )
                for b in unit_list:
                    add(
                        Relation(
                            (index[("y", y, i)], index[("e", j, i, a)], index[("e", i, j, b)]),
                            h_at(mul(mul(ybar, a), b), i) + (index[("e", i, j, b)],),
                            "nabla3",
                        )
                    )
    return Presentation(
        "monoid",
        tuple(letters),
        tuple(rels),
        {"family": "Emonoid", "monoid": M.name, "n": n, "base": base.provenance},
    )


# ---------------------------------------------------------------------------
# canonical evaluation maps and serialization

def _letter_wreath_image(lt: Letter, ctx: WreathContext):
    d = dict(lt.params)
    if "coord" in d:
        tup = [ctx.base.identity] * ctx.degree
        tup[d["coord"] - 1] = d["m"]
        from .transformations import identity as id_trans

        return ctx.element(tup, id_trans(ctx.degree))
    i, j = d["i"], d["j"]
    if "tup" in d:
        return eps_elem(ctx, i, j, d["tup"])
    if "b" in d:
        return eps_ab(ctx, i, j, d["a"], d["b"])
    if "a" in d:
        return eps_a(ctx, i, j, d["a"])
    return eps_a(ctx, i, j, ctx.base.identity)


def standard_map(p: Presentation, M: FiniteMonoid | None = None) -> EvaluationMap:
    """The canonical evaluation map of an emitted presentation, reconstructed
    from letter parameters."""
    family = p.provenance.get("family")
    n = p.provenance.get("n")
    if family == "R":
        images = tuple(epsilon(n, lt.param("i"), lt.param("j")) for lt in p.letters)
        return EvaluationMap(images, compose)
    if family in ("Rn", "R2", "R1", "R1p"):
        if M is None:
            raise ValueError("monoid required to build the evaluation map")
        ctx = WreathContext(M, n, "singular")
        images = tuple(_letter_wreath_image(lt, ctx) for lt in p.letters)
        return EvaluationMap(images, ctx.multiply)
    if family == "Emonoid":
        if M is None:
            raise ValueError("monoid required to build the evaluation map")
        ctx = WreathContext(M, n, "full")
        images = tuple(_letter_wreath_image(lt, ctx) for lt in p.letters)
        return EvaluationMap(images, ctx.multiply, identity=ctx.identity_element())
    if family == "table":
        if M is None:
            raise ValueError("monoid required to build the evaluation map")
        images = tuple(lt.param("m") for lt in p.letters)
        return EvaluationMap(images, M.mul, identity=M.identity)
    raise ValueError(f"no canonical map for family {family!r}")


def _params_to_json(params):
    out = {}
    for k, v in params:
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def presentation_to_dict(p: Presentation) -> dict:
    return {
        "kind": p.kind,
        "letters": [{"name": lt.name, "params": _params_to_json(lt.params)} for lt in p.letters],
        "relations": [
            {"lhs": list(r.lhs), "rhs": list(r.rhs), "tag": r.tag} for r in p.relations
        ],
        "provenance": p.provenance,
    }


def presentation_from_dict(data: dict) -> Presentation:
    letters = tuple(
        Letter(
            d["name"],
            tuple(
                (k, tuple(v) if isinstance(v, list) else v)
                for k, v in sorted(d.get("params", {}).items())
            ),
        )
        for d in data["letters"]
    )
    rels = tuple(
        Relation(tuple(r["lhs"]), tuple(r["rhs"]), r.get("tag", "")) for r in data["relations"]
    )
    return Presentation(data["kind"], letters, rels, data.get("provenance", {}))


def save_presentation(p: Presentation, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(presentation_to_dict(p), f, indent=1, sort_keys=True)
