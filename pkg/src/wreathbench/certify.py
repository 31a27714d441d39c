"""Machine certification of a presentation against a concrete finite target.

Certification is the three-step check: the relations hold under the
evaluation map (soundness), the letter images generate the target
(surjectivity), and the enumerated congruence has exactly as many classes
as the target; equal finite cardinalities then force the induced
epimorphism to be an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumeration import close
from .presentations import EvaluationMap, Presentation, soundness
from .todd_coxeter import TCResult, todd_coxeter


@dataclass
class Carrier:
    """A fully enumerated finite semigroup: element values plus a value-level
    product."""

    elements: list
    multiply: object
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {x: i for i, x in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)


@dataclass
class Verdict:
    status: str  # certified | unsound | not_surjective | size_mismatch | inconclusive
    target_size: int
    class_count: int | None = None
    generated_size: int | None = None
    failures: list = field(default_factory=list)
    tc: TCResult | None = None

    @property
    def ok(self) -> bool:
        return self.status == "certified"

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "target_size": self.target_size,
            "class_count": self.class_count,
            "generated_size": self.generated_size,
            "soundness_failures": self.failures,
        }
        if self.tc is not None:
            out["nodes_allocated"] = self.tc.nodes_allocated
            out["coincidences_processed"] = self.tc.coincidences_processed
        return out


def verify(p: Presentation, emap: EvaluationMap, target, node_limit: int = 10**6) -> Verdict:
    if p.kind == "monoid" and emap.identity is None:
        raise ValueError("monoid presentation needs an evaluation map with an identity")
    want = len(target.elements)
    rep = soundness(p, emap)
    if not rep.ok:
        return Verdict("unsound", want, failures=rep.failures)

    for img in emap.images:
        if img not in target.index:
            return Verdict("not_surjective", want, generated_size=0)
    if p.letters:
        sub = close(list(emap.images), target.multiply, limit=want)
        generated = len(sub)
        if p.kind == "monoid" and emap.identity not in sub.index:
            generated += 1
    else:
        generated = 1 if p.kind == "monoid" else 0
    if generated != want:
        return Verdict("not_surjective", want, generated_size=generated)

    tc = todd_coxeter(p, node_limit=node_limit)
    if tc.status != "certified":
        return Verdict("inconclusive", want, tc=tc)
    if tc.class_count != want:
        return Verdict("size_mismatch", want, class_count=tc.class_count, tc=tc)
    return Verdict("certified", want, class_count=tc.class_count, generated_size=generated, tc=tc)


# ---------------------------------------------------------------------------
# standard verification targets

def sing_target(n: int) -> Carrier:
    """The singular part of T_n, enumerated directly."""
    from .transformations import compose, enumerate_Tn

    return Carrier(enumerate_Tn(n, "singular"), compose)


def wreath_sing_target(M, n: int) -> Carrier:
    """All of M wr Sing_n, enumerated directly (not via any generating set)."""
    from .wreath import WreathContext

    ctx = WreathContext(M, n, "singular")
    return Carrier(ctx.elements(), ctx.multiply)


def e_wreath_target(M, n: int, limit: int = 10**6):
    """The idempotent-generated part of M wr T_n: the closure of the full
    idempotent set, which contains the identity."""
    from .wreath import WreathContext, is_wr_idempotent

    ctx = WreathContext(M, n, "full")
    idem = [x for x in ctx.elements() if is_wr_idempotent(ctx, x)]
    return close(idem, ctx.multiply, limit=limit)
