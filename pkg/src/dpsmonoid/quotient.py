"""Enumeration of finite monoids given by presentations, and verification
that a presentation defines DPS_n.

The enumerator builds the right regular representation of ``A*/rho_R``
coset-enumeration style: classes are created on demand while tracing
every relation from every class, and classes forced equal are merged
through a union-find with a coincidence stack. Classes are finally
renumbered breadth-first from the identity in letter order, so each
class carries its shortlex-least word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernels
from .core_maps import PartialInjection
from .errors import BudgetExceeded, UnknownLetter
from .presentations import (
    GeneratorAssignment,
    Presentation,
    Word,
    check_relations,
    dps_presentation,
    eval_word,
    format_word,
    standard_assignment,
)

__all__ = [
    "MonoidTable",
    "enumerate_quotient",
    "word_class",
    "realize",
    "Verdict",
    "verify_presentation_defines",
    "DEFAULT_MAX_CLASSES",
    "clear_cache",
]

DEFAULT_MAX_CLASSES = 100_000


@dataclass(frozen=True)
class MonoidTable:
    alphabet: Tuple[str, ...]
    right_action: Tuple[Tuple[int, ...], ...]
    representatives: Tuple[Word, ...]
    identity_class: int = 0
    _letters: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_letters", {x: i for i, x in enumerate(self.alphabet)})

    @property
    def class_count(self) -> int:
        return len(self.right_action)

    def trace(self, c: int, w: Sequence[str]) -> int:
        idx = self._letters
        for x in w:
            try:
                c = self.right_action[c][idx[x]]
            except KeyError:
                raise UnknownLetter(f"letter {x!r} not in {self.alphabet}") from None
        return c

    def word_class(self, w: Sequence[str]) -> int:
        return self.trace(self.identity_class, w)

    def relation_violations(self, p: Presentation) -> list:
        """``(class, relation)`` pairs where the two sides trace apart."""
        bad = []
        for c in range(self.class_count):
            for rel in p.relations:
                if self.trace(c, rel.lhs) != self.trace(c, rel.rhs):
                    bad.append((c, rel))
        return bad

    def to_dict(self) -> dict:
        return {
            "class_count": self.class_count,
            "alphabet": list(self.alphabet),
            "action": [list(row) for row in self.right_action],
            "representatives": [format_word(w) for w in self.representatives],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


@lru_cache(maxsize=64)
def _enumerate_cached(p: Presentation, max_classes: int, workspace: int) -> MonoidTable:
    idx = p.letter_index()
    rels = [
        (tuple(idx[x] for x in r.lhs), tuple(idx[x] for x in r.rhs)) for r in p.relations
    ]
    table, parent, parent_letter = kernels.enumerate_cosets(
        len(p.alphabet), rels, max_classes, workspace
    )
    reps: List[Word] = [()]
    for i in range(1, len(table)):
        reps.append(reps[parent[i]] + (p.alphabet[parent_letter[i]],))
    return MonoidTable(
        alphabet=p.alphabet,
        right_action=tuple(tuple(row) for row in table),
        representatives=tuple(reps),
    )


def enumerate_quotient(
    p: Presentation, max_classes: int = DEFAULT_MAX_CLASSES, workspace: Optional[int] = None
) -> MonoidTable:
    """Closed table of ``A*/rho_R``; raises :class:`BudgetExceeded` when the
    monoid has more than ``max_classes`` elements.

    ``workspace`` bounds the live classes the enumerator may hold before a
    lookahead pass (default ``8 * max_classes``, at least 1000); running
    out of it also raises :class:`BudgetExceeded`.
    """
    if max_classes < 1:
        raise ValueError("max_classes must be positive")
    if workspace is None:
        workspace = max(8 * max_classes, 1000)
    return _enumerate_cached(p, max_classes, workspace)


def clear_cache() -> None:
    """Forget memoized quotient tables."""
    _enumerate_cached.cache_clear()


def word_class(t: MonoidTable, w: Sequence[str]) -> int:
    return t.word_class(w)


def realize(t: MonoidTable, assignment: GeneratorAssignment) -> Tuple[list, list]:
    """Evaluate every class representative under ``assignment``.

    Returns ``(elements, defects)`` where ``defects`` lists the
    ``(class, letter)`` pairs at which evaluation is not compatible with the
    right action, i.e. where ``rep(c)x`` and ``rep(c.x)`` evaluate apart.
    """
    elements = [eval_word(assignment, w) for w in t.representatives]
    defects = []
    for c, row in enumerate(t.right_action):
        for li, x in enumerate(t.alphabet):
            if elements[c] * assignment[x] != elements[row[li]]:
                defects.append((c, x))
    return elements, defects


@dataclass
class Verdict:
    n: int
    defined: bool
    class_count: Optional[int]
    monoid_size: int
    relation_count: int
    detail: str = ""

    def __str__(self):
        if self.defined:
            return f"DEFINED {self.class_count}"
        return f"NOT DEFINED: {self.detail}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "defined": self.defined,
            "class_count": self.class_count,
            "monoid_size": self.monoid_size,
            "relations": self.relation_count,
            "detail": self.detail,
        }


def verify_presentation_defines(
    n: int,
    max_classes: int = DEFAULT_MAX_CLASSES,
    presentation: Optional[Presentation] = None,
    assignment: Optional[GeneratorAssignment] = None,
) -> Verdict:
    """Check that the presentation defines DPS_n via its generators.

    The generators must satisfy every relation, and the enumerated
    quotient, mapped class by class through the evaluation homomorphism,
    must be a bijection onto DPS_n compatible with multiplication.
    """
    from .monoid import dps_count, enumerate_dps

    p = presentation if presentation is not None else dps_presentation(n)
    a = assignment if assignment is not None else standard_assignment(n)
    size = dps_count(n)
    report = check_relations(p, a)
    if not report.ok:
        i, rel, _, _ = report.failures[0]
        return Verdict(n, False, None, size, len(p.relations),
                       f"{len(report.failures)} relation(s) fail, first: #{i} {rel}")
    table = enumerate_quotient(p, max_classes)
    elements, defects = realize(table, a)
    if defects:
        c, x = defects[0]
        return Verdict(n, False, table.class_count, size, len(p.relations),
                       f"evaluation not multiplicative at class {c}, letter {x}")
    images = set(elements)
    if len(images) != len(elements):
        seen: Dict[PartialInjection, int] = {}
        for c, f in enumerate(elements):
            if f in seen:
                w1 = format_word(table.representatives[seen[f]])
                w2 = format_word(table.representatives[c])
                return Verdict(n, False, table.class_count, size, len(p.relations),
                               f"words '{w1}' and '{w2}' evaluate equal but are not "
                               "identified by the relations")
            seen[f] = c
    if images != set(enumerate_dps(n)):
        return Verdict(n, False, table.class_count, size, len(p.relations),
                       "generated monoid differs from DPS_n")
    return Verdict(n, True, table.class_count, size, len(p.relations))
