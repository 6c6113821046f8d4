"""Monoid presentations: words, relations, the DPS_n presentations,
evaluation into partial injections and Tietze transformations.

A word is a tuple of letter names; the empty tuple is the identity ``1``.
Chained equalities ``u = v = w`` are stored as the adjacent pairs
``(u, v), (v, w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .core_maps import PartialInjection, compose, identity
from .errors import (
    LetterOccursInW,
    NotAConsequence,
    RelationNotPresent,
    Unsupported,
    UnknownLetter,
)
from .generation import standard_generators

__all__ = [
    "Word",
    "Relation",
    "Presentation",
    "GeneratorAssignment",
    "RelationReport",
    "AddRelation",
    "DeleteRelation",
    "AddGenerator",
    "EliminateGenerator",
    "word",
    "dps_presentation",
    "symmetric_inverse_presentation",
    "standard_assignment",
    "symmetric_inverse_assignment",
    "derived_relations",
    "eval_word",
    "check_relations",
    "apply_tietze",
    "tietze_replay",
    "format_word",
    "parse_word",
    "format_presentation",
    "parse_presentation",
]

Word = Tuple[str, ...]


class Relation(NamedTuple):
    lhs: Word
    rhs: Word

    def __str__(self):
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


def word(*parts: Union[str, Sequence[str]]) -> Word:
    """Concatenate letters and words: ``word("a1", ("b1", "c"))``."""
    out: list = []
    for p in parts:
        if isinstance(p, str):
            out.append(p)
        else:
            out.extend(p)
    return tuple(out)


def _chain(*words: Word) -> List[Relation]:
    return [Relation(u, v) for u, v in zip(words, words[1:])]


@dataclass(frozen=True)
class Presentation:
    alphabet: Tuple[str, ...]
    relations: Tuple[Relation, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "relations", tuple(Relation(tuple(u), tuple(v)) for u, v in self.relations)
        )
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError(f"repeated letter in alphabet {self.alphabet}")
        letters = set(self.alphabet)
        for rel in self.relations:
            for x in rel.lhs + rel.rhs:
                if x not in letters:
                    raise UnknownLetter(f"letter {x!r} not in alphabet {self.alphabet}")

    def letter_index(self) -> Dict[str, int]:
        return {x: i for i, x in enumerate(self.alphabet)}

    def shortlex_key(self, w: Word) -> tuple:
        idx = self.letter_index()
        return (len(w), tuple(idx[x] for x in w))

    def canonical(self) -> "Presentation":
        """Same presentation with relations sorted (shortlex on lhs, then rhs)
        and duplicates removed."""
        key = lambda r: (self.shortlex_key(r.lhs), self.shortlex_key(r.rhs))
        rels = sorted(set(self.relations), key=key)
        return Presentation(self.alphabet, tuple(rels))

    def __str__(self):
        return format_presentation(self)


A1, A2, B1, B2, C, B = ("a1",), ("a2",), ("b1",), ("b2",), ("c",), ("b",)
ONE: Word = ()


def _pow(w: Word, e: int) -> Word:
    return tuple(w) * e


def _group_part(n: int, chained: bool) -> List[Relation]:
    # relations of the symmetric group on the n-1 leaves, generated by a1, a2
    group = [
        _pow(A2, 2),
        _pow(A1, n - 1),
        _pow(A1 + A2, n - 2),
        _pow(word(A2, _pow(A1, n - 2), A2, A1), 3),
    ]
    if chained:
        rels = _chain(*group, ONE)
    else:
        rels = [Relation(g, ONE) for g in group]
    for j in range(2, n - 2):
        rels.append(Relation(_pow(word(A2, _pow(A1, n - 1 - j), A2, _pow(A1, j)), 2), ONE))
    return rels


def dps_presentation(n: int) -> Presentation:
    """The presentation of DPS_n on its standard generators.

    For ``n >= 4`` this has 5 letters and ``3n + 9`` relations.
    """
    if n < 1:
        raise Unsupported("n must be at least 1")
    if n == 1:
        return Presentation(("z",), (Relation(("z", "z"), ("z",)),))
    if n == 2:
        a, s = ("a",), ("s",)
        sa, as_ = s + a, a + s
        rels = [Relation(a + a, ONE), Relation(s + s, s)]
        rels += _chain(sa + sa, s + a + s, as_ + as_)
        return Presentation(("a", "s"), tuple(rels))
    if n == 3:
        c2 = C + C
        rels = [
            Relation(A1 + A1, ONE),
            Relation(B2 + B2, B2),
            Relation(A1 + B2, B2 + A1),
            Relation(c2 + C, C),
            *_chain(B2 + c2, c2 + B2, C + A1 + C),
            Relation(_pow(A1 + c2, 2), _pow(c2 + A1, 2)),
            Relation(_pow(B2 + C, 2), B2 + C + B2),
        ]
        return Presentation(("a1", "b2", "c"), tuple(rels))

    a1n2 = _pow(A1, n - 2)
    x = word(a1n2, B1, A1)  # image of beta' in terms of b1
    rels = _group_part(n, chained=False)
    rels += [
        Relation(B1 + B1, B1),
        Relation(B2 + B2, B2),
        Relation(A2 + B1, B1 + A2),
        Relation(B2 + A2, A2 + B2),
        Relation(B2 + A1, A1 + B2),
        Relation(B2 + B1, B1 + B2),
        Relation(word(A1, A2, a1n2, B1, A1, A2, a1n2), x),
        Relation(_pow(x + A2, 2), _pow(A2 + x, 2)),
        Relation(word(x, A2, x), _pow(A2 + x, 2)),
        Relation(_pow(C, 3), C),
        Relation(C + A1, C + A2),
        Relation(a1n2 + C, A2 + C),
    ]
    for j in range(1, n - 2):
        rels.append(Relation(word(A2, _pow(A1, j), C), word(_pow(A1, j), C)))
    rels.append(Relation(word(B1, A1, C), C + B2))
    for j in range(2, n - 2):
        rels.append(Relation(word(B1, _pow(A1, j), C), word(_pow(A1, j), C)))
    rels += [
        Relation(word(_pow(B1 + A1, n - 3), B1), word(C, C, A2, _pow(A1, n - 4))),
        Relation(word(B2, C, C), word(C, A2, C)),
        Relation(_pow(B2 + C, 2), word(B2, C, B2)),
    ]
    return Presentation(("a1", "a2", "b1", "b2", "c"), tuple(rels))


def symmetric_inverse_presentation(m: int, variant: str = "b") -> Presentation:
    """Presentations of the symmetric inverse monoid on ``m >= 3`` points.

    ``variant="b"`` uses the idempotent ``b`` missing the first point;
    ``variant="b1"`` uses ``b1`` missing the last point.
    """
    if m < 3:
        raise Unsupported("symmetric inverse presentations need m >= 3")
    n = m + 1
    a1n2 = _pow(A1, n - 2)
    rels = _group_part(n, chained=True)
    if variant == "b":
        rels += _chain(
            word(a1n2, A2, A1, B, a1n2, A2, A1),
            word(A1, A2, B, A2, a1n2),
            B,
            B + B,
        )
        rels += _chain(_pow(B + A2, 2), word(B, A2, B), _pow(A2 + B, 2))
        return Presentation(("a1", "a2", "b"), tuple(rels))
    if variant == "b1":
        x = word(a1n2, B1, A1)
        rels.append(Relation(word(A1, A2, a1n2, B1, A1, A2, a1n2), x))
        rels += _chain(_pow(x + A2, 2), word(x, A2, x), _pow(A2 + x, 2))
        rels += [Relation(B1 + B1, B1), Relation(A2 + B1, B1 + A2)]
        return Presentation(("a1", "a2", "b1"), tuple(rels))
    raise Unsupported(f"unknown variant {variant!r}")


class GeneratorAssignment:
    """Images of the letters under the evaluation homomorphism."""

    def __init__(self, images: Dict[str, PartialInjection]):
        images = dict(images)
        degrees = {f.degree for f in images.values()}
        if len(degrees) > 1:
            raise ValueError(f"generator images of mixed degree {sorted(degrees)}")
        if not degrees:
            raise ValueError("assignment needs at least one letter")
        self.images = images
        self.degree = degrees.pop()

    def __getitem__(self, letter: str) -> PartialInjection:
        try:
            return self.images[letter]
        except KeyError:
            raise UnknownLetter(f"letter {letter!r} has no image") from None

    def __contains__(self, letter):
        return letter in self.images

    def swapped(self, x: str, y: str) -> "GeneratorAssignment":
        images = dict(self.images)
        images[x], images[y] = images[y], images[x]
        return GeneratorAssignment(images)

    def __repr__(self):
        body = ", ".join(f"{k}={v.to_list()}" for k, v in self.images.items())
        return f"GeneratorAssignment({body})"


def standard_assignment(n: int) -> GeneratorAssignment:
    """Letters of :func:`dps_presentation` sent to the standard generators."""
    if n == 1:
        return GeneratorAssignment({"z": PartialInjection([None])})
    if n == 2:
        return GeneratorAssignment(
            {"a": PartialInjection([1, 0]), "s": PartialInjection([0, None])}
        )
    gens = standard_generators(n)
    letters = ("a1", "b2", "c") if n == 3 else ("a1", "a2", "b1", "b2", "c")
    return GeneratorAssignment(dict(zip(letters, gens)))


def symmetric_inverse_assignment(m: int, variant: str = "b") -> GeneratorAssignment:
    """Generators of the symmetric inverse monoid on ``m`` points.

    The leaves ``1..m`` are relabelled ``0..m-1`` so that the empty word
    evaluates to the identity of degree ``m``.
    """
    if m < 3:
        raise Unsupported("needs m >= 3")
    cycle = PartialInjection([(x + 1) % m for x in range(m)])
    swap = PartialInjection([1, 0] + list(range(2, m)))
    if variant == "b":
        idem = PartialInjection([None] + list(range(1, m)))
    elif variant == "b1":
        idem = PartialInjection(list(range(m - 1)) + [None])
    else:
        raise Unsupported(f"unknown variant {variant!r}")
    return GeneratorAssignment({"a1": cycle, "a2": swap, variant: idem})


def derived_relations(n: int) -> List[Relation]:
    """Four relations derivable from :func:`dps_presentation` (``n >= 4``)."""
    if n < 4:
        raise Unsupported("needs n >= 4")
    tail = word(_pow(B1 + A1, n - 3), B1, _pow(A1, 3), A2)
    return [
        Relation(word(A1, A2, C), C),
        Relation(tail, C + C),
        Relation(B1 + C, C),
        Relation(word(C, A2, tail), B2 + C),
    ]


def eval_word(assignment: GeneratorAssignment, w: Iterable[str]) -> PartialInjection:
    """Left-to-right product of the letter images; ``()`` gives the identity."""
    result = identity(assignment.degree)
    for x in w:
        result = compose(result, assignment[x])
    return result


@dataclass
class RelationReport:
    total: int
    failures: List[Tuple[int, Relation, PartialInjection, PartialInjection]] = field(
        default_factory=list
    )

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "relations": self.total,
            "failures": [
                {"index": i, "relation": str(r), "lhs": l.to_list(), "rhs": rr.to_list()}
                for i, r, l, rr in self.failures
            ],
        }


def check_relations(p: Presentation, assignment: GeneratorAssignment) -> RelationReport:
    """Evaluate both sides of every relation; failures are reported, not raised."""
    for x in p.alphabet:
        assignment[x]
    report = RelationReport(total=len(p.relations))
    for i, rel in enumerate(p.relations):
        lhs = eval_word(assignment, rel.lhs)
        rhs = eval_word(assignment, rel.rhs)
        if lhs != rhs:
            report.failures.append((i, rel, lhs, rhs))
    return report


# ---------------------------------------------------------------- Tietze


@dataclass(frozen=True)
class AddRelation:
    """T1: add a relation that already holds in the presented monoid."""

    relation: Relation


@dataclass(frozen=True)
class DeleteRelation:
    """T2: drop a relation implied by the remaining ones."""

    relation: Relation


@dataclass(frozen=True)
class AddGenerator:
    """T3: new letter ``letter`` together with the relation ``letter = word``."""

    letter: str
    word: Word


@dataclass(frozen=True)
class EliminateGenerator:
    """T4: remove ``letter`` using a present relation ``letter = word``."""

    letter: str
    word: Word


TietzeStep = Union[AddRelation, DeleteRelation, AddGenerator, EliminateGenerator]


def _substitute(w: Word, letter: str, replacement: Word) -> Word:
    out: list = []
    for x in w:
        if x == letter:
            out.extend(replacement)
        else:
            out.append(x)
    return tuple(out)


def _same_class(p: Presentation, rel: Relation, max_classes: int):
    from .quotient import enumerate_quotient

    table = enumerate_quotient(p, max_classes)
    return table, table.word_class(rel.lhs) == table.word_class(rel.rhs)


def apply_tietze(p: Presentation, step: TietzeStep, max_classes: int = 100_000) -> Presentation:
    """Apply one elementary Tietze transformation.

    T1 and T2 side conditions are decided by enumerating the quotient
    (so they need the presented monoid to be finite and within
    ``max_classes``); the class counts before and after must agree.
    """
    rel_list = list(p.relations)
    if isinstance(step, AddRelation):
        rel = Relation(*step.relation)
        before, same = _same_class(p, rel, max_classes)
        if not same:
            raise NotAConsequence(f"{rel} does not hold in the presented monoid")
        return Presentation(p.alphabet, tuple(rel_list + [rel]))
    if isinstance(step, DeleteRelation):
        rel = Relation(*step.relation)
        if rel not in rel_list:
            raise RelationNotPresent(f"{rel} is not a relation of the presentation")
        rel_list.remove(rel)
        reduced = Presentation(p.alphabet, tuple(rel_list))
        after, same = _same_class(reduced, rel, max_classes)
        if not same:
            raise NotAConsequence(f"{rel} is not implied by the other relations")
        from .quotient import enumerate_quotient

        before = enumerate_quotient(p, max_classes)
        if before.class_count != after.class_count:
            raise NotAConsequence(
                f"deleting {rel} changes the class count "
                f"{before.class_count} -> {after.class_count}"
            )
        return reduced
    if isinstance(step, AddGenerator):
        if step.letter in p.alphabet:
            raise ValueError(f"letter {step.letter!r} already in alphabet")
        for x in step.word:
            if x not in p.alphabet:
                raise UnknownLetter(f"letter {x!r} not in alphabet")
        rel = Relation((step.letter,), tuple(step.word))
        return Presentation(p.alphabet + (step.letter,), tuple(rel_list + [rel]))
    if isinstance(step, EliminateGenerator):
        b, w = step.letter, tuple(step.word)
        if b in w:
            raise LetterOccursInW(f"{format_word(w)} contains {b}")
        target = None
        for rel in rel_list:
            if (rel.lhs == (b,) and rel.rhs == w) or (rel.rhs == (b,) and rel.lhs == w):
                target = rel
                break
        if target is None:
            raise RelationNotPresent(f"no relation {b} = {format_word(w)}")
        rel_list.remove(target)
        alphabet = tuple(x for x in p.alphabet if x != b)
        rels = tuple(
            Relation(_substitute(u, b, w), _substitute(v, b, w)) for u, v in rel_list
        )
        return Presentation(alphabet, rels)
    raise TypeError(f"not a Tietze step: {step!r}")


def tietze_replay(m: int = 4, max_classes: int = 100_000):
    """Transform the ``b`` presentation of the symmetric inverse monoid on
    ``m`` points into the ``b1`` one in five steps.

    Returns a list of ``(label, presentation)`` pairs, starting with the
    initial presentation; each T1/T2 side condition is checked by
    enumeration.
    """
    n = m + 1
    a1n2 = _pow(A1, n - 2)
    b_in_b1 = word(a1n2, B1, A1)
    p = symmetric_inverse_presentation(m, "b")
    history = [("start", p)]

    p = apply_tietze(p, AddGenerator("b1", word(A1, B, a1n2)), max_classes)
    history.append(("step 1: add generator b1", p))

    p = apply_tietze(p, AddRelation(Relation(B, b_in_b1)), max_classes)
    history.append(("step 2: add relation b = a1^(n-2) b1 a1", p))

    p = apply_tietze(p, EliminateGenerator("b", b_in_b1), max_classes)
    history.append(("step 3: eliminate b", p))

    p = apply_tietze(p, AddRelation(Relation(B1 + B1, B1)), max_classes)
    p = apply_tietze(p, AddRelation(Relation(A2 + B1, B1 + A2)), max_classes)
    history.append(("step 4: add b1^2 = b1 and a2 b1 = b1 a2", p))

    sub = lambda w: _substitute(w, "b", b_in_b1)
    redundant = [
        Relation(sub(word(a1n2, A2, A1, B, a1n2, A2, A1)), sub(word(A1, A2, B, A2, a1n2))),
        Relation(sub(B), sub(B + B)),
        Relation(B1, word(A1, sub(B), a1n2)),
    ]
    for rel in redundant:
        p = apply_tietze(p, DeleteRelation(rel), max_classes)
    history.append(("step 5: delete three redundant relations", p))
    return history


# ---------------------------------------------------------------- text format


def format_word(w: Word) -> str:
    return " ".join(w) if w else "1"


def parse_word(text: str) -> Word:
    tokens = text.split()
    if tokens == ["1"]:
        return ()
    return tuple(t for t in tokens if t != "1")


def format_presentation(p: Presentation) -> str:
    lines = ["# alphabet: " + " ".join(p.alphabet)]
    lines += [str(r) for r in p.relations]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str, alphabet: Optional[Sequence[str]] = None) -> Presentation:
    """Read the ``lhs = rhs`` line format; a ``# alphabet:`` line fixes the
    letter order, otherwise letters are taken in order of appearance."""
    rels = []
    letters: list = list(alphabet) if alphabet else []
    declared = bool(alphabet)
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("alphabet:") and not declared:
                letters = body[len("alphabet:"):].split()
                declared = True
            continue
        if line.count("=") != 1:
            raise ValueError(f"expected 'lhs = rhs', got {raw!r}")
        left, right = line.split("=")
        u, v = parse_word(left), parse_word(right)
        if not declared:
            for x in u + v:
                if x not in letters:
                    letters.append(x)
        rels.append(Relation(u, v))
    return Presentation(tuple(letters), tuple(rels))
