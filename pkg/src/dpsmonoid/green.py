"""Green's relations on DPS_n.

Two independent routes are provided. ``characterized`` reads L, R and H off
images and domains and J off the rank/centre criterion in
:func:`j_related`. ``ideal_bruteforce`` only multiplies: two elements are
L- (R-, J-) related when each lies in the other's left (right, two-sided)
principal ideal, found as strongly connected components of the graph of
left (right, both) multiplications by all elements. D is then built as
the composite L∘R and checked against R∘L.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core_maps import PartialInjection, compose
from .errors import InvalidElement, LimitExceeded
from .monoid import enumerate_dps
from .star_metric import is_dps_member
from .tables import MultiplicationTable

__all__ = [
    "GreenClassification",
    "green_classify",
    "j_related",
    "j_witness",
    "proof_witness",
    "MODE_LIMITS",
]

RELATIONS = ("L", "R", "H", "D", "J")
MODE_LIMITS = {"characterized": 8, "ideal_bruteforce": 6}


@dataclass
class GreenClassification:
    elements: List[PartialInjection]
    L: List[int]
    R: List[int]
    H: List[int]
    D: List[int]
    J: List[int]
    mode: str = "characterized"

    def ids(self, relation: str) -> List[int]:
        return getattr(self, relation)

    def class_sizes(self, relation: str) -> List[int]:
        ids = self.ids(relation)
        sizes = [0] * (max(ids) + 1)
        for i in ids:
            sizes[i] += 1
        return sizes

    def same_partitions(self, other: "GreenClassification") -> bool:
        return self.elements == other.elements and all(
            self.ids(r) == other.ids(r) for r in RELATIONS
        )

    def to_dict(self) -> dict:
        return {
            "n": self.elements[0].degree,
            "mode": self.mode,
            "elements": [f.to_list() for f in self.elements],
            **{r: self.ids(r) for r in RELATIONS},
            "class_sizes": {r: self.class_sizes(r) for r in RELATIONS},
        }


def _first_encounter(keys: Sequence) -> List[int]:
    seen: Dict = {}
    return [seen.setdefault(k, len(seen)) for k in keys]


def _check_member(f):
    if not is_dps_member(f) or not f.is_injective():
        raise InvalidElement(f"{f!r} is not in DPS_{f.degree}")


def j_related(a: PartialInjection, b: PartialInjection) -> bool:
    """J-relation in DPS_n decided from ranks and the position of 0."""
    if a.degree != b.degree:
        raise InvalidElement(f"degrees {a.degree} and {b.degree} differ")
    _check_member(a)
    _check_member(b)
    dom_a, dom_b = a.domain(), b.domain()
    if len(dom_a) != len(dom_b):
        return False
    if len(dom_a) == 1:
        return True
    if 0 not in dom_a and 0 not in dom_b:
        return True
    return 0 in dom_a and 0 in b.image()


def _characterized(elements):
    L = _first_encounter([f.image() for f in elements])
    R = _first_encounter([f.domain() for f in elements])
    H = _first_encounter([(f.domain(), f.image()) for f in elements])
    reps: List[PartialInjection] = []
    J = []
    for f in elements:
        for cid, r in enumerate(reps):
            if j_related(f, r):
                J.append(cid)
                break
        else:
            J.append(len(reps))
            reps.append(f)
    return L, R, H, list(J), list(J)


def _scc_ids(size, src, dst):
    graph = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(size, size))
    _, labels = connected_components(graph, directed=True, connection="strong")
    return _first_encounter(labels.tolist())


def _ideal_bruteforce(mt: MultiplicationTable):
    t = mt.table
    size = len(mt)
    elems = np.arange(size)
    # left multiplication: a -> s a ; right: a -> a s
    left_src = np.repeat(elems, size)
    left_dst = t[:, :].T.reshape(-1)  # t[s, a] laid out by a
    right_src = np.repeat(elems, size)
    right_dst = t.reshape(-1)
    L = _scc_ids(size, left_src, left_dst)
    R = _scc_ids(size, right_src, right_dst)
    J = _scc_ids(
        size,
        np.concatenate([left_src, right_src]),
        np.concatenate([left_dst, right_dst]),
    )
    H = _first_encounter(list(zip(L, R)))
    La, Ra = np.array(L), np.array(R)
    meets = np.zeros((La.max() + 1, Ra.max() + 1), dtype=bool)
    meets[La, Ra] = True
    # a (L o R) b  iff  some c has a L c and c R b
    l_then_r = meets[La[:, None], Ra[None, :]]
    r_then_l = meets[La[None, :], Ra[:, None]]
    if not np.array_equal(l_then_r, r_then_l):
        raise AssertionError("L∘R differs from R∘L")
    D = [int(np.argmax(row)) for row in l_then_r]
    D = _first_encounter(D)
    return L, R, H, D, J


def green_classify(n: int, mode: str = "characterized") -> GreenClassification:
    if mode in ("ideal", "bruteforce"):
        mode = "ideal_bruteforce"
    if mode not in MODE_LIMITS:
        raise ValueError(f"unknown mode {mode!r}")
    if n > MODE_LIMITS[mode]:
        raise LimitExceeded(f"{mode} mode supports n <= {MODE_LIMITS[mode]}", n)
    elements = enumerate_dps(n)
    if mode == "characterized":
        L, R, H, D, J = _characterized(elements)
    else:
        L, R, H, D, J = _ideal_bruteforce(MultiplicationTable(elements))
    return GreenClassification(elements, L, R, H, D, J, mode)


def j_witness(mt: MultiplicationTable, a: int, b: int) -> Optional[Tuple[int, int]]:
    """Indices ``(u, v)`` with ``a = u b v`` in the table, or ``None``."""
    t = mt.table
    left = t[:, b]
    hits = np.argwhere(t[left, :] == a)
    if len(hits) == 0:
        return None
    u, v = hits[0]
    return int(u), int(v)


def proof_witness(a: PartialInjection, b: PartialInjection) -> Tuple[PartialInjection, PartialInjection]:
    """Explicit ``(u, v)`` with ``a = u b v`` for J-related ``a, b`` of rank 1,
    or of rank 2 with 0 in both domains."""
    n = a.degree
    pa, pb = a.pairs(), b.pairs()
    if len(pa) == len(pb) == 1:
        (i, ia), (j, jb) = pa[0], pb[0]
        u = PartialInjection._trusted(tuple(j if x == i else None for x in range(n)))
        v = PartialInjection._trusted(tuple(ia if x == jb else None for x in range(n)))
        return u, v
    if len(pa) == len(pb) == 2 and a.images[0] is not None and b.images[0] is not None:
        i = next(x for x, _ in pa if x != 0)
        j = next(x for x, _ in pb if x != 0)
        u_img = [None] * n
        u_img[0], u_img[i] = 0, j
        v_img = [None] * n
        v_img[b.images[0]] = a.images[0]
        v_img[b.images[j]] = a.images[i]
        return PartialInjection(u_img), PartialInjection(v_img)
    raise InvalidElement("no explicit factorization for this rank/shape")
