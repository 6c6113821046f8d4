"""Indexed element lists with a full multiplication table."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .core_maps import PartialInjection, identity

__all__ = ["MultiplicationTable"]


class MultiplicationTable:
    """``table[i, j]`` is the index of ``elements[i] * elements[j]``.

    The element list must be closed under composition.
    """

    def __init__(self, elements: Sequence[PartialInjection], chunk: int = 256):
        self.elements = list(elements)
        self.index = {f: i for i, f in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("repeated element")
        n = self.elements[0].degree
        self.degree = n
        size = len(self.elements)
        # undefined is encoded as the extra point n, mapped to itself
        arr = np.full((size, n + 1), n, dtype=np.int64)
        for i, f in enumerate(self.elements):
            for x, y in enumerate(f.images):
                if y is not None:
                    arr[i, x] = y
        weights = (n + 1) ** np.arange(n, dtype=np.int64)
        codes = arr[:, :n] @ weights
        order = np.argsort(codes)
        sorted_codes = codes[order]

        table = np.empty((size, size), dtype=np.int32)
        for start in range(0, size, chunk):
            block = arr[start:start + chunk, :n]
            # prod[i, j, x] = elements[j][block[i, x]]
            prod = arr[:, block].transpose(1, 0, 2)
            pc = prod @ weights
            pos = np.searchsorted(sorted_codes, pc)
            pos = np.minimum(pos, size - 1)
            if not np.array_equal(sorted_codes[pos], pc):
                raise ValueError("element list is not closed under composition")
            table[start:start + chunk] = order[pos]
        self.table = table
        self.identity = self.index[identity(n)]

    def __len__(self):
        return len(self.elements)

    def indices(self, elements) -> list:
        return [self.index[f] for f in elements]
