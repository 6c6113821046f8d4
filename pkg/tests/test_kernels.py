import os
import subprocess
import sys
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dpsmonoid import _kernels_py, kernels
from dpsmonoid.errors import BudgetExceeded
from dpsmonoid.generation import _balanced_ranges
from dpsmonoid.monoid import enumerate_dps
from dpsmonoid.presentations import dps_presentation
from dpsmonoid.tables import MultiplicationTable

try:
    from dpsmonoid import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
BACKENDS.append(
    pytest.param(_ckernels, id="compiled",
                 marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))
)
needs_both = pytest.mark.skipif(_ckernels is None, reason="extension not built")


@pytest.fixture(scope="module")
def table3():
    return MultiplicationTable(enumerate_dps(3))


def encode(p):
    idx = p.letter_index()
    return len(p.alphabet), [
        (tuple(idx[x] for x in r.lhs), tuple(idx[x] for x in r.rhs)) for r in p.relations
    ]


def run_enum(mod, k, rels, max_classes=300, workspace=3000):
    try:
        return mod.enumerate_cosets(k, rels, max_classes, workspace)
    except BudgetExceeded:
        return "budget"


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None and os.environ.get("DPSMONOID_PURE", "") not in ("1", "true", "yes"):
        assert kernels.BACKEND == "cython"


def test_pure_fallback_by_env():
    env = dict(os.environ, DPSMONOID_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import dpsmonoid; print(dpsmonoid.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("mod", BACKENDS)
def test_table_multiplication(table3, mod):
    t = table3.table
    elems = table3.elements
    for i in range(0, len(elems), 3):
        for j in range(len(elems)):
            assert elems[t[i, j]] == elems[i] * elems[j]
    assert mod.closure_size(t, table3.identity, []) == 1
    assert mod.closure_size(t, table3.identity, range(len(elems))) == 22


@pytest.mark.parametrize("mod", BACKENDS)
def test_sweep_ranges_partition(table3, mod):
    pool = list(range(22))
    _, total = mod.search_subsets(table3.table, table3.identity, pool, 2, 22)
    assert total == comb(22, 2)
    parts = _balanced_ranges(22, 2, 5)
    assert parts[0][0] == 0 and parts[-1][1] == 22
    examined = sum(
        mod.search_subsets(table3.table, table3.identity, pool, 2, 22, lo, hi)[1]
        for lo, hi in parts
    )
    assert examined == total


@pytest.mark.parametrize("mod", BACKENDS)
def test_sweep_zero_subset(table3, mod):
    assert mod.search_subsets(table3.table, table3.identity, [], 0, 1) == ((), 1)
    assert mod.search_subsets(table3.table, table3.identity, [], 0, 22) == (None, 1)


@needs_both
@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 21), max_size=4, unique=True))
def test_closure_agrees(gens):
    mt = MultiplicationTable(enumerate_dps(3))
    assert _kernels_py.closure_size(mt.table, mt.identity, gens) == _ckernels.closure_size(
        mt.table, mt.identity, gens
    )


@needs_both
@pytest.mark.parametrize("k", [1, 2, 3])
def test_sweep_agrees(table3, k):
    pool = list(range(22))
    args = (table3.table, table3.identity, pool, k, 22)
    assert _kernels_py.search_subsets(*args) == _ckernels.search_subsets(*args)


@needs_both
@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_agrees(n):
    k, rels = encode(dps_presentation(n))
    a = _kernels_py.enumerate_cosets(k, rels, 10**4, 10**5)
    b = _ckernels.enumerate_cosets(k, rels, 10**4, 10**5)
    assert a == b


words = st.lists(st.integers(0, 1), max_size=5).map(tuple)


@needs_both
@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(words, words), min_size=1, max_size=4))
def test_random_presentations_agree(rels):
    a = run_enum(_kernels_py, 2, rels)
    b = run_enum(_ckernels, 2, rels)
    assert a == b
    if a != "budget":
        table = a[0]
        for c in range(len(table)):
            for u, v in rels:
                cu, cv = c, c
                for x in u:
                    cu = table[cu][x]
                for x in v:
                    cv = table[cv][x]
                assert cu == cv


@pytest.mark.parametrize("mod", BACKENDS)
def test_budget_count(mod):
    with pytest.raises(BudgetExceeded) as info:
        mod.enumerate_cosets(1, [], 10, 100)
    assert info.value.count > 100
