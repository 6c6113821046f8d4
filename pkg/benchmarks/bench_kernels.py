"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are imported directly, so the environment variable that
forces the fallback has no effect here.
"""

import argparse
import statistics
import time

from dpsmonoid import _kernels_py
from dpsmonoid.monoid import enumerate_dps
from dpsmonoid.presentations import dps_presentation
from dpsmonoid.tables import MultiplicationTable

try:
    from dpsmonoid import _ckernels
except ImportError:
    _ckernels = None


def _relations(n):
    p = dps_presentation(n)
    idx = p.letter_index()
    rels = [(tuple(idx[x] for x in r.lhs), tuple(idx[x] for x in r.rhs)) for r in p.relations]
    return len(p.alphabet), rels


def cases(quick):
    mt = MultiplicationTable(enumerate_dps(4))
    pool = list(range(len(mt)))
    k = 3 if quick else 4
    yield (
        f"rank sweep n=4 k={k}",
        lambda mod: mod.search_subsets(mt.table, mt.identity, pool, k, len(mt))[1],
    )
    for n in (5, 6) if quick else (5, 6, 7):
        letters, rels = _relations(n)
        yield (
            f"quotient n={n}",
            lambda mod, letters=letters, rels=rels: len(
                mod.enumerate_cosets(letters, rels, 10**6, 8 * 10**6)[0]
            ),
        )


def timed(fn, repeat):
    samples, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller cases")
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
        return
    print(f"{'case':<22}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, fn in cases(args.quick):
        # the pure sweep is slow; one run is enough to see the gap
        py_t, py_r = timed(lambda: fn(_kernels_py), 1 if "sweep" in name else args.repeat)
        c_t, c_r = timed(lambda: fn(_ckernels), args.repeat)
        assert py_r == c_r, (name, py_r, c_r)
        print(f"{name:<22}{py_t:>12.3f}{c_t:>12.4f}{py_t / c_t:>9.1f}x")


if __name__ == "__main__":
    main()
