"""Pure-Python kernels. The compiled module ``_ckernels`` mirrors these
signatures exactly; :mod:`dpsmonoid.kernels` picks one at import."""

from __future__ import annotations

from itertools import combinations

from .errors import BudgetExceeded


def closure_size(table, identity, gens):
    """Size of the submonoid generated by ``gens`` inside a finite monoid
    given by its multiplication table (``table[i][j]`` = index of ``ij``)."""
    seen = {identity}
    queue = [identity]
    for x in queue:
        row = table[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(queue)


def search_subsets(table, identity, pool, k, target, lo=0, hi=None):
    """Look for a ``k``-subset of ``pool`` generating ``target`` elements.

    Only subsets whose first member sits at a pool position in ``[lo, hi)``
    are examined, in lexicographic order of pool positions. Returns
    ``(witness or None, subsets examined)``.
    """
    pool = list(pool)
    if hi is None:
        hi = len(pool)
    examined = 0
    if k == 0:
        if lo > 0:
            return None, 0
        found = closure_size(table, identity, ()) == target
        return ((), 1) if found else (None, 1)
    rows = [list(r) for r in table]
    for i in range(lo, min(hi, len(pool))):
        first = pool[i]
        for rest in combinations(pool[i + 1:], k - 1):
            examined += 1
            gens = (first,) + rest
            seen = {identity}
            queue = [identity]
            for x in queue:
                row = rows[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            if len(queue) == target:
                return gens, examined
    return None, examined


def enumerate_cosets(nletters, relations, max_classes, workspace):
    """Enumerate the right regular representation of ``A*/rho_R``.

    ``relations`` is a sequence of ``(lhs, rhs)`` letter-index tuples.
    Returns ``(table, parent, parent_letter)`` with nodes numbered in
    breadth-first shortlex order from the identity (node 0); ``table`` is a
    list of rows, ``parent[i]`` / ``parent_letter[i]`` give the BFS tree.
    Raises :class:`BudgetExceeded` if more than ``workspace`` live nodes
    are needed after lookahead, or if the result has more than
    ``max_classes`` classes.
    """
    k = nletters
    rels = [(tuple(u), tuple(v)) for u, v in relations]
    tab = [-1] * k
    fwd = [0]
    alive = 1

    def find(a):
        root = a
        while fwd[root] != root:
            root = fwd[root]
        while fwd[a] != root:
            fwd[a], a = root, fwd[a]
        return root

    def merge(a, b):
        nonlocal alive
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a = find(a)
            b = find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            fwd[b] = a
            alive -= 1
            ra = a * k
            rb = b * k
            for x in range(k):
                t = tab[rb + x]
                if t >= 0:
                    s = tab[ra + x]
                    if s < 0:
                        tab[ra + x] = t
                    else:
                        stack.append((s, t))

    def new_node():
        nonlocal alive
        idx = len(fwd)
        fwd.append(idx)
        tab.extend([-1] * k)
        alive += 1
        return idx

    def trace(c, w):
        # follow w from c without defining; -1 if an edge is missing
        for x in w:
            d = tab[c * k + x]
            if d < 0:
                return -1
            c = find(d)
        return c

    def scan_and_fill(c, u, v, define):
        """Make ``c.u`` and ``c.v`` coincide, defining edges if asked.

        The last edge of ``v`` is filled by deduction rather than a new node.
        """
        p = c
        for x in u:
            r = p * k + x
            d = tab[r]
            if d < 0:
                if not define:
                    return
                d = new_node()
                tab[r] = d
            else:
                d = find(d)
            p = d
        q = c
        last = len(v) - 1
        for i, x in enumerate(v):
            r = q * k + x
            d = tab[r]
            if d < 0:
                if i == last:
                    tab[r] = p
                    return
                if not define:
                    return
                d = new_node()
                tab[r] = d
            else:
                d = find(d)
            q = d
        if p != q:
            merge(p, q)

    def lookahead():
        for c in range(len(fwd)):
            if fwd[c] != c:
                continue
            for u, v in rels:
                scan_and_fill(c, u, v, False)
                if fwd[c] != c:
                    break

    def compact(pointer):
        nonlocal tab, fwd
        live = [c for c in range(len(fwd)) if fwd[c] == c]
        renum = {c: i for i, c in enumerate(live)}
        newtab = []
        for c in live:
            r = c * k
            for x in range(k):
                d = tab[r + x]
                newtab.append(-1 if d < 0 else renum[find(d)])
        new_pointer = sum(1 for c in live if c < pointer)
        tab = newtab
        fwd = list(range(len(live)))
        return new_pointer

    c = 0
    while c < len(fwd):
        if fwd[c] != c:
            c += 1
            continue
        if alive > workspace:
            lookahead()
            if alive > workspace:
                raise BudgetExceeded(
                    f"more than {workspace} live classes during enumeration", alive
                )
            if len(fwd) > 2 * workspace:
                c = compact(c)
                continue
            if fwd[c] != c:
                continue
        for u, v in rels:
            scan_and_fill(c, u, v, True)
            if fwd[c] != c:
                break
        if fwd[c] == c:
            r = c * k
            for x in range(k):
                if tab[r + x] < 0:
                    tab[r + x] = new_node()
        c += 1

    if alive > max_classes:
        raise BudgetExceeded(f"quotient has {alive} > {max_classes} classes", alive)

    start = find(0)
    order = {start: 0}
    queue = [start]
    parent = [-1]
    parent_letter = [-1]
    for node in queue:
        r = node * k
        for x in range(k):
            d = find(tab[r + x])
            if d not in order:
                order[d] = len(queue)
                queue.append(d)
                parent.append(order[node])
                parent_letter.append(x)
    table = []
    for node in queue:
        r = node * k
        table.append([order[find(tab[r + x])] for x in range(k)])
    return table, parent, parent_letter
