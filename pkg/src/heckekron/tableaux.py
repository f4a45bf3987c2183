"""Standard, semistandard and coloured tableaux with KLR degrees.

A standard tableau is stored as a tuple of row tuples holding 1..n.  A
coloured tableau of weight mu is a semistandard filling by ladder numbers in
which every entry is congruent to the residue of its node; it stands for an
orbit of standard tableaux sharing the residue sequence of the ladder tableau
of mu.
"""

from collections import namedtuple
from itertools import combinations, permutations

from .partitions import (as_partition, conjugate, dominates, is_e_regular,
                         ladder_composition, residue_content)
from .qpoly import ONE, LaurentPoly, quantum_factorial

ColouredTableau = namedtuple("ColouredTableau", "shape weight rows e")


def shape_of(rows):
    return tuple(len(r) for r in rows)


def standard_tableaux(shape):
    """Stream all standard tableaux of the given shape, one at a time."""
    n = sum(shape)
    rows = [[] for _ in shape]

    def extend(k):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                yield from extend(k + 1)
                rows[i].pop()

    yield from extend(1)


def residue_sequence(rows, e):
    """Residues of the nodes containing 1, 2, ..., n in order."""
    n = sum(len(r) for r in rows)
    res = [0] * n
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            res[v - 1] = (i + 1 + (j + 1) * (e - 1)) % e
    return tuple(res)


def _addable_above(p, res, row, e):
    """Addable nodes of partition p with the given residue in rows < row."""
    cnt = 0
    for r in range(1, min(len(p) + 1, row - 1) + 1):
        if r <= len(p):
            c = p[r - 1] + 1
            if r > 1 and p[r - 2] < c:
                continue
        else:
            c = 1
        if (r + c * (e - 1)) % e == res:
            cnt += 1
    return cnt


def _removable_above(p, res, row, e):
    cnt = 0
    for r in range(1, min(len(p), row - 1) + 1):
        c = p[r - 1]
        if c == 0 or (r < len(p) and p[r] == c):
            continue
        if (r + c * (e - 1)) % e == res:
            cnt += 1
    return cnt


def degree_std(rows, e):
    """Degree of a standard tableau: sum over k of addable minus removable
    nodes of the same residue as k, above k, in the shape of entries 1..k."""
    n = sum(len(r) for r in rows)
    pos = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            pos[v] = (i + 1, j + 1)
    shape = []
    deg = 0
    for k in range(1, n + 1):
        r, c = pos[k]
        while len(shape) < r:
            shape.append(0)
        shape[r - 1] += 1
        res = (r + c * (e - 1)) % e
        p = tuple(shape)
        deg += _addable_above(p, res, r, e) - _removable_above(p, res, r, e)
    return deg


def degree_cstd(ct):
    """Degree of a coloured tableau, node by node: addable nodes of the same
    residue above it in the subshape of entries <= its own, minus removable
    ones in the subshape of strictly smaller entries."""
    rows, e = ct.rows, ct.e
    deg = 0
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            r, c = i + 1, j + 1
            res = (r + c * (e - 1)) % e
            upto = tuple(sum(1 for x in rw if x <= v) for rw in rows)
            below = tuple(sum(1 for x in rw if x < v) for rw in rows)
            deg += (_addable_above(as_partition(upto), res, r, e)
                    - _removable_above(as_partition(below), res, r, e))
    return deg


def _addable_in_shape(sigma, shape, res, e):
    """Addable corners of sigma that stay inside shape and carry residue res."""
    out = []
    for r in range(1, min(len(sigma) + 1, len(shape)) + 1):
        c = (sigma[r - 1] + 1) if r <= len(sigma) else 1
        if c > shape[r - 1]:
            continue
        if r > 1 and (r - 1 > len(sigma) or sigma[r - 2] < c):
            continue
        if (r + c * (e - 1)) % e == res:
            out.append((r, c))
    return out


def _add_nodes(sigma, batch):
    rows = list(sigma)
    for r, _ in batch:
        while len(rows) < r:
            rows.append(0)
        rows[r - 1] += 1
    return tuple(rows)


def _batch_degree(sigma, batch, res, e):
    after = _add_nodes(sigma, batch)
    return sum(_addable_above(after, res, r, e) - _removable_above(sigma, res, r, e)
               for r, _ in batch)


def _cstd_feasible(shape, weight, e):
    if sum(shape) != sum(weight):
        return False
    if residue_content(shape, e) != residue_content(weight, e):
        return False
    lad = ladder_composition(weight, e)
    return dominates(shape, as_partition(sorted(lad, reverse=True)))


def cstd_char(shape, weight, e):
    """Degree generating function sum of t^deg over CStd(shape, weight).

    Fills ladder numbers in increasing order; at each step the nodes of one
    entry go onto addable corners of matching residue, so the intermediate
    shapes stay partitions and semistandardness is automatic.  Memoized on
    (intermediate shape, entry).
    """
    shape = as_partition(shape)
    weight = as_partition(weight)
    if not is_e_regular(weight, e):
        raise ValueError(f"weight {weight} is not {e}-regular")
    if not _cstd_feasible(shape, weight, e):
        return LaurentPoly.zero()
    lad = ladder_composition(weight, e)
    top = len(lad)
    memo = {}

    def go(sigma, i):
        if i > top:
            return ONE
        key = (sigma, i)
        cached = memo.get(key)
        if cached is not None:
            return cached
        cnt = lad[i - 1]
        if cnt == 0:
            out = go(sigma, i + 1)
        else:
            out = LaurentPoly.zero()
            res = i % e
            avail = _addable_in_shape(sigma, shape, res, e)
            if len(avail) >= cnt:
                for batch in combinations(avail, cnt):
                    deg = _batch_degree(sigma, batch, res, e)
                    out = out + go(_add_nodes(sigma, batch), i + 1).shift(deg)
        memo[key] = out
        return out

    return go((), 1)


def enumerate_cstd(shape, weight, e):
    """All coloured semistandard tableaux of the given shape and weight."""
    shape = as_partition(shape)
    weight = as_partition(weight)
    if not is_e_regular(weight, e):
        raise ValueError(f"weight {weight} is not {e}-regular")
    if not _cstd_feasible(shape, weight, e):
        return []
    lad = ladder_composition(weight, e)
    rows = [[] for _ in shape]
    out = []

    def go(sigma, i):
        if i > len(lad):
            out.append(ColouredTableau(shape, weight,
                                       tuple(tuple(r) for r in rows), e))
            return
        cnt = lad[i - 1]
        if cnt == 0:
            go(sigma, i + 1)
            return
        avail = _addable_in_shape(sigma, shape, i % e, e)
        if len(avail) < cnt:
            return
        for batch in combinations(avail, cnt):
            for r, _ in batch:
                rows[r - 1].append(i)
            go(_add_nodes(sigma, batch), i + 1)
            for r, _ in batch:
                rows[r - 1].pop()

    go((), 1)
    return out


def orbit_of_cstd(ct):
    """The standard tableaux collapsing to the given coloured tableau.

    Entry class i receives the block of consecutive integers after all
    smaller classes; class cells are pairwise row- and column-distinct, so
    every assignment of the block to the cells is standard.
    """
    classes = {}
    for i, row in enumerate(ct.rows):
        for j, v in enumerate(row):
            classes.setdefault(v, []).append((i, j))
    start = 0
    slots = []
    for v in sorted(classes):
        cells = classes[v]
        block = list(range(start + 1, start + 1 + len(cells)))
        slots.append((cells, block))
        start += len(cells)
    out = []

    def assign(idx, acc):
        if idx == len(slots):
            rows = [[0] * len(r) for r in ct.rows]
            for (i, j), v in acc.items():
                rows[i][j] = v
            out.append(tuple(tuple(r) for r in rows))
            return
        cells, block = slots[idx]
        for perm in permutations(block):
            for cell, v in zip(cells, perm):
                acc[cell] = v
            assign(idx + 1, acc)
        for cell in cells:
            acc.pop(cell, None)

    assign(0, {})
    return out


def ladder_tableau(mu, e):
    """The unique coloured tableau of shape and weight mu (each node filled by
    its own ladder number) and the residue sequence of its orbit."""
    mu = as_partition(mu)
    if not is_e_regular(mu, e):
        raise ValueError(f"{mu} is not {e}-regular")
    rows = tuple(tuple(r + c * (e - 1) for c in range(1, mu[r - 1] + 1))
                 for r in range(1, len(mu) + 1))
    ct = ColouredTableau(mu, mu, rows, e)
    lad = ladder_composition(mu, e)
    res = []
    for i in range(1, len(lad) + 1):
        res.extend([i % e] * lad[i - 1])
    return ct, tuple(res)


def count_sstd(shape, weight):
    """Number of semistandard tableaux of the given shape and weight
    (weakly increasing rows, strictly increasing columns)."""
    shape = as_partition(shape)
    weight = tuple(weight)
    if sum(shape) != sum(weight):
        return 0

    memo = {}

    def strips(p, size):
        """Partitions q <= p with p/q a horizontal strip of the given size.

        Interlacing p_1 >= q_1 >= p_2 >= q_2 >= ... characterizes the strips.
        """
        found = []

        def build(row, remaining, acc):
            if row == len(p):
                if remaining == 0:
                    found.append(as_partition(acc))
                return
            lo = p[row + 1] if row + 1 < len(p) else 0
            hi = p[row]
            for q in range(max(lo, hi - remaining), hi + 1):
                build(row + 1, remaining - (hi - q), acc + [q])

        build(0, size, [])
        return found

    def count(p, w):
        if not w:
            return 1 if not p else 0
        key = (p, w)
        if key in memo:
            return memo[key]
        total = 0
        for q in strips(p, w[-1]):
            total += count(q, w[:-1])
        memo[key] = total
        return total

    return count(shape, weight)


def graded_residue_count(shape, res_seq, e):
    """Sum of t^deg over standard tableaux of the shape whose residue
    sequence equals res_seq; the brute-force side of weight-space checks."""
    shape = as_partition(shape)
    n = sum(shape)
    if len(res_seq) != n:
        return LaurentPoly.zero()
    memo = {}

    def go(sigma):
        k = sum(sigma)
        if k == n:
            return ONE
        cached = memo.get(sigma)
        if cached is not None:
            return cached
        want = res_seq[k]
        out = LaurentPoly.zero()
        for r, c in _addable_in_shape(sigma, shape, want, e):
            after = _add_nodes(sigma, [(r, c)])
            deg = (_addable_above(after, want, r, e)
                   - _removable_above(after, want, r, e))
            out = out + go(after).shift(deg)
        memo[sigma] = out
        return out

    return go(())


def orbit_degree_polynomial(ct):
    """Degree generating function of the orbit of a coloured tableau."""
    out = LaurentPoly.zero()
    for rows in orbit_of_cstd(ct):
        out = out + LaurentPoly.t_power(degree_std(rows, ct.e))
    return out


def ladder_factorial(mu, e):
    """[Lad(mu)]!, the graded size of one ladder orbit."""
    return quantum_factorial(ladder_composition(mu, e))
