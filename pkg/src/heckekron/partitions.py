"""Partition and Young-diagram combinatorics.

A partition is a tuple of weakly decreasing positive integers; the empty
partition is ().  Nodes are 1-based (row, col) pairs.  Everything here is a
pure function of its arguments and safe to call from any thread.
"""

from functools import lru_cache


def as_partition(seq):
    """Canonicalize seq to a partition tuple, stripping trailing zeros."""
    parts = tuple(int(x) for x in seq)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(x <= 0 for x in parts):
        raise ValueError(f"parts must be positive: {seq!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {seq!r}")
    return parts


def parse_partition(text):
    """Parse a bracketed literal like "[9,8,5]" or "[]"."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad partition literal: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    parts = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.lstrip("-").isdigit():
            raise ValueError(f"bad partition entry {tok!r} in {text!r}")
        parts.append(int(tok))
    return as_partition(parts)


def format_partition(p):
    return "[" + ",".join(str(x) for x in p) + "]"


def staircase(k):
    """The staircase partition (k, k-1, ..., 2, 1)."""
    return tuple(range(k, 0, -1))


def conjugate(p):
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c) for c in range(1, p[0] + 1))


def dominates(p, q):
    """True iff every prefix sum of p is >= that of q (requires |p| = |q|)."""
    if sum(p) != sum(q):
        raise ValueError(f"dominance needs equal sizes: {p} vs {q}")
    a = b = 0
    for i in range(max(len(p), len(q))):
        a += p[i] if i < len(p) else 0
        b += q[i] if i < len(q) else 0
        if a < b:
            return False
    return True


def ladder_and_residue(node, e):
    """Ladder number r + c(e-1) of a node and its residue mod e."""
    r, c = node
    lad = r + c * (e - 1)
    return lad, lad % e


def hook_length(p, conj, r, c):
    """Hook length at 1-based node (r, c); conj = conjugate(p)."""
    return p[r - 1] - c + conj[c - 1] - r + 1


def hook_lengths(p):
    conj = conjugate(p)
    return [[hook_length(p, conj, r, c) for c in range(1, p[r - 1] + 1)]
            for r in range(1, len(p) + 1)]


def removable_rim_hooks(p, h):
    """All nodes (r, c) whose rim hook has size h, with the partition left
    after removing that hook."""
    if h < 1:
        raise ValueError("hook size must be >= 1")
    conj = conjugate(p)
    out = []
    for r in range(1, len(p) + 1):
        for c in range(1, p[r - 1] + 1):
            if hook_length(p, conj, r, c) != h:
                continue
            q = conj[c - 1]  # lowest row met by the rim hook
            rows = list(p)
            for i in range(r, q):
                rows[i - 1] = p[i] - 1
            rows[q - 1] = c - 1
            out.append(((r, c), as_partition(rows)))
    return out


def beta_numbers(p, length):
    """First-column hook lengths of p padded to the given number of beads."""
    if length < len(p):
        raise ValueError("beta set too short")
    padded = list(p) + [0] * (length - len(p))
    return [padded[i] + length - 1 - i for i in range(length)]


def _partition_from_betas(betas):
    bs = sorted(betas, reverse=True)
    m = len(bs)
    return as_partition([bs[i] - (m - 1 - i) for i in range(m)])


def addable_rim_hooks(p, h):
    """All partitions q of |p| + h with q \\ p a rim hook of size h.

    A bead at beta-number b moves to b + h provided b + h is free; padding by
    h extra beads covers every possible new row.
    """
    if h < 1:
        raise ValueError("hook size must be >= 1")
    betas = beta_numbers(p, len(p) + h)
    bset = set(betas)
    out = []
    for b in betas:
        if b + h not in bset:
            out.append(_partition_from_betas((bset - {b}) | {b + h}))
    out.sort(reverse=True)
    return out


def e_core_and_weight(p, e):
    """The e-core and e-weight via runner compaction of beta numbers."""
    if e < 2:
        raise ValueError("quantum characteristic must be >= 2")
    m = max(len(p), 1)
    betas = beta_numbers(p, m)
    runners = [[] for _ in range(e)]
    for b in betas:
        runners[b % e].append(b // e)
    weight = 0
    new_betas = []
    for r, beads in enumerate(runners):
        beads.sort()
        for rank, pos in enumerate(beads):
            weight += pos - rank
            new_betas.append(e * rank + r)
    return _partition_from_betas(new_betas), weight


def is_e_regular(p, e):
    """True iff p has no e equal consecutive positive parts."""
    if e < 2:
        raise ValueError("quantum characteristic must be >= 2")
    return all(p[i] != p[i + e - 1] for i in range(len(p) - e + 1))


def _ladder_counts(p, e):
    counts = {}
    for r in range(1, len(p) + 1):
        for c in range(1, p[r - 1] + 1):
            lad = r + c * (e - 1)
            counts[lad] = counts.get(lad, 0) + 1
    return counts


def regularize(p, e):
    """Slide every node as high as possible along its ladder.

    Equivalent to refilling each ladder from the top with as many nodes as p
    has on that ladder; the refilled set is again a Young diagram.
    """
    counts = _ladder_counts(p, e)
    rows = {}
    for lad, cnt in counts.items():
        c_max = (lad - 1) // (e - 1)
        for c in range(c_max, c_max - cnt, -1):
            r = lad - c * (e - 1)
            rows[r] = rows.get(r, 0) + 1
    result = as_partition([rows.get(r, 0) for r in range(1, len(rows) + 1)])
    if _ladder_counts(result, e) != counts:
        raise AssertionError(f"ladder refill broke shape for {p}, e={e}")
    return result


def ladder_composition(p, e):
    """Composition whose i-th entry counts nodes of p with ladder number i.

    Only defined for e-regular p; entry 1 is always 0 (the minimal ladder
    number of any node is e).
    """
    if not is_e_regular(p, e):
        raise ValueError(f"{p} is not {e}-regular")
    counts = _ladder_counts(p, e)
    top = max(counts) if counts else 1
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def residue_content(p, e):
    """Counts of nodes per residue class 0..e-1."""
    content = [0] * e
    for r in range(1, len(p) + 1):
        for c in range(1, p[r - 1] + 1):
            content[(r + c * (e - 1)) % e] += 1
    return tuple(content)


def partitions_of(n, max_part=None):
    """Generate all partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n):
    return sum(1 for _ in partitions_of(n))


def contains(p, q):
    """True iff the diagram of q fits inside the diagram of p."""
    return len(q) <= len(p) and all(q[i] <= p[i] for i in range(len(q)))


def add_componentwise(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
           for i in range(n)]
    return as_partition(out)
