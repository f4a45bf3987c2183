"""2-block structure: defect, 2-adic valuations, height-zero characters and
their rim-hook-tower enumeration, and the k0 count."""

from collections import namedtuple

from .partitions import (addable_rim_hooks, conjugate, e_core_and_weight,
                         hook_length, partitions_of, staircase)

BlockId = namedtuple("BlockId", "core weight e")
HeightProfile = namedtuple("HeightProfile", "lam block_defect dim2adic height")


def block_n(block):
    return sum(block.core) + block.e * block.weight


def core_index(block):
    """The k with core rho(k); only meaningful for e=2 staircase cores."""
    if block.core != staircase(len(block.core)):
        raise ValueError(f"core {block.core} is not a staircase")
    return len(block.core)


def block_of(p, e):
    core, w = e_core_and_weight(p, e)
    return BlockId(core, w, e)


def block_members(n, e):
    """Partitions of n grouped by (e-core, weight), ordered by core size."""
    groups = {}
    for p in partitions_of(n):
        groups.setdefault(block_of(p, e), []).append(p)
    out = [(b, sorted(ps, reverse=True)) for b, ps in groups.items()]
    out.sort(key=lambda item: (sum(item[0].core), item[0].core))
    return out


def digit_sum_2(n):
    return bin(n).count("1")


def defect(block):
    """2w - s(w) for a 2-block of weight w."""
    if block.e != 2:
        raise ValueError("defect is defined for e=2 blocks")
    return 2 * block.weight - digit_sum_2(block.weight)


def _hook_val2_sum(p):
    conj = conjugate(p)
    total = 0
    for r in range(1, len(p) + 1):
        for c in range(1, p[r - 1] + 1):
            h = hook_length(p, conj, r, c)
            total += (h & -h).bit_length() - 1
    return total


def height(lam):
    """2-adic height of the character labelled by lam.

    Works entirely in valuations: v2(dim) = v2(n!) - sum of v2 over hook
    lengths, and v2(n!) = n - s(n), so the height is d(B) minus the hook
    valuation sum.  The dimension itself is never formed.
    """
    n = sum(lam)
    _, w = e_core_and_weight(lam, 2)
    block_defect = 2 * w - digit_sum_2(w)
    hooks2 = _hook_val2_sum(lam)
    dim2adic = (n - digit_sum_2(n)) - hooks2
    h = block_defect - hooks2
    if h < 0:
        raise AssertionError(f"negative height for {lam}")
    return HeightProfile(lam, block_defect, dim2adic, h)


def _tower_hook_sizes(w):
    """Rim-hook sizes used by the height-zero tower: the binary parts of 2w,
    smallest first."""
    return [1 << (j + 1) for j in range(w.bit_length()) if (w >> j) & 1]


def enumerate_height0(block):
    """All labels of height-zero characters in the block, built by adding rim
    hooks of the tower sizes to the core, deduplicated and sorted."""
    if block.e != 2:
        raise ValueError("height-zero enumeration is defined for e=2 blocks")
    shapes = {block.core}
    for size in _tower_hook_sizes(block.weight):
        shapes = {q for p in shapes for q in addable_rim_hooks(p, size)}
    return sorted(shapes, reverse=True)


def k0(block):
    """Product formula for the number of height-zero characters in a block."""
    if block.e != 2:
        raise ValueError("k0 is defined for e=2 blocks")
    out = 1
    for size in _tower_hook_sizes(block.weight):
        out *= size
    return out
