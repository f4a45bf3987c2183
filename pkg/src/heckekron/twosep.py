"""2-separated partitions: a staircase with a doubled partition glued to the
right and another glued below, the explicit semisimple decomposition of the
Specht modules they label, and the graded weight-space formula."""

from collections import namedtuple

from .characters import lr_coefficient
from .partitions import (add_componentwise, as_partition, conjugate,
                         e_core_and_weight, partitions_of, staircase)
from .qpoly import LaurentPoly, dilated_quantum_factorial
from .tableaux import count_sstd

TwoSeparated = namedtuple("TwoSeparated", "k lam mu whole")


def build(k, lam, mu):
    """Assemble the partition with core rho(k), 2*lam to the right and 2*mu
    below; the frame parts must not overlap."""
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lam) + (mu[0] if mu else 0) > k + 1:
        raise ValueError(
            f"frame does not fit on rho({k}): len(lam) + mu_1 > {k + 1}")
    base = add_componentwise(staircase(k), tuple(2 * x for x in conjugate(mu)))
    whole = add_componentwise(conjugate(base), tuple(2 * x for x in lam))
    return TwoSeparated(k, lam, mu, whole)


def detect(p):
    """Recover (k, lam, mu) from a 2-separated partition, or None.

    The 2-core fixes k.  Rows exceeding the staircase by a positive even
    amount are candidate rows of 2*lam, and columns likewise of 2*mu, but a
    row just past the true frame can be inflated by the column frame instead,
    so every prefix split is tried and validated by rebuilding."""
    p = as_partition(p)
    core, _ = e_core_and_weight(p, 2)
    if core != staircase(len(core)):
        return None
    k = len(core)

    def frame_prefixes(rows):
        run = []
        for i, x in enumerate(rows[:k + 1]):
            diff = x - (k - i if i < k else 0)
            if diff <= 0 or diff % 2:
                break
            run.append(diff // 2)
        prefixes = [()]
        for j in range(1, len(run) + 1):
            if j > 1 and run[j - 1] > run[j - 2]:
                break
            prefixes.append(tuple(run[:j]))
        return prefixes

    # conjugating the whole partition transposes both frame labels, so the
    # column frame is the conjugate of the prefix read from conjugate(p)
    for lam in frame_prefixes(p):
        for mu_t in frame_prefixes(conjugate(p)):
            try:
                ts = build(k, lam, conjugate(mu_t))
            except ValueError:
                continue
            if ts.whole == p:
                return ts
    return None


def theorem_a_row(ts):
    """Graded decomposition of the Specht module labelled by a 2-separated
    partition: simple labels with single-column frames, each weighted by a
    Littlewood-Richardson coefficient and shifted by |mu|."""
    w = sum(ts.lam) + sum(ts.mu)
    lam_t = conjugate(ts.lam)
    out = {}
    for nu in partitions_of(w):
        c = lr_coefficient(conjugate(nu), lam_t, ts.mu)
        if len(nu) > ts.k + 1:
            if c:
                raise AssertionError(
                    f"nonzero multiplicity at invalid label nu={nu}")
            continue
        if c:
            out[build(ts.k, nu, ()).whole] = LaurentPoly({sum(ts.mu): c})
    return out


def graded_weightspace(ts, alpha):
    """Graded dimension of the weight space of the Specht module of ts cut
    out by the ladder idempotent of the single-frame label built from alpha."""
    alpha = as_partition(alpha)
    w = sum(ts.lam) + sum(ts.mu)
    if sum(alpha) != w:
        raise ValueError(f"alpha must have size {w}")
    if len(alpha) > ts.k + 1:
        raise ValueError(f"alpha has too many parts for core rho({ts.k})")
    shape = as_partition(
        sorted(conjugate(ts.lam) + ts.mu, reverse=True))
    count = count_sstd(shape, conjugate(alpha))
    fac = dilated_quantum_factorial(conjugate(alpha))
    return (fac * fac).shift(sum(ts.mu)) * count


def framed_staircases(n):
    """All partitions of n of the form: staircase with a doubled row strip to
    the right and a doubled column strip below (either strip may be empty)."""
    out = []
    k = 0
    while k * (k + 1) // 2 <= n:
        rest = n - k * (k + 1) // 2
        if rest % 2 == 0:
            w = rest // 2
            for a in range(w + 1):
                b = w - a
                if a and b and k < 1:
                    continue
                out.append(build(k, (a,) if a else (), (1,) * b))
        k += 1
    return out


def framed_staircase_counts(n):
    """Counts of framed staircases of n: raw, up to conjugation, and with
    both strips required to be nonempty (the bare staircase counting as the
    degenerate frame)."""
    raw = framed_staircases(n)
    seen = set()
    proper = set()
    for ts in raw:
        key = min(ts.whole, conjugate(ts.whole))
        seen.add(key)
        a = ts.lam[0] if ts.lam else 0
        b = len(ts.mu)
        if (a >= 1 and b >= 1) or (a == 0 and b == 0):
            proper.add(key)
    return {
        "raw": len(raw),
        "up_to_conjugation": len(seen),
        "proper_up_to_conjugation": len(proper),
    }


def render(ts):
    from .partitions import format_partition
    return (f"tau[k={ts.k}; lam={format_partition(ts.lam)}; "
            f"mu={format_partition(ts.mu)}] = {format_partition(ts.whole)}")
