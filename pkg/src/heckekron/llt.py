"""Graded decomposition matrices of Hecke algebras at an e-th root of unity.

One block at a time: for each e-regular column mu, taken from the least
dominant upward, and each row lam descending in dominance from mu, the
coloured-tableau character of (lam, mu) minus the contributions of the
simple modules strictly between them splits uniquely into a bar-invariant
part (the mu-weight space of the simple labelled by lam, normalised by
[Lad(mu)]!) and a t-positive part (the graded decomposition number).
"""

from .blocks import BlockId, block_members, block_n, block_of
from .partitions import dominates, is_e_regular
from .qpoly import ONE, BarSplitError, LaurentPoly, bar_split
from .tableaux import cstd_char

__all__ = [
    "BlockId", "GradedDecompMatrix", "block_members", "llt_matrix",
    "matrix_for_partition", "reconstruction_check", "verify_cstd_bound",
    "verify_regularisation", "verify_row_length",
]


class GradedDecompMatrix:
    """Per-block table of graded decomposition numbers d_{lam,mu}(t) together
    with the normalised simple weight-space dimensions."""

    def __init__(self, block, rows, cols, d, simple_dims):
        self.block = block
        self.n = block_n(block)
        self.e = block.e
        self.rows = rows
        self.cols = cols
        self.d = d                     # (lam, mu) -> LaurentPoly, nonzero only
        self.simple_dims = simple_dims  # (mu, lam) -> LaurentPoly, nonzero only

    def d_entry(self, lam, mu):
        return self.d.get((lam, mu), LaurentPoly.zero())

    def simple_dim(self, mu, lam):
        return self.simple_dims.get((mu, lam), LaurentPoly.zero())

    def row(self, lam):
        """Nonzero entries of one row as a column -> polynomial map."""
        return {mu: p for (lm, mu), p in self.d.items() if lm == lam}

    def to_json_doc(self):
        ridx = {p: i for i, p in enumerate(self.rows)}
        cidx = {p: j for j, p in enumerate(self.cols)}
        return {
            "n": self.n,
            "e": self.e,
            "core": list(self.block.core),
            "weight": self.block.weight,
            "rows": [list(p) for p in self.rows],
            "cols": [list(p) for p in self.cols],
            "d": {f"{ridx[lam]},{cidx[mu]}": p.to_json()
                  for (lam, mu), p in sorted(self.d.items())},
            "simple_dims": {f"{ridx[lam]},{cidx[mu]}": p.to_json()
                            for (mu, lam), p in sorted(self.simple_dims.items())},
        }

    @classmethod
    def from_json_doc(cls, doc):
        rows = [tuple(p) for p in doc["rows"]]
        cols = [tuple(p) for p in doc["cols"]]
        block = BlockId(tuple(doc["core"]), doc["weight"], doc["e"])
        d = {}
        for key, obj in doc["d"].items():
            i, j = (int(x) for x in key.split(","))
            d[(rows[i], cols[j])] = LaurentPoly.from_json(obj)
        s = {}
        for key, obj in doc["simple_dims"].items():
            i, j = (int(x) for x in key.split(","))
            s[(cols[j], rows[i])] = LaurentPoly.from_json(obj)
        return cls(block, rows, cols, d, s)

    def render_csv(self):
        # partition labels use spaces inside brackets so cells stay comma-free
        header = ["d"] + ["[" + " ".join(map(str, c)) + "]" for c in self.cols]
        lines = [",".join(header)]
        for lam in self.rows:
            cells = ["[" + " ".join(map(str, lam)) + "]"]
            cells += [self.d_entry(lam, mu).render() for mu in self.cols]
            lines.append(",".join(cells))
        lines.append("")
        lines.append(",".join(["simple_dims"] + ["[" + " ".join(map(str, c)) + "]"
                                                 for c in self.cols]))
        for lam in self.rows:
            cells = ["[" + " ".join(map(str, lam)) + "]"]
            cells += [self.simple_dim(mu, lam).render() for mu in self.cols]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def llt_matrix(block, members=None):
    """Compute the graded decomposition matrix of one block.

    Columns are processed from the least dominant regular partition upward so
    that the entries d_{lam,nu} needed by the inner sum already exist; rows
    within a column descend from the column label.  Unitriangularity, the
    t-positivity of off-diagonal entries and the bar-invariance of the simple
    weight spaces are asserted, not assumed.
    """
    e = block.e
    if members is None:
        members = next(ps for b, ps in block_members(block_n(block), e)
                       if b == block)
    rows = sorted(members, reverse=True)
    cols = [p for p in rows if is_e_regular(p, e)]
    pos = {p: i for i, p in enumerate(rows)}

    d = {}
    simple_dims = {}
    for mu in reversed(cols):
        d[(mu, mu)] = ONE
        simple_dims[(mu, mu)] = ONE
        col_simple = [mu]
        for lam in rows[:pos[mu]]:
            if cstd_char(lam, mu, e):
                raise AssertionError(
                    f"unitriangularity broken: CStd({lam},{mu}) nonempty")
        for lam in rows[pos[mu] + 1:]:
            acc = cstd_char(lam, mu, e)
            for nu in col_simple:
                if nu == mu or nu == lam:
                    continue
                p = d.get((lam, nu))
                if p is not None:
                    acc = acc - simple_dims[(mu, nu)] * p
            try:
                invariant, positive = bar_split(acc)
            except BarSplitError as exc:
                raise AssertionError(
                    f"induction failed at row {lam}, column {mu}: {exc}")
            if not dominates(mu, lam):
                if invariant or positive:
                    raise AssertionError(
                        f"nonzero entry at incomparable pair ({lam}, {mu})")
                continue
            if invariant:
                if not is_e_regular(lam, e):
                    raise AssertionError(
                        f"simple weight space at {e}-singular label {lam}")
                simple_dims[(mu, lam)] = invariant
                col_simple.append(lam)
            if positive:
                d[(lam, mu)] = positive
    return GradedDecompMatrix(block, rows, cols, d, simple_dims)


def matrix_for_partition(p, e):
    return llt_matrix(block_of(p, e))


def verify_cstd_bound(m):
    """Check that each graded decomposition number is bounded, degree by
    degree, by the coloured-tableau count of the same degree."""
    failures = []
    checked = 0
    for lam in m.rows:
        for mu in m.cols:
            entry = m.d_entry(lam, mu)
            if not entry:
                continue
            char = cstd_char(lam, mu, m.e)
            checked += 1
            for k, v in entry.c.items():
                if v > char.coeff(k):
                    failures.append((lam, mu, k, v, char.coeff(k)))
    return {"checked": checked, "failures": failures}


def verify_regularisation(m):
    """Check that each row has a unit entry at the regularisation of its
    label and vanishes at every column below it in dominance."""
    from .partitions import regularize

    failures = []
    for lam in m.rows:
        reg = regularize(lam, m.e)
        if m.d_entry(lam, reg).evaluate(1) != 1:
            failures.append((lam, reg, "missing unit entry"))
        for mu in m.cols:
            if mu != reg and dominates(reg, mu) and m.d_entry(lam, mu):
                failures.append((lam, mu, "nonzero below regularisation"))
    return {"checked": len(m.rows), "failures": failures}


def verify_row_length(m):
    """For e=2: a row whose r-th part is at least r can only have composition
    factors with at least r parts."""
    if m.e != 2:
        raise ValueError("row-length bound applies to e=2")
    failures = []
    checked = 0
    for lam in m.rows:
        durfee = sum(1 for i, x in enumerate(lam) if x >= i + 1)
        if durfee == 0:
            continue
        for mu in m.cols:
            if m.d_entry(lam, mu):
                checked += 1
                if len(mu) < durfee:
                    failures.append((lam, mu, durfee))
    return {"checked": checked, "failures": failures}


def reconstruction_check(m):
    """The matrix product of d and the simple weight spaces must reproduce
    the coloured-tableau character table of the block."""
    failures = []
    for lam in m.rows:
        for mu in m.cols:
            total = LaurentPoly.zero()
            for nu in m.cols:
                p = m.d.get((lam, nu))
                s = m.simple_dims.get((mu, nu))
                if p is not None and s is not None:
                    total = total + p * s
            if total != cstd_char(lam, mu, m.e):
                failures.append((lam, mu))
    return {"checked": len(m.rows) * len(m.cols), "failures": failures}
