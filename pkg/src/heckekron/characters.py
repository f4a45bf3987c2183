"""Ordinary character theory of the symmetric group, by exact arithmetic:
Murnaghan-Nakayama character values, Kronecker coefficients as class-weighted
inner products, Littlewood-Richardson coefficients by the lattice-word rule,
and hook-length dimensions.  This module is the independent ground truth the
positivity certificates are checked against."""

from functools import lru_cache
from math import factorial

from .partitions import (as_partition, conjugate, contains, hook_lengths,
                         partitions_of, removable_rim_hooks, staircase)


class BudgetError(RuntimeError):
    """Raised when a brute-force request exceeds the configured budget."""


@lru_cache(maxsize=None)
def _mn(lam, cycles):
    """Murnaghan-Nakayama recursion, consuming cycles largest-first."""
    if not cycles:
        return 1
    a = cycles[0]
    rest = cycles[1:]
    total = 0
    for (r, c), smaller in removable_rim_hooks(lam, a):
        leg = _conj_col_height(lam, r, c)
        total += (-1) ** leg * _mn(smaller, rest)
    return total


def _conj_col_height(lam, r, c):
    """Leg length (rows spanned minus one) of the rim hook at (r, c)."""
    rows_hit = sum(1 for i in range(r, len(lam) + 1) if lam[i - 1] >= c)
    return rows_hit - 1


def character_value(lam, cycle_type):
    """Exact value of the irreducible character at the given cycle type."""
    lam = as_partition(lam)
    cycle_type = as_partition(cycle_type)
    if sum(lam) != sum(cycle_type):
        raise ValueError("character argument sizes differ")
    return _mn(lam, tuple(sorted(cycle_type, reverse=True)))


def centralizer_order(cycle_type):
    """z_alpha = prod i^{m_i} m_i! over the multiplicities of the type."""
    mult = {}
    for part in cycle_type:
        mult[part] = mult.get(part, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i ** m * factorial(m)
    return z


def kronecker(lam, mu, nu):
    """g(lam, mu, nu) as (1/n!) * sum over classes of |C| chi chi chi."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("Kronecker arguments must have equal sizes")
    nfact = factorial(n)
    total = 0
    for alpha in partitions_of(n):
        cls = nfact // centralizer_order(alpha)
        total += (cls * character_value(lam, alpha)
                  * character_value(mu, alpha) * character_value(nu, alpha))
    g, rem = divmod(total, nfact)
    if rem:
        raise AssertionError(f"non-integral Kronecker sum for {lam},{mu},{nu}")
    if g < 0:
        raise AssertionError(f"negative Kronecker coefficient for {lam},{mu},{nu}")
    return g


def lr_coefficient(outer, inner1, inner2):
    """Number of lattice-word semistandard fillings of outer/inner1 with
    content inner2; zero when the sizes or shapes rule the count out."""
    outer, inner1, inner2 = (as_partition(outer), as_partition(inner1),
                             as_partition(inner2))
    if sum(outer) != sum(inner1) + sum(inner2):
        return 0
    if not contains(outer, inner1):
        return 0
    if not inner2:
        return 1
    inner = list(inner1) + [0] * (len(outer) - len(inner1))
    cells = []  # reverse reading order: rows top-down, right-to-left
    for r in range(len(outer)):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))
    remaining = list(inner2)
    counts = [0] * len(inner2)
    filling = {}
    total = 0

    def place(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        above = filling.get((r - 1, c)) if r > 0 and c >= inner[r - 1] else None
        right = filling.get((r, c + 1)) if c + 1 < outer[r] else None
        for v in range(len(remaining)):
            if remaining[v] == 0:
                continue
            if v > 0 and counts[v - 1] <= counts[v]:
                continue  # lattice word would fail
            if right is not None and v > right:
                continue  # row must weakly increase left to right
            if above is not None and v <= above:
                continue  # column must strictly increase
            remaining[v] -= 1
            counts[v] += 1
            filling[(r, c)] = v
            place(idx + 1)
            del filling[(r, c)]
            remaining[v] += 1
            counts[v] -= 1

    place(0)
    return total


def dimension(lam):
    """n! divided by the product of all hook lengths, exactly."""
    lam = as_partition(lam)
    num = factorial(sum(lam))
    for row in hook_lengths(lam):
        for h in row:
            num //= h
    return num


def saxl_brute(k, force=False, budget_k=6):
    """g(rho(k), rho(k), lam) for every lam of n = k(k+1)/2, by full
    character sums.  Refuses k beyond the budget unless forced."""
    if k > budget_k and not force:
        raise BudgetError(
            f"k={k} means n={k * (k + 1) // 2}; pass force=True to exceed "
            f"the default budget of k<={budget_k}")
    rho = staircase(k)
    n = sum(rho)
    nfact = factorial(n)
    classes = [(alpha, nfact // centralizer_order(alpha))
               for alpha in partitions_of(n)]
    rho_row = {alpha: character_value(rho, alpha) for alpha, _ in classes}
    out = {}
    for lam in partitions_of(n):
        total = sum(cls * rho_row[alpha] ** 2 * character_value(lam, alpha)
                    for alpha, cls in classes)
        g, rem = divmod(total, nfact)
        if rem or g < 0:
            raise AssertionError(f"bad Kronecker sum at {lam}")
        out[lam] = g
    return out


def induced_product_coefficient(outer, inner1, inner2):
    """<chi^inner1 . chi^inner2, chi^outer> computed purely from character
    values; an independent cross-check for the lattice-word rule."""
    a, b = sum(inner1), sum(inner2)
    if sum(outer) != a + b:
        return 0
    afact, bfact = factorial(a), factorial(b)
    total = 0
    for alpha in partitions_of(a):
        ca = afact // centralizer_order(alpha)
        xa = character_value(inner1, alpha)
        if not xa:
            continue
        for beta in partitions_of(b):
            cb = bfact // centralizer_order(beta)
            xb = character_value(inner2, beta)
            if not xb:
                continue
            joined = as_partition(sorted(alpha + beta, reverse=True))
            total += ca * xa * cb * xb * character_value(outer, joined)
    val, rem = divmod(total, afact * bfact)
    if rem:
        raise AssertionError("non-integral induction inner product")
    return val
