"""Partition combinatorics.

Partitions are plain tuples of weakly decreasing positive ints.  The
canonical order used for every matrix axis in this package is descending
lexicographic: (n) first, (1,...,1) last.
"""

from __future__ import annotations

from functools import cache
from math import factorial


Partition = tuple


def parse_partition(s: str) -> Partition:
    """Parse the CLI syntax 'a,b,c' (descending positive ints)."""
    s = s.strip()
    if not s:
        return ()
    try:
        parts = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {s!r}") from None
    check_partition(parts)
    return parts


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def check_partition(p: Partition) -> None:
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")


def weight(p: Partition) -> int:
    return sum(p)


@cache
def enumerate_partitions(n: int) -> tuple:
    """All partitions of n, in canonical (descending lex) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def hook(p: Partition, i: int, j: int) -> int:
    """Hook length of the 1-based cell (i, j)."""
    if i < 1 or i > len(p) or j < 1 or j > p[i - 1]:
        raise ValueError(f"cell ({i}, {j}) outside the diagram of {p}")
    pc = conjugate(p)
    return p[i - 1] + pc[j - 1] - i - j + 1


def cells(p: Partition):
    """1-based cells (i, j) of the Young diagram, row by row."""
    for i, part in enumerate(p, start=1):
        for j in range(1, part + 1):
            yield (i, j)


def z_mu(mu: Partition) -> int:
    """Centralizer order of a permutation of cycle type mu."""
    mult = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    out = 1
    for part, m in mult.items():
        out *= part**m * factorial(m)
    return out


def coxeter_length(lam: Partition) -> int:
    """Length of the Coxeter element of the Young subgroup of type lam."""
    return sum(part - 1 for part in lam)


def hook_product(p: Partition) -> int:
    out = 1
    for i, j in cells(p):
        out *= hook(p, i, j)
    return out


def num_standard_tableaux(p: Partition) -> int:
    """f^lambda by the hook length formula."""
    n = weight(p)
    return factorial(n) // hook_product(p)
