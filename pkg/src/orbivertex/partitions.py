"""Integer partitions, their standard statistics, and color vectors."""

from __future__ import annotations

from functools import lru_cache

Partition = tuple


def check_partition(mu) -> Partition:
    mu = tuple(mu)
    for i, part in enumerate(mu):
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"partition parts must be positive integers, got {mu}")
        if i and mu[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing, got {mu}")
    return mu


def size(mu) -> int:
    return sum(mu)


def length(mu) -> int:
    return len(mu)


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple:
    """All partitions of d, in deterministic reverse lexicographic order."""
    if d < 0:
        raise ValueError("cannot partition a negative integer")
    if d == 0:
        return ((),)
    out = []

    def descend(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(d, d, [])
    return tuple(out)


def conjugate(mu) -> Partition:
    mu = check_partition(mu)
    if not mu:
        return ()
    return tuple(sum(1 for part in mu if part > j) for j in range(mu[0]))


def boxes(mu):
    """Cells (i, j) of the diagram, zero-based, row index first."""
    for i, part in enumerate(mu):
        for j in range(part):
            yield (i, j)


def hooks(mu) -> tuple:
    """Hook lengths of all cells of the diagram."""
    mu = check_partition(mu)
    conj = conjugate(mu)
    return tuple(mu[i] - j + conj[j] - i - 1 for i, j in boxes(mu))


def z_aut(mu) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    mu = check_partition(mu)
    result = 1
    run = 0
    prev = None
    for part in mu:
        result *= part
        if part == prev:
            run += 1
        else:
            run = 1
            prev = part
        result *= run
    return result


def kappa(mu) -> int:
    """Twice the total content of the diagram: sum of mu_i*(mu_i - 2i + 1)."""
    mu = check_partition(mu)
    return sum(part * (part - 2 * i - 1) for i, part in enumerate(mu))


def colored_box_count(nu, k: int, n: int, axis: str = "col") -> int:
    """Sum over cells of floor((c + k)/n), with c the column (or row) index."""
    if n < 1:
        raise ValueError("modulus must be a positive integer")
    if axis not in ("col", "row"):
        raise ValueError("axis must be 'col' or 'row'")
    total = 0
    for i, j in boxes(nu):
        c = j if axis == "col" else i
        total += (c + k) // n
    return total


def gamma_vectors(a: int, max_len: int) -> tuple:
    """All weakly decreasing tuples over {1, ..., a-1} of length at most max_len."""
    if a < 1:
        raise ValueError("modulus must be a positive integer")
    out = [()]
    if a == 1:
        return tuple(out)

    def descend(largest, room, prefix):
        for v in range(largest, 0, -1):
            prefix.append(v)
            out.append(tuple(prefix))
            if room > 1:
                descend(v, room - 1, prefix)
            prefix.pop()

    if max_len > 0:
        descend(a - 1, max_len, [])
    return tuple(sorted(out, key=lambda g: (len(g), g)))


def aut_gamma(gamma) -> int:
    """Order of the automorphism group of a color multiset: the product of
    factorials of multiplicities, accumulated by running count."""
    result = 1
    run = 0
    prev = None
    for v in gamma:
        if v == prev:
            run += 1
        else:
            run = 1
            prev = v
        result *= run
    return result
