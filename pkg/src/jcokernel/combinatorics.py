"""Closed-form multiplicity rules: Witt ranks, major-index counts,
Littlewood-Richardson coefficients, branching, and symmetric group characters.

All functions are pure and return exact integers.  The cyclic-restriction
multiplicities follow the Kraskiewicz-Weyman description: the multiplicity of
the j-th character of the cyclic group C_k in the restriction of the Specht
module S^lambda equals the number of standard tableaux of shape lambda whose
major index is congruent to j mod k.
"""

from __future__ import annotations

from functools import cache
from math import comb

from .partitions import (
    CycleType,
    Partition,
    SkewLRTableau,
    partitions_of,
    standard_tableaux,
    syt_count,
)


def _mobius(d: int) -> int:
    result, x, p = 1, d, 2
    while p * p <= x:
        if x % p == 0:
            x //= p
            if x % p == 0:
                return 0
            result = -result
        p += 1
    if x > 1:
        result = -result
    return result


def witt_rank(n: int, k: int) -> int:
    """Rank of the degree-k part of the free Lie ring on n generators.

    Equals (1/k) sum over d | k of mu(d) n^(k/d); the division is always exact.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    total = sum(_mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
    assert total % k == 0
    return total // k


@cache
def _maj_residues(shape: Partition) -> tuple[int, ...]:
    """Histogram of major indices mod |shape| over all standard tableaux."""
    k = shape.size
    counts = [0] * k
    for tableau in standard_tableaux(shape):
        counts[tableau.major_index % k] += 1
    return tuple(counts)


def kw_multiplicity(shape, j: int) -> int:
    """Number of standard tableaux of the given shape with maj = j mod k.

    This is the multiplicity of the j-th cyclic character in the restriction
    of S^shape to the cyclic subgroup generated by a long cycle.
    """
    shape = Partition(shape)
    k = shape.size
    if k < 1:
        raise ValueError("shape must be nonempty")
    return _maj_residues(shape)[j % k]


def lr_coefficient(outer, inner, weight) -> int:
    """Littlewood-Richardson coefficient LR^outer_{inner, weight}.

    Counts semistandard fillings of the skew shape outer \\ inner with content
    `weight` whose reverse reading word (right to left, top row first) is a
    lattice permutation.  Returns 0 when the shapes are incompatible.
    """
    return _lr(Partition(outer), Partition(inner), Partition(weight))


@cache
def _lr(outer: Partition, inner: Partition, weight: Partition) -> int:
    if not outer.contains(inner) or outer.size != inner.size + weight.size:
        return 0
    if not weight:
        return 1
    nvals = weight.length
    inner_padded = tuple(inner) + (0,) * (outer.length - inner.length)
    # Cells in reverse reading order: row by row, right to left.
    cells = [
        (r, c)
        for r in range(outer.length)
        for c in range(outer[r] - 1, inner_padded[r] - 1, -1)
    ]
    counts = [0] * (nvals + 1)
    grid: dict[tuple[int, int], int] = {}
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        above = grid.get((r - 1, c))
        right = grid.get((r, c + 1))
        for v in range(1, nvals + 1):
            if counts[v] >= weight[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word prefix condition
            if above is not None and v <= above:
                continue
            if right is not None and v > right:
                continue
            counts[v] += 1
            grid[(r, c)] = v
            fill(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]

    fill(0)
    return total


def skew_lr_tableaux(outer, inner, weight):
    """The fillings counted by lr_coefficient, as SkewLRTableau witnesses."""
    outer, inner, weight = Partition(outer), Partition(inner), Partition(weight)
    if not outer.contains(inner) or outer.size != inner.size + weight.size:
        return
    if not weight:
        yield SkewLRTableau(outer, inner, {})
        return
    nvals = weight.length
    inner_padded = tuple(inner) + (0,) * (outer.length - inner.length)
    cells = [
        (r, c)
        for r in range(outer.length)
        for c in range(outer[r] - 1, inner_padded[r] - 1, -1)
    ]
    counts = [0] * (nvals + 1)
    grid: dict[tuple[int, int], int] = {}

    def fill(idx: int):
        if idx == len(cells):
            yield SkewLRTableau(outer, inner, dict(grid))
            return
        r, c = cells[idx]
        above = grid.get((r - 1, c))
        right = grid.get((r, c + 1))
        for v in range(1, nvals + 1):
            if counts[v] >= weight[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if above is not None and v <= above:
                continue
            if right is not None and v > right:
                continue
            counts[v] += 1
            grid[(r, c)] = v
            yield from fill(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]

    yield from fill(0)


def pieri_column(mu, k: int, n: int) -> list[Partition]:
    """All partitions obtained from mu by adding a vertical k-strip.

    A vertical strip has at most one box per row; results are capped at
    length n.  Every partition occurs with multiplicity one.
    """
    mu = Partition(mu)
    if mu.length > n:
        raise ValueError(f"length of mu exceeds n={n}")
    out: list[Partition] = []
    parts: list[int] = []

    def grow(row: int, remaining: int) -> None:
        if remaining == 0 and row >= mu.length:
            out.append(Partition(parts))
            return
        if row >= n:
            return
        base = mu[row] if row < mu.length else 0
        prev = parts[row - 1] if row > 0 else None
        for add in (0, 1):
            if add > remaining:
                continue
            part = base + add
            if part == 0 or (prev is not None and part > prev):
                continue
            parts.append(part)
            grow(row + 1, remaining - add)
            parts.pop()

    grow(0, k)
    return sorted(out, reverse=True)


def _doubled_partitions(total: int):
    """Partitions of `total` whose conjugate is even (rows pair up)."""
    if total % 2:
        return
    for kappa in partitions_of(total // 2):
        yield Partition([p for p in kappa for _ in range(2)])


def branching_coefficient(lam, mubar, g: int) -> int:
    """Multiplicity of the Sp(2g) irreducible `mubar` in the GL(2g) module `lam`."""
    lam, mubar = Partition(lam), Partition(mubar)
    if lam.length > g:
        raise ValueError(f"length of lambda exceeds g={g}")
    if mubar.length > g:
        return 0
    total = 0
    for eta in _doubled_partitions(lam.size - mubar.size):
        if lam.contains(eta):
            total += lr_coefficient(lam, eta, mubar)
    return total


def gl_to_sp_branching(lam, g: int) -> dict[Partition, int]:
    """Full restriction of a GL(2g) irreducible to Sp(2g).

    Returns the nonzero multiplicities {mubar: N} over partitions with at
    most g rows.
    """
    lam = Partition(lam)
    if lam.length > g:
        raise ValueError(f"length of lambda exceeds g={g}")
    result: dict[Partition, int] = {}
    for eta in _doubled_partitions_inside(lam):
        for mubar in partitions_of(lam.size - eta.size, max_length=g):
            c = lr_coefficient(lam, eta, mubar)
            if c:
                result[mubar] = result.get(mubar, 0) + c
    return dict(sorted(result.items(), reverse=True))


def _doubled_partitions_inside(lam: Partition):
    for total in range(0, lam.size + 1, 2):
        for eta in _doubled_partitions(total):
            if lam.contains(eta):
                yield eta


def sk_character(nu, cls) -> int:
    """Character of the symmetric group irreducible S^nu on a cycle type.

    Evaluated by the Murnaghan-Nakayama recursion over border strips, via
    first-column hook lengths.
    """
    nu, cls = Partition(nu), CycleType(cls)
    if nu.size != cls.size:
        raise ValueError("cycle type must have the same size as the shape")
    return _mn(nu, tuple(cls))


@cache
def _mn(nu: Partition, parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    t, rest = parts[0], parts[1:]
    length = nu.length
    beta = [nu[i] + length - 1 - i for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        mu = Partition(
            v - (length - 1 - i) for i, v in enumerate(new_beta) if v - (length - 1 - i) > 0
        )
        total += (-1) ** height * _mn(mu, rest)
    return total


def mult_gl_in_cyclic(lam, n: int) -> int:
    """Multiplicity of the GL(n) module `lam` in the cyclic quotient of H^(x)k.

    Stable for n >= k+2 (k = |lam|); smaller ranks are rejected rather than
    extrapolated.
    """
    lam = Partition(lam)
    k = lam.size
    if n < k + 2:
        raise ValueError(f"stable range requires n >= {k + 2}, got {n}")
    return kw_multiplicity(lam, 0)


def mult_gl_in_free_lie(lam, n: int) -> int:
    """Multiplicity of the GL(n) module `lam` in the degree-|lam| free Lie part."""
    lam = Partition(lam)
    m = lam.size
    if n < m:
        raise ValueError(f"stable range requires n >= {m}, got {n}")
    return kw_multiplicity(lam, 1)


def mult_gl_in_h(lam, g: int) -> int:
    """GL(2g) multiplicity of `lam` in the bracket-map kernel of degree |lam|-2.

    Computed as the multiplicity in H (x) FreeLie(k+1) minus the multiplicity
    in FreeLie(k+2); the surjectivity of the bracket map makes the difference
    the kernel multiplicity, so a negative value signals a bug.
    """
    lam = Partition(lam)
    n = 2 * g
    if lam.size < 3:
        raise ValueError("lam must be a partition of k+2 with k >= 1")
    if lam.length > n:
        raise ValueError(f"length of lambda exceeds 2g={n}")
    if n < lam.size + 2:
        raise ValueError(f"stable range requires 2g >= {lam.size + 2}, got {n}")
    in_tensor = sum(mult_gl_in_free_lie(mu, n) for mu in lam.remove_node())
    in_lie = mult_gl_in_free_lie(lam, n)
    result = in_tensor - in_lie
    if result < 0:
        raise RuntimeError(f"negative kernel multiplicity for {lam}: inconsistent rules")
    return result


SOURCES = ("h", "cyclic", "tensor_power")


def _gl_module_multiplicities(source: str, k: int, g: int) -> dict[Partition, int]:
    n = 2 * g
    if source == "h":
        shapes = partitions_of(k + 2, max_length=n)
        return {lam: mult_gl_in_h(lam, g) for lam in shapes}
    if source == "cyclic":
        return {lam: kw_multiplicity(lam, 0) for lam in partitions_of(k, max_length=n)}
    if source == "tensor_power":
        return {lam: syt_count(lam) for lam in partitions_of(k, max_length=n)}
    raise ValueError(f"unknown source {source!r}; expected one of {SOURCES}")


def mult_sp_in_module(mubar, source: str, k: int, g: int) -> int:
    """Multiplicity of the Sp(2g) irreducible `mubar` in a named module.

    `source` is one of "h" (bracket-map kernel, degree k), "cyclic" (cyclic
    quotient of H^(x)k) or "tensor_power" (H^(x)k itself).  Requires the
    stable range g >= k+2.
    """
    mubar = Partition(mubar)
    if g < k + 2:
        raise ValueError(f"stable range requires g >= {k + 2}, got {g}")
    total = 0
    for lam, mult in _gl_module_multiplicities(source, k, g).items():
        if mult:
            total += branching_coefficient(lam, mubar, g) * mult
    return total


def sp_decomposition(source: str, k: int, g: int) -> dict[Partition, int]:
    """Full Sp(2g) decomposition of a named module, sorted by partition."""
    if g < k + 2:
        raise ValueError(f"stable range requires g >= {k + 2}, got {g}")
    result: dict[Partition, int] = {}
    for lam, mult in _gl_module_multiplicities(source, k, g).items():
        if not mult:
            continue
        for mubar, n in gl_to_sp_branching(lam, g).items():
            result[mubar] = result.get(mubar, 0) + n * mult
    return dict(sorted(((m, c) for m, c in result.items() if c), reverse=True))


def double_factorial_odd(j: int) -> int:
    """(2j-1)!! with the empty product (-1)!! = 1."""
    result = 1
    for i in range(1, 2 * j, 2):
        result *= i
    return result


def brauer_dim(lam, k: int, g: int) -> int:
    """Dimension of the Brauer algebra cell module for lam inside size k.

    Equals C(k, 2j) (2j-1)!! f^lam where 2j = k - |lam|; this is also the
    multiplicity of the Sp(2g) irreducible lam in H^(x)k.
    """
    lam = Partition(lam)
    if lam.length > g:
        raise ValueError(f"length of lambda exceeds g={g}")
    j2 = k - lam.size
    if j2 < 0 or j2 % 2:
        raise ValueError(f"|lam| must be k-2j, got |lam|={lam.size}, k={k}")
    j = j2 // 2
    return comb(k, 2 * j) * double_factorial_odd(j) * syt_count(lam)
