"""The Brauer algebra B_k(-2g): diagrams, relations, and its tensor action.

Diagrams are perfect matchings on k top and k bottom points; composition
stacks two diagrams, removes interior loops, and each loop contributes one
factor of the parameter delta = -2g.  The action on H^(x)k is the sign
twisted one: the subalgebra generated by the s_i acts as sgn(sigma) times
the ordinary place permutation.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import cache

from .combinatorics import lr_coefficient, sk_character
from .partitions import CycleType, Partition, partitions_of
from .tensorspace import (
    Coeff,
    PermAlgebraElement,
    SparseTensor,
    SymplecticSpace,
    act_perm,
    sp_maximal_vector,
)

# Points 0..k-1 are the top row, k..2k-1 the bottom row.


class BrauerDiagram:
    """A perfect matching on 2k labelled points, k on top and k on bottom."""

    __slots__ = ("k", "edges")

    def __init__(self, k: int, edges):
        canonical = tuple(sorted(tuple(sorted(e)) for e in edges))
        points = [p for e in canonical for p in e]
        if sorted(points) != list(range(2 * k)):
            raise ValueError(f"edges must perfectly match 0..{2 * k - 1}")
        self.k = k
        self.edges = canonical

    @classmethod
    def _raw(cls, k: int, canonical_edges) -> "BrauerDiagram":
        self = object.__new__(cls)
        self.k = k
        self.edges = canonical_edges
        return self

    @classmethod
    def identity(cls, k: int) -> "BrauerDiagram":
        return cls(k, [(i, k + i) for i in range(k)])

    @classmethod
    def s(cls, k: int, i: int) -> "BrauerDiagram":
        """Crossing of strands i, i+1 (1-based)."""
        if not 1 <= i <= k - 1:
            raise ValueError(f"s_{i} undefined for size {k}")
        edges = [(j, k + j) for j in range(k) if j not in (i - 1, i)]
        edges += [(i - 1, k + i), (i, k + i - 1)]
        return cls(k, edges)

    @classmethod
    def gamma(cls, k: int, i: int) -> "BrauerDiagram":
        """Horizontal cup-cap joining strands i, i+1 (1-based)."""
        if not 1 <= i <= k - 1:
            raise ValueError(f"gamma_{i} undefined for size {k}")
        edges = [(j, k + j) for j in range(k) if j not in (i - 1, i)]
        edges += [(i - 1, i), (k + i - 1, k + i)]
        return cls(k, edges)

    @classmethod
    def from_permutation(cls, k: int, sigma) -> "BrauerDiagram":
        """Diagram whose twisted action equals sgn(sigma) times the place
        permutation sigma (0-indexed image tuple)."""
        return cls(k, [(sigma[p], k + p) for p in range(k)])

    def __eq__(self, other):
        return (
            isinstance(other, BrauerDiagram)
            and self.k == other.k
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.k, self.edges))

    def __lt__(self, other):
        return self.edges < other.edges

    def __repr__(self):
        return f"BrauerDiagram(k={self.k}, {list(self.edges)})"


@cache
def all_diagrams(k: int) -> tuple[BrauerDiagram, ...]:
    """All (2k-1)!! perfect matchings on 2k points."""
    out = []

    def match(points):
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for idx, second in enumerate(rest):
            for tail in match(rest[:idx] + rest[idx + 1 :]):
                yield ((first, second),) + tail

    for edges in match(tuple(range(2 * k))):
        out.append(BrauerDiagram(k, edges))
    return tuple(sorted(out))


def compose_diagrams(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack d1 over d2, trace paths, and count removed interior loops.

    Vertices of the stacked graph: 0..k-1 final top, k..2k-1 identified
    middle row, 2k..3k-1 final bottom.  Edges are tracked by id because two
    middle points can be joined by parallel edges (one from each diagram).
    """
    if d1.k != d2.k:
        raise ValueError("size mismatch")
    k = d1.k
    edges: list[tuple[int, int]] = list(d1.edges)  # d1 keeps its ids
    edges += [(a + k, b + k) for a, b in d2.edges]  # d2 shifts down one row
    incident: dict[int, list[int]] = {v: [] for v in range(3 * k)}
    for idx, (a, b) in enumerate(edges):
        incident[a].append(idx)
        incident[b].append(idx)

    def other_end(idx: int, v: int) -> int:
        a, b = edges[idx]
        return b if v == a else a

    used = [False] * len(edges)
    traced: list[tuple[int, int]] = []
    boundary = list(range(k)) + list(range(2 * k, 3 * k))
    for start in boundary:
        e = incident[start][0]
        if used[e]:
            continue  # already traced from the other endpoint
        v = start
        while True:
            used[e] = True
            v = other_end(e, v)
            if v < k or v >= 2 * k:
                break
            first, second = incident[v]
            e = second if e == first else first
        traced.append((start, v))
    loops = 0
    for start_edge in range(len(edges)):
        if used[start_edge]:
            continue
        loops += 1
        e = start_edge
        v = edges[e][0]
        while not used[e]:
            used[e] = True
            v = other_end(e, v)
            first, second = incident[v]
            e = second if e == first else first

    def relabel(v: int) -> int:
        return v if v < k else v - k

    result = BrauerDiagram(k, [(relabel(a), relabel(b)) for a, b in traced])
    return result, loops


class BrauerElement:
    """Finitely supported rational combination of diagrams of one size,
    with loop parameter delta = -2g."""

    __slots__ = ("k", "delta", "_terms")

    def __init__(self, k: int, delta: Coeff, terms=None):
        self.k = k
        self.delta = delta
        clean: dict[BrauerDiagram, Coeff] = {}
        for diagram, coeff in (terms or {}).items():
            if not coeff:
                continue
            if diagram.k != k:
                raise ValueError("diagram size mismatch")
            clean[diagram] = clean.get(diagram, 0) + coeff
        self._terms = {d: c for d, c in clean.items() if c}

    @classmethod
    def from_diagram(cls, diagram: BrauerDiagram, delta: Coeff) -> "BrauerElement":
        return cls(diagram.k, delta, {diagram: 1})

    @classmethod
    def identity(cls, k: int, delta: Coeff) -> "BrauerElement":
        return cls.from_diagram(BrauerDiagram.identity(k), delta)

    def terms(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def _like(self, other: "BrauerElement"):
        if self.k != other.k or self.delta != other.delta:
            raise ValueError("size or parameter mismatch")

    def __add__(self, other: "BrauerElement") -> "BrauerElement":
        self._like(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            new = out.get(d, 0) + c
            if new:
                out[d] = new
            else:
                out.pop(d, None)
        return BrauerElement(self.k, self.delta, out)

    def __sub__(self, other: "BrauerElement") -> "BrauerElement":
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BrauerElement(
                self.k, self.delta, {d: c * other for d, c in self._terms.items()}
            )
        self._like(other)
        out: dict[BrauerDiagram, Coeff] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                product, loops = compose_diagrams(d1, d2)
                coeff = c1 * c2 * self.delta**loops
                new = out.get(product, 0) + coeff
                if new:
                    out[product] = new
                else:
                    out.pop(product, None)
        return BrauerElement(self.k, self.delta, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, BrauerElement)
            and self.k == other.k
            and self.delta == other.delta
            and self._terms == other._terms
        )

    def __repr__(self):
        return f"BrauerElement(k={self.k}, delta={self.delta}, {len(self._terms)} diagrams)"


def multiply(a: BrauerElement, b: BrauerElement) -> BrauerElement:
    return a * b


# Twisted right action on H^(x)k.  Generators: s_j acts as minus the adjacent
# swap; gamma_j pairs out slots j, j+1 and inserts minus the invariant
# 2-tensor in their place.


def _act_s(tensor: SparseTensor, j: int) -> SparseTensor:
    sigma = list(range(tensor.degree))
    sigma[j - 1], sigma[j] = sigma[j], sigma[j - 1]
    return -1 * tensor.apply_permutation(tuple(sigma))


def _act_gamma(tensor: SparseTensor, j: int) -> SparseTensor:
    space = SymplecticSpace(tensor.n // 2)
    pairs = [space.dual_basis_vector(r) for r in range(1, space.n + 1)]
    out: dict[bytes, Coeff] = {}
    for word, coeff in tensor._terms.items():
        value = space.pairing(word[j - 1], word[j])
        if not value:
            continue
        prefix, suffix = word[: j - 1], word[j + 1 :]
        for r in range(1, space.n + 1):
            rdual, sign = pairs[r - 1]
            key = prefix + bytes((r, rdual)) + suffix
            new = out.get(key, 0) - coeff * value * sign
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return SparseTensor._raw(tensor.degree, tensor.n, out)


def act_twisted_generator(tensor: SparseTensor, kind: str, i: int) -> SparseTensor:
    if kind == "s":
        return _act_s(tensor, i)
    if kind == "gamma":
        return _act_gamma(tensor, i)
    raise ValueError(f"unknown generator kind {kind!r}")


@cache
def _generator_words(k: int) -> dict[BrauerDiagram, tuple[tuple, int]]:
    """BFS expression of every diagram as a generator word and a loop exponent.

    The product of the word's generator diagrams equals delta^exponent times
    the diagram, independently of delta.
    """
    identity = BrauerDiagram.identity(k)
    generators = [("s", i, BrauerDiagram.s(k, i)) for i in range(1, k)] + [
        ("gamma", i, BrauerDiagram.gamma(k, i)) for i in range(1, k)
    ]
    table: dict[BrauerDiagram, tuple[tuple, int]] = {identity: ((), 0)}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for diagram in frontier:
            word, exponent = table[diagram]
            for kind, i, gen in generators:
                product, loops = compose_diagrams(diagram, gen)
                if product not in table:
                    table[product] = (word + ((kind, i),), exponent + loops)
                    next_frontier.append(product)
        frontier = next_frontier
    assert len(table) == len(all_diagrams(k))
    return table


def act_twisted_diagram(tensor: SparseTensor, diagram: BrauerDiagram) -> SparseTensor:
    """Right action of a single diagram, via a generator decomposition."""
    if tensor.degree != diagram.k:
        raise ValueError("degree mismatch")
    word, exponent = _generator_words(diagram.k)[diagram]
    result = tensor
    for kind, i in word:
        result = act_twisted_generator(result, kind, i)
    if exponent:
        delta = Fraction(-tensor.n)
        result = result * (Fraction(1) / delta**exponent)
    return result


def act_twisted(tensor: SparseTensor, element: BrauerElement) -> SparseTensor:
    """Right action of a Brauer element; the parameter must match -2g."""
    if tensor.degree != element.k:
        raise ValueError("degree mismatch")
    if element.delta != -tensor.n:
        raise ValueError(
            f"parameter mismatch: element has delta={element.delta}, space wants {-tensor.n}"
        )
    total = SparseTensor.zero(tensor.degree, tensor.n)
    for diagram, coeff in element._terms.items():
        total = total + coeff * act_twisted_diagram(tensor, diagram)
    return total


def defining_relations(k: int, delta: Coeff):
    """All defining relations of B_k(delta) as (name, lhs, rhs) triples."""
    return _relation_pairs(k, delta)


def _relation_pairs(k: int, delta: Coeff):
    def s(i):
        return BrauerElement.from_diagram(BrauerDiagram.s(k, i), delta)

    def gm(i):
        return BrauerElement.from_diagram(BrauerDiagram.gamma(k, i), delta)

    one = BrauerElement.identity(k, delta)
    pairs = []
    for i in range(1, k):
        pairs.append((f"s{i}^2 = 1", s(i) * s(i), one))
        pairs.append((f"gm{i}^2 = delta gm{i}", gm(i) * gm(i), gm(i) * delta))
        pairs.append((f"gm{i} s{i} = gm{i}", gm(i) * s(i), gm(i)))
        pairs.append((f"s{i} gm{i} = gm{i}", s(i) * gm(i), gm(i)))
    for i in range(1, k):
        for j in range(i + 2, k):
            pairs.append((f"s{i} s{j} commute", s(i) * s(j), s(j) * s(i)))
            pairs.append((f"s{i} gm{j} commute", s(i) * gm(j), gm(j) * s(i)))
            pairs.append((f"gm{i} s{j} commute", gm(i) * s(j), s(j) * gm(i)))
            pairs.append((f"gm{i} gm{j} commute", gm(i) * gm(j), gm(j) * gm(i)))
    for i in range(1, k - 1):
        pairs.append(
            (f"braid s{i}", s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1))
        )
        pairs.append((f"gm{i} gm{i + 1} gm{i} = gm{i}", gm(i) * gm(i + 1) * gm(i), gm(i)))
        pairs.append(
            (f"gm{i + 1} gm{i} gm{i + 1} = gm{i + 1}", gm(i + 1) * gm(i) * gm(i + 1), gm(i + 1))
        )
        pairs.append(
            (f"s{i} gm{i + 1} gm{i} = s{i + 1} gm{i}", s(i) * gm(i + 1) * gm(i), s(i + 1) * gm(i))
        )
        pairs.append(
            (
                f"gm{i + 1} gm{i} s{i + 1} = gm{i + 1} s{i}",
                gm(i + 1) * gm(i) * s(i + 1),
                gm(i + 1) * s(i),
            )
        )
    return pairs


def check_relations(k: int, g: int, rng=None, panel: int = 3) -> bool:
    """Verify every defining relation diagrammatically and as operators.

    The operator check applies both sides of each relation to a panel of
    random sparse tensors via the twisted action.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    delta = -2 * g
    pairs = _relation_pairs(k, delta)
    for _, lhs, rhs in pairs:
        if lhs != rhs:
            return False
    rng = rng or random.Random(20121123)
    tensors = [_random_tensor(rng, k, 2 * g, 5) for _ in range(panel)]
    for _, lhs, rhs in pairs:
        for t in tensors:
            if act_twisted(t, lhs) != act_twisted(t, rhs):
                return False
    return True


def _random_tensor(rng, degree: int, n: int, nterms: int) -> SparseTensor:
    terms = {}
    for _ in range(nterms):
        word = bytes(rng.randint(1, n) for _ in range(degree))
        terms[word] = terms.get(word, 0) + rng.randint(-4, 4)
    return SparseTensor(degree, n, terms)


def _even_partitions(total: int):
    """Partitions with all parts even."""
    if total % 2:
        return
    for kappa in partitions_of(total // 2):
        yield Partition(2 * p for p in kappa)


def ram_character(lam, cls, g: int) -> int:
    """Character of the Brauer cell module for lam at a permutation class.

    Evaluates sum over nu containing lam' of (sum over even beta of
    LR^nu_{lam', beta}) chi^nu(cls); the class acts through the twisted
    embedding of S_k in B_k(-2g).
    """
    lam, cls = Partition(lam), CycleType(cls)
    if lam.length > g:
        raise ValueError(f"length of lambda exceeds g={g}")
    k = cls.size
    j2 = k - lam.size
    if j2 < 0 or j2 % 2:
        raise ValueError("|lam| must equal k - 2j")
    lam_conj = lam.conjugate()
    total = 0
    for nu in partitions_of(k):
        if not nu.contains(lam_conj):
            continue
        weight = sum(lr_coefficient(nu, lam_conj, beta) for beta in _even_partitions(j2))
        if weight:
            total += weight * sk_character(nu, cls)
    return total


def restriction_multiset(lam, k: int) -> dict[Partition, int]:
    """Decomposition of the Brauer cell module under the ordinary S_k action.

    Returns {nu': multiplicity}; the conjugation records the sign twist
    between the Brauer embedding of S_k and the place-permutation action.
    """
    lam = Partition(lam)
    j2 = k - lam.size
    if j2 < 0 or j2 % 2:
        raise ValueError("|lam| must equal k - 2j")
    lam_conj = lam.conjugate()
    out: dict[Partition, int] = {}
    for nu in partitions_of(k):
        if not nu.contains(lam_conj):
            continue
        weight = sum(lr_coefficient(nu, lam_conj, beta) for beta in _even_partitions(j2))
        if weight:
            out[nu.conjugate()] = weight
    return dict(sorted(out.items(), reverse=True))


def _rank(vectors: list[SparseTensor]) -> int:
    """Rank over Q of a family of sparse tensors, by Gaussian elimination."""
    rows: list[dict[bytes, Fraction]] = []
    for v in vectors:
        if not v.is_zero():
            rows.append({w: Fraction(c) for w, c in v._terms.items()})
    pivots: dict[bytes, dict[bytes, Fraction]] = {}
    for row in rows:
        while row:
            key = min(row)
            if key not in pivots:
                inv = Fraction(1) / row[key]
                pivots[key] = {w: c * inv for w, c in row.items()}
                break
            factor = row[key]
            pivot = pivots[key]
            for w, c in pivot.items():
                new = row.get(w, Fraction(0)) - factor * c
                if new:
                    row[w] = new
                else:
                    row.pop(w, None)
    return len(pivots)


def span_equality_check(lam, j: int, k: int, g: int) -> bool:
    """Do the diagram translates of the maximal vector span no more than its
    symmetric group translates?  Exact rank comparison over Q."""
    lam = Partition(lam)
    if lam.size + 2 * j != k:
        raise ValueError("need |lam| + 2j = k")
    vector = sp_maximal_vector(lam, j, g)
    diagram_orbit = [act_twisted_diagram(vector, d) for d in all_diagrams(k)]
    perm_orbit = [
        act_perm(vector, PermAlgebraElement._raw(k, {tuple(sigma): 1}))
        for sigma in itertools.permutations(range(k))
    ]
    rank_perm = _rank(perm_orbit)
    rank_diagram = _rank(diagram_orbit)
    rank_all = _rank(diagram_orbit + perm_orbit)
    return rank_perm == rank_all == rank_diagram
