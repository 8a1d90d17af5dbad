"""Exact sparse tensor algebra over H = Q^(2g) with the symplectic pairing.

Words over the basis alphabet {1..n} are stored as fixed-width byte strings;
coefficients are exact (int or Fraction).  No stored coefficient is ever zero.
All values are immutable: every operation returns a fresh object.
"""

from __future__ import annotations

import itertools
import json
import os
from fractions import Fraction
from math import factorial

from .partitions import Partition

Coeff = int | Fraction


class TermLimitError(RuntimeError):
    """Raised when a tensor operation exceeds the live term watermark.

    Carries enough context to rerun with a higher limit.
    """

    def __init__(self, operation: str, count: int, limit: int):
        super().__init__(
            f"{operation}: live term count {count} exceeds watermark {limit}; "
            f"raise the limit with set_term_limit() or --watermark and rerun"
        )
        self.operation = operation
        self.count = count
        self.limit = limit


_WATERMARK_ENV = "JCOKERNEL_WATERMARK"
_term_limit = int(os.environ.get(_WATERMARK_ENV, "5000000"))
_peak_terms = 0


def set_term_limit(limit: int) -> None:
    global _term_limit
    if limit < 1:
        raise ValueError("watermark must be positive")
    _term_limit = limit


def get_term_limit() -> int:
    return _term_limit


def peak_terms() -> int:
    """High-water mark of live terms seen since the last reset."""
    return _peak_terms


def reset_peak_terms() -> None:
    global _peak_terms
    _peak_terms = 0


def _note_terms(count: int, operation: str) -> None:
    global _peak_terms
    if count > _peak_terms:
        _peak_terms = count
    if count > _term_limit:
        raise TermLimitError(operation, count, _term_limit)


def rat_str(value: Coeff) -> str:
    """Exact "p/q" rendering, including "n/1" for integers."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def rat_parse(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


class SymplecticSpace:
    """The 2g-dimensional rational symplectic space with basis e_1..e_2g.

    The index involution is i' = 2g - i + 1; the pairing satisfies
    <e_i, e_i'> = 1 for i <= g and is antisymmetric.
    """

    __slots__ = ("g", "n")

    def __init__(self, g: int):
        if g < 1:
            raise ValueError("genus must be positive")
        self.g = g
        self.n = 2 * g

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")

    def dual_index(self, i: int) -> int:
        self._check(i)
        return self.n - i + 1

    def dual_basis_vector(self, i: int) -> tuple[int, int]:
        """e_i* as (index, sign): (i', +1) for i <= g, (i', -1) for i > g."""
        self._check(i)
        return self.n - i + 1, 1 if i <= self.g else -1

    def pairing(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        if i + j != self.n + 1:
            return 0
        return 1 if i <= self.g else -1

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and other.g == self.g

    def __hash__(self):
        return hash(("SymplecticSpace", self.g))

    def __repr__(self):
        return f"SymplecticSpace(g={self.g})"


class SparseTensor:
    """Finitely supported map from length-m words over {1..n} to rationals."""

    __slots__ = ("degree", "n", "_terms")

    def __init__(self, degree: int, n: int, terms=None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if not 1 <= n <= 255:
            raise ValueError("alphabet size out of range")
        self.degree = degree
        self.n = n
        clean: dict[bytes, Coeff] = {}
        for word, coeff in (terms or {}).items():
            if not coeff:
                continue
            word = bytes(word)
            if len(word) != degree or any(not 1 <= b <= n for b in word):
                raise ValueError(f"bad word {word!r} for degree {degree}, n {n}")
            clean[word] = clean.get(word, 0) + coeff
        self._terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def _raw(cls, degree: int, n: int, terms: dict[bytes, Coeff]) -> "SparseTensor":
        # Internal fast path; terms must already be normalized.
        self = object.__new__(cls)
        self.degree = degree
        self.n = n
        self._terms = terms
        return self

    @classmethod
    def zero(cls, degree: int, n: int) -> "SparseTensor":
        return cls._raw(degree, n, {})

    @classmethod
    def basis_word(cls, n: int, letters) -> "SparseTensor":
        word = bytes(letters)
        return cls(len(word), n, {word: 1})

    def is_zero(self) -> bool:
        return not self._terms

    def support_size(self) -> int:
        return len(self._terms)

    def terms(self):
        """Terms sorted lexicographically by word."""
        return sorted(self._terms.items())

    def coefficient(self, letters) -> Coeff:
        return self._terms.get(bytes(letters), 0)

    def _like(self, other: "SparseTensor", op: str) -> None:
        if self.degree != other.degree or self.n != other.n:
            raise ValueError(f"{op}: mismatched degree or alphabet")

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        self._like(other, "add")
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            new = out.get(word, 0) + coeff
            if new:
                out[word] = new
            else:
                out.pop(word, None)
        _note_terms(len(out), "add")
        return SparseTensor._raw(self.degree, self.n, out)

    def __sub__(self, other: "SparseTensor") -> "SparseTensor":
        return self + (-1) * other

    def __neg__(self) -> "SparseTensor":
        return (-1) * self

    def __mul__(self, scalar: Coeff) -> "SparseTensor":
        if not scalar:
            return SparseTensor.zero(self.degree, self.n)
        return SparseTensor._raw(
            self.degree, self.n, {w: c * scalar for w, c in self._terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SparseTensor)
            and self.degree == other.degree
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.degree, self.n, frozenset(self._terms.items())))

    def tensor(self, other: "SparseTensor") -> "SparseTensor":
        """Tensor product; degrees add."""
        if self.n != other.n:
            raise ValueError("tensor: mismatched alphabet")
        out: dict[bytes, Coeff] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                out[w1 + w2] = c1 * c2
        _note_terms(len(out), "tensor")
        return SparseTensor._raw(self.degree + other.degree, self.n, out)

    def apply_permutation(self, sigma: tuple[int, ...]) -> "SparseTensor":
        """Place permutation: position p of the result holds letter sigma(p)."""
        if len(sigma) != self.degree:
            raise ValueError("permutation degree mismatch")
        out = {}
        for word, coeff in self._terms.items():
            out[bytes(map(word.__getitem__, sigma))] = coeff
        return SparseTensor._raw(self.degree, self.n, out)

    def weight_gl(self) -> tuple[int, ...] | None:
        """Common GL letter-count vector of all words, or None if mixed."""
        weight = None
        for word in self._terms:
            vec = [0] * self.n
            for b in word:
                vec[b - 1] += 1
            vec = tuple(vec)
            if weight is None:
                weight = vec
            elif weight != vec:
                return None
        return weight

    def to_json_dict(self) -> dict:
        if self.n % 2:
            raise ValueError("serialization is defined for symplectic tensors")
        return {
            "degree": self.degree,
            "g": self.n // 2,
            "terms": [
                {"word": list(word), "coeff": rat_str(coeff)}
                for word, coeff in self.terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "SparseTensor":
        terms = {
            bytes(entry["word"]): rat_parse(entry["coeff"]) for entry in data["terms"]
        }
        return cls(data["degree"], 2 * data["g"], terms)

    @classmethod
    def from_json(cls, text: str) -> "SparseTensor":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self):
        shown = ", ".join(
            f"{rat_str(c)}*{tuple(w)}" for w, c in itertools.islice(self.terms(), 4)
        )
        extra = "" if len(self._terms) <= 4 else f", ... ({len(self._terms)} terms)"
        return f"SparseTensor(deg={self.degree}, n={self.n}, [{shown}{extra}])"


def _perm_sign(sigma) -> int:
    seen = [False] * len(sigma)
    sign = 1
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = sigma[p]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class PermAlgebraElement:
    """Finitely supported rational combination of place permutations.

    Permutations are stored 0-indexed as tuples sigma with the action
    (w . sigma)[p] = w[sigma[p]]; the product sigma * tau composes so that
    (w . sigma) . tau = w . (sigma * tau).
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        clean: dict[tuple[int, ...], Coeff] = {}
        for sigma, coeff in (terms or {}).items():
            if not coeff:
                continue
            sigma = tuple(sigma)
            if sorted(sigma) != list(range(degree)):
                raise ValueError(f"not a permutation of 0..{degree - 1}: {sigma}")
            clean[sigma] = clean.get(sigma, 0) + coeff
        self._terms = {s: c for s, c in clean.items() if c}

    @classmethod
    def _raw(cls, degree, terms) -> "PermAlgebraElement":
        self = object.__new__(cls)
        self.degree = degree
        self._terms = terms
        return self

    @classmethod
    def identity(cls, degree: int) -> "PermAlgebraElement":
        return cls._raw(degree, {tuple(range(degree)): 1})

    @classmethod
    def transposition(cls, degree: int, i: int) -> "PermAlgebraElement":
        """The adjacent swap s_i of positions i and i+1, 1-based."""
        if not 1 <= i <= degree - 1:
            raise ValueError(f"s_{i} undefined in degree {degree}")
        sigma = list(range(degree))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        return cls._raw(degree, {tuple(sigma): 1})

    @classmethod
    def from_permutation(cls, sigma, coeff: Coeff = 1) -> "PermAlgebraElement":
        return cls(len(tuple(sigma)), {tuple(sigma): coeff})

    def terms(self):
        return sorted(self._terms.items())

    def support_size(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        other = self._coerce(other)
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self._terms)
        for sigma, coeff in other._terms.items():
            new = out.get(sigma, 0) + coeff
            if new:
                out[sigma] = new
            else:
                out.pop(sigma, None)
        return PermAlgebraElement._raw(self.degree, out)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        return self + (self._coerce(other) * -1)

    def __rsub__(self, other):
        return self._coerce(other) + (self * -1)

    def _coerce(self, value) -> "PermAlgebraElement":
        if isinstance(value, PermAlgebraElement):
            return value
        if isinstance(value, (int, Fraction)):
            return PermAlgebraElement._raw(
                self.degree, {tuple(range(self.degree)): value} if value else {}
            )
        raise TypeError(f"cannot combine PermAlgebraElement with {value!r}")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PermAlgebraElement._raw(self.degree, {})
            return PermAlgebraElement._raw(
                self.degree, {s: c * other for s, c in self._terms.items()}
            )
        other = self._coerce(other)
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out: dict[tuple[int, ...], Coeff] = {}
        for sigma, c1 in self._terms.items():
            for tau, c2 in other._terms.items():
                prod = tuple(map(sigma.__getitem__, tau))
                new = out.get(prod, 0) + c1 * c2
                if new:
                    out[prod] = new
                else:
                    out.pop(prod, None)
        return PermAlgebraElement._raw(self.degree, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._coerce(other) * self

    def __eq__(self, other):
        return (
            isinstance(other, PermAlgebraElement)
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def __repr__(self):
        shown = ", ".join(f"{rat_str(c)}*{s}" for s, c in itertools.islice(self.terms(), 3))
        extra = "" if len(self._terms) <= 3 else f", ... ({len(self._terms)} terms)"
        return f"PermAlgebraElement(deg={self.degree}, [{shown}{extra}])"


def act_perm(tensor: SparseTensor, element: PermAlgebraElement) -> SparseTensor:
    """Right place-permutation action, extended linearly in both arguments."""
    if tensor.degree != element.degree:
        raise ValueError(
            f"degree mismatch: tensor {tensor.degree}, algebra {element.degree}"
        )
    out: dict[bytes, Coeff] = {}
    counter = 0
    for sigma, scale in element._terms.items():
        getter = sigma
        for word, coeff in tensor._terms.items():
            key = bytes(map(word.__getitem__, getter))
            new = out.get(key, 0) + coeff * scale
            if new:
                out[key] = new
            else:
                out.pop(key, None)
            counter += 1
            if counter % 65536 == 0:
                _note_terms(len(out), "act_perm")
    _note_terms(len(out), "act_perm")
    return SparseTensor._raw(tensor.degree, tensor.n, out)


def omega(g: int) -> SparseTensor:
    """The invariant 2-tensor: sum of e_i (x) e_i* over the basis."""
    space = SymplecticSpace(g)
    terms: dict[bytes, Coeff] = {}
    for i in range(1, space.n + 1):
        j, sign = space.dual_basis_vector(i)
        terms[bytes((i, j))] = sign
    return SparseTensor._raw(2, space.n, terms)


def wedge(indices, n: int) -> SparseTensor:
    """Antisymmetrizer: sum of sgn(sigma) permutations of the given word.

    A repeated index yields the zero tensor.
    """
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        return SparseTensor.zero(len(indices), n)
    terms: dict[bytes, Coeff] = {}
    for sigma in itertools.permutations(range(len(indices))):
        word = bytes(indices[p] for p in sigma)
        terms[word] = _perm_sign(sigma)
    return SparseTensor(len(indices), n, terms)


def expansion(tensor: SparseTensor, i: int, j: int) -> SparseTensor:
    """The (i, j)-expansion: insert e_r at slot i and e_r* at slot j, summed over r.

    Original factors shift to fill the remaining k slots in order.
    """
    k = tensor.degree
    if not 1 <= i < j <= k + 2:
        raise ValueError(f"need 1 <= i < j <= {k + 2}, got ({i}, {j})")
    if tensor.n % 2:
        raise ValueError("expansion needs a symplectic alphabet")
    space = SymplecticSpace(tensor.n // 2)
    pairs = [space.dual_basis_vector(r) for r in range(1, space.n + 1)]
    out: dict[bytes, Coeff] = {}
    for word, coeff in tensor._terms.items():
        template = bytearray(k + 2)
        src = iter(word)
        for p in range(1, k + 3):
            if p == i or p == j:
                continue
            template[p - 1] = next(src)
        for r in range(1, space.n + 1):
            rdual, sign = pairs[r - 1]
            template[i - 1] = r
            template[j - 1] = rdual
            key = bytes(template)
            new = out.get(key, 0) + coeff * sign
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    _note_terms(len(out), "expansion")
    return SparseTensor._raw(k + 2, tensor.n, out)


def cont_k(tensor: SparseTensor) -> SparseTensor:
    """Contract the first two factors: e_a (x) e_b (x) rest -> <e_b, e_a> rest."""
    if tensor.degree < 2:
        raise ValueError("contraction needs degree >= 2")
    if tensor.n % 2:
        raise ValueError("contraction needs a symplectic alphabet")
    space = SymplecticSpace(tensor.n // 2)
    out: dict[bytes, Coeff] = {}
    for word, coeff in tensor._terms.items():
        value = space.pairing(word[1], word[0])
        if not value:
            continue
        key = word[2:]
        new = out.get(key, 0) + coeff * value
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return SparseTensor._raw(tensor.degree - 2, tensor.n, out)


def _canonical_rotation(word: bytes) -> bytes:
    if len(word) < 2:
        return word
    return min(word[s:] + word[:s] for s in range(len(word)))


class CyclicVector:
    """Image of a tensor in the quotient by sign-free cyclic rotation.

    Coefficients are stored on the lexicographically least rotation of each
    orbit.
    """

    __slots__ = ("degree", "n", "_terms")

    def __init__(self, degree: int, n: int, terms=None):
        self.degree = degree
        self.n = n
        clean: dict[bytes, Coeff] = {}
        for word, coeff in (terms or {}).items():
            word = _canonical_rotation(bytes(word))
            if len(word) != degree:
                raise ValueError("word length mismatch")
            clean[word] = clean.get(word, 0) + coeff
        self._terms = {w: c for w, c in clean.items() if c}

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return sorted(self._terms.items())

    def __eq__(self, other):
        return (
            isinstance(other, CyclicVector)
            and self.degree == other.degree
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.degree, self.n, frozenset(self._terms.items())))

    def __mul__(self, scalar: Coeff):
        if not scalar:
            return CyclicVector(self.degree, self.n)
        out = {w: c * scalar for w, c in self._terms.items()}
        result = object.__new__(CyclicVector)
        result.degree, result.n, result._terms = self.degree, self.n, out
        return result

    __rmul__ = __mul__

    def ratio_to(self, other: "CyclicVector") -> Fraction | None:
        """The scalar s with self = s * other, or None if not proportional."""
        if self.degree != other.degree or self.n != other.n:
            return None
        if other.is_zero():
            return None
        if self.is_zero():
            return Fraction(0)
        if set(self._terms) != set(other._terms):
            return None
        ratio = None
        for word, coeff in self._terms.items():
            r = Fraction(coeff) / Fraction(other._terms[word])
            if ratio is None:
                ratio = r
            elif ratio != r:
                return None
        return ratio

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "g": self.n // 2,
            "terms": [
                {"word": list(w), "coeff": rat_str(c)} for w, c in self.terms()
            ],
        }

    def __repr__(self):
        return f"CyclicVector(deg={self.degree}, n={self.n}, {len(self._terms)} orbits)"


def cyclic_project(tensor: SparseTensor) -> CyclicVector:
    """Sum coefficients over rotation orbits, signs untouched."""
    out: dict[bytes, Coeff] = {}
    for word, coeff in tensor._terms.items():
        key = _canonical_rotation(word)
        out[key] = out.get(key, 0) + coeff
    out = {w: c for w, c in out.items() if c}
    result = object.__new__(CyclicVector)
    result.degree, result.n, result._terms = tensor.degree, tensor.n, out
    return result


def _column_major_positions(lam: Partition):
    """Row and column position blocks of the column-major filling of lam."""
    conj = lam.conjugate()
    rows: list[list[int]] = [[] for _ in range(lam.length)]
    cols: list[list[int]] = []
    pos = 0
    for height in conj:
        col = list(range(pos, pos + height))
        pos += height
        cols.append(col)
        for r, p in enumerate(col):
            rows[r].append(p)
    return rows, cols


def _block_group(degree: int, blocks, signed: bool) -> PermAlgebraElement:
    terms: dict[tuple[int, ...], Coeff] = {}
    perms_per_block = [list(itertools.permutations(block)) for block in blocks]
    for choice in itertools.product(*perms_per_block):
        sigma = list(range(degree))
        sign = 1
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                sigma[src] = dst
            if signed:
                index = {p: q for q, p in enumerate(block)}
                sign *= _perm_sign(tuple(index[v] for v in image))
        terms[tuple(sigma)] = sign if signed else 1
    return PermAlgebraElement._raw(degree, terms)


def young_symmetrizer(lam) -> PermAlgebraElement:
    """Unnormalized Young symmetrizer for the column-major filling of lam.

    Row-group sum times signed column-group sum; satisfies c*c = m*c for a
    positive rational m.  Acting on the column word e_1..e_h e_1..e_h' ... it
    reproduces the wedge-product maximal vector up to the positive integer
    factor prod(lam_i!).
    """
    lam = Partition(lam)
    degree = lam.size
    rows, cols = _column_major_positions(lam)
    return _block_group(degree, rows, signed=False) * _block_group(
        degree, cols, signed=True
    )


def young_row_factor(lam) -> int:
    """The scale prod(lam_i!) relating word * symmetrizer to the wedge form."""
    return _prod(factorial(p) for p in Partition(lam))


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def gl_maximal_vector(lam, n: int) -> SparseTensor:
    """Tensor product of column antisymmetrizers e_1 ^ .. ^ e_h over columns."""
    lam = Partition(lam)
    if lam.length > n:
        raise ValueError(f"partition length exceeds alphabet {n}")
    result = SparseTensor(0, n, {b"": 1})
    for height in lam.conjugate():
        result = result.tensor(wedge(range(1, height + 1), n))
    return result


def sp_maximal_vector(lam, j: int, g: int) -> SparseTensor:
    """omega^(x)j tensor the GL column wedge vector; degree |lam| + 2j."""
    lam = Partition(lam)
    if lam.length > g:
        raise ValueError(f"partition length exceeds g={g}")
    if j < 0:
        raise ValueError("j must be nonnegative")
    result = SparseTensor(0, 2 * g, {b"": 1})
    om = omega(g)
    for _ in range(j):
        result = result.tensor(om)
    return result.tensor(gl_maximal_vector(lam, 2 * g))
