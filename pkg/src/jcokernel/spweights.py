"""Weights and infinitesimal maximal-vector certification for GL and Sp.

Maximality of a vector under the unipotent upper-triangular subgroup is
certified by annihilation under the Chevalley raising operators, extended to
tensor powers by the Leibniz rule.  In characteristic zero the two conditions
agree, and the operator check is a finite exact computation.
"""

from __future__ import annotations

from fractions import Fraction

from .tensorspace import Coeff, SparseTensor, SymplecticSpace

Weight = tuple[int, ...]


class LieOperator:
    """A linear operator on H given on basis vectors, acting on tensors
    as a derivation."""

    __slots__ = ("n", "columns", "name")

    def __init__(self, n: int, columns: dict[int, tuple[tuple[int, Coeff], ...]], name=""):
        self.n = n
        self.columns = {
            a: tuple((b, c) for b, c in image if c) for a, image in columns.items()
        }
        self.name = name

    def apply_letter(self, a: int):
        return self.columns.get(a, ())

    def apply(self, tensor: SparseTensor) -> SparseTensor:
        """Leibniz extension: sum over positions of the one-letter action."""
        if tensor.n != self.n:
            raise ValueError("alphabet mismatch")
        out: dict[bytes, Coeff] = {}
        for word, coeff in tensor._terms.items():
            for p, letter in enumerate(word):
                for target, scale in self.columns.get(letter, ()):
                    key = word[:p] + bytes((target,)) + word[p + 1 :]
                    new = out.get(key, 0) + coeff * scale
                    if new:
                        out[key] = new
                    else:
                        out.pop(key, None)
        return SparseTensor._raw(tensor.degree, tensor.n, out)

    def matrix_entry(self, i: int, j: int) -> Coeff:
        """Coefficient of e_i in the image of e_j."""
        for b, c in self.columns.get(j, ()):
            if b == i:
                return c
        return 0

    def __repr__(self):
        return f"LieOperator({self.name or self.columns})"


def gl_raising_operators(n: int) -> list[LieOperator]:
    """Simple raising operators E_{i,i+1} for gl(n): e_{i+1} -> e_i."""
    return [
        LieOperator(n, {i + 1: ((i, 1),)}, name=f"E[{i},{i + 1}]") for i in range(1, n)
    ]


def sp_raising_operators(g: int) -> list[LieOperator]:
    """Simple raising operators for sp(2g) in the antidiagonal form.

    X_i (i < g) sends e_{i+1} to e_i and e_{i'} to -e_{(i+1)'}; the long-root
    operator X_g sends e_{g'} to e_g.  Each is compatible with the pairing:
    <Xu, v> + <u, Xv> = 0.
    """
    space = SymplecticSpace(g)
    ops = []
    for i in range(1, g):
        columns = {
            i + 1: ((i, 1),),
            space.dual_index(i): ((space.dual_index(i + 1), -1),),
        }
        ops.append(LieOperator(space.n, columns, name=f"X[{i}]"))
    ops.append(
        LieOperator(space.n, {space.dual_index(g): ((g, 1),)}, name=f"X[{g}]")
    )
    return ops


def raising_operators(mode: str, g: int) -> list[LieOperator]:
    if mode == "gl":
        return gl_raising_operators(2 * g)
    if mode == "sp":
        return sp_raising_operators(g)
    raise ValueError(f"mode must be 'gl' or 'sp', got {mode!r}")


def form_compatible(op: LieOperator, space: SymplecticSpace) -> bool:
    """Check <Xe_i, e_j> + <e_i, Xe_j> = 0 over the whole basis."""
    for i in range(1, space.n + 1):
        for j in range(1, space.n + 1):
            total = Fraction(0)
            for b, c in op.apply_letter(i):
                total += c * space.pairing(b, j)
            for b, c in op.apply_letter(j):
                total += c * space.pairing(i, b)
            if total:
                return False
    return True


def word_weight(word, mode: str, n: int) -> Weight:
    """Torus weight of a basis word.

    GL mode counts letters; Sp mode records e_i as +eps_i for i <= g and
    e_{i'} as -eps_i.
    """
    word = bytes(word)
    if mode == "gl":
        vec = [0] * n
        for b in word:
            vec[b - 1] += 1
        return tuple(vec)
    if mode == "sp":
        if n % 2:
            raise ValueError("sp weights need an even alphabet")
        g = n // 2
        vec = [0] * g
        for b in word:
            if b <= g:
                vec[b - 1] += 1
            else:
                vec[n - b] -= 1
        return tuple(vec)
    raise ValueError(f"mode must be 'gl' or 'sp', got {mode!r}")


def common_weight(tensor: SparseTensor, mode: str) -> Weight | None:
    """The single weight shared by every word of the tensor, else None."""
    weight = None
    for word in tensor._terms:
        vec = word_weight(word, mode, tensor.n)
        if weight is None:
            weight = vec
        elif weight != vec:
            return None
    return weight


def is_maximal(tensor: SparseTensor, mode: str) -> tuple[bool, Weight | None]:
    """Certify a maximal vector: one common weight, killed by every raising
    operator.  Returns (True, weight) on success; rejects the zero tensor."""
    if tensor.is_zero():
        raise ValueError("the zero tensor has no weight")
    weight = common_weight(tensor, mode)
    if weight is None:
        return False, None
    if mode == "gl":
        ops = gl_raising_operators(tensor.n)
    else:
        if tensor.n % 2:
            raise ValueError("sp mode needs an even alphabet")
        ops = sp_raising_operators(tensor.n // 2)
    for op in ops:
        if not op.apply(tensor).is_zero():
            return False, None
    return True, weight
