import itertools
import random
from fractions import Fraction

import pytest

from jcokernel.brauer import (
    BrauerDiagram,
    BrauerElement,
    act_twisted,
    act_twisted_diagram,
    all_diagrams,
    check_relations,
    compose_diagrams,
    multiply,
    ram_character,
    restriction_multiset,
    span_equality_check,
)
from jcokernel.combinatorics import brauer_dim, sk_character
from jcokernel.partitions import CycleType, Partition, partitions_of, syt_count
from jcokernel.tensorspace import (
    PermAlgebraElement,
    SparseTensor,
    act_perm,
    omega,
    sp_maximal_vector,
    _perm_sign,
)


def random_tensor(rng, degree, n, nterms=5):
    terms = {}
    for _ in range(nterms):
        word = bytes(rng.randint(1, n) for _ in range(degree))
        terms[word] = terms.get(word, 0) + rng.randint(-4, 4)
    return SparseTensor(degree, n, terms)


def random_element(rng, k, delta, nterms=3):
    diagrams = all_diagrams(k)
    terms = {}
    for _ in range(nterms):
        d = rng.choice(diagrams)
        terms[d] = terms.get(d, 0) + rng.randint(-3, 3)
    return BrauerElement(k, delta, terms)


# ---------------------------------------------------------------- diagrams


def test_diagram_counts():
    assert [len(all_diagrams(k)) for k in (1, 2, 3, 4)] == [1, 3, 15, 105]


def test_compose_examples():
    for k in (2, 3, 4):
        ident = BrauerDiagram.identity(k)
        assert compose_diagrams(ident, ident) == (ident, 0)
        for i in range(1, k):
            gm = BrauerDiagram.gamma(k, i)
            si = BrauerDiagram.s(k, i)
            assert compose_diagrams(gm, gm) == (gm, 1)
            assert compose_diagrams(si, si) == (ident, 0)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose_diagrams(BrauerDiagram.identity(2), BrauerDiagram.identity(3))


def test_diagram_composition_associative():
    rng = random.Random(43)
    for k in (2, 3, 4, 5):
        diagrams = all_diagrams(k)
        delta = -6
        for _ in range(15):
            a, b, c = (BrauerElement.from_diagram(rng.choice(diagrams), delta) for _ in range(3))
            assert (a * b) * c == a * (b * c)


# --------------------------------------------------------------- relations


def test_defining_relation_examples():
    k, g = 3, 3
    delta = -2 * g
    gm1 = BrauerElement.from_diagram(BrauerDiagram.gamma(k, 1), delta)
    gm2 = BrauerElement.from_diagram(BrauerDiagram.gamma(k, 2), delta)
    s1 = BrauerElement.from_diagram(BrauerDiagram.s(k, 1), delta)
    s2 = BrauerElement.from_diagram(BrauerDiagram.s(k, 2), delta)
    assert multiply(gm1, gm1) == gm1 * delta
    assert gm1 * gm2 * gm1 == gm1
    assert s1 * gm2 * gm1 == s2 * gm1


def test_braid_relation_diagrammatically():
    for k in (3, 4, 5):
        delta = -4
        for i in range(1, k - 1):
            si = BrauerElement.from_diagram(BrauerDiagram.s(k, i), delta)
            sj = BrauerElement.from_diagram(BrauerDiagram.s(k, i + 1), delta)
            assert si * sj * si == sj * si * sj


def test_check_relations():
    assert check_relations(3, 3)
    assert check_relations(4, 4)


# ------------------------------------------------------------------ action


def test_gamma_action_on_basis_word():
    g = 2
    t = SparseTensor.basis_word(2 * g, (1, 1))
    gm = BrauerElement.from_diagram(BrauerDiagram.gamma(2, 1), -2 * g)
    assert act_twisted(t, gm).is_zero()  # <e_1, e_1> = 0
    paired = SparseTensor.basis_word(2 * g, (1, 2 * g))
    image = act_twisted(paired, gm)
    assert image == -1 * omega(g)  # <e_1, e_1'> = 1, insert minus omega


def test_gamma_relation_as_operators():
    rng = random.Random(47)
    for k in (2, 3, 4):
        for g in (2, 3, 4):
            delta = -2 * g
            for i in range(1, k):
                gm = BrauerElement.from_diagram(BrauerDiagram.gamma(k, i), delta)
                for _ in range(3):
                    t = random_tensor(rng, k, 2 * g)
                    assert act_twisted(t, gm * gm) == delta * act_twisted(t, gm)


def test_twisted_action_is_right_action():
    rng = random.Random(53)
    for k in (2, 3, 4):
        g = 3
        delta = -2 * g
        for _ in range(5):
            t = random_tensor(rng, k, 2 * g)
            a = random_element(rng, k, delta)
            b = random_element(rng, k, delta)
            assert act_twisted(act_twisted(t, a), b) == act_twisted(t, a * b)


def test_twisted_permutations_are_sign_twist_of_ordinary():
    rng = random.Random(59)
    for k in (2, 3, 4, 5):
        g = 3
        t = random_tensor(rng, k, 2 * g)
        perms = (
            itertools.permutations(range(k))
            if k <= 4
            else itertools.islice(itertools.permutations(range(k)), 24)
        )
        for sigma in perms:
            twisted = act_twisted_diagram(t, BrauerDiagram.from_permutation(k, sigma))
            ordinary = act_perm(t, PermAlgebraElement(k, {tuple(sigma): 1}))
            assert twisted == _perm_sign(sigma) * ordinary


def test_action_commutes_with_sp_operators():
    from jcokernel.spweights import sp_raising_operators

    rng = random.Random(61)
    for k, g in ((2, 2), (3, 3), (4, 3)):
        delta = -2 * g
        for _ in range(3):
            t = random_tensor(rng, k, 2 * g)
            a = random_element(rng, k, delta)
            for op in sp_raising_operators(g):
                assert op.apply(act_twisted(t, a)) == act_twisted(op.apply(t), a)


def test_parameter_mismatch_rejected():
    t = SparseTensor.basis_word(4, (1, 2))
    with pytest.raises(ValueError):
        act_twisted(t, BrauerElement.identity(2, -6))


# -------------------------------------------------------------- characters


def test_ram_character_at_identity_is_dimension():
    for k in range(2, 7):
        g = k + 2
        identity = CycleType((1,) * k)
        for j in range(0, k // 2 + 1):
            for lam in partitions_of(k - 2 * j):
                assert ram_character(lam, identity, g) == brauer_dim(lam, k, g)


def test_ram_character_top_layer_reduces_to_symmetric_group():
    # j = 0: the only even beta is empty, so the formula collapses to the
    # single term with nu = lam'.
    for k in range(2, 6):
        for lam in partitions_of(k):
            for cls in partitions_of(k):
                assert ram_character(lam, cls, k + 2) == sk_character(
                    lam.conjugate(), cls
                )


def test_ram_character_of_invariant_pair():
    # D^empty for k=2 is spanned by omega; the twisted swap fixes omega, the
    # ordinary one negates it.
    g = 2
    swap = BrauerElement.from_diagram(BrauerDiagram.s(2, 1), -2 * g)
    om = omega(g)
    assert act_twisted(om, swap) == om
    assert act_perm(om, PermAlgebraElement.transposition(2, 1)) == -1 * om
    assert ram_character(Partition(()), CycleType((2,)), g) == 1
    assert ram_character(Partition(()), CycleType((1, 1)), g) == 1


def test_restriction_multiset():
    # Ordinary action sees the conjugate labels; on omega it is the sign rep.
    assert restriction_multiset(Partition(()), 2) == {Partition((1, 1)): 1}
    for k in range(2, 6):
        for j in range(0, k // 2 + 1):
            for lam in partitions_of(k - 2 * j):
                table = restriction_multiset(lam, k)
                total = sum(mult * syt_count(nu) for nu, mult in table.items())
                assert total == brauer_dim(lam, k, k + 2)


def test_wedge_restriction_is_single_label():
    table = restriction_multiset(Partition((1, 1, 1)), 3)
    assert table == {Partition((1, 1, 1)): 1}


# ------------------------------------------------------------ span checks


def test_span_equality_small_cases():
    assert span_equality_check(Partition((1, 1)), 0, 2, 4)
    assert span_equality_check(Partition(()), 1, 2, 4)
    assert span_equality_check(Partition((1,)), 1, 3, 5)


# ----------------------------------------- brute-force restriction oracle


def _echelon_basis(vectors):
    basis = []
    for vec in vectors:
        row = {w: Fraction(c) for w, c in vec._terms.items()}
        for pivot, bvec in basis:
            c = row.get(pivot)
            if c:
                for w, v in bvec.items():
                    new = row.get(w, Fraction(0)) - c * v
                    if new:
                        row[w] = new
                    else:
                        row.pop(w, None)
        if row:
            pivot = min(row)
            inv = Fraction(1) / row[pivot]
            basis.append((pivot, {w: v * inv for w, v in row.items()}))
    return basis


def _coordinates(vector, basis):
    row = {w: Fraction(c) for w, c in vector._terms.items()}
    coords = []
    for pivot, bvec in basis:
        c = row.get(pivot, Fraction(0))
        coords.append(c)
        if c:
            for w, v in bvec.items():
                new = row.get(w, Fraction(0)) - c * v
                if new:
                    row[w] = new
                else:
                    row.pop(w, None)
    assert not row, "vector not in span"
    return coords


def _class_representative(cls, k):
    sigma = []
    start = 0
    for part in cls:
        sigma += [start + (i + 1) % part for i in range(part)]
        start += part
    assert len(sigma) == k
    return tuple(sigma)


def test_restriction_multiset_against_brute_force_traces():
    # Trace the ordinary place-permutation action on the span of the diagram
    # translates of the maximal vector and compare with the predicted
    # character, class by class.
    cases = [
        (Partition(()), 1, 2),
        (Partition((2,)), 0, 2),
        (Partition((1, 1)), 0, 2),
        (Partition((1,)), 1, 3),
        (Partition((3,)), 0, 3),
        (Partition((2, 1)), 0, 3),
        (Partition((1, 1, 1)), 0, 3),
    ]
    for lam, j, k in cases:
        g = k + 2
        v = sp_maximal_vector(lam, j, g)
        translates = [act_twisted_diagram(v, d) for d in all_diagrams(k)]
        basis = _echelon_basis(translates)
        basis_vectors = [
            SparseTensor(k, 2 * g, dict(bvec)) for _, bvec in basis
        ]
        table = restriction_multiset(lam, k)
        assert len(basis) == sum(m * syt_count(nu) for nu, m in table.items())
        for cls in partitions_of(k):
            rep = _class_representative(cls, k)
            element = PermAlgebraElement(k, {rep: 1})
            trace = Fraction(0)
            for idx, bvec in enumerate(basis_vectors):
                image = act_perm(bvec, element)
                trace += _coordinates(image, basis)[idx]
            predicted = sum(
                m * sk_character(nu, cls) for nu, m in table.items()
            )
            assert trace == predicted, (lam, j, k, cls)
