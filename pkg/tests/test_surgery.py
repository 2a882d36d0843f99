import random

import pytest

from statesum.catdata import gen_pointed, semion
from statesum.surgery import FramedLink, SurgeryError, block_sum, colored_invariant, kirby_slide, surgery_sum, unknot


def _det(B):
    from fractions import Fraction

    M = [[Fraction(x) for x in r] for r in B]
    n, det = len(M), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def _random_link(rng, m):
    B = [[0] * m for _ in range(m)]
    for i in range(m):
        B[i][i] = rng.randint(-3, 3)
        for j in range(i):
            B[i][j] = B[j][i] = rng.randint(-2, 2)
    return FramedLink(B)


def test_empty_link_gives_lambda():
    d = semion()
    assert surgery_sum(d, FramedLink()) == d.lam


def test_zero_framed_unknot():
    d = semion()
    assert d.lam * d.lam == d.field("1/2")
    assert surgery_sum(d, unknot(0)) == d.field.one()


@pytest.mark.parametrize("sign", [1, -1])
def test_disjoint_unknot_factor(sign):
    rng = random.Random(1)
    for d in (semion(), gen_pointed(3, 1), gen_pointed(4, 1)):
        n = d.group.order
        factor = d.lam * sum((d.q[c] ** sign for c in range(n)), d.field.zero())
        for _ in range(5):
            L = _random_link(rng, rng.randint(1, 3))
            assert surgery_sum(d, block_sum(L, unknot(sign))) == surgery_sum(d, L) * factor


def test_block_sum_is_multiplicative_up_to_lambda():
    d = gen_pointed(3, 1)
    a, b = FramedLink([[1, 1], [1, -2]]), unknot(2)
    assert surgery_sum(d, block_sum(a, b)) * d.lam == surgery_sum(d, a) * surgery_sum(d, b)


def test_colored_invariant_matches_definition():
    d = semion()
    L = FramedLink([[1, 1], [1, 0]])
    q, b = d.q, d.b
    for x in range(2):
        for y in range(2):
            assert colored_invariant(d, L, [x, y]) == q[x] * b(x, y)
    with pytest.raises(SurgeryError):
        colored_invariant(d, L, [0])


def test_slide_example_and_inverse():
    L = FramedLink([[1, 0], [0, 1]])
    assert kirby_slide(L, 0, 1, -1).to_json() == [[2, -1], [-1, 1]]
    rng = random.Random(4)
    for _ in range(50):
        m = rng.randint(2, 4)
        L = _random_link(rng, m)
        i, j = rng.sample(range(m), 2)
        s = rng.choice((1, -1))
        assert kirby_slide(kirby_slide(L, i, j, s), i, j, -s).matrix == L.matrix
        assert _det(kirby_slide(L, i, j, s).matrix) == _det(L.matrix)


def test_slide_invariance_randomized():
    rng = random.Random(42)
    data = [semion()] + [gen_pointed(n, k) for n, k in ((2, 1), (3, 1), (3, 2), (4, 1), (5, 2))]
    for _ in range(200):
        d = rng.choice(data)
        m = rng.randint(2, 4)
        L = _random_link(rng, m)
        i, j = rng.sample(range(m), 2)
        assert surgery_sum(d, kirby_slide(L, i, j, rng.choice((1, -1)))) == surgery_sum(d, L)


def test_bad_inputs():
    with pytest.raises(SurgeryError):
        FramedLink([[1, 2], [3, 4]])
    with pytest.raises(SurgeryError):
        FramedLink([[1, 2]])
    L = unknot(1)
    with pytest.raises(SurgeryError):
        kirby_slide(L, 0, 0, 1)
    with pytest.raises(SurgeryError):
        kirby_slide(block_sum(L, L), 0, 1, 2)
    with pytest.raises(SurgeryError):
        kirby_slide(L, 0, 3, 1)
