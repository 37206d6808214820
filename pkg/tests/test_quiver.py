from itertools import combinations, product
from math import prod

import pytest

from pbwlab import (
    IncompatibleRankError,
    InvalidDimensionError,
    InvalidFieldError,
    NotRealizableError,
    QuiverRep,
    ResourceLimitError,
    count_subreps_Fq,
    degenerates_to,
    euler_form,
    genocchi_poly_dellac,
    module_from_rank_tuple,
    q_binomial,
    rank_tuple,
    special_module,
)
from pbwlab.quiver import arrow_matrix, subspaces
from pbwlab.verify import representations_bounded, representations_with_dim


def rep(n, **mult):
    """rep(3, U12=2, U11=1) style constructor."""
    return QuiverRep.from_dict(n, {(int(k[1]), int(k[2])): v for k, v in mult.items()})


def test_euler_form_examples():
    assert euler_form(2, (1,), (1,)) == 1
    assert euler_form(3, (1, 2), (2, 1)) == 3
    assert euler_form(4, (1, 2, 3), (3, 2, 1)) == 6
    with pytest.raises(InvalidDimensionError):
        euler_form(4, (1, 2), (3, 2, 1))


@pytest.mark.parametrize("n", range(2, 13))
def test_euler_form_dim_A_dim_Astar(n):
    assert euler_form(n, tuple(range(1, n)), tuple(range(n - 1, 0, -1))) == n * (n - 1) // 2


def test_special_modules_small():
    assert special_module(2, "M0") == rep(2, U11=2) == special_module(2, "M1")
    assert special_module(3, "M1") == rep(3, U11=1, U22=1, U12=2)
    assert special_module(3, "M2") == rep(3, U12=1, U11=2, U22=2)
    for n in range(2, 9):
        for k in ("M0", "M1", "M2"):
            assert special_module(n, k).dim_vector == (n,) * (n - 1)


def test_rank_tuple_examples():
    assert [rank_tuple(special_module(3, k))[1, 2] for k in ("M0", "M1", "M2")] == [3, 2, 1]


@pytest.mark.parametrize("n", range(2, 9))
def test_rank_tuple_closed_forms(n):
    r0, r1, r2 = (rank_tuple(special_module(n, k)) for k in ("M0", "M1", "M2"))
    for i in range(1, n):
        for j in range(i, n):
            assert r0[i, j] == n
            assert r1[i, j] == n - (j - i)
            assert r2[i, j] == (n if i == j else n - 1 - (j - i))


def test_module_from_rank_tuple():
    m1 = special_module(3, "M1")
    assert module_from_rank_tuple(3, {(1, 1): 3, (2, 2): 3, (1, 2): 2}) == m1
    assert module_from_rank_tuple(3, {}) == QuiverRep(3, ())
    m2 = special_module(4, "M2")
    assert module_from_rank_tuple(4, rank_tuple(m2)) == m2
    with pytest.raises(NotRealizableError):
        module_from_rank_tuple(3, {(1, 1): 1, (2, 2): 1, (1, 2): 2})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rank_round_trip(n):
    for r in representations_bounded(n, 3):
        assert module_from_rank_tuple(n, rank_tuple(r)) == r


def test_degeneration_examples():
    m0, m1, m2 = (special_module(4, k) for k in ("M0", "M1", "M2"))
    assert degenerates_to(m1, m1)
    assert degenerates_to(m0, m1) and not degenerates_to(m1, m0)
    assert degenerates_to(m1, m2)
    with pytest.raises(IncompatibleRankError):
        degenerates_to(m0, special_module(3, "M0"))


def test_degeneration_partial_order():
    reps = representations_with_dim(3, (3, 3))
    assert len(reps) == 4
    for a, b, c in product(reps, repeat=3):
        assert degenerates_to(a, a)
        if a != b:
            assert not (degenerates_to(a, b) and degenerates_to(b, a))
        if degenerates_to(a, b) and degenerates_to(b, c):
            assert degenerates_to(a, c)


def test_arrow_matrix_m1_n3():
    # basis at vertex 1: U11, U12, U12'; at vertex 2: U12, U12', U22
    assert arrow_matrix(special_module(3, "M1"), 1) == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]


@pytest.mark.parametrize("d, k, p", [(3, 1, 2), (4, 2, 2), (4, 2, 3), (3, 2, 5), (5, 2, 2)])
def test_subspace_enumeration_counts(d, k, p):
    subs = list(subspaces(d, k, p))
    assert len(subs) == q_binomial(d, k)(p)
    assert len({s.points for s in subs}) == len(subs)
    assert all(len(s.points) == p**k for s in subs)


def brute_subspaces(d, k, p):
    """Subspaces as vector sets: all spans of k-tuples of vectors with p**k elements."""
    vecs = list(product(range(p), repeat=d))
    found = set()
    for gens in combinations(vecs, k):
        span = frozenset(
            tuple(sum(c * g[t] for c, g in zip(coef, gens)) % p for t in range(d))
            for coef in product(range(p), repeat=k)
        )
        if len(span) == p**k:
            found.add(span)
    return found


def brute_count(r, e, p):
    """Scan all subspace tuples and test invariance under the arrow matrices directly."""
    d = r.dim_vector
    spaces = [brute_subspaces(dv, ev, p) for dv, ev in zip(d, e)]
    mats = [arrow_matrix(r, v) for v in range(1, r.n - 1)]
    total = 0
    for chain in product(*spaces):
        ok = True
        for v, mat in enumerate(mats):
            for x in chain[v]:
                y = tuple(sum(a * b for a, b in zip(row, x)) % p for row in mat)
                if y not in chain[v + 1]:
                    ok = False
                    break
            if not ok:
                break
        total += ok
    return total


def test_count_examples():
    assert count_subreps_Fq(rep(2, U11=2), (1,), 2) == 3
    assert count_subreps_Fq(special_module(3, "M1"), (1, 2), 2) == 25
    assert count_subreps_Fq(special_module(3, "M0"), (1, 2), 2) == 21


@pytest.mark.parametrize("kind", ["M0", "M1", "M2"])
@pytest.mark.parametrize("p", [2, 3])
def test_count_matches_brute_force_n3(kind, p):
    m = special_module(3, kind)
    assert count_subreps_Fq(m, (1, 2), p) == brute_count(m, (1, 2), p)


def test_count_matches_brute_force_other_dims():
    m = rep(4, U11=1, U13=1, U23=1, U33=1)
    assert count_subreps_Fq(m, (1, 1, 2), 2) == brute_count(m, (1, 1, 2), 2)
    assert count_subreps_Fq(m, (0, 1, 1), 2) == brute_count(m, (0, 1, 1), 2)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("p", [2, 3])
def test_point_count_oracles(n, p):
    e = tuple(range(1, n))
    assert count_subreps_Fq(special_module(n, "M1"), e, p) == genocchi_poly_dellac(n)(p)
    flags = prod(sum(p**i for i in range(k + 1)) for k in range(1, n))
    assert count_subreps_Fq(special_module(n, "M0"), e, p) == flags


def test_count_errors():
    m = special_module(3, "M1")
    with pytest.raises(InvalidFieldError):
        count_subreps_Fq(m, (1, 2), 4)
    with pytest.raises(ResourceLimitError):
        count_subreps_Fq(m, (1, 2), 11)
    with pytest.raises(InvalidDimensionError):
        count_subreps_Fq(m, (1,), 2)
    with pytest.raises(ResourceLimitError):
        count_subreps_Fq(special_module(5, "M1"), (1, 2, 3, 4), 2)
    assert count_subreps_Fq(m, (4, 1), 2) == 0
