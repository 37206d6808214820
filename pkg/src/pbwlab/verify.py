"""Cross-checks of every countable identity, grouped for the ``verify`` command.

Each group is a top-level function ``(limits) -> list[Check]`` so groups can
be shipped to worker processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb, prod
from typing import Callable

from . import genocchi as gen
from . import polytopes as poly
from . import quiver as qv
from .lie_core import DominantWeight, positive_roots, shape_of, weyl_dim
from .qpoly import QPolynomial, q_binomial
from .tableaux import PBWTableau, enumerate_pbw_tableaux, is_pbw_semistandard

PRINTED_SEQUENCE = (1, 1, 2, 7, 38, 295)
PRINTED_POLYS = {
    1: (1,),
    2: (1, 1),
    3: (1, 2, 3, 1),
    4: (1, 3, 7, 10, 10, 6, 1),
}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str
    actual: str

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


def check(name: str, expected, actual) -> Check:
    return Check(name, expected == actual, _show(expected), _show(actual))


def _show(value) -> str:
    if isinstance(value, QPolynomial):
        return str(list(value.coeffs))
    if isinstance(value, (list, tuple)):
        return str([_show(v) if isinstance(v, QPolynomial) else v for v in value])
    return str(value)


@dataclass(frozen=True)
class Limits:
    """Optional caps on rank and weight size; ``None`` keeps the default ranges."""

    max_n: int | None = None
    max_weight: int | None = None

    def n(self, top: int) -> int:
        return top if self.max_n is None else min(top, self.max_n)

    def w(self, top: int) -> int:
        return top if self.max_weight is None else min(top, self.max_weight)


def weights(n: int, total: int) -> list[DominantWeight]:
    """All sl_n weights with coefficient sum at most ``total``."""
    return [
        DominantWeight(n, m)
        for m in product(range(total + 1), repeat=n - 1)
        if sum(m) <= total
    ]


# -- acceptance criteria ------------------------------------------------------------


def genocchi_sequence(lim: Limits) -> list[Check]:
    top = lim.n(5)
    got = tuple(gen.genocchi_closed(n) for n in range(top + 1))
    return [check(f"genocchi sequence h_0..h_{top}", PRINTED_SEQUENCE[: top + 1], got)]


def triple_count(lim: Limits) -> list[Check]:
    out = []
    for n in range(1, lim.n(6) + 1):
        h = gen.genocchi_closed(n)
        out.append(check(f"flag collections n={n}", h, len(gen.admissible_flag_collections(n))))
        out.append(check(f"dellac configs n={n}", h, len(gen.dellac_configs(n))))
    return out


def printed_polynomials(lim: Limits) -> list[Check]:
    out = []
    for n in range(1, lim.n(6) + 1):
        dellac = gen.genocchi_poly_dellac(n)
        fermionic = gen.genocchi_poly_fermionic(n)
        if n in PRINTED_POLYS:
            out.append(check(f"h_{n}(q) dellac vs printed", PRINTED_POLYS[n], dellac.coeffs))
            out.append(check(f"h_{n}(q) fermionic vs printed", PRINTED_POLYS[n], fermionic.coeffs))
        else:
            out.append(check(f"h_{n}(q) dellac vs fermionic", dellac, fermionic))
    return out


def dc3_fixture(lim: Limits) -> list[Check]:
    if lim.n(3) < 3:
        return []
    fixture = sorted(gen.load_dc3_fixture())
    return [check("DC_3 enumeration vs figure", fixture, gen.dellac_configs(3))]


def fflv_basis_count(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(5) + 1):
        for lam in weights(n, lim.w(4)):
            dim = weyl_dim(lam)
            out.append(
                check(
                    f"|S({lam.m})| = weyl = gt, n={n}",
                    (dim, dim),
                    (len(poly.fflv_lattice_points(lam)), poly.gt_pattern_count(lam)),
                )
            )
    return out


def minkowski_property(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(4) + 1):
        grid = weights(n, lim.w(2))
        points = {lam: poly.fflv_lattice_points(lam) for lam in grid}
        for lam, mu in product(grid, repeat=2):
            target = poly.fflv_lattice_points(lam + mu)
            got = poly.minkowski_sum(points[lam], points[mu])
            out.append(
                Check(
                    f"S({lam.m})+S({mu.m}) = S(sum), n={n}",
                    got == target,
                    f"{len(target)} points",
                    f"{len(got)} points" + ("" if got == target else " (sets differ)"),
                )
            )
    return out


def tableau_count(lim: Limits) -> list[Check]:
    return [
        check(f"PBW tableaux {lam.m}, n={n}", weyl_dim(lam), len(enumerate_pbw_tableaux(lam)))
        for n in range(2, lim.n(4) + 1)
        for lam in weights(n, lim.w(3))
    ]


def euler_form_dimension(lim: Limits) -> list[Check]:
    return [
        check(
            f"<dim A, dim A*> n={n}",
            n * (n - 1) // 2,
            qv.euler_form(n, tuple(range(1, n)), tuple(range(n - 1, 0, -1))),
        )
        for n in range(2, lim.n(12) + 1)
    ]


def degeneration_chain(lim: Limits) -> list[Check]:
    out = []
    for n in range(3, lim.n(6) + 1):
        m0, m1, m2 = (qv.special_module(n, k) for k in ("M0", "M1", "M2"))
        got = (
            qv.degenerates_to(m0, m1),
            qv.degenerates_to(m1, m2),
            qv.degenerates_to(m1, m0),
            qv.degenerates_to(m2, m1),
        )
        out.append(check(f"M0>M1>M2 strictly, n={n}", (True, True, False, False), got))
    return out


def flag_point_count(n: int, p: int) -> int:
    return prod(sum(p**i for i in range(k + 1)) for k in range(1, n))


def finite_field_oracle(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(4) + 1):
        e = tuple(range(1, n))
        h = gen.genocchi_poly_dellac(n)
        for p in (2, 3):
            out.append(
                check(f"#Gr_e(M1)(F_{p}) = h_{n}({p})", h(p),
                      qv.count_subreps_Fq(qv.special_module(n, "M1"), e, p))
            )
            out.append(
                check(f"#Gr_e(M0)(F_{p}) = flags, n={n}", flag_point_count(n, p),
                      qv.count_subreps_Fq(qv.special_module(n, "M0"), e, p))
            )
    return out


def degree_law(lim: Limits) -> list[Check]:
    return [
        check(f"deg h_{n}(q)", n * (n - 1) // 2, gen.genocchi_poly_dellac(n).degree)
        for n in range(2, lim.n(6) + 1)
    ]


# -- module invariants ---------------------------------------------------------------


def lie_invariants(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(8) + 1):
        roots = positive_roots(n)
        out.append(
            check(f"positive roots sorted and complete, n={n}", (n * (n - 1) // 2, True),
                  (len(set(roots)), all(a < b for a, b in zip(roots, roots[1:]))))
        )
        out.append(
            check(f"weyl_dim(omega_k) = C(n,k), n={n}", [comb(n, k) for k in range(1, n)],
                  [weyl_dim(DominantWeight.fundamental(n, k)) for k in range(1, n)])
        )
    bad = [
        lam.m
        for n in range(2, lim.n(6) + 1)
        for lam in weights(n, lim.w(5))
        if shape_of(lam).to_weight(n) != lam
    ]
    out.append(check("shape round trip", [], bad))
    return out


def _catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def dyck_invariants(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(7) + 1):
        paths = poly.dyck_paths(n)
        expected = sum((n - 1 - k) * _catalan(k) for k in range(n - 1))
        out.append(
            check(f"Dyck paths valid and distinct, n={n}", (expected, True),
                  (len(set(paths)), all(p.is_valid() for p in paths)))
        )
    return out


def fflv_monotone(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(4) + 1):
        grid = weights(n, lim.w(3))
        sets = {lam: set(poly.fflv_lattice_points(lam)) for lam in grid}
        bad = [(a.m, b.m) for a in grid for b in grid if a <= b and not sets[a] <= sets[b]]
        out.append(check(f"S monotone in weight, n={n}", [], bad))
    return out


def tableau_invariants(lim: Limits) -> list[Check]:
    out = []
    for n in range(2, lim.n(6) + 1):
        out.append(
            check(f"PBW tableaux of omega_k = C(n,k), n={n}", [comb(n, k) for k in range(1, n)],
                  [len(enumerate_pbw_tableaux(DominantWeight.fundamental(n, k))) for k in range(1, n)])
        )
    for n in range(2, lim.n(4) + 1):
        for lam in weights(n, lim.w(3)):
            shape = shape_of(lam)
            if not 0 < shape.num_boxes <= 6:
                continue
            brute = []
            for fill in product(range(1, n + 1), repeat=shape.num_boxes):
                cols, it = [], iter(fill)
                for length in shape.column_lengths:
                    cols.append(tuple(next(it) for _ in range(length)))
                t = PBWTableau(n, shape, tuple(cols))
                if is_pbw_semistandard(t):
                    brute.append(t)
            out.append(
                check(f"tableau enumeration exhaustive {lam.m}, n={n}", sorted(brute),
                      enumerate_pbw_tableaux(lam))
            )
    return out


def genocchi_invariants(lim: Limits) -> list[Check]:
    bad = [(m, k) for m in range(13) for k in range(m + 1) if q_binomial(m, k)(1) != comb(m, k)]
    out = [check("q_binomial(m,k)(1) = C(m,k), m<=12", [], bad)]
    for n in range(1, lim.n(6) + 1):
        h = gen.genocchi_poly_dellac(n)
        out.append(check(f"h_{n}(1) and constant term", (gen.genocchi_closed(n), 1), (h(1), h[0])))
        out.append(
            check(f"truncation f_k<=k is exact, n={n}",
                  (gen.genocchi_closed(n), gen.genocchi_poly_fermionic(n)),
                  (gen.genocchi_closed(n, slack=2), gen.genocchi_poly_fermionic(n, slack=2)))
        )
    return out


def quiver_invariants(lim: Limits) -> list[Check]:
    out = []
    closed_forms = {
        "M0": lambda n, i, j: n,
        "M1": lambda n, i, j: n - (j - i),
        "M2": lambda n, i, j: n - 1 - (j - i) if i < j else n,
    }
    for n in range(2, lim.n(8) + 1):
        for kind, form in closed_forms.items():
            r = qv.rank_tuple(qv.special_module(n, kind))
            expected = {(i, j): form(n, i, j) for i, j in qv.intervals(n)}
            out.append(check(f"rank tuple of {kind}, n={n}", expected, r.as_dict()))
    reps = representations_with_dim(3, (3, 3))
    reflexive = all(qv.degenerates_to(a, a) for a in reps)
    antisym = all(
        a == b or not (qv.degenerates_to(a, b) and qv.degenerates_to(b, a))
        for a in reps for b in reps
    )
    trans = all(
        qv.degenerates_to(a, c)
        for a in reps for b in reps for c in reps
        if qv.degenerates_to(a, b) and qv.degenerates_to(b, c)
    )
    out.append(check("degeneration is a partial order on d=(3,3)", (True, True, True),
                     (reflexive, antisym, trans)))
    bad = [
        str(rep)
        for n in range(2, lim.n(4) + 1)
        for rep in representations_bounded(n, 3)
        if qv.module_from_rank_tuple(n, qv.rank_tuple(rep)) != rep
    ]
    out.append(check("module_from_rank_tuple inverts rank_tuple, d<=3", [], bad))
    return out


def representations_bounded(n: int, bound: int) -> list[qv.QuiverRep]:
    """Every representation whose dimension vector is componentwise <= bound."""
    ivs = qv.intervals(n)
    out = []
    for mult in product(range(bound + 1), repeat=len(ivs)):
        rep = qv.QuiverRep(n, tuple(zip(ivs, mult)))
        if all(x <= bound for x in rep.dim_vector):
            out.append(rep)
    return out


def representations_with_dim(n: int, d: tuple[int, ...]) -> list[qv.QuiverRep]:
    return [r for r in representations_bounded(n, max(d)) if r.dim_vector == d]


ACCEPTANCE: dict[str, Callable[[Limits], list[Check]]] = {
    "1 genocchi sequence": genocchi_sequence,
    "2 triple count": triple_count,
    "3 printed polynomials": printed_polynomials,
    "4 DC3 fixture": dc3_fixture,
    "5 FFLV basis count": fflv_basis_count,
    "6 Minkowski property": minkowski_property,
    "7 PBW tableau count": tableau_count,
    "8 Euler form dimension": euler_form_dimension,
    "9 degeneration chain": degeneration_chain,
    "10 finite field oracle": finite_field_oracle,
    "11 degree law": degree_law,
}

INVARIANTS: dict[str, Callable[[Limits], list[Check]]] = {
    "lie_core": lie_invariants,
    "dyck paths": dyck_invariants,
    "FFLV monotonicity": fflv_monotone,
    "tableaux": tableau_invariants,
    "genocchi": genocchi_invariants,
    "quiver": quiver_invariants,
}


def worker_count() -> int:
    raw = os.environ.get("PBWLAB_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_all(lim: Limits, workers: int | None = None) -> list[tuple[str, list[Check]]]:
    """Run every group; results come back in registration order regardless of scheduling."""
    groups = list(ACCEPTANCE.items()) + list(INVARIANTS.items())
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return [(name, fn(lim)) for name, fn in groups]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [(name, pool.submit(fn, lim)) for name, fn in groups]
        return [(name, f.result()) for name, f in futures]
