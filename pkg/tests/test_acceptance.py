"""Acceptance suite: eight exact checks with runtime limits.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``; either way one PASS/FAIL line is
printed per criterion.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from stackyk import corpus
from stackyk.fan import minimal_nonfaces
from stackyk.kth import k_dimension, k_presentation, lattice_relation, nonface_relation
from stackyk.latlin import determinant, matmul, smith_normal_form
from stackyk.mor import (
    codim1_reweight,
    pullback,
    pullback_poly,
    push_class,
    push_codim1,
    push_codim1_series_check,
    push_hilbert_oracle,
    push_R_inverse_power,
    push_theorem_check,
    weighted_blowup,
)
from stackyk.ring import Poly, buchberger_criterion_holds, groebner, normal_form
from stackyk.srco import chern_table, graded_dim_formula_check, graded_total, sr_dimension, sr_truncated_oracle


def show(graded):
    return "{" + ", ".join(f"{d}: {c}" for d, c in sorted(graded.items())) + "}"


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def criterion_1():
    (graded, _), secs = timed(sr_dimension, corpus.two_quadrants())
    ok = graded == {0: 1, 1: 2} and graded_total(graded) == 3 and secs < 1
    return ok, f"graded {show(graded)}, {secs:.2f}s"


CHERN_CORPUS = [
    (corpus.projective_line, 2),
    (corpus.projective_plane, 3),
    (corpus.p1_times_p1, 4),
    (corpus.weighted_p112, 4),
    (lambda: corpus.stacky_line(2), 3),
    (lambda: corpus.stacky_line(3), 4),
    (lambda: corpus.stacky_line(4), 5),
    (corpus.two_quadrants, 3),
    (corpus.affine_plane, 1),
]


def criterion_2():
    parts, ok = [], True
    for factory, expected in CHERN_CORPUS:
        fan = factory()
        start = time.perf_counter()
        kd = k_dimension(fan)
        sr = graded_total(sr_dimension(fan)[0])
        secs = time.perf_counter() - start
        ok &= kd == sr == expected and secs < 10
        parts.append(f"{fan.name}={kd}/{sr}")
    return ok, " ".join(parts)


def criterion_3():
    table = chern_table(corpus.weighted_p112())
    points = [r.box.point for r in table.rows]
    rotations = [r.rotations for r in table.rows]
    dims = [r.dimension for r in table.rows]
    half = Fraction(1, 2)
    ok = (
        points == [(0, 0), (0, -1)]
        and rotations[1] == (half, None, half)
        and dims == [3, 1]
        and table.total == 4
    )
    return ok, f"points {points}, dims {dims}"


def criterion_4():
    parts, ok = [], True
    for fan in (corpus.projective_plane(), corpus.weighted_p112(), corpus.two_quadrants()):
        start = time.perf_counter()
        oracle = sr_truncated_oracle(fan, 4)
        sectors = {d: c for d, c in sr_dimension(fan)[0].items() if d <= 4}
        secs = time.perf_counter() - start
        nonzero = {d: c for d, c in oracle.items() if c}
        ok &= nonzero == sectors and secs < 30
        parts.append(f"{fan.name} {secs:.2f}s")
    return ok, ", ".join(parts)


def criterion_5():
    start = time.perf_counter()
    ok = True
    for weights in ((2, 3), (1, 1)):
        b = weighted_blowup(corpus.projective_plane(), (0, 1), weights)
        for T in range(9):
            ok &= push_theorem_check(b, T).ok
        ok &= all(push_R_inverse_power(b, l) == push_hilbert_oracle(b, l) for l in range(1, 11))
    secs = time.perf_counter() - start
    return ok and secs < 60, f"{secs:.2f}s"


def criterion_6():
    start = time.perf_counter()
    m = codim1_reweight(corpus.projective_line(), 0, 3)
    xb = m.target_ring.xbar(0)
    ok = all(push_codim1(m, e) == xb for e in (1, 2, 3))
    ok &= all(push_codim1(m, e) == xb**2 for e in (4, 5, 6))
    ok &= push_codim1_series_check(m, 9).ok
    secs = time.perf_counter() - start
    return ok and secs < 10, f"{secs:.2f}s"


def criterion_7():
    start = time.perf_counter()
    p2 = graded_dim_formula_check(corpus.projective_plane(), 4)
    p112 = graded_dim_formula_check(corpus.weighted_p112(), 4)
    secs = time.perf_counter() - start
    ok = p2.ok and p112.ok and p2.series == {0: 1, 1: 1, 2: 1} and p112.series == {0: 1, 1: 2, 2: 1}
    return ok and secs < 10, f"P2 {show(p2.series)}, P112 {show(p112.series)}"


def snf_property(rng):
    for _ in range(100):
        A = tuple(tuple(rng.randint(-20, 20) for _ in range(3)) for _ in range(3))
        U, S, V = smith_normal_form(A)
        diag = [S[i][i] for i in range(3)]
        if matmul(matmul(U, A), V) != S or determinant(U) not in (1, -1) or determinant(V) not in (1, -1):
            return False
        if any(S[i][j] for i in range(3) for j in range(3) if i != j) or any(d < 0 for d in diag):
            return False
        nonzero = [d for d in diag if d]
        if diag[: len(nonzero)] != nonzero or any(b % a for a, b in zip(nonzero, nonzero[1:])):
            return False
    return True


def buchberger_property(rng):
    for factory in corpus.CORPUS.values():
        pres = k_presentation(factory())
        G = groebner(list(pres.generators))
        if not buchberger_criterion_holds(G):
            return False
        nv = pres.nvars
        for _ in range(10):
            p = Poly(nv, {tuple(rng.randint(0, 2) for _ in range(nv)): rng.randint(-5, 5) for _ in range(4)})
            nf = normal_form(p, G)
            if normal_form(nf, G) != nf:
                return False
    return True


def corpus_morphisms():
    return [
        weighted_blowup(corpus.projective_plane(), (0, 1), (2, 3)).base,
        weighted_blowup(corpus.projective_plane(), (0, 1), (1, 1)).base,
        weighted_blowup(corpus.affine_plane(), (0, 1), (1, 1)).base,
        codim1_reweight(corpus.projective_line(), 0, 3).base,
    ]


def pullback_property(rng):
    for m in corpus_morphisms():
        tgt, src = m.target_ring, m.source_ring
        relations = [lattice_relation(m.target, f) for f in ((1,) * m.target.rank, (2,) + (-1,) * (m.target.rank - 1))]
        relations += [nonface_relation(m.target, I) for I in minimal_nonfaces(m.target)]
        if pullback(m, tgt.one()) != src.one():
            return False
        samples = [tuple(rng.randint(-3, 3) for _ in range(m.target.n)) for _ in range(20)]
        for r, s in zip(samples, samples[1:] + samples[:1]):
            a, b = tgt.monomial(r), tgt.monomial(s)
            if pullback(m, a * b) != pullback(m, a) * pullback(m, b):
                return False
            if any(pullback_poly(m, a.rep * rel) != src.zero() for rel in relations):
                return False
    return True


def projection_property(rng):
    for weights in ((2, 3), (1, 1)):
        b = weighted_blowup(corpus.projective_plane(), (0, 1), weights)
        src, tgt = b.source_ring, b.target_ring
        R_inv = src.xbar(b.new_ray)
        for _ in range(4):
            a = tgt.monomial([rng.randint(-2, 2) for _ in range(tgt.n)]) * rng.randint(1, 3) + rng.randint(-2, 2)
            for l in range(6):
                if push_class(b, pullback(b.base, a) * R_inv**l) != a * push_R_inverse_power(b, l):
                    return False
    return True


def criterion_8():
    rng = random.Random(8)
    results = {
        "a": snf_property(rng),
        "b": buchberger_property(rng),
        "c": pullback_property(rng),
        "d": projection_property(rng),
    }
    return all(results.values()), " ".join(f"({k}) {'ok' if v else 'FAIL'}" for k, v in results.items())


CRITERIA = {
    1: ("two-quadrant SR-cohomology is {0:1, 1:2}", criterion_1),
    2: ("K-theory dimension equals SR-cohomology dimension on the corpus", criterion_2),
    3: ("P(1,1,2) sector table", criterion_3),
    4: ("truncation oracle agrees with sectors to degree 4", criterion_4),
    5: ("weighted blowup pushforward series and Hilbert oracle", criterion_5),
    6: ("codimension-one reweight pushforward", criterion_6),
    7: ("graded-dimension generating function", criterion_7),
    8: ("property suites: SNF, Buchberger, pullback, projection formula", criterion_8),
}


def report(number):
    title, fn = CRITERIA[number]
    ok, detail = fn()
    return ok, f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title} [{detail}]"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = report(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for n in sorted(CRITERIA):
        ok, line = report(n)
        print(line)
        failures += not ok
    sys.exit(1 if failures else 0)
