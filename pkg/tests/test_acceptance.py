"""Acceptance suite: one test per release criterion.

Each test prints a single PASS/FAIL line (run pytest with -s to see
them). The heavy exhaustive sweeps are shared between criteria 3, 4 and
5 through a module-level cache, so the file stays well inside its time
budget.
"""

import itertools
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

import numpy as np

from cent2.centralizer import field_centralizer, s1_set, s2_ideals
from cent2.containment import cen_equals_s2, cen_equals_theta, s1_equals_s2
from cent2.counting import count, count_zk, crt_decompose, defect, equiv_structure
from cent2.matrices import Mat2, MatN, commutes, is_scalar, reduce_mat
from cent2.oracle import (
    MatrixSet,
    _coset_key_table,
    _pack,
    _split_codes,
    brute_force_cen,
    decode_mat2,
    encode_mat2,
    ideal_box_set,
    prop14_check,
    sumset,
    sumset_count,
    transpose_check,
)
from cent2.quotient import parse_ring
from cent2.ufd import GaussElem, IntElem


@contextmanager
def criterion(num, label):
    start = time.time()
    try:
        yield
    except BaseException:
        print(f"\ncriterion {num:2d} FAIL  {label}")
        raise
    print(f"\ncriterion {num:2d} PASS  {label}  ({time.time() - start:.1f}s)")


def imat(e, f, g, h):
    return Mat2(IntElem(e), IntElem(f), IntElem(g), IntElem(h))


Z12_B = imat(2, 2, 4, 8)
GAUSS_B = Mat2(GaussElem(0, 4), GaussElem(3, 6), GaussElem(0, 9), GaussElem(0, 1))


# --------------------------------------------------------------------------
# shared exhaustive sweeps (criteria 3, 4, 5)

SWEEP_SPECS = ("int/4", "int/6", "int/8", "int/9", "gauss/2", "poly/2/x^2")
Z12_RANDOM = ("int/12-random", 1000, 20240812)


@dataclass
class SweepSummary:
    spec: str
    matrices: int = 0
    formula_mismatches: list = field(default_factory=list)
    predicate_mismatches: list = field(default_factory=list)
    cor210_mismatches: list = field(default_factory=list)
    subset_failures: list = field(default_factory=list)
    sumset_mismatches: list = field(default_factory=list)
    elapsed: float = 0.0


_SWEEPS: dict = {}


def _sweep_matrix(ctx, b, summary):
    n = ctx.cardinality
    full = n**4
    bhat = reduce_mat(ctx, b)
    cen = brute_force_cen(ctx, bhat)
    if count(ctx, b) != cen.count:
        summary.formula_mismatches.append(str(b))
    s1 = s1_set(ctx, b)
    ideals = s2_ideals(ctx, b)
    s2set = ideal_box_set(ctx, ideals)
    if not (s1.issubset(cen) and s2set.issubset(cen)):
        summary.subset_failures.append(str(b))
    preds = (
        cen_equals_theta(ctx, b) == (cen == s1)
        and cen_equals_s2(ctx, b) == (cen == s2set)
        and s1_equals_s2(ctx, b) == (s1 == s2set)
    )
    if not preds:
        summary.predicate_mismatches.append(str(b))
    if ctx.kind == "int":
        simple = is_scalar(b) or defect(b, ctx.modulus).is_unit()
        if cen_equals_theta(ctx, b) != simple:
            summary.cor210_mismatches.append(str(b))
    # sum of the two halves must reproduce the centralizer exactly; when
    # s1 is already all of M_2 the sum is squeezed between s1 and M_2,
    # so only the centralizer's size needs checking
    if s1.count == full:
        ok = cen.count == full
    else:
        ok = sumset(s1, ideals) == cen
    if not ok:
        summary.sumset_mismatches.append(str(b))
    summary.matrices += 1


def _exhaustive_sweep(spec):
    if spec not in _SWEEPS:
        start = time.time()
        ctx = parse_ring(spec)
        summary = SweepSummary(spec)
        for entries in itertools.product(ctx.elements, repeat=4):
            _sweep_matrix(ctx, Mat2(*entries), summary)
        summary.elapsed = time.time() - start
        _SWEEPS[spec] = summary
    return _SWEEPS[spec]


def _z12_random_sweep():
    key, total, seed = Z12_RANDOM
    if key not in _SWEEPS:
        start = time.time()
        ctx = parse_ring("int/12")
        elems = ctx.elements
        rng = random.Random(seed)
        summary = SweepSummary(key)
        for _ in range(total):
            b = Mat2(*(elems[rng.randrange(len(elems))] for _ in range(4)))
            _sweep_matrix(ctx, b, summary)
        summary.elapsed = time.time() - start
        _SWEEPS[key] = summary
    return _SWEEPS[key]


def _all_sweeps():
    out = [_exhaustive_sweep(spec) for spec in SWEEP_SPECS]
    out.append(_z12_random_sweep())
    return out


# --------------------------------------------------------------------------


def test_criterion_01_z12_paper_example():
    with criterion(1, "Z12 example: count == 576 == enumeration, under 1s"):
        start = time.time()
        ctx = parse_ring("int/12")
        assert count(ctx, Z12_B) == 576
        assert count_zk(Z12_B, 12) == 576
        assert brute_force_cen(ctx, reduce_mat(ctx, Z12_B)).count == 576
        assert time.time() - start < 1.0


def test_criterion_02_gauss_paper_example():
    with criterion(2, "Z12[i] example: count == 1679616 == sumset oracle, under 120s"):
        start = time.time()
        ctx = parse_ring("gauss/12")
        assert count(ctx, GAUSS_B) == 1679616
        s1 = s1_set(ctx, GAUSS_B)
        ideals = s2_ideals(ctx, GAUSS_B)
        assert sumset_count(s1, ideals) == 1679616
        assert sumset(s1, ideals).count == 1679616
        assert time.time() - start < 120.0


def test_criterion_03_formula_oracle_exhaustive():
    with criterion(3, "formula == enumeration on all exhaustive sweeps + 1000 random Z12"):
        start = time.time()
        for summary in _all_sweeps():
            assert not summary.formula_mismatches, (
                summary.spec,
                summary.formula_mismatches[:3],
            )
        expected = {"int/4": 256, "int/6": 1296, "int/8": 4096, "int/9": 6561,
                    "gauss/2": 256, "poly/2/x^2": 256, "int/12-random": 1000}
        for summary in _all_sweeps():
            assert summary.matrices == expected[summary.spec]
        assert time.time() - start < 600.0


def test_criterion_04_predicate_soundness():
    with criterion(4, "containment predicates match set-level truth on all sweeps"):
        for summary in _all_sweeps():
            assert not summary.predicate_mismatches, (
                summary.spec,
                summary.predicate_mismatches[:3],
            )
            assert not summary.subset_failures, summary.spec
            assert not summary.cor210_mismatches, (
                summary.spec,
                summary.cor210_mismatches[:3],
            )


def test_criterion_05_sum_identity():
    with criterion(5, "s1 + s2 == centralizer on every swept instance"):
        for summary in _all_sweeps():
            assert not summary.sumset_mismatches, (
                summary.spec,
                summary.sumset_mismatches[:3],
            )


# --------------------------------------------------------------------------


EQUIV_POOL = (
    "int/4",
    "int/8",
    "int/9",
    "int/12",
    "gauss/2",
    "gauss/3",
    "poly/2/x^2",
    "poly/3/x^2",
)


def _signatures(ctx, ideal, codes):
    key = _coset_key_table(ideal)
    n = ctx.cardinality
    a, b, c, d = _split_codes(codes, n)
    return _pack(key[a], key[b], key[c], key[d], n)


def _check_equiv_instance(ctx, b, rng):
    eq = equiv_structure(ctx, b)
    cen = brute_force_cen(ctx, reduce_mat(ctx, b))
    sig = _signatures(ctx, eq.class_ideal, cen.codes)
    uniq, counts = np.unique(sig, return_counts=True)
    assert (counts == eq.class_size).all(), str(b)
    if eq.degenerate:
        assert uniq.size == 1
    else:
        # reducing one representative per class mod k/d lands bijectively
        # on the centralizer of the divided matrix
        rctx = eq.reduced_ctx
        order = np.argsort(sig, kind="stable")
        first_of_class = np.searchsorted(sig[order], uniq)
        reduced_codes = set()
        for pos in first_of_class:
            m = decode_mat2(ctx, int(cen.codes[order[pos]]))
            rm = m.map(lambda r: rctx.reduce(r.rep))
            reduced_codes.add(encode_mat2(rctx, rm))
        reduced_cen = brute_force_cen(rctx, eq.reduced_matrix)
        assert len(reduced_codes) == uniq.size == reduced_cen.count
        assert reduced_codes == set(int(c) for c in reduced_cen.codes)

    # class addition/multiplication do not depend on representatives
    groups: dict[int, list[int]] = {}
    for code, s in zip(cen.codes, sig):
        groups.setdefault(int(s), []).append(int(code))
    all_codes = [int(c) for c in cen.codes]

    def class_of(m):
        code = np.array([encode_mat2(ctx, m)], dtype=np.int64)
        return int(_signatures(ctx, eq.class_ideal, code)[0])

    for _ in range(200):
        a1 = decode_mat2(ctx, all_codes[rng.randrange(len(all_codes))])
        c1 = decode_mat2(ctx, all_codes[rng.randrange(len(all_codes))])
        a_class = groups[class_of(a1)]
        c_class = groups[class_of(c1)]
        a2 = decode_mat2(ctx, a_class[rng.randrange(len(a_class))])
        c2 = decode_mat2(ctx, c_class[rng.randrange(len(c_class))])
        assert class_of(a1 + c1) == class_of(a2 + c2)
        assert class_of(a1 * c1) == class_of(a2 * c2)


def test_criterion_06_equivalence_classes():
    with criterion(6, "class partition, reduced bijection, well-defined class ring"):
        rng = random.Random(20240813)
        instances = 0
        while instances < 200:
            ctx = parse_ring(EQUIV_POOL[rng.randrange(len(EQUIV_POOL))])
            elems = ctx.elements
            b = Mat2(*(elems[rng.randrange(len(elems))] for _ in range(4)))
            if defect(b, ctx.modulus).is_unit():
                continue
            instances += 1
            _check_equiv_instance(ctx, b, rng)


def test_criterion_07_crt_multiplicativity():
    with criterion(7, "|Cen mod 12| == |Cen mod 4| * |Cen mod 3| plus iso round-trips"):
        ctx = parse_ring("int/12")
        crt = crt_decompose(ctx)
        assert [f.spec() for f in crt.factors] == ["int/4", "int/3"]
        rng = random.Random(20240814)
        elems = ctx.elements
        seen_images = set()
        for _ in range(500):
            b = Mat2(*(elems[rng.randrange(len(elems))] for _ in range(4)))
            whole = brute_force_cen(ctx, reduce_mat(ctx, b)).count
            parts = 1
            for f in crt.factors:
                parts *= brute_force_cen(f, reduce_mat(f, b)).count
            assert whole == parts, str(b)
            # matrix-level round trip through the splitting
            bhat = reduce_mat(ctx, b)
            pieces = crt.project_matrix(bhat)
            seen_images.add(tuple(str(p) for p in pieces))
            assert crt.combine_matrix(pieces) == bhat
        # residue-level bijectivity: all of R/<12> maps to distinct tuples
        images = {tuple(str(p) for p in crt.project_residue(r)) for r in ctx.enumerate()}
        assert len(images) == ctx.cardinality
        for r in ctx.enumerate():
            assert crt.combine_residue(crt.project_residue(r)) == r


def test_criterion_08_field_case():
    with criterion(8, "field case p in {2,3,5}: shapes and p^2/p^4 sizes exhaustively"):
        for p in (2, 3, 5):
            ctx = parse_ring(f"int/{p}")
            for entries in itertools.product(range(p), repeat=4):
                b = imat(*entries)
                fc = field_centralizer(p, b)
                cen = brute_force_cen(ctx, reduce_mat(ctx, b))
                assert MatrixSet.from_matrices(ctx, fc.matrices) == cen
                if is_scalar(reduce_mat(ctx, b)):
                    assert fc.case == 1 and fc.cardinality == p**4
                else:
                    assert fc.case in (2, 3, 4) and fc.cardinality == p**2


PINNED_STRICT_3X3 = [[1, 1, 1], [0, 0, 2], [2, 0, 2]]


def test_criterion_09_nxn_inclusion():
    with criterion(9, "n x n inclusion: 2x2 equality, 3x3 inclusion, strict instance"):
        ctx = parse_ring("int/4")
        for entries in itertools.product(range(4), repeat=4):
            rep = prop14_check(imat(*entries), ctx)
            assert rep.inclusion_holds and not rep.strict
        rng = random.Random(20240815)
        strict_seen = 0
        for _ in range(100):
            b = MatN(
                [[IntElem(rng.randrange(-16, 17)) for _ in range(3)] for _ in range(3)]
            )
            rep = prop14_check(b, ctx)
            assert rep.inclusion_holds, str(b)
            if rep.strict:
                strict_seen += 1
        assert strict_seen >= 1
        pinned = MatN([[IntElem(v) for v in row] for row in PINNED_STRICT_3X3])
        rep = prop14_check(pinned, ctx)
        assert rep.strict and rep.inclusion_holds
        assert (rep.lhs_size, rep.rhs_size) == (64, 256)
        assert commutes(rep.witness, pinned.map(lambda x: ctx.reduce(x)))


def test_criterion_10_transpose_law():
    with criterion(10, "Cen(B^T) == Cen(B)^T on 100 seeded instances per ring family"):
        rng = random.Random(20240816)
        for spec in ("int/12", "gauss/3", "poly/3/x^2"):
            ctx = parse_ring(spec)
            elems = ctx.elements
            for _ in range(100):
                b = Mat2(*(elems[rng.randrange(len(elems))] for _ in range(4)))
                assert transpose_check(ctx, reduce_mat(ctx, b)), (spec, str(b))
