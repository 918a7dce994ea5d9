"""Command-line frontend.

Subcommands: describe, count, containment, verify, crt, sweep, field.
Rings are given as int/<k>, gauss/<a+bi> or poly/<p>/<f>; matrices as
[[e,f],[g,h]] with entries in the same notation (Gaussian imaginary
parts always carry an explicit coefficient: 1i, not i).

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 enumeration budget refused.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable

from . import centralizer, containment, counting, oracle
from .matrices import Mat2, matrix_from_rows, parse_matrix, reduce_mat
from .oracle import BudgetError, DEFAULT_BUDGET, MatrixSet
from .quotient import QuotientContext, parse_ring
from .ufd import (
    ParseError,
    parse_gauss_elem,
    parse_int_elem,
    parse_poly_elem,
)


def _element_parser(ctx: QuotientContext) -> Callable:
    if ctx.kind == "int":
        return parse_int_elem
    if ctx.kind == "gauss":
        return parse_gauss_elem
    p = ctx.modulus.p
    return lambda text, offset=0: parse_poly_elem(text, p, offset)


def _parse_mat2(ctx: QuotientContext, text: str) -> Mat2:
    rows = parse_matrix(text, _element_parser(ctx))
    m = matrix_from_rows(rows)
    if not isinstance(m, Mat2):
        raise ParseError("expected a 2x2 matrix", 0, text)
    return m


def _emit(ns, payload: dict, text_lines: list[str]) -> None:
    if ns.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_describe(ns) -> int:
    ctx = parse_ring(ns.ring)
    b = _parse_mat2(ctx, ns.matrix)
    desc = centralizer.describe(ctx, b)
    info = desc.to_json()
    if desc.s1_full:
        s1_line = "s1          all of M_2 (scalar lift)"
    else:
        s1_line = f"s1          span of E={desc.s1_e} and C={desc.s1_c}"
    lines = [
        f"ring        {info['ring']}  (|R/<k>| = {ctx.cardinality})",
        f"B mod k     {info['B']}",
        s1_line,
        f"s2 ideals   {info['s2_generators']}",
        f"witness t   {info['witness_t']}",
        f"defect d    {info['defect_d']}",
        f"|Cen|       {info['cardinality']}",
    ]
    _emit(ns, info, lines)
    return 0


def _cmd_count(ns) -> int:
    ctx = parse_ring(ns.ring)
    b = _parse_mat2(ctx, ns.matrix)
    total = counting.count(ctx, b)
    eq = counting.equiv_structure(ctx, b)
    crt = counting.crt_decompose(ctx)
    factors = [
        {"ring": f.spec(), "cardinality": counting.count(f, b)} for f in crt.factors
    ]
    payload = {
        "cardinality": total,
        "defect": str(eq.d),
        "k_over_d": str(eq.k_over_d),
        "class_size": eq.class_size,
        "class_count": total // eq.class_size,
        "crt_factors": factors,
    }
    lines = [
        f"|Cen| = {total}",
        f"defect d = {eq.d}, k/d = {eq.k_over_d}",
        f"classes: {total // eq.class_size} of size {eq.class_size}",
        "factors: "
        + ", ".join(f"{f['ring']}: {f['cardinality']}" for f in factors),
    ]
    _emit(ns, payload, lines)
    return 0


def _cmd_containment(ns) -> int:
    ctx = parse_ring(ns.ring)
    b = _parse_mat2(ctx, ns.matrix)
    rep = containment.report(ctx, b)
    payload = rep.to_json()
    lines = [
        f"s2 inside s1: {rep.s2_subset_s1}",
        f"s1 inside s2: {rep.s1_subset_s2}",
        f"s1 equals s2: {rep.s1_equals_s2}",
        f"defect: {rep.defect}",
    ]
    for d in rep.diagnostics:
        if d.condition == "divides-all":
            lines.append(f"prime {d.prime}^{d.exponent}: divides e-h, f and g")
        else:
            lines.append(
                f"prime {d.prime}^{d.exponent}: pair {d.pair} blocks, "
                f"{d.blocking} not invertible"
            )
    _emit(ns, payload, lines)
    return 0


def _verify_checks(ctx: QuotientContext, b: Mat2, budget: int) -> list[dict]:
    checks = []
    bhat = reduce_mat(ctx, b)
    cen = oracle.brute_force_cen(ctx, bhat, cap=budget)
    checks.append(
        {
            "name": "formula-vs-enumeration",
            "expected": cen.count,
            "got": counting.count(ctx, b),
        }
    )
    s1 = centralizer.s1_set(ctx, b, budget=budget)
    ideals = centralizer.s2_ideals(ctx, b)
    box_size = 1
    for ideal in (ideals[0][0], ideals[0][1], ideals[1][0], ideals[1][1]):
        box_size *= ideal.cardinality
    if s1.count * box_size <= budget:
        summed = oracle.sumset(s1, ideals, budget=budget)
        checks.append(
            {"name": "sumset-equals-enumeration", "expected": True, "got": summed == cen}
        )
    else:
        checks.append(
            {
                "name": "sumset-count-vs-enumeration",
                "expected": cen.count,
                "got": oracle.sumset_count(s1, ideals),
            }
        )
    checks.append(
        {"name": "s1-inside-centralizer", "expected": True, "got": s1.issubset(cen)}
    )
    rep = containment.report(ctx, b)
    if box_size <= budget:
        s2set = oracle.ideal_box_set(ctx, ideals, budget=budget)
        checks.append(
            {"name": "s2-inside-centralizer", "expected": True, "got": s2set.issubset(cen)}
        )
        checks.append(
            {
                "name": "containment-predicate-a",
                "expected": cen == s1,
                "got": rep.s2_subset_s1,
            }
        )
        checks.append(
            {
                "name": "containment-predicate-b",
                "expected": cen == s2set,
                "got": rep.s1_subset_s2,
            }
        )
        checks.append(
            {
                "name": "containment-predicate-c",
                "expected": s1 == s2set,
                "got": rep.s1_equals_s2,
            }
        )
    checks.append(
        {
            "name": "transpose-law",
            "expected": True,
            "got": oracle.transpose_check(ctx, bhat, cap=budget),
        }
    )
    for c in checks:
        c["ok"] = c["expected"] == c["got"]
    return checks


def _cmd_verify(ns) -> int:
    ctx = parse_ring(ns.ring)
    b = _parse_mat2(ctx, ns.matrix)
    checks = _verify_checks(ctx, b, ns.budget)
    ok = all(c["ok"] for c in checks)
    payload = {"ring": ctx.spec(), "matrix": str(b), "ok": ok, "checks": checks}
    lines = [
        f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']}: expected {c['expected']}, got {c['got']}"
        for c in checks
    ]
    lines.append("all checks passed" if ok else "MISMATCH")
    _emit(ns, payload, lines)
    return 0 if ok else 1


def _cmd_crt(ns) -> int:
    ctx = parse_ring(ns.ring)
    crt = counting.crt_decompose(ctx)
    payload = {
        "ring": ctx.spec(),
        "cardinality": ctx.cardinality,
        "factors": [
            {"ring": f.spec(), "cardinality": f.cardinality} for f in crt.factors
        ],
    }
    lines = [f"{ctx.spec()} (|R/<k>| = {ctx.cardinality}) splits as:"]
    lines += [f"  {f.spec()}  (size {f.cardinality})" for f in crt.factors]
    if ns.matrix:
        b = _parse_mat2(ctx, ns.matrix)
        counts = [counting.count(f, b) for f in crt.factors]
        payload["matrix"] = str(b)
        payload["factor_counts"] = counts
        payload["count"] = counting.count(ctx, b)
        lines.append(
            f"|Cen| = {payload['count']} = "
            + " * ".join(str(c) for c in counts)
        )
    _emit(ns, payload, lines)
    return 0


def _iter_exhaustive(ctx: QuotientContext):
    elems = ctx.elements
    for e in elems:
        for f in elems:
            for g in elems:
                for h in elems:
                    yield Mat2(e, f, g, h)


def _iter_sample(ctx: QuotientContext, n: int, seed: int):
    rng = random.Random(seed)
    elems = ctx.elements
    for _ in range(n):
        yield Mat2(*(elems[rng.randrange(len(elems))] for _ in range(4)))


def _cmd_sweep(ns) -> int:
    ctx = parse_ring(ns.ring)
    if ns.exhaustive:
        total = ctx.cardinality**4
        if total > ns.budget:
            raise BudgetError(f"exhaustive sweep over {ctx.spec()}", total, ns.budget)
        mats = _iter_exhaustive(ctx)
        mode = "exhaustive"
    else:
        if ns.sample is None:
            print("sweep needs --exhaustive or --sample N", file=sys.stderr)
            return 2
        mats = _iter_sample(ctx, ns.sample, ns.seed)
        mode = f"sample {ns.sample}"
    rows = []
    mismatches = 0
    for b in mats:
        d = counting.defect(b, ctx.modulus)
        formula = counting.count(ctx, b)
        rep = containment.report(ctx, b)
        row = {
            "matrix": str(b),
            "defect": str(d),
            "count": formula,
            "s2_in_s1": rep.s2_subset_s1,
            "s1_in_s2": rep.s1_subset_s2,
            "equal": rep.s1_equals_s2,
        }
        if ns.verify:
            got = oracle.brute_force_cen(ctx, reduce_mat(ctx, b), cap=ns.budget).count
            row["oracle_count"] = got
            if got != formula:
                mismatches += 1
        rows.append(row)
    if ns.format == "json":
        print(
            json.dumps(
                {
                    "ring": ctx.spec(),
                    "mode": mode,
                    "seed": ns.seed,
                    "rows": rows,
                    "mismatches": mismatches,
                },
                indent=2,
            )
        )
    else:
        cols = ["matrix", "defect", "count", "oracle_count", "s2_in_s1", "s1_in_s2", "equal"]
        print(f"# ring={ctx.spec()} mode={mode} seed={ns.seed}")
        print(",".join(cols))
        for row in rows:
            print(",".join(str(row.get(c, "")) for c in cols))
        print(f"# rows={len(rows)} mismatches={mismatches}")
    return 1 if mismatches else 0


def _cmd_field(ns) -> int:
    ctx = parse_ring(f"int/{ns.p}")
    b = _parse_mat2(ctx, ns.matrix)
    fc = centralizer.field_centralizer(ns.p, b)
    payload = {
        "p": ns.p,
        "matrix": str(b),
        "case": fc.case,
        "cardinality": fc.cardinality,
    }
    roman = {1: "i", 2: "ii", 3: "iii", 4: "iv"}[fc.case]
    lines = [
        f"centralizer over F_{ns.p}: case ({roman}), {fc.cardinality} matrices"
    ]
    _emit(ns, payload, lines)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cent2",
        description="Centralizers of 2x2 matrices over finite quotient rings "
        "R/<k> for R = Z, Z[i], F_p[x].",
        epilog="Ring specs: int/12, gauss/12, gauss/1+1i, poly/2/x^2+x+1. "
        "Matrix entries use the same element notation as the ring; Gaussian "
        "imaginary parts need an explicit coefficient (1i, not i).",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, matrix_required=True):
        p.add_argument("--ring", required=True, help="ring spec, e.g. int/12")
        p.add_argument(
            "--matrix",
            required=matrix_required,
            help='matrix literal, e.g. "[[2,2],[4,8]]"',
        )
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_BUDGET,
            help="enumeration budget (candidate count)",
        )

    p = sub.add_parser("describe", help="structural description of Cen(B mod k)")
    common(p)
    p.set_defaults(fn=_cmd_describe)

    p = sub.add_parser("count", help="exact |Cen(B mod k)|")
    common(p)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("containment", help="containments between the two halves")
    common(p)
    p.set_defaults(fn=_cmd_containment)

    p = sub.add_parser("verify", help="cross-check formulas against enumeration")
    common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("crt", help="prime-power splitting of the ring")
    common(p, matrix_required=False)
    p.set_defaults(fn=_cmd_crt)

    p = sub.add_parser("sweep", help="tabulate many matrices at once")
    p.add_argument("--ring", required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int, default=None, help="number of random matrices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", action="store_true", help="also run the enumeration oracle")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("field", help="centralizer shape over a prime field")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_field)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.fn(ns)
    except ParseError as err:
        print(f"cent2: parse error {err}", file=sys.stderr)
        return 2
    except BudgetError as err:
        print(f"cent2: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"cent2: {err}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
