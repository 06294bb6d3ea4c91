"""Command-line front end.

Every verification pipeline is exposed as a subcommand; table-emitting
commands support --format json|tsv.  Exit codes: 0 when all verifications
match the shipped reference values, 1 on a verification mismatch (with a
diff of expected versus computed), 2 on usage errors.  Output is
deterministic given the flags; timing diagnostics go to stderr (opt into
machine-readable timings with --timings).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from . import __version__
from .chern import grassmannian_g25_data, ci_euler_ambient, ci_euler_weighted, load_chern_data
from .contraction import (
    RankTwoPicardModel,
    catalogue_series,
    chi_of_resolution,
    construction_catalogue,
    contraction_image_degree,
    is_smoothable,
    smoothing_euler,
    table1,
    table3,
    triple_product,
)
from .groebner import graded_piece_dim, BudgetExceededError
from .groebner.nodes import (
    CONSTRUCTION_TAGS,
    DEFAULT_PRIME,
    EXPECTED_NODES,
    build_construction,
    verify_nodes,
)
from .pfaffian import (
    SkewMatrix,
    build_bordered,
    expansion_identity_report,
    maximal_sub_pfaffians,
    pfaffian,
    skew_from_text,
)
from .poly import PolyRing, poly_print, random_homogeneous, weighted_degree
from .series import (
    HilbertData,
    ci_hilbert_series,
    defect_quintic,
    embedding_dimension,
    image_degree,
    series_coefficients,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _default_prime() -> int:
    return int(os.environ.get("CYCONTRACT_PRIME", DEFAULT_PRIME))


def _reference_tables() -> dict:
    text = resources.files("cycontract.data").joinpath("reference_tables.json").read_text()
    return json.loads(text)


def _emit(obj, fmt: str, columns: list[str] | None = None):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
        return
    rows = obj if isinstance(obj, list) else [obj]
    cols = columns or sorted(rows[0].keys())
    print("\t".join(cols))
    for row in rows:
        print("\t".join(_cell(row.get(c)) for c in cols))


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


# ---------------------------------------------------------------------------
# subcommands


def cmd_table1(args) -> int:
    rows = [dict(r.as_dict(), chi_X=r.chi_x, image_degree=r.image_degree,
                 ambient_dim=r.ambient_dim, note=r.note)
            for r in table1()]
    reference = _reference_tables()["table1"]
    mismatches = []
    for row, ref in zip(rows, reference):
        for key in ("degD", "singular_locus", "chi_smoothing", "image_tag"):
            if row[key] != ref[key]:
                mismatches.append(
                    f"row {ref['singular_locus']}: {key} published {ref[key]!r}, "
                    f"computed {row[key]!r} (pipeline: {ref['pipeline']})"
                )
    cols = ["degD", "construction", "singular_locus", "chi_smoothing", "image_tag",
            "chi_X", "image_degree", "ambient_dim", "consistency"]
    _emit(rows, args.format, cols)
    if mismatches:
        print("\n".join(["VERIFICATION MISMATCH:"] + mismatches), file=sys.stderr)
        return EXIT_MISMATCH
    print(f"all {sum(1 for r in rows if r['chi_smoothing'] is not None)} chi values "
          "match the reference table", file=sys.stderr)
    return EXIT_OK


def cmd_table3(args) -> int:
    rows = table3()
    reference = _reference_tables()["table3"]
    mismatches = []
    for row, ref in zip(rows, reference):
        for key in ("chi_D", "chi_C", "chi_X", "chi_smoothing"):
            if row[key] != ref[key]:
                mismatches.append(f"row i={ref['i']}: {key} published {ref[key]}, computed {row[key]}")
        if row["chi_G"] != ref["chi_G"] and "erratum" not in row:
            mismatches.append(f"row i={ref['i']}: chi_G published {ref['chi_G']}, computed {row['chi_G']}")
    cols = ["i", "D", "G", "chi_D", "chi_G", "chi_C", "chi_X", "chi_smoothing", "erratum"]
    for row in rows:
        row.setdefault("erratum", None)
    _emit(rows, args.format, cols)
    if mismatches:
        print("\n".join(["VERIFICATION MISMATCH:"] + mismatches), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _row_for(construction: str, args):
    specs = construction_catalogue()
    if construction == "c1":
        return specs[args.r - 1]
    if construction == "c2":
        return specs[{2: 5, 1: 6, 3: 7}[args.i]]
    if construction == "c2q":
        return specs[{4: 8, 8: 9}[args.variant]]
    if construction == "c3":
        return specs[{3: 10, 4: 11}[args.variant]]
    if construction == "c4":
        return specs[{5: 12, 3: 13, 4: 14}[args.variant]]
    raise KeyError(construction)


def cmd_hilbert(args) -> int:
    if args.weights:
        data = HilbertData(_ints(args.weights), _ints(args.degrees) if args.degrees else ())
        s = ci_hilbert_series(data)
        tag = f"complete intersection {data.degrees} in P{data.weights}"
    else:
        spec = _row_for(args.construction, args)
        tag = spec.image_tag
        s = catalogue_series(spec.series_tag) if spec.series_tag else ci_hilbert_series(spec.fiber)
    out = {
        "series": str(s),
        "numerator": list(s.numerator),
        "denominator": list(s.denominator),
        "coefficients": series_coefficients(s, args.terms),
        "degree": image_degree(s, 3),
        "ambient_dim": embedding_dimension(s),
        "image": tag,
    }
    _emit(out, args.format, ["image", "series", "coefficients", "degree", "ambient_dim"])
    return EXIT_OK


def cmd_chern(args) -> int:
    degrees = list(_ints(args.degrees)) if args.degrees else []
    if args.ambient:
        data = grassmannian_g25_data() if args.ambient == "g25" else load_chern_data(args.ambient)
        chi = ci_euler_ambient(data, degrees)
        out = {"ambient": args.ambient, "degrees": degrees, "chi": chi}
    else:
        h = HilbertData(_ints(args.weights), tuple(degrees))
        chi = ci_euler_weighted(h)
        out = {"weights": list(h.weights), "degrees": degrees, "chi": chi}
    _emit(out, args.format)
    return EXIT_OK


def cmd_euler_pipeline(args) -> int:
    spec = _row_for(args.construction, args)
    chi_x = chi_of_resolution(spec)
    out = {
        "construction": spec.label,
        "deg_D": spec.r,
        "chi_X": chi_x,
        "smoothable": is_smoothable(spec.r),
        "chi_smoothing": sorted(smoothing_euler(chi_x, spec.r)) if is_smoothable(spec.r) else None,
    }
    if spec.branch:
        from .chern import curve_euler_ci_fano, surface_euler_fano

        q, m = spec.branch
        out["chi_F"] = spec.fano.chi_top
        out["chi_D"] = surface_euler_fano(spec.fano, q)
        out["chi_G"] = surface_euler_fano(spec.fano, m)
        out["chi_C"] = curve_euler_ci_fano(spec.fano, q, m)
    else:
        out["chi_base"] = ci_euler_weighted(spec.base_fiber)
        out["mu"] = spec.mu
    if spec.fiber is not None:
        out["chi_fiber_independent"] = ci_euler_weighted(spec.fiber)
    _emit(out, args.format)
    return EXIT_OK


def cmd_picard(args) -> int:
    model = RankTwoPicardModel(L3=args.l3, lam=Fraction(args.lam), r=args.r)
    out = {
        "L3": args.l3,
        "lambda": str(model.lam),
        "r": args.r,
        "contracting_multiple": int(-1 / model.lam) if (-1 / model.lam).denominator == 1 else None,
        "image_degree": None,
    }
    try:
        out["image_degree"] = contraction_image_degree(model)
    except ValueError as exc:
        out["error"] = str(exc)
    if args.a is not None and args.b is not None:
        out["triple_product"] = str(triple_product(model, Fraction(args.a), Fraction(args.b)))
    _emit(out, args.format)
    return EXIT_OK


def cmd_nodes(args) -> int:
    seeds = list(range(args.seed, args.seed + args.seeds))
    reports = []
    ok = True
    for s in seeds:
        print(f"verifying {args.construction} over GF({args.prime}), seed {s} ...",
              file=sys.stderr, flush=True)
        r = verify_nodes(args.construction, args.prime, s, budget=args.budget)
        print(f"  -> status={r.status} degree={r.degree} expected={r.expected} "
              f"separable={r.separable} [{r.runtime_ms:.0f} ms]", file=sys.stderr)
        reports.append(r.as_dict(timings=args.timings))
        ok = ok and r.status == "ok" and r.match
    _emit(reports if len(reports) > 1 else reports[0], args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_pfaffian_check(args) -> int:
    ring = PolyRing(6, args.prime)
    if args.matrix:
        text = open(args.matrix, encoding="utf-8").read()
        s = skew_from_text(text, PolyRing(args.nvars, args.prime), args.size)
        if s.size % 2 == 0:
            out = {"size": s.size, "pfaffian": poly_print(pfaffian(s))}
        else:
            out = {"size": s.size,
                   "sub_pfaffians": [poly_print(p) for p in maximal_sub_pfaffians(s)]}
        _emit(out, args.format)
        return EXIT_OK

    base = args.seed * 1009
    m = SkewMatrix(ring, 5, {
        (i, j): random_homogeneous(1, ring, base + 10 + 5 * i + j)
        for i in range(5) for j in range(i + 1, 5)
    })
    lforms = [random_homogeneous(1, ring, base + 40 + k) for k in range(5)]
    tforms = [random_homogeneous(1, ring, base + 50 + k) for k in range(5)]
    bordered = build_bordered(m, lforms, tforms)
    report = expansion_identity_report(bordered, lforms, tforms)
    inner = maximal_sub_pfaffians(m)
    out = {
        "prime": args.prime,
        "seed": args.seed,
        "expansion_identity": report.holds,
        "signs": list(report.signs),
        "assignment": report.assignment,
        "inner_subpfaffian_degrees": [weighted_degree(p) for p in inner],
    }
    _emit(out, args.format)
    return EXIT_OK if report.holds else EXIT_MISMATCH


def cmd_defect(args) -> int:
    prime, seed = args.prime, args.seed
    out = {"construction": args.construction, "prime": prime, "seed": seed}
    base = seed * 1009
    if args.construction in ("c3-deg4", "c3-deg3"):
        ring = PolyRing(5, prime)
        if args.construction == "c3-deg4":
            degrees, mu = (2, 2, 3, 3), 36
            gens = [random_homogeneous(d, ring, base + k + 1) for k, d in enumerate((2, 2, 3, 3))]
        else:
            degrees, mu = (3, 1, 2, 4), 24
            gens = [random_homogeneous(d, ring, base + k + 1) for k, d in enumerate((3, 1, 2, 4))]
        s = ci_hilbert_series(HilbertData((1,) * 5, degrees))
        hf5_series = series_coefficients(s, 5)[5]
        ideal_dim = graded_piece_dim(gens, 5)
        hf5_linalg = 126 - ideal_dim
        delta = defect_quintic(hf5_linalg, mu)
        out.update({
            "mu": mu,
            "hf5_series": hf5_series,
            "hf5_linear_algebra": hf5_linalg,
            "paths_agree": hf5_series == hf5_linalg,
            "defect": delta,
        })
        ok = out["paths_agree"] and delta == 1
    elif args.construction == "c4-deg5":
        ideal = build_construction("c4-deg5", prime, seed)
        dim3 = graded_piece_dim(ideal.singular_gens, 3)
        naive = dim3 - 56 + 28
        out.update({"mu": 28, "ideal_dim_3": dim3, "h0_O3": 56, "naive_defect": naive,
                    "published_ideal_dim_3": 29, "published_defect": 1})
        if dim3 != 29:
            out["erratum"] = (
                "the published count 29 - 56 + 28 = 1 is not reproducible: the "
                "degree-3 piece of the node ideal is 30-dimensional (25 cubics "
                "through the del Pezzo plus 5 independent sub-Pfaffians), so the "
                "displayed difference is 2; the defect itself is still 1 by the "
                "reference Hodge numbers (1,50) of the degree-14 image, i.e. the "
                "degree-5 hypersurface defect formula does not transfer verbatim "
                "to this complete intersection"
            )
        ok = dim3 == 29
    else:
        raise SystemExit(f"defect is available for c3-deg4, c3-deg3, c4-deg5")
    _emit(out, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cycontract",
        description="Exact verification pipelines for Calabi-Yau threefold contractions",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "tsv"), default="json")

    sp = sub.add_parser("table1", help="regenerate the collected-results table and verify it")
    fmt(sp)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("table3", help="chi bookkeeping for the double covers of P^3")
    fmt(sp)
    sp.set_defaults(func=cmd_table3)

    sp = sub.add_parser("hilbert", help="Hilbert series of a contraction image or a complete intersection")
    sp.add_argument("--construction", choices=("c1", "c2", "c2q", "c3", "c4"))
    sp.add_argument("--r", type=int, default=3, help="del Pezzo degree for c1")
    sp.add_argument("--i", type=int, default=1, help="branch degree for c2")
    sp.add_argument("--variant", type=int, default=4, help="variant selector for c2q/c3/c4")
    sp.add_argument("--weights", help="comma-separated ambient weights (raw series mode)")
    sp.add_argument("--degrees", help="comma-separated equation degrees")
    sp.add_argument("--terms", type=int, default=10, help="number of coefficients to print")
    fmt(sp)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("chern", help="Euler characteristic of a threefold complete intersection")
    sp.add_argument("--weights", help="comma-separated ambient weights")
    sp.add_argument("--degrees", help="comma-separated equation degrees")
    sp.add_argument("--ambient", help="'g25' or a Chern-data file for a general ambient")
    fmt(sp)
    sp.set_defaults(func=cmd_chern)

    sp = sub.add_parser("euler-pipeline", help="chi pipeline of one construction, stage by stage")
    sp.add_argument("--construction", required=True, choices=("c1", "c2", "c2q", "c3", "c4"))
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--variant", type=int, default=4)
    fmt(sp)
    sp.set_defaults(func=cmd_euler_pipeline)

    sp = sub.add_parser("picard", help="rank-2 intersection products and the image degree")
    sp.add_argument("--l3", type=int, required=True, help="self-triple-intersection of L")
    sp.add_argument("--lam", required=True, help="restriction L|_D = lam * K_D, e.g. -1 or -1/3")
    sp.add_argument("--r", type=int, required=True, help="del Pezzo degree K_D^2")
    sp.add_argument("--a", help="optional coefficient of L in a triple product")
    sp.add_argument("--b", help="optional coefficient of D in a triple product")
    fmt(sp)
    sp.set_defaults(func=cmd_picard)

    sp = sub.add_parser("nodes", help="verify the node count of a seeded nodal construction")
    sp.add_argument("--construction", required=True, choices=CONSTRUCTION_TAGS)
    sp.add_argument("--prime", type=int, default=None)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds to run")
    sp.add_argument("--budget", type=int, default=10_000_000, help="monomial-reduction budget")
    sp.add_argument("--timings", action="store_true", help="include runtime_ms in the report")
    fmt(sp)
    sp.set_defaults(func=cmd_nodes)

    sp = sub.add_parser("pfaffian-check", help="bordered-matrix expansion identities")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--prime", type=int, default=None)
    sp.add_argument("--matrix", help="file with lines 'i j : poly' (0-based upper triangle)")
    sp.add_argument("--size", type=int, default=5, help="matrix size when reading a file")
    sp.add_argument("--nvars", type=int, default=6, help="variable count when reading a file")
    fmt(sp)
    sp.set_defaults(func=cmd_pfaffian_check)

    sp = sub.add_parser("defect", help="defect of a nodal threefold from its node scheme")
    sp.add_argument("--construction", default="c3-deg4",
                    choices=("c3-deg4", "c3-deg3", "c4-deg5"))
    sp.add_argument("--prime", type=int, default=None)
    sp.add_argument("--seed", type=int, default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_defect)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "prime") and args.prime is None:
        args.prime = _default_prime()
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
