"""Command-line front end: file ingestion, JSON reports, exit codes.

Exit status: 0 on success, 2 on a mathematical refusal (a precondition such
as girth or genericity fails, with the reason in the report), 1 on input
errors.  A Disagreement between paired computation paths is a bug and is
allowed to crash loudly.

All reports are deterministic JSON on stdout; scalars are serialized exactly
as strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import inf

from .arrangement import (
    Arrangement,
    Character,
    GirthTooSmall,
    InvalidCharacter,
    NotEssential,
    NotGenericPosition,
)
from .chain import FreeChainComplex, decide_isomorphic
from .fox import GroupPresentation, NotMeridianMarked, RelatorNotKilled, alexander_complex
from .koszul import (
    UnitAssignment,
    complete_homology_generic_position,
    generic_range_homology,
    pi_p_presentation_boolean,
)
from .milnor import MilnorSpectrum, obstruction_report, spectrum_from_presentation
from .rings import (
    CyclotomicField,
    LaurentRing,
    MixedRings,
    QQ,
    UnsupportedRing,
    ring_from_string,
)
from .tower import (
    DegreeUnavailable,
    TowerCharacter,
    TowerInvalid,
    TowerSpec,
    build_tower_complex,
    check_tower,
    pi_p_presentation_fibertype,
    rank_formula_general,
    rank_formula_nonresonant,
    tor_groups,
)

SCHEMA_VERSION = 1

REFUSALS = (
    GirthTooSmall,
    NotGenericPosition,
    NotEssential,
    DegreeUnavailable,
    UnsupportedRing,
)

INPUT_ERRORS = (
    InvalidCharacter,
    NotMeridianMarked,
    RelatorNotKilled,
    TowerInvalid,
    MixedRings,
    ValueError,
    KeyError,
    OSError,
    json.JSONDecodeError,
)


def _load(path):
    with open(path) as fh:
        return fh.read()


def _weights(text):
    return [int(w) for w in str(text).replace(" ", "").split(",") if w != ""]


def _character(arr, text):
    w = _weights(text)
    if len(w) == arr.n:  # tail given: gamma_0 determined by the zero sum
        return Character.from_tail(w)
    return Character(w)


def _homology_json(entries, ring):
    return {str(q): h.describe(ring) for q, h in sorted(entries.items())}


def _units_from_weights(ring, weights):
    if isinstance(ring, LaurentRing):
        return [ring.t(w) for w in weights]
    if isinstance(ring, CyclotomicField):
        return [ring.zeta(w) for w in weights]
    if ring.is_field:
        if any(weights):
            raise UnsupportedRing(
                f"{ring.name} has no distinguished unit: only zero weights make sense"
            )
        return [ring.one for _ in weights]
    raise UnsupportedRing(f"cannot interpret weights in {ring.name}")


# -- subcommand bodies ------------------------------------------------------


def cmd_arr(args):
    arr = Arrangement.from_json(_load(args.arrangement))
    if args.what == "lattice":
        flats = arr.intersection_lattice()
        return {
            "n_plus_1": arr.n + 1,
            "r": arr.r,
            "flats": [
                {"hyperplanes": sorted(f.indices), "codim": f.codim} for f in flats
            ],
        }
    if args.what == "girth":
        c = arr.girth()
        return {"girth": "inf" if c == inf else c}
    if args.what == "dense":
        return {
            "dense_edges": [
                {"hyperplanes": sorted(f.indices), "codim": f.codim}
                for f in arr.dense_edges()
            ]
        }
    if args.what == "betti":
        b = arr.betti_data()
        return {"betti": list(b.betti), "euler": b.euler}
    if args.what == "nonres":
        ch = _character(arr, args.weights)
        ok, violators = arr.is_nonresonant(ch)
        return {
            "weights": list(ch.weights),
            "nonresonant": ok,
            "violators": [sorted(f.indices) for f in violators],
        }
    raise ValueError(f"unknown arr subcommand {args.what}")


def cmd_homology_koszul(args):
    arr = Arrangement.from_json(_load(args.arrangement))
    ch = _character(arr, args.weights)
    ring = ring_from_string(args.ring)
    units = _units_from_weights(ring, [ch[i] for i in range(1, arr.n + 1)])
    u = UnitAssignment(ring, units)
    if args.full:
        res = complete_homology_generic_position(arr, u)
        return {
            "mode": "complete",
            "ring": ring.name,
            "chi": res.chi,
            "kappa": res.kappa,
            "top_degree": res.top_degree,
            "top_rank_formula": res.top_rank_formula,
            "top_rank_direct": res.top_rank_direct,
            "homology": _homology_json(res.entries, ring),
            "higher_degrees": "zero",
        }
    res = generic_range_homology(arr, u)
    return {
        "mode": "generic-range",
        "ring": ring.name,
        "girth": "inf" if res.girth == inf else res.girth,
        "valid_degrees": f"q < {res.limit}",
        "note": res.note,
        "homology": _homology_json(res.entries, ring),
    }


def cmd_homology_fox(args):
    pres = GroupPresentation.from_json(_load(args.presentation))
    ring = ring_from_string(args.ring)
    units = _units_from_weights(ring, _weights(args.weights))
    cx = alexander_complex(pres, units, ring)
    return {
        "ring": ring.name,
        "ranks": list(cx.ranks),
        "homology": _homology_json({0: cx.homology(0), 1: cx.homology(1)}, ring),
    }


def cmd_homology_tower(args):
    tw = TowerSpec.from_json(_load(args.tower))
    ch = _tower_character(tw, args)
    report = check_tower(tw)
    if not report["valid"]:
        raise TowerInvalid(json.dumps(report))
    cx = build_tower_complex(tw, ch)
    max_q = cx.top if args.max_q is None else min(args.max_q, cx.top)
    tor = {q: cx.homology(q) for q in range(max_q + 1)}
    return {
        "exponents": tw.exponents[::-1],
        "poincare_coefficients": tw.poincare_coefficients(),
        "ranks": list(cx.ranks),
        "tor": _homology_json(tor, cx.ring),
    }


def _tower_character(tw, args):
    data = json.loads(_load(args.tower))
    named = dict(data.get("weights") or {})
    if args.weights:
        for item in str(args.weights).split(","):
            name, _, val = item.partition("=")
            named[name.strip()] = int(val)
    return TowerCharacter.from_names(tw, named)


def cmd_milnor_spectrum(args):
    pres = GroupPresentation.from_json(_load(args.presentation))
    spec = spectrum_from_presentation(pres)
    return obstruction_report(spec)


def cmd_milnor_obstruct(args):
    if args.spectrum:
        values = _weights(args.spectrum)
        n = args.n if args.n is not None else len(values) - 1
        spec = MilnorSpectrum(n, values)
    else:
        pres = GroupPresentation.from_json(_load(args.presentation))
        spec = spectrum_from_presentation(pres)
    return obstruction_report(spec)


def cmd_pi_rank(args):
    if args.tower:
        tw = TowerSpec.from_json(_load(args.tower))
        ch = _tower_character(tw, args)
        if args.p is None:
            raise ValueError("--p is required with --tower")
        ps = pi_p_presentation_fibertype(tw, args.p, ch)
        return {
            "path": "fibertype",
            "p": args.p,
            "rank": ps.cokernel.free_rank,
            "invariant_factors": [ps.ring.format(d) for d in ps.cokernel.torsion],
            "matrix_shape": [ps.matrix.nrows, ps.matrix.ncols],
        }
    arr = Arrangement.from_json(_load(args.arrangement))
    ch = _character(arr, args.weights)
    ps = pi_p_presentation_boolean(arr, ch)
    p = arr.r - 1
    # independent formula path for the same rank: needs Tor_q for q = 0..r
    u = UnitAssignment.from_character(ch)
    res = complete_homology_generic_position(arr, u)
    from .koszul import build_koszul

    full = build_koszul(u)
    tor_full = [full.homology(q).free_rank if q <= full.top else 0 for q in range(arr.r + 1)]
    formula = rank_formula_general(res.chi, arr.r, tor_full)
    report = {
        "path": "boolean",
        "p": p,
        "rank": ps.cokernel.free_rank,
        "invariant_factors": [ps.ring.format(d) for d in ps.cokernel.torsion],
        "matrix_shape": [ps.matrix.nrows, ps.matrix.ncols],
        "rank_formula": formula,
    }
    if formula != ps.cokernel.free_rank:
        from .koszul import Disagreement

        raise Disagreement(
            f"cokernel rank {ps.cokernel.free_rank} != formula value {formula}"
        )
    nonres, _ = arr.is_nonresonant(ch)
    report["nonresonant"] = nonres
    if nonres:
        from math import comb

        rc = rank_formula_nonresonant(
            res.chi, arr.r, arr.n + 1, b_r_pi=comb(arr.n, arr.r)
        )
        report["nonresonant_formula"] = rc["rank"]
        if rc["rank"] != ps.cokernel.free_rank:
            from .koszul import Disagreement

            raise Disagreement(
                f"nonresonant formula {rc['rank']} != rank {ps.cokernel.free_rank}"
            )
    return report


def cmd_chain_iso(args):
    c1 = FreeChainComplex.from_json(_load(args.a))
    c2 = FreeChainComplex.from_json(_load(args.b))
    verdict, report = decide_isomorphic(c1, c2)
    report["isomorphic"] = verdict
    return report


def cmd_crosscheck(args):
    arr = Arrangement.from_json(_load(args.arrangement))
    ch = _character(arr, args.weights)
    u = UnitAssignment.from_character(ch)
    checks = []
    res = complete_homology_generic_position(arr, u)  # asserts its own two paths
    checks.append(
        {
            "name": "top-degree homology: kappa formula vs kernel rank",
            "values": [res.top_rank_formula, res.top_rank_direct],
            "agree": True,
        }
    )
    ps = pi_p_presentation_boolean(arr, ch)
    from .koszul import build_koszul

    full = build_koszul(u)
    tor_full = [full.homology(q).free_rank for q in range(arr.r + 1)]
    formula = rank_formula_general(res.chi, arr.r, tor_full)
    agree = formula == ps.cokernel.free_rank
    checks.append(
        {
            "name": "pi_p rank: cokernel vs Euler-characteristic formula",
            "values": [ps.cokernel.free_rank, formula],
            "agree": agree,
        }
    )
    nonres, _ = arr.is_nonresonant(ch)
    if nonres:
        from math import comb

        rc = rank_formula_nonresonant(
            res.chi, arr.r, arr.n + 1, b_r_pi=comb(arr.n, arr.r)
        )
        checks.append(
            {
                "name": "pi_p rank: nonresonant combinatorial value",
                "values": [ps.cokernel.free_rank, rc["rank"]],
                "agree": rc["rank"] == ps.cokernel.free_rank,
            }
        )
    if args.presentation:
        pres = GroupPresentation.from_json(_load(args.presentation))
        ring = u.ring
        units = [ring.t(ch[i]) for i in range(1, arr.n + 1)]
        ac = alexander_complex(pres, units, ring)
        rng = generic_range_homology(arr, u)
        for q in (0, 1):
            if q in rng.entries:
                ha, hb = ac.homology(q), rng.entries[q]
                checks.append(
                    {
                        "name": f"H_{q}: presentation complex vs Z^n complex",
                        "values": [ha.describe(ring), hb.describe(ring)],
                        "agree": ha == hb,
                    }
                )
    if not all(c["agree"] for c in checks):
        from .koszul import Disagreement

        raise Disagreement(json.dumps(checks))
    return {"checks": checks, "all_agree": True}


# -- parser -----------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="arrtwist",
        description="Exact twisted homology of hyperplane arrangement complements",
    )
    ap.add_argument(
        "--version",
        action="version",
        version=json.dumps(
            {
                "arrtwist": "0.1.0",
                "schemas": {
                    "arrangement": SCHEMA_VERSION,
                    "complex": SCHEMA_VERSION,
                    "presentation": SCHEMA_VERSION,
                    "tower": SCHEMA_VERSION,
                },
            }
        ),
    )
    ap.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for property-test harness randomization; computation "
        "results never depend on it",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_arr = sub.add_parser("arr", help="arrangement combinatorics")
    p_arr.add_argument("what", choices=["lattice", "girth", "dense", "betti", "nonres"])
    p_arr.add_argument("--arrangement", required=True)
    p_arr.add_argument("--weights", help="gamma_0..gamma_n (or gamma_1..gamma_n)")
    p_arr.set_defaults(fn=cmd_arr)

    p_h = sub.add_parser("homology", help="twisted homology computations")
    hsub = p_h.add_subparsers(dest="flavor", required=True)
    p_hk = hsub.add_parser("koszul")
    p_hk.add_argument("--arrangement", required=True)
    p_hk.add_argument("--weights", required=True)
    p_hk.add_argument("--ring", default="laurent")
    p_hk.add_argument("--full", action="store_true")
    p_hk.set_defaults(fn=cmd_homology_koszul)
    p_hf = hsub.add_parser("fox")
    p_hf.add_argument("--presentation", required=True)
    p_hf.add_argument("--weights", required=True)
    p_hf.add_argument("--ring", default="laurent")
    p_hf.set_defaults(fn=cmd_homology_fox)
    p_ht = hsub.add_parser("tower")
    p_ht.add_argument("--tower", required=True)
    p_ht.add_argument("--weights", help="name=int,name=int,...")
    p_ht.add_argument("--max-q", type=int, dest="max_q")
    p_ht.set_defaults(fn=cmd_homology_tower)

    p_m = sub.add_parser("milnor", help="Milnor fiber spectra and obstruction")
    msub = p_m.add_subparsers(dest="flavor", required=True)
    p_ms = msub.add_parser("spectrum")
    p_ms.add_argument("--presentation", required=True)
    p_ms.set_defaults(fn=cmd_milnor_spectrum)
    p_mo = msub.add_parser("obstruct")
    p_mo.add_argument("--n", type=int)
    p_mo.add_argument("--spectrum")
    p_mo.add_argument("--presentation")
    p_mo.set_defaults(fn=cmd_milnor_obstruct)

    p_pi = sub.add_parser("pi", help="higher homotopy group presentations")
    pisub = p_pi.add_subparsers(dest="flavor", required=True)
    p_pr = pisub.add_parser("rank")
    p_pr.add_argument("--arrangement")
    p_pr.add_argument("--tower")
    p_pr.add_argument("--weights")
    p_pr.add_argument("--p", type=int)
    p_pr.set_defaults(fn=cmd_pi_rank)

    p_c = sub.add_parser("chain", help="chain complex utilities")
    csub = p_c.add_subparsers(dest="flavor", required=True)
    p_ci = csub.add_parser("iso")
    p_ci.add_argument("--a", required=True)
    p_ci.add_argument("--b", required=True)
    p_ci.set_defaults(fn=cmd_chain_iso)

    p_x = sub.add_parser("crosscheck", help="run paired computation paths")
    p_x.add_argument("--arrangement", required=True)
    p_x.add_argument("--weights", required=True)
    p_x.add_argument("--presentation")
    p_x.set_defaults(fn=cmd_crosscheck)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        report = args.fn(args)
    except REFUSALS as e:
        print(json.dumps({"error": type(e).__name__, "reason": str(e)}, indent=2))
        return 2
    except INPUT_ERRORS as e:
        print(json.dumps({"error": type(e).__name__, "reason": str(e)}, indent=2))
        return 1
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
