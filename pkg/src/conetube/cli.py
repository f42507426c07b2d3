"""Command-line front end.

Subcommands: table, analyze, spectral, orbit, nondegen, flow, siegel.
Exit codes: 0 on success (for ``table``: all rows PASS), 2 on input or
parse errors, 3 on numerical failures. JSON output (``--json``) renders
floats with 12 significant digits and is byte-identical across runs for
identical inputs; wall-clock timing appears only in the human-readable
report for that reason.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import algebra as al
from . import domains as dm
from . import fields as fl
from . import serialize as sz
from . import spectral as sp
from . import tube as tb
from .errors import INPUT_ERRORS, NUMERICAL_ERRORS, DimensionMismatch

_HERM_FAMILIES = ("hermR", "hermC", "hermH")
_TABLE_RANK_CAP = 5
_TABLE_SPIN_CAP = 8


def _fmt(x: float) -> str:
    return sz.format_float(float(x))


def _fmt_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return _fmt(c.real)
    imag = f"{_fmt(abs(c.imag))}i"
    if c.real == 0:
        return imag if c.imag > 0 else f"-{imag}"
    sign = "+" if c.imag > 0 else "-"
    return f"{_fmt(c.real)} {sign} {imag}"


def _parse_complex_scalar(text: str) -> complex:
    token = text.strip().replace(" ", "").replace("i", "j")
    if token in ("j", "+j"):
        token = "1j"
    elif token == "-j":
        token = "-1j"
    elif token.endswith("+j"):
        token = token[:-2] + "+1j"
    elif token.endswith("-j"):
        token = token[:-2] + "-1j"
    try:
        return complex(token)
    except ValueError as exc:
        raise DimensionMismatch(f"cannot parse complex number {text!r}") from exc


def _parse_complex_list(text: str) -> np.ndarray:
    return np.asarray([_parse_complex_scalar(t) for t in text.split(",")])


def _load_json_arg(text: str):
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        return json.loads(stripped)
    with open(text, "r", encoding="utf-8") as fh:
        return json.loads(fh.read())


def _algebra_from_args(args) -> al.AlgebraDescriptor:
    if args.family is None:
        raise DimensionMismatch("--family is required for this command")
    return al.make_algebra(args.family, rank=args.rank, peirce_constant=args.n)


def _parse_s_matrix(text: str) -> np.ndarray:
    stripped = text.strip()
    if stripped.startswith("diag(") and stripped.endswith(")"):
        vals = [float(t) for t in stripped[5:-1].split(",")]
        return np.diag(vals)
    return sz.matrix_from_json(_load_json_arg(text)).astype(float)


def _table_rows(args):
    if args.family is None:
        return list(al.desk_algebras())
    if args.family == "spin":
        if args.n is not None:
            if args.n > _TABLE_SPIN_CAP:
                raise DimensionMismatch(
                    f"table covers spin n <= {_TABLE_SPIN_CAP}")
            return [al.make_algebra("spin", peirce_constant=args.n)]
        return [al.make_algebra("spin", peirce_constant=n)
                for n in range(1, _TABLE_SPIN_CAP + 1)]
    if args.family == "albert":
        return [al.make_algebra("albert")]
    if args.rank is not None:
        if args.rank > _TABLE_RANK_CAP:
            raise DimensionMismatch(
                f"table covers Hermitian ranks r <= {_TABLE_RANK_CAP}")
        return [al.make_algebra(args.family, rank=args.rank)]
    return [a for a in al.desk_algebras() if a.family == args.family]


def cmd_table(args) -> int:
    rows = []
    all_pass = True
    for algebra in _table_rows(args):
        got = fl.dim_table(algebra)
        want = fl.expected_dim_table(algebra)
        ok = got == want
        all_pass &= ok
        rows.append((algebra, got, want, ok))
    if args.json:
        payload = [{"descriptor": sz.descriptor_to_json(a), "computed": g,
                    "expected": w, "pass": ok} for a, g, w, ok in rows]
        print(sz.dumps_canonical(payload))
    else:
        header = (f"{'algebra':<22}{'der(V)':>8}{'sl(Omega)':>11}"
                  f"{'aut(H)':>8}{'sl(D)':>7}  status")
        print(header)
        print("-" * len(header))
        for a, g, w, ok in rows:
            label = f"{a.family} r={a.rank} n={a.peirce_constant}"
            status = "PASS" if ok else f"FAIL (expected {w})"
            print(f"{label:<22}{g['dim_der']:>8}{g['dim_sl_omega']:>11}"
                  f"{g['dim_aut_H']:>8}{g['dim_sl_D']:>7}  {status}")
    return 0 if all_pass else 3


def _analysis_report(algebra, p, q, tol):
    orbit = tb.make_orbit(algebra, p, q, tol=tol)
    dims = tb.cr_dimensions(algebra, p, q)
    kernel = tb.levi_kernel(orbit)
    nd = tb.nondegeneracy_order(orbit)
    minimal = tb.minimality_check(orbit)
    rho = orbit.rho
    notices = []
    if nd.note:
        notices.append(nd.note)
    if 0 < rho < algebra.rank:
        germ = tb.aut_germ_dimension(algebra, p, q)
        aut1 = len(tb.aut1_basis(orbit))
    else:
        germ = None
        aut1 = None
        kind = "totally real" if rho == 0 else "open"
        notices.append(f"germ-automorphism dimension undefined for the "
                       f"{kind} orbit (rank {rho})")
    report = {
        "descriptor": sz.descriptor_to_json(algebra),
        "signature": {"p": p, "q": q},
        "rank": rho,
        "corank": orbit.rho_prime,
        "crdim": dims["crdim"],
        "crcodim": dims["crcodim"],
        "levi_kernel_dim": kernel.dim,
        "nondegeneracy_order": (nd.order if nd.order is not None
                                else "NotFinitelyNondegenerate"),
        "chain_dims": nd.chain_dims,
        "minimal": minimal,
        "aut_germ_dim": germ,
        "aut1_dim": aut1,
        "dim_table": fl.dim_table(algebra),
    }
    if notices:
        report["notices"] = notices
    return report


def cmd_analyze(args) -> int:
    algebra = _algebra_from_args(args)
    started = time.perf_counter()
    report = _analysis_report(algebra, args.p, args.q, args.tol)
    elapsed_ms = 1000.0 * (time.perf_counter() - started)
    if args.json:
        print(sz.dumps_canonical(report))
        return 0
    print(f"algebra         {algebra!r}")
    print(f"signature       (p, q) = ({args.p}, {args.q})   "
          f"rank {report['rank']}, corank {report['corank']}")
    print(f"CR dimensions   crdim {report['crdim']}, "
          f"crcodim {report['crcodim']}")
    print(f"Levi kernel     dim {report['levi_kernel_dim']}")
    print(f"nondegeneracy   order {report['nondegeneracy_order']}, "
          f"chain {report['chain_dims']}")
    print(f"minimal         {'yes' if report['minimal'] else 'no'}")
    if report["aut_germ_dim"] is not None:
        print(f"aut germ dim    {report['aut_germ_dim']}")
        print(f"aut1 dim        {report['aut1_dim']}")
    for note in report.get("notices", ()):
        print(f"note            {note}")
    print(f"elapsed         {elapsed_ms:.1f} ms")
    return 0


def cmd_spectral(args) -> int:
    algebra = _algebra_from_args(args)
    x = sz.element_from_json(algebra, _load_json_arg(args.element))
    x = al.as_real_element(algebra, x)
    data = sp.spectral_decompose(algebra, x, tol=args.tol)
    joint = sp.joint_peirce(algebra, data.frame) if args.projections else None
    if args.json:
        print(sz.dumps_canonical(sz.spectral_to_json(algebra, data, joint)))
        return 0
    print(f"algebra      {algebra!r}")
    print("eigenvalues  " + ", ".join(_fmt(v) for v in data.eigenvalues))
    for i, row in enumerate(data.frame):
        print(f"e_{i + 1}          [" + ", ".join(_fmt(v) for v in row) + "]")
    if joint is not None:
        dims = ", ".join(f"V_{j + 1}{k + 1}:{d}"
                         for (j, k), d in sorted(joint.dims.items()))
        print(f"block dims   {dims}")
    return 0


def cmd_orbit(args) -> int:
    algebra = _algebra_from_args(args)
    x = sz.element_from_json(algebra, _load_json_arg(args.element))
    x = al.as_real_element(algebra, x)
    sig = sp.orbit_signature(algebra, x, tol=args.tol)
    minors, norm = sp.generic_minors(algebra, x)
    support = sp.support_idempotent(algebra, x, tol=args.tol)
    report = {
        "descriptor": sz.descriptor_to_json(algebra),
        "p": sig.p,
        "q": sig.q,
        "minors": [float(v) for v in minors],
        "generic_norm": float(norm),
        "support": sz.element_to_json(support),
    }
    if args.json:
        print(sz.dumps_canonical(report))
        return 0
    print(f"algebra       {algebra!r}")
    print(f"signature     (p, q) = ({sig.p}, {sig.q})")
    print("minors        " + ", ".join(_fmt(v) for v in minors))
    print(f"generic norm  {_fmt(norm)}")
    return 0


def cmd_nondegen(args) -> int:
    algebra = _algebra_from_args(args)
    orbit = tb.make_orbit(algebra, args.p, args.q, tol=args.tol)
    nd = tb.nondegeneracy_order(orbit)
    minimal = tb.minimality_check(orbit)
    report = {
        "descriptor": sz.descriptor_to_json(algebra),
        "signature": {"p": args.p, "q": args.q},
        "order": (nd.order if nd.order is not None
                  else "NotFinitelyNondegenerate"),
        "chain_dims": nd.chain_dims,
        "finitely_nondegenerate": nd.finitely_nondegenerate,
        "minimal": minimal,
    }
    if nd.note:
        report["note"] = nd.note
    if args.json:
        print(sz.dumps_canonical(report))
        return 0
    print(f"algebra   {algebra!r}")
    print(f"order     {report['order']}")
    print(f"chain     {nd.chain_dims}")
    print(f"minimal   {'yes' if minimal else 'no'}")
    if nd.note:
        print(f"note      {nd.note}")
    return 0


def cmd_flow(args) -> int:
    v = np.asarray([float(t) for t in args.v.split(",")])
    c = _parse_complex_list(args.c)
    if v.shape != c.shape:
        raise DimensionMismatch(
            f"--v has {v.size} entries but --c has {c.size}")
    family = args.family or "hermR"
    rank = args.rank if args.rank is not None else v.size
    algebra = al.make_algebra(family, rank=rank, peirce_constant=args.n)
    if rank != v.size:
        raise DimensionMismatch(
            f"rank {rank} does not match {v.size} flow coefficients")
    frame = al.standard_frame(algebra)
    coeffs = fl.diagonal_flow_coefficients(v, c, args.t)
    element = fl.diagonal_flow(algebra, frame, v, c, args.t)
    report = {
        "descriptor": sz.descriptor_to_json(algebra),
        "t": args.t,
        "coefficients": [sz.complex_pair(g) for g in coeffs],
        "element": sz.element_to_json(element),
    }
    if args.json:
        print(sz.dumps_canonical(report))
        return 0
    for j, g in enumerate(coeffs):
        print(f"g_{j + 1}({_fmt(args.t)}) = {_fmt_complex(g)}")
    return 0


def cmd_siegel(args) -> int:
    if args.isotropy:
        if args.s is None:
            raise DimensionMismatch("--isotropy requires --s")
        s = _parse_s_matrix(args.s)
        dim = dm.isotropy_dimension(s, tol=args.tol)
        r = s.shape[0]
        report = {
            "s": [sz.element_to_json(row) for row in s],
            "isotropy_dimension": dim,
            "sp_dim": r * (2 * r + 1),
        }
        if args.json:
            print(sz.dumps_canonical(report))
        else:
            print(f"isotropy dimension  {dim}")
            print(f"dim sp({r},R)        {r * (2 * r + 1)}")
        return 0
    if args.matrix is None or args.z is None:
        raise DimensionMismatch(
            "siegel needs either --isotropy --s or --matrix with --z")
    A = sz.matrix_from_json(_load_json_arg(args.matrix)).astype(float)
    z = sz.matrix_from_json(_load_json_arg(args.z), allow_complex=True)
    w = dm.siegel_action(A, z)
    report = {"result": [[sz.complex_pair(v) for v in row] for row in w]}
    if args.json:
        print(sz.dumps_canonical(report))
    else:
        for row in w:
            print("  ".join(_fmt_complex(v) for v in row))
    return 0


def _add_common(sub, family=True, rank=True, signature=False, element=False):
    if family:
        sub.add_argument("--family", choices=list(al.FAMILIES))
        if rank:
            sub.add_argument("--rank", type=int)
            sub.add_argument("--n", type=int)
    if signature:
        sub.add_argument("--p", type=int, required=True)
        sub.add_argument("--q", type=int, required=True)
    if element:
        sub.add_argument("--element", required=True,
                         help="element coordinates: inline JSON or a file path")
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for sampled checks (reports are deterministic)")
    sub.add_argument("--tol", type=float, default=1e-8)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conetube",
        description="Jordan-algebraic CR invariants of tube manifolds "
                    "over symmetric cone orbits")
    subs = parser.add_subparsers(dest="command", required=True)

    t = subs.add_parser("table", help="dimension table vs closed forms")
    _add_common(t)
    t.set_defaults(func=cmd_table)

    a = subs.add_parser("analyze", help="full CR invariant report of an orbit")
    _add_common(a, signature=True)
    a.set_defaults(func=cmd_analyze)

    s = subs.add_parser("spectral", help="spectral decomposition of an element")
    _add_common(s, element=True)
    s.add_argument("--projections", action="store_true",
                   help="include joint Peirce projections")
    s.set_defaults(func=cmd_spectral)

    o = subs.add_parser("orbit", help="orbit signature and generic minors")
    _add_common(o, element=True)
    o.set_defaults(func=cmd_orbit)

    nd = subs.add_parser("nondegen", help="nondegeneracy order and minimality")
    _add_common(nd, signature=True)
    nd.set_defaults(func=cmd_nondegen)

    f = subs.add_parser("flow", help="closed-form diagonal flow of iP(z)w")
    _add_common(f)
    f.add_argument("--v", required=True, help="rate coefficients, e.g. '1,0.5'")
    f.add_argument("--c", required=True,
                   help="start coefficients, e.g. 'i,1+2i'")
    f.add_argument("--t", type=float, default=1.0)
    f.set_defaults(func=cmd_flow)

    g = subs.add_parser("siegel", help="Siegel half-space action / isotropy")
    g.add_argument("--isotropy", action="store_true")
    g.add_argument("--s", help="cone boundary point, 'diag(…)' or JSON matrix")
    g.add_argument("--matrix", help="symplectic matrix, inline JSON or file")
    g.add_argument("--z", help="Siegel point, JSON matrix of [re,im] pairs")
    g.add_argument("--json", action="store_true")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--tol", type=float, default=1e-8)
    g.set_defaults(func=cmd_siegel)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"input error: invalid JSON at line {exc.lineno} "
              f"column {exc.colno}: {exc.msg}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
