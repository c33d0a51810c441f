"""Command-line front end.

Every command produces deterministic output (sorted keys, canonical
vertex ordering) and exits 0 exactly when all requested checks pass.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction

from . import central as cen
from . import chains
from . import combinatorics as comb
from . import repbuilder as rb
from . import spectrum as spec
from .scalars import (
    SYMBOLIC,
    GenericSpecialization,
    NonGenericPoint,
    check_generic,
    format_scalar,
)


def _build_parser():
    p = argparse.ArgumentParser(
        prog="bmwtower",
        description="Exact representation tower engine: oscillating-tableau "
        "combinatorics, seminormal matrices, relation verification, central "
        "scalars, and spin-chain spectra.",
    )
    p.add_argument(
        "command",
        choices=["graph", "dims", "spectra", "rep", "verify", "central", "hamiltonian"],
    )
    p.add_argument("--n", type=int, required=True, help="tower level")
    p.add_argument(
        "--lambda", dest="lam", default=None,
        help='partition as comma-separated rows; "" = empty diagram',
    )
    p.add_argument("--mode", choices=["symbolic", "rational"], default="symbolic")
    p.add_argument("--q", default="2", help="rational value of q (rational mode)")
    p.add_argument("--nu", default="3", help="rational value of nu (rational mode)")
    p.add_argument("--a", choices=list(chains.A_CHOICES), default="q",
                   help="boundary eigenvalue choice for the chain")
    p.add_argument("--xi-re", type=float, default=None)
    p.add_argument("--xi-im", type=float, default=None)
    p.add_argument("--format", dest="fmt", choices=["dot", "json", "csv"], default=None)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--flip-content", action="store_true",
                   help="negate the box-content convention")
    return p


def _field(args):
    if args.mode == "rational":
        s = GenericSpecialization(Fraction(args.q), Fraction(args.nu))
        if not check_generic(s, args.n):
            raise NonGenericPoint(
                f"(q={s.q_value}, nu={s.nu_value}) is not generic at level {args.n}"
            )
        return s
    return SYMBOLIC


def _formatter(field):
    if field.name == "rational":
        return str
    return format_scalar


def _parse_lam(args):
    if args.lam is None:
        raise SystemExit("this command needs --lambda")
    return comb.parse_partition(args.lam)


def run(args):
    """Returns (exit_status, output_text)."""
    flip = args.flip_content

    if args.command == "graph":
        g = comb.build_graph(args.n)
        return 0, comb.graph_dot(g, flip=flip)

    if args.command == "dims":
        table = comb.dims_table(args.n)
        ok = all(row["identity_holds"] for row in table)
        return (0 if ok else 1), comb.dims_json(args.n)

    if args.command == "spectra":
        report = spec.bijection_report(args.n, flip=flip)
        ok = report["sets_equal"] and report["roundtrip_ok"]
        return (0 if ok else 1), spec.spectra_json(args.n, flip=flip)

    field = _field(args)

    if args.command == "rep":
        lam = _parse_lam(args)
        rep = rb.build_rep(lam, args.n, field=field, flip=flip)
        return 0, rb.rep_to_json(rep)

    if args.command == "verify":
        out = []
        status = 0
        for lam in rb.level_vertices(args.n):
            try:
                rep = rb.build_rep(lam, args.n, field=field, flip=flip)
                report = rb.verify_relations(rep)
            except rb.VerificationFailed as exc:
                report = exc.report
            entry = {
                "lambda": list(lam),
                "dim": comb.dim(lam, args.n),
                "ok": report.ok,
                "failures": [
                    {"name": c.name, "index": c.index, "detail": c.detail}
                    for c in report.failures()
                ],
            }
            if not report.ok:
                status = 1
            out.append(entry)
        return status, json.dumps(
            {"n": args.n, "mode": args.mode, "irreps": out},
            indent=2, sort_keys=True,
        )

    if args.command == "central":
        reports = []
        for lam in rb.level_vertices(args.n):
            rep = rb.build_rep(lam, args.n, field=field, flip=flip)
            reports.append(cen.central_report(rep))
        return 0, cen.central_json(reports, _formatter(field))

    if args.command == "hamiltonian":
        lam = _parse_lam(args)
        s = GenericSpecialization(Fraction(args.q), Fraction(args.nu))
        if not check_generic(s, args.n):
            raise NonGenericPoint(
                f"(q={s.q_value}, nu={s.nu_value}) is not generic at level {args.n}"
            )
        rep = rb.build_rep(lam, args.n, field=s, flip=flip)
        if args.xi_re is None and args.xi_im is None:
            params = chains.ChainParams.standard(args.a, s.q_value, s.nu_value)
        else:
            xi = complex(args.xi_re or 0.0, args.xi_im or 0.0)
            params = chains.ChainParams(args.a, xi)
        h = chains.hamiltonian(rep, params)
        buf = io.StringIO()
        chains.spectrum_csv(h, s, buf)
        return 0, buf.getvalue()

    raise SystemExit(f"unknown command {args.command}")


def main(argv=None):
    args = _build_parser().parse_args(argv)
    status, text = run(args)
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
