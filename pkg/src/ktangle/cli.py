"""Command line interface.

Commands: analyze, canonicalize, sweep, roof, audit.  Reports go to stdout
as JSON trees (analyze/canonicalize/roof) or CSV (sweep/audit); diagnostics
go to stderr.  Exit codes: 0 success, 1 input error, 2 numerical failure,
3 internal invariant violation (sum-rule residual above tolerance, reported
after the document is printed).

Reals are emitted with 12 significant digits and complex values as {re, im}
objects, so byte-identical output follows from identical inputs and seeds.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

import numpy as np

from . import __version__
from .canonical import canonicalize3, coherence_delta
from .config import DEFAULT_TOLERANCES, NumericalError, ValidationError
from .core import DensityOperator, PureState, haar_random_pure, outer, partial_trace, qubit_layout
from .ghzw import sweep_family
from .negativity import negativity_report
from .roof import Ensemble, RoofBudget, roof_negativity
from .statefile import ParseError, parse_state_file
from .tangle import one_tangle, three_tangle, wootters_tangle

_T = DEFAULT_TOLERANCES
_FOCUS_LETTERS = "ABCD"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to SystemExit(2); remap to input error
        raise _UsageError(message)


def _sig12(x) -> float:
    x = float(x)
    if x == 0.0 or not np.isfinite(x):
        return 0.0 if x == 0.0 else x
    return float(f"{x:.12g}")


def _cnum(z) -> dict:
    z = complex(z)
    return {"re": _sig12(z.real), "im": _sig12(z.imag)}


def _csv_num(x) -> str:
    return f"{float(x):.12g}"


def _tolerances_block() -> dict:
    return {
        "eps_herm": _T.eps_herm,
        "eps_norm": _T.eps_norm,
        "eps_eig": _T.eps_eig,
    }


def _negativity_block(rep) -> dict:
    return {
        "focus": _FOCUS_LETTERS[rep.focus],
        "n_global": _sig12(rep.n_global),
        "n_kway": {str(k): _sig12(v) for k, v in sorted(rep.n_kway.items())},
        "e_partial": {str(k): _sig12(v) for k, v in sorted(rep.e_partial.items())},
        "e0": _sig12(rep.e0),
        "pair_split": {
            _FOCUS_LETTERS[k]: _sig12(v) for k, v in sorted(rep.pair_split.items())
        },
        "sum_residual": _sig12(rep.sum_residual),
        "negative_eigenpairs": [
            {"eigenvalue": _sig12(lam), "vector": [_cnum(z) for z in vec]}
            for lam, vec in rep.negative_eigenpairs
        ],
        "violations": list(rep.violations),
    }


def _tangle_block(rep) -> dict:
    return {
        "tau_focus": _sig12(rep.tau_focus),
        "tau_pairs": {_FOCUS_LETTERS[k]: _sig12(v) for k, v in sorted(rep.tau_pairs.items())},
        "tau3": _sig12(rep.tau3),
    }


def _form_block(form) -> dict:
    return {
        "a": _sig12(form.a),
        "b": _sig12(form.b),
        "c": _sig12(form.c),
        "d": _sig12(form.d),
        "f": _sig12(form.f),
        "phi": _sig12(form.phi),
        "g": _sig12(form.g),
    }


def _unitary_block(us) -> list:
    return [
        {"target": u.target, "matrix": [[_cnum(z) for z in row] for row in u.matrix]}
        for u in us
    ]


def _canonical_block(result) -> dict:
    return {
        "forms": [_form_block(f) for f in result.forms],
        "unitaries": [_unitary_block(us) for us in result.unitaries],
        "residual": _sig12(result.residual),
    }


def _focus_index(letter: str, n: int) -> int:
    idx = _FOCUS_LETTERS.index(letter)
    if idx >= n:
        raise ValidationError(f"focus {letter} out of range for {n} subsystems")
    return idx


def _load(path: str):
    with open(path, "rb") as fh:
        raw = fh.read()
    obj = parse_state_file(raw.decode("utf-8"))
    digest = hashlib.sha256(raw).hexdigest()
    if isinstance(obj, PureState):
        kind = "pure"
    elif isinstance(obj, DensityOperator):
        kind = "density"
    else:
        kind = "ensemble"
    return obj, kind, digest


def _as_density(obj) -> DensityOperator:
    if isinstance(obj, PureState):
        return outer(obj)
    if isinstance(obj, Ensemble):
        return obj.density()
    return obj


def _emit_json(doc: dict):
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _cmd_analyze(args) -> int:
    obj, kind, digest = _load(args.file)
    rho = _as_density(obj)
    n = rho.layout.n_subsystems
    pure3 = isinstance(obj, PureState) and rho.layout.dims == (2, 2, 2)
    if args.canonical and not pure3:
        raise ValidationError("--canonical requires a three-qubit pure state")
    foci = [_focus_index(args.focus, n)] if args.focus else list(range(n))

    reports = []
    worst_residual = 0.0
    for p in foci:
        rep = negativity_report(rho, p)
        worst_residual = max(worst_residual, rep.sum_residual)
        entry = {"negativity": _negativity_block(rep)}
        if pure3:
            entry["tangle"] = _tangle_block(three_tangle(obj, p))
            entry["delta"] = _sig12(coherence_delta(obj))
        reports.append(entry)

    doc = {
        "tool": "ktangle",
        "version": __version__,
        "command": "analyze",
        "input": {"path": args.file, "sha256": digest, "kind": kind, "dims": list(rho.layout.dims)},
        "tolerances": _tolerances_block(),
        "seeds": {},
        "reports": reports,
    }
    if args.canonical:
        doc["canonical"] = _canonical_block(canonicalize3(obj))
    _emit_json(doc)
    if worst_residual > _T.eps_norm:
        print(
            f"sum-rule residual {worst_residual:.3e} exceeds {_T.eps_norm} "
            "(complex coherences outside the decomposition identity)",
            file=sys.stderr,
        )
        return 3
    return 0


def _cmd_canonicalize(args) -> int:
    obj, kind, digest = _load(args.file)
    if not isinstance(obj, PureState) or obj.layout.dims != (2, 2, 2):
        raise ValidationError("canonicalize requires a three-qubit pure state file")
    doc = {
        "tool": "ktangle",
        "version": __version__,
        "command": "canonicalize",
        "input": {"path": args.file, "sha256": digest, "kind": kind, "dims": [2, 2, 2]},
        "tolerances": _tolerances_block(),
        "seeds": {},
    }
    doc.update(_canonical_block(canonicalize3(obj)))
    _emit_json(doc)
    return 0


def _parse_grid(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValidationError(f"grid {text!r} must look like start:end:steps")
    try:
        start, end, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValidationError(f"grid {text!r} must be number:number:integer") from None
    return start, end, steps


def _cmd_sweep(args) -> int:
    start, end, steps = _parse_grid(args.q)
    sign = 1 if args.sign == "plus" else -1
    rows = sweep_family(sign, start, end, steps)
    print("q,n_global,e2,e3,tau3_formula,e3_times_ng,delta")
    for r in rows:
        print(
            ",".join(
                _csv_num(v)
                for v in (r.q, r.n_global, r.e2, r.e3, r.tau3_formula, r.e3_times_ng, r.delta)
            )
        )
    return 0


def _cmd_roof(args) -> int:
    obj, kind, digest = _load(args.file)
    rho = _as_density(obj)
    p = _focus_index(args.focus, rho.layout.n_subsystems)
    budget = RoofBudget(restarts=args.restarts, seed=args.seed)
    result = roof_negativity(rho, p, measure=args.measure, budget=budget)
    doc = {
        "tool": "ktangle",
        "version": __version__,
        "command": "roof",
        "input": {"path": args.file, "sha256": digest, "kind": kind, "dims": list(rho.layout.dims)},
        "tolerances": _tolerances_block(),
        "seeds": {"roof": args.seed},
        "focus": args.focus,
        "measure": args.measure,
        "result": {
            "value": _sig12(result.value),
            "bound": result.bound,
            "converged": bool(result.converged),
            "restarts_used": result.restarts_used,
            "certificate": {
                "members": [
                    {"p": _sig12(prob), "amplitudes": [_cnum(z) for z in st.amplitudes]}
                    for prob, st in result.certificate.members
                ]
            },
        },
    }
    _emit_json(doc)
    return 0


def _cmd_audit(args) -> int:
    n_states = args.random
    if n_states < 1:
        raise ValidationError("audit needs --random >= 1")
    layout = qubit_layout(args.qubits)
    rng = np.random.default_rng(args.seed)
    viol_e2 = viol_e3 = viol_ckw = 0
    for _ in range(n_states):
        psi = haar_random_pure(layout, rng)
        rho = outer(psi)
        rep = negativity_report(rho, 0)
        if abs(rep.e0) <= _T.eps_norm:
            if rep.e_partial[2] > rep.n_global + _T.eps_norm:
                viol_e2 += 1
            if rep.e_partial[3] > rep.n_global + _T.eps_norm:
                viol_e3 += 1
        if args.qubits == 3:
            tr = three_tangle(psi, 0)
            if tr.tau_focus + _T.eps_norm < sum(tr.tau_pairs.values()):
                viol_ckw += 1
        else:
            tau_f = one_tangle(psi, 0)
            pair_sum = sum(
                wootters_tangle(partial_trace(rho, [0, j])) for j in range(1, 4)
            )
            if tau_f + _T.eps_norm < pair_sum:
                viol_ckw += 1
    print("states,qubits,seed,viol_ng_e2,viol_ng_e3,viol_ckw")
    print(f"{n_states},{args.qubits},{args.seed},{viol_e2},{viol_e3},{viol_ckw}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="ktangle", description="Negativity and tangle toolkit")
    parser.add_argument("--version", action="version", version=f"ktangle {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full measure report for a state file")
    pa.add_argument("file")
    pa.add_argument("--focus", choices=("A", "B", "C"), default=None)
    pa.add_argument("--canonical", action="store_true")
    pa.set_defaults(handler=_cmd_analyze)

    pc = sub.add_parser("canonicalize", help="canonical form(s) of a 3-qubit pure state")
    pc.add_argument("file")
    pc.set_defaults(handler=_cmd_canonicalize)

    ps = sub.add_parser("sweep", help="parameter sweep over a state family (CSV)")
    ps.add_argument("--family", choices=("ghzw",), required=True)
    ps.add_argument("--sign", choices=("plus", "minus"), required=True)
    ps.add_argument("--q", required=True, metavar="START:END:STEPS")
    ps.set_defaults(handler=_cmd_sweep)

    pr = sub.add_parser("roof", help="convex-roof negativity of a mixed state")
    pr.add_argument("file")
    pr.add_argument("--focus", choices=("A", "B", "C"), required=True)
    pr.add_argument("--measure", choices=("global", "k2", "k3"), required=True)
    pr.add_argument("--restarts", type=int, default=32)
    pr.add_argument("--seed", type=int, default=0)
    pr.set_defaults(handler=_cmd_roof)

    pd = sub.add_parser("audit", help="Monte Carlo inequality audit (CSV summary)")
    pd.add_argument("--random", type=int, required=True, metavar="N")
    pd.add_argument("--seed", type=int, default=0)
    pd.add_argument("--qubits", type=int, choices=(3, 4), default=3)
    pd.set_defaults(handler=_cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
