"""Command-line interface and the state-file / CSV formats.

State files are JSON: {"kind": "pure", "amplitudes": [[re, im] * 8]}
ordered by basis index 4i + 2j + k, or {"kind": "mixed", "matrix":
8x8 nested [re, im] pairs, row-major}.  Exit codes: 0 success, 2
invalid input, 3 ambiguous-near-threshold (report still printed).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .classify import classify_mixed, classify_pure
from .errors import (
    AmbiguousNearThresholdError,
    ParamOutOfDomainError,
    StateFileError,
    TriqentError,
)
from .families import SWEEPABLE, default_grid, sweep
from .gsd import classify_gsd_pattern, gsd
from .measures import MeasureSet, measure_set
from .states import DensityMatrix, PureState, sample_haar_pure

MEASURE_FIELDS = (
    "n_a_bc", "n_b_ac", "n_c_ab", "n_abc",
    "q_mult", "eta_mult", "three_tangle",
    "n_red_bc", "n_red_ac", "n_red_ab",
    "c_red_bc", "c_red_ac", "c_red_ab",
    "s_a", "s_b", "s_c",
)
ORACLE_FIELDS = ("n_a_bc", "n_b_ac", "n_c_ab", "n_abc", "n_red_bc", "n_red_ac", "n_red_ab")
CSV_HEADER = (
    ["family", "param"]
    + list(MEASURE_FIELDS)
    + ["verdict"]
    + [f"oracle_{f}" for f in ORACLE_FIELDS]
    + [f"dev_{f}" for f in ORACLE_FIELDS]
)


def _fmt(value) -> str:
    if value is None:
        return ""
    return format(float(value), ".12g")


def _pairs_to_complex(entries, what: str) -> list[complex]:
    out = []
    for e in entries:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise StateFileError(f"{what} entries must be [real, imaginary] pairs")
        try:
            out.append(complex(float(e[0]), float(e[1])))
        except (TypeError, ValueError) as exc:
            raise StateFileError(f"non-numeric value in {what}: {exc}") from exc
    return out


def load_state_file(path: str) -> PureState | DensityMatrix:
    """Parse a JSON state file into a validated state."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or data.get("kind") not in ("pure", "mixed"):
        raise StateFileError('state file needs "kind": "pure" or "mixed"')
    try:
        if data["kind"] == "pure":
            amps = data.get("amplitudes")
            if not isinstance(amps, list) or len(amps) != 8:
                raise StateFileError("pure state needs 8 amplitude pairs")
            return PureState(np.array(_pairs_to_complex(amps, "amplitudes")))
        rows = data.get("matrix")
        if (
            not isinstance(rows, list)
            or len(rows) != 8
            or any(not isinstance(r, list) or len(r) != 8 for r in rows)
        ):
            raise StateFileError("mixed state needs an 8x8 matrix of pairs")
        m = np.array([_pairs_to_complex(r, "matrix") for r in rows])
        return DensityMatrix(m)
    except TriqentError as exc:
        if isinstance(exc, StateFileError):
            raise
        raise StateFileError(str(exc)) from exc


def save_state_file(path: str, state: PureState | DensityMatrix) -> None:
    """Write a state as JSON; floats round-trip exactly."""
    if isinstance(state, PureState):
        data = {"kind": "pure", "amplitudes": [[z.real, z.imag] for z in state.amplitudes]}
    else:
        data = {
            "kind": "mixed",
            "matrix": [[[z.real, z.imag] for z in row] for row in state.matrix],
        }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(data, fh)
        fh.write("\n")


def _print_measures(ms: MeasureSet, out) -> None:
    for name in MEASURE_FIELDS:
        value = getattr(ms, name)
        if value is not None:
            print(f"  {name:13s} {_fmt(value)}", file=out)


def _cmd_classify(args) -> int:
    state = load_state_file(args.path)
    if isinstance(state, PureState):
        res = classify_pure(state, zero_tol=args.tol)
        if args.json:
            print(json.dumps({
                "kind": "pure",
                "subtype": res.label.code,
                "description": res.label.describe(),
                "separable_qubit": res.label.separable_qubit,
                "entangled_pairs": list(res.label.entangled_pairs),
                "ambiguous": res.ambiguous,
                "measures": res.measures.as_dict(),
                "margins": res.margins,
            }))
        else:
            print(f"subtype: {res.label.code} ({res.label.describe()})")
            if res.label.separable_qubit:
                print(f"separable qubit: {res.label.separable_qubit}")
            if res.label.entangled_pairs:
                print(f"entangled reduced pairs: {', '.join(res.label.entangled_pairs)}")
            if res.ambiguous:
                print("warning: a decision margin is within 10x of the zero tolerance")
            print("measures:")
            _print_measures(res.measures, sys.stdout)
            print("margins:")
            for k, v in res.margins.items():
                print(f"  {k:16s} {_fmt(v)}")
        return 3 if res.ambiguous else 0

    verdict = classify_mixed(state, zero_tol=args.tol)
    if args.json:
        print(json.dumps({
            "kind": "mixed",
            "certificates": [[c.claim, c.witness] for c in verdict.certificates],
            "measures": verdict.measures.as_dict(),
        }))
    else:
        print("mixed-state verdict:")
        for c in verdict.certificates:
            print(f"  {c.claim} (witness {_fmt(c.witness)})")
        print("measures:")
        _print_measures(verdict.measures, sys.stdout)
    return 0


def _cmd_measure(args) -> int:
    state = load_state_file(args.path)
    ms = measure_set(state)
    if args.json:
        print(json.dumps(ms.as_dict()))
    else:
        _print_measures(ms, sys.stdout)
    return 0


def _cmd_gsd(args) -> int:
    state = load_state_file(args.path)
    if not isinstance(state, PureState):
        raise StateFileError("the canonical decomposition is defined for pure states only")
    form = gsd(state, mode=args.mode)
    ambiguous = False
    try:
        pat = classify_gsd_pattern(form)
        pattern_line = f"{pat.pattern} (subtype {pat.subtype.code})"
    except AmbiguousNearThresholdError as exc:
        ambiguous = True
        pattern_line = f"ambiguous: {exc}"
    print(f"mode: {form.mode}")
    for name in ("alpha", "beta", "delta", "epsilon", "omega"):
        z = getattr(form, name)
        print(f"  {name:8s} {_fmt(z.real)} {'+' if z.imag >= 0 else '-'} {_fmt(abs(z.imag))}i"
              f"   |.| = {_fmt(abs(z))}")
    print(f"pattern: {pattern_line}")
    for name, u in (("u_a", form.u_a), ("u_b", form.u_b), ("u_c", form.u_c)):
        print(f"{name}:")
        for row in u:
            print("   " + "  ".join(f"{z.real:+.9f}{z.imag:+.9f}i" for z in row))
    return 3 if ambiguous else 0


def _cmd_sweep(args) -> int:
    spec = default_grid(args.family, args.points)
    rows = sweep(spec)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            cells = [spec.family, _fmt(row.params[0])]
            cells += [_fmt(getattr(row.measures, f)) for f in MEASURE_FIELDS]
            cells.append(row.verdict)
            cells += [_fmt(row.oracle_values.get(f)) for f in ORACLE_FIELDS]
            cells += [_fmt(row.deviations.get(f)) for f in ORACLE_FIELDS]
            writer.writerow(cells)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_random(args) -> int:
    if args.count < 1:
        raise ParamOutOfDomainError("--count must be >= 1")
    lines = []
    histogram: dict[str, int] = {}
    for i in range(args.count):
        psi = sample_haar_pure(args.seed + i)
        res = classify_pure(psi, zero_tol=args.tol)
        code = res.label.code + ("?" if res.ambiguous else "")
        histogram[code] = histogram.get(code, 0) + 1
        ms = res.measures
        lines.append(
            f"{i}\t{code}\tn_abc={_fmt(ms.n_abc)}\tq_mult={_fmt(ms.q_mult)}\t"
            f"eta_mult={_fmt(ms.eta_mult)}\tthree_tangle={_fmt(ms.three_tangle)}"
        )
    lines.append("subtype histogram:")
    for code in sorted(histogram):
        lines.append(f"  {code}\t{histogram[code]}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triqent",
        description="Entanglement measures, canonical forms and classification of three-qubit states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="subtype or certified verdict of a state file")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=1e-8, help="zero threshold (default 1e-8)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("measure", help="print the full measure set of a state file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("gsd", help="canonical five-coefficient form of a pure state")
    p.add_argument("path")
    p.add_argument("--mode", choices=("raw", "normal"), default="raw")
    p.set_defaults(func=_cmd_gsd)

    p = sub.add_parser("sweep", help="tabulate a parametric family to CSV")
    p.add_argument("--family", required=True, choices=SWEEPABLE)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("random", help="classify Haar-random pure states")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", help="write the report to a file instead of stdout")
    p.set_defaults(func=_cmd_random)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TriqentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
