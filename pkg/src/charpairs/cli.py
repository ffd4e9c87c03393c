"""Command-line driver: ``charpairs SYSTEM_FILE [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .chardec import char_dec
from .errors import CertificateError, DecompositionAborted, InputError
from .parsing import parse_ordering, parse_system
from .strongritt import ritt_cstar, strong_decomposition
from .verify import verify_decomposition


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="charpairs",
                                 description="Characteristic decomposition of a polynomial system.")
    ap.add_argument("input", help="system file, or - for standard input")
    ap.add_argument("--strong", action="store_true", help="replace pairs by strong pairs")
    ap.add_argument("--ritt", action="store_true", help="emit the Ritt characteristic set of each pair")
    ap.add_argument("--verify", action="store_true", help="attach a verification report")
    ap.add_argument("--deep", action="store_true", help="run the covering check on large systems too")
    ap.add_argument("--order", help='override the variable ordering, e.g. "a<x<y"')
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    return ap


def _strs(polys) -> list:
    return [str(p) for p in polys]


def build_document(polys, ring, d, ritt: bool, report) -> dict:
    doc = {
        "input": {"vars": list(ring.names), "polys": _strs(polys)},
        "pairs": [
            {
                "groebner_basis": _strs(p.gb),
                "w_characteristic_set": _strs(p.wchar),
                "parameters": [v.name for v in p.parameters],
                "normal": True,
                "strong": p.strong,
                "ordering": list(p.order.names),
            }
            for p in d.pairs
        ],
    }
    if ritt:
        doc["ritt_sets"] = [_strs(ritt_cstar(p.wchar)) for p in d.pairs]
    if report is not None:
        doc["verification"] = report.to_dict()
    doc["empty_zero_set"] = d.empty_zero_set
    return doc


def render_text(doc: dict) -> str:
    out = ["vars: " + " < ".join(doc["input"]["vars"])]
    out += ["  " + p for p in doc["input"]["polys"]]
    if doc["empty_zero_set"]:
        out.append("empty zero set")
    for i, pair in enumerate(doc["pairs"], start=1):
        kind = "strong pair" if pair["strong"] else "pair"
        out.append(f"{kind} {i} (ordering {' < '.join(pair['ordering'])}; "
                   f"parameters {', '.join(pair['parameters']) or 'none'})")
        out.append("  basis: {" + ", ".join(pair["groebner_basis"]) + "}")
        out.append("  W-characteristic set: [" + ", ".join(pair["w_characteristic_set"]) + "]")
        if "ritt_sets" in doc:
            out.append("  Ritt set: [" + ", ".join(doc["ritt_sets"][i - 1]) + "]")
    if "verification" in doc:
        rep = doc["verification"]
        out.append(f"verification: {'pass' if rep['passed'] else 'FAIL'}")
        for c in rep["checks"]:
            tail = f": {c['witness']}" if c["witness"] else ""
            out.append(f"  [{c['status']}] {c['name']}{tail}")
    return "\n".join(out) + "\n"


def run(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.parallel < 1:
            raise InputError("--parallel needs a positive worker count")
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        ring = parse_ordering(args.order) if args.order else None
        polys, ring = parse_system(text, ring)
    except InputError as exc:
        print(f"charpairs: input error: {exc}", file=sys.stderr)
        return 1
    try:
        d = char_dec(polys, ring, workers=args.parallel)
        if args.strong:
            d = strong_decomposition(d)
        report = verify_decomposition(polys, d, deep=args.deep) if args.verify else None
        doc = build_document(polys, ring, d, args.ritt, report)
    except (CertificateError, DecompositionAborted) as exc:
        print(f"charpairs: internal failure: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(doc))
    if report is not None and not report.passed:
        print("charpairs: verification failed", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
