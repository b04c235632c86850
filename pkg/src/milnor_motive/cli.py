"""Command-line front end.

    milnor-motive --exponents 3/2,7/4,11/6 --output json --verify
    milnor-motive --input branches.txt --output json

Exit status: 0 on success, 1 on invalid input, 2 if a ``--verify``
cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from ._ring import SpectrumElem
from .monodromy import CycloProduct, DensePoly, expand, milnor_number, monodromy_recursion
from .motive import MotiveExpr, motivic_milnor_fiber
from .puiseux import ExponentError, ExponentList, ExponentTower, decompose, parse_exponents
from .spectrum import spectrum_latex, spectrum_text, spectrum_to_json, spectrum_via_process
from .verify import run_checks


@dataclass
class RunReport:
    exponents: ExponentList
    tower: ExponentTower
    motive: MotiveExpr
    spectrum: SpectrumElem
    charpoly: CycloProduct
    charpoly_expanded: DensePoly
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def milnor_number(self) -> int:
        return milnor_number(self.charpoly)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def to_json(self) -> dict:
        return {
            "exponents": [[q.numerator, q.denominator] for q in self.exponents],
            "levels": [
                {"m": d.m, "n": d.n, "d": d.d, "dprime": d.dprime} for d in self.tower.level_data
            ],
            "motive": self.motive.to_json(),
            "spectrum": spectrum_to_json(self.spectrum),
            "milnor_number": self.milnor_number,
            "charpoly_factored": self.charpoly.to_json(),
            "charpoly_expanded": list(self.charpoly_expanded),
            "checks": [{"name": name, "pass": passed} for name, passed in self.checks],
        }

    def text(self) -> str:
        lines = [f"exponents: {', '.join(str(q) for q in self.exponents) or '(smooth)'}"]
        for i, d in enumerate(self.tower.level_data, start=1):
            lines.append(f"level {i}: m={d.m} n={d.n} d={d.d} d'={d.dprime}")
        lines.append(f"motivic Milnor fiber: {self.motive.text()}")
        lines.append(f"milnor number: {self.milnor_number}")
        lines.append(f"characteristic polynomial: {self.charpoly}")
        lines.append(f"  expanded: {self.charpoly_expanded}")
        lines.append(f"spectrum ({self.spectrum.total()}): {spectrum_text(self.spectrum)}")
        for name, passed in self.checks:
            lines.append(f"check {name}: {'pass' if passed else 'FAIL'}")
        return "\n".join(lines)

    def latex(self) -> str:
        lines = [
            rf"S(f) = {self.motive.latex()}",
            "",
            rf"\mu = {self.milnor_number}",
            "",
            rf"\operatorname{{spectrum}}(f) = {spectrum_latex(self.spectrum)}",
        ]
        return "\n".join(lines)


def analyze(exps: ExponentList, verify: bool = False) -> RunReport:
    tower = decompose(exps)
    motive = motivic_milnor_fiber(tower)
    spectrum = spectrum_via_process(tower)
    h = monodromy_recursion(tower)
    checks = run_checks(tower, motive, spectrum, h) if verify else []
    return RunReport(exps, tower, motive, spectrum, h, expand(h), checks)


def dumps(payload) -> str:
    return json.dumps(payload, indent=2)


def _read_batch(path: str) -> list[ExponentList]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                out.append(parse_exponents(line))
            except ExponentError as exc:
                raise ExponentError(f"{path}:{lineno}: {exc}") from exc
    return out


class _Parser(argparse.ArgumentParser):
    # exit status 2 is reserved for failed verification
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="milnor-motive",
        description="Motivic Milnor fiber, Hodge spectrum and monodromy of a plane branch "
        "from its essential Puiseux exponents.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--exponents", metavar="LIST", help='comma-separated fractions, e.g. "3/2,7/4,11/6"')
    source.add_argument("--input", metavar="PATH", help="file with one exponent list per line")
    parser.add_argument("--output", choices=("text", "json", "latex"), default="text")
    parser.add_argument("--verify", action="store_true", help="run all cross-checks")
    parser.add_argument("--quiet", action="store_true", help="print nothing on success")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.exponents is not None:
            inputs = [parse_exponents(args.exponents)]
        else:
            inputs = _read_batch(args.input)
    except ExponentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return 1

    reports = [analyze(exps, verify=args.verify) for exps in inputs]

    if not args.quiet:
        if args.output == "json":
            payload = [r.to_json() for r in reports]
            print(dumps(payload if args.input is not None else payload[0]))
        else:
            render = RunReport.text if args.output == "text" else RunReport.latex
            print("\n\n".join(render(r) for r in reports))

    failed = [(str(r.exponents), name) for r in reports for name, ok in r.checks if not ok]
    for exps, name in failed:
        print(f"verification failed: {name} for exponents {exps or '(smooth)'}", file=sys.stderr)
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
