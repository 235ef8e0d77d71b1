"""
Command line front end.

    knotledger invariants FILE [--format text|json]
    knotledger double --framing N
    knotledger sum FILE...
    knotledger band-check FILE_A FILE_B --index I
    knotledger verify-paper [--format text|json]

Exit status: 0 pass, 1 failed verdict, 2 usage or parse error.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources

from . import invariants, ledger, seifert
from .algebra import LaurentPoly
from .matfile import MatrixFormatError, format_matrix, parse_matrix, read_matrix

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def fixture_path(name):
    return resources.files("knotledger").joinpath("fixtures", name)


def load_fixture(name):
    return parse_matrix(fixture_path(name).read_text("utf-8"))


def _jsonable(value):
    # ints (but not bools) become decimal strings so no consumer rounds them
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _text_lines(value, prefix=""):
    if isinstance(value, dict):
        for k, v in value.items():
            key = "%s.%s" % (prefix, k) if prefix else str(k)
            yield from _text_lines(v, key)
    elif isinstance(value, (list, tuple)) and value and isinstance(value[0], dict):
        for i, v in enumerate(value, 1):
            yield from _text_lines(v, "%s[%d]" % (prefix, i))
    else:
        if isinstance(value, (list, tuple)):
            text = " ".join(str(v) for v in value)
        elif isinstance(value, bool):
            text = "true" if value else "false"
        elif value is None:
            text = "-"
        else:
            text = str(value)
        yield "%s: %s" % (prefix, text)


@dataclass
class CliReport:
    command: str
    inputs: dict
    result: dict = field(default_factory=dict)
    status: str = "pass"

    @property
    def exit_code(self):
        return EXIT_PASS if self.status == "pass" else EXIT_FAIL

    def to_json(self):
        payload = {"command": self.command, "inputs": self.inputs,
                   "result": self.result, "status": self.status}
        return json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"

    def to_text(self):
        lines = ["command: %s" % self.command]
        lines += _text_lines(self.inputs, "input")
        lines += _text_lines(self.result)
        lines.append("status: %s" % self.status)
        return "\n".join(lines) + "\n"

    def render(self, fmt):
        return self.to_json() if fmt == "json" else self.to_text()


def _load_seifert(path):
    return seifert.validate(read_matrix(path))


def cmd_invariants(path):
    V = _load_seifert(path)
    return CliReport("invariants", {"file": str(path)}, invariants.report(V).as_dict())


def cmd_band_check(path_a, path_b, index):
    A, B = _load_seifert(path_a), _load_seifert(path_b)
    verdict = seifert.is_band_move(A, B, index)
    return CliReport("band-check",
                     {"before": str(path_a), "after": str(path_b), "index": index},
                     {"band_move": verdict},
                     "pass" if verdict else "fail")


class _StepFailed(Exception):
    pass


def cmd_verify_paper(v1=None, v2=None, axioms=None):
    """
    Rebuild the argument from the shipped fixtures, stopping at the
    first step that does not check out.  v1, v2 and axioms override the
    fixture matrices and axiom table.
    """
    inputs = {
        "v1": "fixtures/v1.mat" if v1 is None else "<override>",
        "v2": "fixtures/v2.mat" if v2 is None else "<override>",
        "axioms": "fixtures/axioms.json" if axioms is None else "<override>",
    }
    steps = []
    state = {}

    def step1():
        V1 = seifert.validate(load_fixture("v1.mat") if v1 is None else v1)
        built = seifert.direct_sum(seifert.double_seifert(2), seifert.double_seifert(2),
                                   seifert.double_seifert(4))
        state["V1"] = V1
        if built != V1:
            raise _StepFailed("block sum of the doubles differs from V1")
        return "D(2) + D(2) + D(4) = V1"

    def step2():
        store = (ledger.AxiomStore.default() if axioms is None
                 else axioms if isinstance(axioms, ledger.AxiomStore)
                 else ledger.AxiomStore.from_dict(axioms))
        a = ledger.known_double("D+(T_{2,3},2)", store)
        b = ledger.known_double("D+(T_{2,5},4)", store)
        K = ledger.connect_sum(ledger.connect_sum(a, a), b, name="K")
        state["K"], state["store"] = K, store
        if K.tau != ledger.BoundedValue.exact(0) or K.s != ledger.BoundedValue.exact(6, True):
            raise _StepFailed("tau(K) = %s, s(K) = %s" % (K.tau, K.s))
        if K.matrix != state["V1"]:
            raise _StepFailed("Seifert matrix of K differs from V1")
        return "tau(K) = 0, s(K) = 6"

    def step3():
        V2 = seifert.validate(load_fixture("v2.mat") if v2 is None else v2)
        state["V2"] = V2
        if not seifert.is_band_move(state["V1"], V2, 1):
            raise _StepFailed("V2 is not a band move of V1 at band 1")
        return "V1 -> V2 is a move on band 1"

    def step4():
        V2 = state["V2"]
        J = ledger.band_move_update(state["K"], V2, 1, name="J")
        state["J"] = J
        delta = invariants.alexander(V2)
        if delta != LaurentPoly.constant(1):
            raise _StepFailed("Alexander polynomial of J is %s, not 1" % delta)
        if ledger.topologically_slice(J) is not True:
            raise _StepFailed("J not certified topologically slice")
        raw = invariants.alexander_det(V2)
        return "det(V2 - t V2^t) = %s, canonical 1; J topologically slice" % raw

    def step5():
        J = state["J"]
        if (J.tau != ledger.BoundedValue(-1, 1)
                or J.s != ledger.BoundedValue(4, 6, even_only=True)):
            raise _StepFailed("tau(J) = %s, s(J) = %s" % (J.tau, J.s))
        return "tau(J) in %s, s(J) in %s" % (J.tau.values(), J.s.values())

    def step6():
        if ledger.tau_neq_s_half(state["J"]) is not ledger.Verdict.CERTIFIED:
            raise _StepFailed("tau(J) != s(J)/2 not certified")
        return "tau(J) != s(J)/2 certified"

    def step7():
        store = state["store"]
        a = ledger.known_double("D+(T_{2,3},0)", store)
        b = ledger.known_double("D+(T_{2,5},0)", store)
        if ledger.summand_rank3_certificate(a, b, state["J"]) is not ledger.Verdict.CERTIFIED:
            raise _StepFailed("rank 3 summand not certified")
        return "tau, s/2, delta have rank 3 on D+(T_{2,3},0), D+(T_{2,5},0), J"

    plan = [
        ("construction", step1),
        ("ledger-K", step2),
        ("band-move", step3),
        ("alexander-J", step4),
        ("bounds-J", step5),
        ("tau-neq-s-half", step6),
        ("summand-rank-3", step7),
    ]
    status = "pass"
    for number, (name, fn) in enumerate(plan, 1):
        try:
            detail = fn()
        except (_StepFailed, ledger.LedgerError, LookupError, ValueError) as exc:
            error = "" if isinstance(exc, _StepFailed) else type(exc).__name__ + ": "
            steps.append({"step": number, "name": name, "status": "fail",
                          "detail": error + str(exc)})
            status = "fail"
            break
        steps.append({"step": number, "name": name, "status": "pass", "detail": detail})
    result = {"steps": steps}
    if status == "fail":
        result["failed_step"] = steps[-1]["step"]
    return CliReport("verify-paper", inputs, result, status)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="knotledger",
        description="Classical invariants of Seifert matrices and tau/s bookkeeping.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant report for a Seifert matrix file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("double", help="print the Seifert matrix of a twisted double")
    p.add_argument("--framing", type=int, required=True)

    p = sub.add_parser("sum", help="print the block sum of Seifert matrix files")
    p.add_argument("files", nargs="*")

    p = sub.add_parser("band-check", help="is FILE_B a band move of FILE_A?")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--index", type=int, required=True, help="1-based band index")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify-paper", help="replay the tau != s/2 construction")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--v1", help="override the V1 fixture")
    p.add_argument("--v2", help="override the V2 fixture")
    p.add_argument("--axioms", help="override the axiom table (JSON)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr
    try:
        if args.command == "invariants":
            report = cmd_invariants(args.file)
        elif args.command == "double":
            out.write(format_matrix(seifert.double_seifert(args.framing).V))
            return EXIT_PASS
        elif args.command == "sum":
            total = seifert.direct_sum(*(_load_seifert(f) for f in args.files))
            out.write(format_matrix(total.V))
            return EXIT_PASS
        elif args.command == "band-check":
            report = cmd_band_check(args.file_a, args.file_b, args.index)
        else:
            v1 = read_matrix(args.v1) if args.v1 else None
            v2 = read_matrix(args.v2) if args.v2 else None
            axioms = None
            if args.axioms:
                with open(args.axioms, encoding="utf-8") as fh:
                    axioms = json.load(fh)
            report = cmd_verify_paper(v1, v2, axioms)
    except seifert.DimensionMismatch as exc:
        err.write("knotledger: dimension mismatch: %s\n" % exc)
        return EXIT_USAGE
    except (OSError, ValueError, MatrixFormatError) as exc:
        err.write("knotledger: %s: %s\n" % (type(exc).__name__, exc))
        return EXIT_USAGE
    out.write(report.render(args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
