"""Command line front end.

Every verb writes one document to stdout; verbs that consume a character
read its JSON document from stdin (or ``--input``), so commands compose
with pipes::

    qchar kr --infinite --i 0 --k 1 --depth 4 | qchar fold --n 3 | qchar verify --frontier 2

Exit codes: 0 success, 1 verification or generation failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys

from .cartan import CartanDatum, CartanError, CyclicA, InfiniteA, WindowA
from .character import QCharacter, classical_character, fold_qcharacter
from .fm import (
    ContractError,
    DecompositionError,
    GenerationError,
    decompose_into_simples,
    dominant_monomials,
    fm_generate,
    verify_characterization,
    verify_ki,
)
from .monomial import is_dominant, parse_monomial
from .render import (
    MalformedInput,
    character_to_json,
    character_to_latex,
    character_to_text,
    dumps,
    loads_character,
    weights_to_json,
    weights_to_text,
)
from .tableaux import Depth, KRDescriptor, Window, kr_qcharacter

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def parse_cartan(text: str) -> CartanDatum:
    """``infinite``, ``window:LO:HI`` or ``cyclic:N``."""
    parts = text.split(":")
    try:
        if parts == ["infinite"]:
            return InfiniteA()
        if parts[0] == "window" and len(parts) == 3:
            return WindowA(int(parts[1]), int(parts[2]))
        if parts[0] == "cyclic" and len(parts) == 2:
            return CyclicA(int(parts[1]))
    except (ValueError, CartanError) as exc:
        raise MalformedInput(f"bad Cartan datum {text!r}: {exc}") from exc
    raise MalformedInput(f"bad Cartan datum {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qchar", description="q-characters of KR modules and their toroidal folds")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text", "latex"), default="json")
        sp.add_argument("--input", help="read the input document from a file instead of stdin")
        sp.add_argument("--output", help="write the result to a file instead of stdout")
        return sp

    kr = common(sub.add_parser("kr", help="KR q-character from the tableaux formula"))
    kr.add_argument("--infinite", action="store_true", help="infinite-rank type A (the only choice)")
    kr.add_argument("--i", type=int, required=True)
    kr.add_argument("--k", type=int, required=True)
    kr.add_argument("--c", type=int, default=0, help="spectral base shift (a = q^c)")
    mode = kr.add_mutually_exclusive_group(required=True)
    mode.add_argument("--window", type=int)
    mode.add_argument("--depth", type=int)

    fold = common(sub.add_parser("fold", help="fold an infinite-rank character to CyclicA(n)"))
    fold.add_argument("--n", type=int, required=True)

    ver = common(sub.add_parser("verify", help="K_i membership and unique dominant monomial"))
    ver.add_argument("--frontier", type=int, help="judge only depths <= frontier (default: depth bound)")
    ver.add_argument("--node", type=int, help="check a single node only")

    dom = common(sub.add_parser("dominants", help="dominant monomials of a character"))
    dom.add_argument("--max-depth", type=int)

    common(sub.add_parser("weights", help="classical character (weight multiplicities)"))

    gen = common(sub.add_parser("generate", help="generate a character from its highest monomial"))
    gen.add_argument("--cartan", required=True, help="infinite | window:LO:HI | cyclic:N")
    gen.add_argument("--highest", required=True, help='e.g. "Y[0,0] Y[2,4]"')
    gen.add_argument("--depth", type=int, required=True)
    gen.add_argument("--experimental", action="store_true", help="allow cyclic (toroidal) data")

    dec = common(sub.add_parser("decompose", help="greedy decomposition into generated simples"))
    dec.add_argument("--depth", type=int, required=True)
    dec.add_argument("--margin", type=int, default=0)
    dec.add_argument("--experimental", action="store_true", help="allow cyclic (toroidal) data")
    return p


def _read_character(args, stdin) -> QCharacter:
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedInput(f"cannot read {args.input}: {exc}") from exc
    else:
        text = stdin.read()
    return loads_character(text)


def _render_character(chi: QCharacter, fmt: str) -> str:
    if fmt == "text":
        return character_to_text(chi) + "\n"
    if fmt == "latex":
        return character_to_latex(chi) + "\n"
    return dumps(character_to_json(chi))


def _render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report)
    lines = [f"verdict: {report['verdict']}"]
    for key in ("reason", "node", "witness", "nodes", "components", "residual_terms", "error"):
        if report.get(key) not in (None, "", {}, []):
            lines.append(f"{key}: {report[key]}")
    return "\n".join(lines) + "\n"


def dispatch(args, stdin=None) -> tuple[str, int]:
    """Run one parsed command; return ``(output text, exit code)``."""
    stdin = stdin if stdin is not None else sys.stdin
    fmt = args.format
    if args.verb == "kr":
        try:
            desc = KRDescriptor(args.i, args.k, args.c)
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc
        if args.window is not None and args.window < 0 or args.depth is not None and args.depth < 0:
            raise MalformedInput("window and depth must be >= 0")
        mode = Window(args.window) if args.window is not None else Depth(args.depth)
        return _render_character(kr_qcharacter(desc, mode), fmt), EXIT_OK

    if args.verb == "generate":
        d = parse_cartan(args.cartan)
        try:
            m_plus = parse_monomial(args.highest)
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc
        if not is_dominant(m_plus) or args.depth < 0:
            raise MalformedInput("generate needs a dominant highest monomial and depth >= 0")
        try:
            chi = fm_generate(d, m_plus, args.depth, experimental=args.experimental)
        except GenerationError as exc:
            report = {"verdict": "fail", "error": str(exc),
                      "witness": None if exc.monomial is None else exc.monomial.to_json()}
            return _render_report(report, fmt), EXIT_FAIL
        return _render_character(chi, fmt), EXIT_OK

    chi = _read_character(args, stdin)

    if args.verb == "fold":
        if not chi.cartan.is_infinite or args.n < 1:
            raise MalformedInput("fold needs an InfiniteA character and n >= 1")
        return _render_character(fold_qcharacter(chi, args.n), fmt), EXIT_OK

    if args.verb == "dominants":
        doms = dominant_monomials(chi, args.max_depth)
        return _render_character(chi.with_terms(doms), fmt), EXIT_OK

    if args.verb == "weights":
        try:
            weights = classical_character(chi)
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc
        if fmt == "json":
            return dumps(weights_to_json(chi.cartan, weights)), EXIT_OK
        return weights_to_text(weights) + "\n", EXIT_OK

    if args.verb == "verify":
        if chi.highest is None:
            raise MalformedInput("verify needs a character with a highest monomial")
        frontier = args.frontier if args.frontier is not None else (
            chi.depth_bound if chi.depth_bound is not None else float("inf"))
        try:
            if args.node is not None:
                verdict = verify_ki(chi, args.node, frontier)
            else:
                verdict = verify_characterization(chi, chi.highest, frontier)
        except (ContractError, CartanError) as exc:
            raise MalformedInput(str(exc)) from exc
        code = EXIT_OK if verdict.ok else EXIT_FAIL
        return _render_report(verdict.to_json(), fmt), code

    if args.verb == "decompose":
        try:
            dec = decompose_into_simples(chi, args.depth, margin=args.margin, experimental=args.experimental)
        except ContractError as exc:
            raise MalformedInput(str(exc)) from exc
        except (GenerationError, DecompositionError) as exc:
            return _render_report({"verdict": "fail", "error": str(exc)}, fmt), EXIT_FAIL
        report = {
            "verdict": "pass",
            "components": [{"highest": m.to_json(), "coeff": c} for m, c in dec.components],
            "residual_terms": len(dec.residual),
        }
        return _render_report(report, fmt), EXIT_OK

    raise MalformedInput(f"unknown verb {args.verb!r}")


def main(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text, code = dispatch(args, stdin)
    except MalformedInput as exc:
        stderr.write(dumps({"error": "malformed_input", "message": str(exc)}))
        return EXIT_MALFORMED
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
