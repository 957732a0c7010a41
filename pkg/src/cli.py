"""
Command-line entry point.

    python -m src.cli min-int section13 aBB aB
    python -m src.cli goldman --surface torus1 ab aB --json
    python -m src.cli jacobi-check torus1 25 --seed 7

Reports go to stdout, logs to stderr. Exit codes: 0 success, 1 parse error,
2 precondition violation, 3 failed verification, 4 internal error.
"""
import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence

from pydantic import ValidationError

from .handlers import (
    bracket,
    example_section13,
    goldman,
    graph_check,
    jacobi_check,
    min_int,
    sign_check,
    star,
)
from .models.bounds import SearchBounds
from .models.run_config import RunConfig
from .utils import ParseError, format_error_response, get_config, get_logger


logger = get_logger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises ParseError instead of exiting."""

    def error(self, message: str):
        raise ParseError(message)


class Command(NamedTuple):
    handler: Callable[[RunConfig], Dict[str, Any]]
    render: Callable[[Dict[str, Any]], List[str]]
    help: str


# ---------------------------------------------------------------- human output

def _coef(text: str) -> str:
    return str(Fraction(text))


def _render_terms(terms: List[Dict[str, Any]]) -> List[str]:
    if not terms:
        return ["0"]
    return [
        f"{_coef(t['coef'])} * <{t['graph']}> :: labels "
        + ", ".join(f"x{i + 1}={label}" for i, label in enumerate(t["labels"]))
        for t in terms
    ]


def _render_element(body: Dict[str, Any]) -> List[str]:
    return _render_terms(body["terms"]) + [f"epsilon = {_coef(body['epsilon'])}"]


def _render_min_int(body: Dict[str, Any]) -> List[str]:
    lines = [f"surface {body['surface']}: w1={body['w1']} w2={body['w2']}", "crossings:"]
    for c in body["crossings"]:
        lines.append(f"  p={c['p']} q={c['q']} sign={c['geom_sign']:+d} u={c['u']} v={c['v']}")
    lines.append("A11 reduced:")
    lines.extend("  " + line for line in _render_terms(body["reduced"]["terms"]))
    lines.append("bracket:")
    lines.extend("  " + line for line in _render_terms(body["bracket"]["terms"]))
    lines.append(f"epsilon = {_coef(body['epsilon'])}")
    lines.append(f"epsilon~ = {_coef(body['epsilon_tilde'])}")
    lines.append(f"homological pairing = {body['homological_pairing']}")
    lines.append(f"minimal intersection number = {body['min_intersection']}")
    return lines


def _render_loops(terms: List[Dict[str, Any]]) -> List[str]:
    return [f"  {_coef(t['coef'])} * {t['loop']}" for t in terms] or ["  0"]


def _render_goldman(body: Dict[str, Any]) -> List[str]:
    return (
        [f"surface {body['surface']}: w1={body['w1']} w2={body['w2']}", "goldman bracket:"]
        + _render_loops(body["goldman"])
        + ["merged Lie bracket:"]
        + _render_loops(body["merged_bracket"])
        + [f"cross-check: {'pass' if body['cross_check'] else 'FAIL'}"]
    )


def _render_checks(body: Dict[str, Any]) -> List[str]:
    lines = [
        f"{c['name']}: {'PASS' if c['passed'] else 'FAIL'} (checked {c['checked']}, failures {c['failures']})"
        for c in body["checks"]
    ]
    lines.append("all passed" if body["passed"] else "FAILED")
    return lines


def _render_example(body: Dict[str, Any]) -> List[str]:
    lines = [
        f"{c['name']}: {'PASS' if c['passed'] else 'FAIL'} expected={c['expected']} actual={c['actual']}"
        for c in body["details"]["checks"]
    ]
    lines.append("all passed" if body["passed"] else "FAILED")
    return lines


COMMANDS: Dict[str, Command] = {
    "min-int": Command(min_int, _render_min_int, "minimal intersection number of two loops"),
    "bracket": Command(bracket, _render_element, "Lie bracket of two loop classes"),
    "goldman": Command(goldman, _render_goldman, "Goldman bracket and merged-bracket comparison"),
    "star": Command(star, _render_element, "star product of loop classes"),
    "jacobi-check": Command(jacobi_check, _render_checks, "Jacobi identity on random loop triples"),
    "sign-check": Command(sign_check, _render_checks, "parity identities of the sign calculus"),
    "graph-check": Command(graph_check, _render_checks, "composition laws on random graph triples"),
    "example-section13": Command(example_section13, _render_example, "worked aBB / aB example"),
}

# commands taking an optional leading surface before their words
_SURFACE_FIRST = {"min-int": 2, "bracket": 2, "goldman": 2}


# ---------------------------------------------------------------- parsing

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--surface", help="builtin surface name or surface file")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--seed", type=int, help="seed for randomized checks")
    common.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    common.add_argument("--max-len", type=int, dest="max_len", help="oracle conjugator length bound")
    common.add_argument("--max-power", type=int, dest="max_power", help="oracle power bound")

    parser = _Parser(prog="garland", description="Garland bracket toolkit for loops on surfaces.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, command in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=command.help)
        sub.add_argument("args", nargs="*", help="surface, words or count")
    return parser


def _split_args(command: str, args: List[str], surface: Optional[str]):
    """Separate surface, words and count from the positional arguments."""
    count = 0
    if command in _SURFACE_FIRST and len(args) == _SURFACE_FIRST[command] + 1:
        surface, args = args[0], args[1:]
    elif command == "jacobi-check":
        if args and args[-1].isdigit():
            count, args = int(args[-1]), args[:-1]
        if args:
            surface, args = args[0], args[1:]
    elif command == "graph-check":
        if args and args[-1].isdigit():
            count, args = int(args[-1]), args[:-1]
    if command in ("jacobi-check", "graph-check", "sign-check", "example-section13") and args:
        raise ParseError(f"unexpected arguments for {command}: {' '.join(args)}")
    return surface, args, count


def parse_run_config(argv: Sequence[str]) -> RunConfig:
    """
    Parse a command line into a RunConfig.

    Raises:
        ParseError: On unknown commands, flags or invalid values
    """
    args = build_parser().parse_args(list(argv))
    config = get_config()
    surface, words, count = _split_args(args.command, args.args, args.surface)
    try:
        return RunConfig(
            command=args.command,
            surface=surface or config.default_surface,
            words=words,
            output="json" if args.json else "human",
            bounds=SearchBounds(
                max_conjugator_length=args.max_len if args.max_len is not None else config.max_conjugator_length,
                max_power=args.max_power if args.max_power is not None else config.max_power
            ),
            seed=args.seed if args.seed is not None else config.seed,
            oracle=args.oracle,
            count=count
        )
    except ValidationError as e:
        raise ParseError(f"invalid arguments: {e.errors()[0]['msg']}", details={"argv": list(argv)}) from e


# ---------------------------------------------------------------- entry point

def render(command: str, response: Dict[str, Any], output: str) -> str:
    body = response["body"]
    if output == "json":
        return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False)
    if "error" in body:
        return f"error: {body['error']}: {body['message']}"
    return "\n".join(COMMANDS[command].render(body))


def run(config: RunConfig) -> Dict[str, Any]:
    """Dispatch one parsed command to its handler."""
    return COMMANDS[config.command].handler(config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    wants_json = "--json" in argv
    try:
        config = parse_run_config(argv)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except Exception as e:
        response = format_error_response(e)
        print(render("", response, "json" if wants_json else "human"), file=sys.stdout if wants_json else sys.stderr)
        return response["exit_code"]

    response = run(config)
    text = render(config.command, response, config.output)
    is_error = "error" in response["body"]
    print(text, file=sys.stderr if is_error and config.output == "human" else sys.stdout)
    return response["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
