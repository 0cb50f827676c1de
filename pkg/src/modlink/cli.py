"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 domain error (negative
slope where unsupported, parabolic or elliptic word, 0/0).  Every error
prints a single line ``error: <slug>: <detail>`` to stderr.  Output is
deterministic: reals are fixed at 12 significant digits and orderings
never depend on hashing.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import figures, links, serialize
from .cutting import (
    UnsupportedSlopeError,
    ab_sequence,
    ab_sequence_geometric,
    continued_fraction,
    lr_geometric_oracle,
    slope_to_word,
)
from .farey import (
    NegativeSlopeError,
    NotAChainError,
    NotNeighboursError,
    Slope,
    farey_path,
    nonnegative_representative,
    v_orbit,
)
from .psl2z import (
    EllipticError,
    GeodesicWord,
    ParabolicError,
    field_discriminant,
    geodesic_length,
    word_to_matrix,
)


class DomainInputError(Exception):
    """Well-formed input naming an undefined object (e.g. 0/0)."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # teach argparse that -2/1 is a value, not an option flag
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


_SLOPE_RE = re.compile(r"^[+-]?\d+/[+-]?\d+$")


def _slope_arg(text: str) -> Slope:
    if not _SLOPE_RE.match(text):
        raise argparse.ArgumentTypeError(f"malformed-slope: {text!r} is not 'p/q'")
    num, den = text.split("/")
    if int(num) == 0 and int(den) == 0:
        raise DomainInputError("undefined-slope: 0/0")
    return Slope(int(num), int(den))


def _word_arg(text: str) -> GeodesicWord:
    if not text or set(text) - {"L", "R"}:
        raise argparse.ArgumentTypeError(
            f"malformed-word: {text!r} is not a nonempty word over L, R"
        )
    return GeodesicWord(text)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed-integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"malformed-integer: {value} is not >= 1")
    return value


def _write_output(text: str, destination: str) -> None:
    if destination == "-":
        sys.stdout.write(text)
    else:
        Path(destination).write_text(text)


def _route_nonnegative(s: Slope) -> Slope:
    """Replace a negative slope by its nonnegative orbit representative."""
    if s.p >= 0:
        return s
    rep = nonnegative_representative(s)
    print(f"notice: {s} routed via v-orbit representative {rep}", file=sys.stderr)
    return rep


def _cmd_slope_info(args) -> int:
    s: Slope = args.slope
    cf = None if (s.is_infinity or s.p < 0) else continued_fraction(s)
    x = None if s.p < 0 else farey_path(s).x
    orbit = sorted(v_orbit(s))
    if args.json:
        payload = {
            "slope": str(s),
            "continued_fraction": None if cf is None else list(cf.terms),
            "farey_path_length": x,
            "v_orbit": [str(t) for t in orbit],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"slope: {s}")
    print(f"continued-fraction: {cf if cf is not None else 'n/a'}")
    print(f"farey-path-length: {x if x is not None else 'n/a'}")
    print("v-orbit: " + " ".join(str(t) for t in orbit))
    return 0


def _cmd_cutting(args) -> int:
    s = _route_nonnegative(args.slope)
    ab = ab_sequence(s)
    lr = slope_to_word(s)
    print(f"slope: {s}")
    print(f"ab-word: {ab.canonical()}")
    print(f"lr-word: {lr}")
    if args.check:
        ab_ok = ab == ab_sequence_geometric(s)
        lr_ok = lr == lr_geometric_oracle(s)
        print(f"oracle-ab: {'match' if ab_ok else 'mismatch'}")
        print(f"oracle-lr: {'match' if lr_ok else 'mismatch'}")
        if not (ab_ok and lr_ok):
            return 1
    return 0


def _cmd_word(args) -> int:
    s = _route_nonnegative(args.slope)
    print(slope_to_word(s))
    return 0


def _cmd_family(args) -> int:
    family = links.build_family(args.slope)
    if args.json is not None:
        _write_output(serialize.family_to_json(family) + "\n", args.json)
    else:
        sys.stdout.write(serialize.family_text(family))
    return 0


def _cmd_census(args) -> int:
    lines = [
        serialize.family_to_json(family, compact=True)
        for family in links.census(args.max_x, dedupe_mirror=args.dedupe_mirror)
    ]
    _write_output("".join(line + "\n" for line in lines), args.jsonl)
    return 0


def _cmd_table(args) -> int:
    report = links.volume_length_table(args.n)
    _write_output(serialize.report_to_csv(report), args.csv)
    return 0


def _cmd_length(args) -> int:
    word: GeodesicWord = args.word.canonical()
    matrix = word_to_matrix(word)
    length = geodesic_length(matrix)  # raises before any output on trace < 3
    print(f"word: {word}")
    print(f"trace: {matrix.trace()}")
    print(f"length: {serialize.format_real(length)}")
    print(f"discriminant: {field_discriminant(matrix)}")
    return 0


def _cmd_svg_path(args) -> int:
    _write_output(figures.farey_disk_svg(farey_path(args.slope)), args.out)
    return 0


def _cmd_svg_line(args) -> int:
    _write_output(figures.lattice_line_svg(args.slope), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="modlink",
        description="Farey paths, cutting sequences and modular-link volumes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slope-info", help="normalization, continued fraction, orbit")
    p.add_argument("slope", type=_slope_arg)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_slope_info)

    p = sub.add_parser("cutting", help="AB and LR cutting words of a slope")
    p.add_argument("slope", type=_slope_arg)
    p.add_argument("--check", action="store_true",
                   help="also run both geometric oracles")
    p.set_defaults(func=_cmd_cutting)

    p = sub.add_parser("word", help="canonical LR word of a slope")
    p.add_argument("slope", type=_slope_arg)
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("family", help="full link-family report for a slope")
    p.add_argument("slope", type=_slope_arg)
    p.add_argument("--json", metavar="FILE", help="write JSON ('-' for stdout)")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("census", help="enumerate families up to a path length")
    p.add_argument("--max-x", type=_positive_int, required=True)
    p.add_argument("--jsonl", metavar="FILE", default="-",
                   help="output file ('-' for stdout)")
    p.add_argument("--dedupe-mirror", action="store_true",
                   help="emit one family per mirror pair")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("table", help="volume versus length table")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--csv", metavar="FILE", default="-",
                   help="output file ('-' for stdout)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("length", help="trace, length and field of an LR word")
    p.add_argument("word", type=_word_arg)
    p.set_defaults(func=_cmd_length)

    p = sub.add_parser("svg-path", help="Farey tessellation figure with path")
    p.add_argument("slope", type=_slope_arg)
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_svg_path)

    p = sub.add_parser("svg-line", help="lattice line figure with crossings")
    p.add_argument("slope", type=_slope_arg)
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_svg_line)

    return parser


_DOMAIN_SLUGS = [
    (ParabolicError, "parabolic"),
    (EllipticError, "elliptic"),
    (NegativeSlopeError, "negative-slope"),
    (UnsupportedSlopeError, "unsupported-slope"),
    (NotAChainError, "not-a-chain"),
    (NotNeighboursError, "not-neighbours"),
]


def main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except DomainInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SystemExit as exc:
        # argparse has already printed its reason (or the help text)
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except tuple(cls for cls, _ in _DOMAIN_SLUGS) as exc:
        slug = next(slug for cls, slug in _DOMAIN_SLUGS if isinstance(exc, cls))
        print(f"error: {slug}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
