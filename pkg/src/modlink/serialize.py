"""Deterministic text, JSON and CSV serialization of reports.

Real numbers are rounded to 12 significant digits with ties away from
zero; identical inputs always serialize to identical bytes.  Traces are
serialized as decimal strings because they outgrow every fixed-width
integer type.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Context, Decimal, ROUND_HALF_UP

from .links import LinkFamily, VolumeReport

_TWELVE = Context(prec=12, rounding=ROUND_HALF_UP)


def format_real(x: float) -> str:
    """x rounded to 12 significant digits, plain decimal notation."""
    return format(_TWELVE.plus(Decimal(x)), "f")


def real12(x: float) -> float:
    """The 12-significant-digit rounding of x, as a float for JSON."""
    return float(format_real(x))


CSV_HEADER = [
    "n",
    "word",
    "trace",
    "length",
    "cumulative_length",
    "octahedra",
    "volume",
    "volume_paper_formula",
    "ratio",
]


def family_to_dict(family: LinkFamily) -> dict:
    """JSON-ready dict for a link family, keys in fixed order."""
    return {
        "target": str(family.target),
        "x": family.x,
        "slopes": [str(s) for s in family.slopes],
        "orbits": [
            {
                "representative": str(record.representative),
                "slopes": [str(s) for s in record.slopes],
                "word": record.word.letters,
                "trace": str(record.trace),
                "length": real12(record.length),
                "discriminant": record.discriminant,
            }
            for record in family.orbits
        ],
        "counts": {
            "modular": family.counts.modular,
            "ut_single": family.counts.ut_single,
            "ut_both": family.counts.ut_both,
        },
        "volume_modular": real12(family.volume_modular),
        "volume_paper_formula": real12(family.volume_alternative),
        "total_length": real12(family.total_length),
        "ratio": real12(family.ratio),
    }


def family_to_json(family: LinkFamily, compact: bool = False) -> str:
    d = family_to_dict(family)
    if compact:
        return json.dumps(d, separators=(",", ":"))
    return json.dumps(d, indent=2)


def report_to_csv(report: VolumeReport) -> str:
    """CSV table of a volume report, header plus one row per n."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(
            [
                str(row.n),
                row.word.letters,
                str(row.trace),
                format_real(row.length),
                format_real(row.cumulative_length),
                str(row.octahedra),
                format_real(row.volume),
                format_real(row.volume_alternative),
                format_real(row.ratio),
            ]
        )
    return out.getvalue()


def family_text(family: LinkFamily) -> str:
    """Human-readable multi-line report for one family."""
    lines = [
        f"target: {family.target}",
        f"x: {family.x}",
        "slopes: " + " ".join(str(s) for s in family.slopes),
    ]
    for i, record in enumerate(family.orbits, start=1):
        lines.append(
            f"orbit {i}: representative {record.representative}"
            f" slopes {{{', '.join(str(s) for s in record.slopes)}}}"
            f" word {record.word.letters}"
            f" trace {record.trace}"
            f" length {format_real(record.length)}"
            f" discriminant {record.discriminant}"
        )
    lines.append(
        f"counts: modular {family.counts.modular},"
        f" ut-single {family.counts.ut_single},"
        f" ut-both {family.counts.ut_both}"
    )
    lines.append(f"volume-modular: {format_real(family.volume_modular)}")
    lines.append(f"volume-paper-formula: {format_real(family.volume_alternative)}")
    lines.append(f"total-length: {format_real(family.total_length)}")
    lines.append(f"ratio: {format_real(family.ratio)}")
    return "\n".join(lines) + "\n"
