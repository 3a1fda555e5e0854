"""
Riordan Kit - Report Export
===========================

Renders results as text tables, JSON or CSV:
- triangle matrices (right-aligned columns, lower triangle only)
- series, row sums and element reports
- predicate checks, J-fractions, B-sequences
- cross-validation reports

Rationals are always written as exact "p/q" strings (integers as "p").
"""

from __future__ import annotations

import csv
import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from ..core.config import OutputFormat, Route
from ..core.series import TruncatedSeries
from ..group.element import IdentityCheck, RiordanElement
from ..group.matrix import TriangleMatrix
from .bsequence import BSequence
from .jfraction import JFraction

log = logging.getLogger("Riordan.Export")


def rational_text(value: Union[int, Fraction]) -> str:
    return str(Fraction(value))


def _joined(values: Iterable) -> str:
    return ", ".join(rational_text(v) for v in values)


def matrix_to_json(m: TriangleMatrix, order: Optional[int] = None) -> Dict[str, Any]:
    """`order` is the truncation order behind the rows, at least size - 1."""
    return {"order": m.size - 1 if order is None else order, "rows": m.to_rows()}


def load_matrix_json(path: Union[str, Path]) -> TriangleMatrix:
    """Read a {"order": N, "rows": [[...]]} file; entries may be strings or integers."""
    data = json.loads(Path(path).read_text())
    rows = [[Fraction(v) for v in row] for row in data["rows"]]
    m = TriangleMatrix.from_rows(rows)
    if "order" in data and data["order"] < m.size - 1:
        log.warning(f"{path}: declared order {data['order']} cannot hold {m.size} rows")
    return m


class ReportExporter:
    """
    Format results in one output encoding.

    Every render method returns the full text, newline-terminated.
    """

    def __init__(self, fmt: OutputFormat = OutputFormat.TABLE, pretty: bool = True):
        self.fmt = fmt
        self.indent = 2 if pretty else None

    # ═══════════════════════════════════════════════════════════════════
    #                            ENCODINGS
    # ═══════════════════════════════════════════════════════════════════

    def _json(self, data: Any) -> str:
        return json.dumps(data, indent=self.indent) + "\n"

    @staticmethod
    def _csv(rows: Sequence[Sequence[Any]]) -> str:
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerows(rows)
        return output.getvalue()

    @staticmethod
    def _table(m: TriangleMatrix) -> str:
        text = m.to_rows()
        widths = [max(len(text[n][k]) for n in range(k, m.size)) for k in range(m.size)]
        lines = [" ".join(v.rjust(widths[k]) for k, v in enumerate(row)) for row in text]
        return "\n".join(lines) + "\n"

    # ═══════════════════════════════════════════════════════════════════
    #                             RESULTS
    # ═══════════════════════════════════════════════════════════════════

    def matrix(self, m: TriangleMatrix) -> str:
        if self.fmt is OutputFormat.JSON:
            return self._json(matrix_to_json(m))
        if self.fmt is OutputFormat.CSV:
            return self._csv(m.to_rows())
        return self._table(m)

    def element(self, a: RiordanElement, m: TriangleMatrix) -> str:
        """Matrix of a; JSON output also carries the g and f coefficients."""
        if self.fmt is OutputFormat.JSON:
            data = matrix_to_json(m, a.order)
            data["g"] = [rational_text(c) for c in a.g]
            data["f"] = [rational_text(c) for c in a.f]
            return self._json(data)
        return self.matrix(m)

    def series(self, s: TruncatedSeries) -> str:
        if self.fmt is OutputFormat.JSON:
            return self._json({"order": s.order, "coefficients": [rational_text(c) for c in s]})
        if self.fmt is OutputFormat.CSV:
            return self._csv([["index", "coefficient"]] + [[i, rational_text(c)] for i, c in enumerate(s)])
        return _joined(s) + "\n"

    def values(self, name: str, values: Sequence[Fraction]) -> str:
        if self.fmt is OutputFormat.JSON:
            return self._json({name: [rational_text(v) for v in values]})
        if self.fmt is OutputFormat.CSV:
            return self._csv([["index", name]] + [[i, rational_text(v)] for i, v in enumerate(values)])
        return _joined(values) + "\n"

    def check(self, name: str, result: IdentityCheck) -> str:
        if self.fmt is OutputFormat.JSON:
            return self._json({"check": name, **result.to_dict()})
        if self.fmt is OutputFormat.CSV:
            row = result.to_dict()
            return self._csv([["check"] + list(row), [name] + ["" if v is None else v for v in row.values()]])
        if result:
            return f"{name}: true\n"
        return f"{name}: false (fails at order {result.failing_order})\n"

    def jfraction(self, jf: JFraction) -> str:
        if self.fmt is OutputFormat.JSON:
            return self._json(jf.to_dict())
        if self.fmt is OutputFormat.CSV:
            rows: List[List[Any]] = [["level", "alpha", "beta"]]
            for k, a in enumerate(jf.alphas):
                beta = rational_text(jf.betas[k - 1]) if 0 < k <= len(jf.betas) else ""
                rows.append([k, rational_text(a), beta])
            return self._csv(rows)
        return (
            f"alpha: {_joined(jf.alphas)}\n"
            f"beta: {_joined(jf.betas)}\n"
            f"terminated: {str(jf.terminated).lower()}\n"
        )

    def bsequence(self, b: BSequence) -> str:
        if self.fmt is OutputFormat.JSON:
            return self._json(b.to_dict())
        if self.fmt is OutputFormat.CSV:
            return self._csv([["index", "b"]] + [[i, rational_text(v)] for i, v in enumerate(b.terms)])
        return f"B: {_joined(b.terms)}\nresidual_ok: {str(b.residual_ok).lower()}\n"

    def cross_validation(self, reports: Sequence[Any]) -> str:
        """Render CrossValidationReport objects."""
        if self.fmt is OutputFormat.JSON:
            return self._json([r.to_dict() for r in reports])
        if self.fmt is OutputFormat.CSV:
            rows: List[List[Any]] = [[
                "r", "s", "t", "left", "right", "component",
                "match", "first_mismatch", "left_value", "right_value",
            ]]
            for report in reports:
                p = report.params
                for c in report.comparisons:
                    d = c.to_dict()
                    rows.append([
                        rational_text(p.r), rational_text(p.s), rational_text(p.t),
                        d["left"], d["right"], d["component"], str(d["match"]).lower(),
                        "" if d["first_mismatch"] is None else d["first_mismatch"],
                        d["left_value"] or "", d["right_value"] or "",
                    ])
            return self._csv(rows)

        lines: List[str] = []
        for report in reports:
            lines.append(f"(r, s, t) = {report.params}, order {report.order}")
            for c in report.comparisons:
                label = f"  {c.left.key} vs {c.right.key} [{c.component}]"
                if c.match:
                    lines.append(f"{label}: match")
                else:
                    lines.append(
                        f"{label}: mismatch at x^{c.first_mismatch} "
                        f"({c.left_value} vs {c.right_value})"
                    )
            for key, reason in report.unavailable.items():
                lines.append(f"  {key} ({Route.from_key(key).label}): unavailable ({reason})")
        return "\n".join(lines) + "\n"
