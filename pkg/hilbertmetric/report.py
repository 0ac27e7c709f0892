# -*- coding: utf-8 -*-

"""
Reports
=======

A :py:class:`MetricReport` collects named metric values and inequality
margins. Every margin is stored as ``bound - value``, so a nonnegative margin
means the inequality holds. Residual checks of the form
``residual < limit`` are stored as the margin ``limit - residual``.

.. code-block:: python

    >>> report = MetricReport('midpoint', anchor='hyperbolic midpoint of the segment',
    ...                       statement='the hyperbolic midpoint halves [tangent meet, chord foot]')
    >>> report.add_metric('rho', 1.0986)
    >>> report.add_residual('midpoint', 3e-16, limit=1e-9)
    >>> report.ok
    True

Reports render as ``key: value`` text, as JSON, or as a rich table.

----

API
---
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional

import rich.console
import rich.table

from .json import ReportJSONEncoder, format_float

__all__ = (
    'MetricReport',
    'reports_to_json',
    'reports_to_table',
    'console',
)

#: Console for progress bars and tables, on stderr
console = rich.console.Console(stderr=True)


@dataclass
class MetricReport:
    """
    :param name: Short identifier, also used as the suite name by the verifier
    :param anchor: Quote identifying the statement being checked
    :param statement: The checked formula, written out
    """
    name: str
    anchor: str = ''
    statement: str = ''
    metrics: Dict[str, float] = field(default_factory=dict)
    margins: Dict[str, float] = field(default_factory=dict)
    tolerances: Dict[str, float] = field(default_factory=dict)
    notes: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    budget: Optional[int] = None
    samples: Optional[int] = None

    def add_metric(self, key: str, value: float):
        self.metrics[key] = float(value)

    def add_margin(self, key: str, margin: float, tolerance: float = 0.0):
        """
        Record ``bound - value``. The inequality passes when the margin is
        at least ``-tolerance``. Repeated keys keep the worst margin.
        """
        margin = float(margin)
        if key in self.margins:
            margin = min(margin, self.margins[key])
        self.margins[key] = margin
        self.tolerances[key] = float(tolerance)

    def add_residual(self, key: str, residual: float, limit: float):
        self.add_margin(key, limit - float(residual))

    def add_note(self, key: str, value: Any):
        """Exploratory data that never affects :py:attr:`ok`."""
        self.notes[key] = value

    @property
    def passed(self) -> Dict[str, bool]:
        return {key: margin >= -self.tolerances.get(key, 0.0) for key, margin in self.margins.items()}

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    @property
    def worst_margin(self) -> Optional[float]:
        return min(self.margins.values()) if self.margins else None

    def merge(self, other: 'MetricReport', prefix: str = ''):
        for key, value in other.metrics.items():
            self.add_metric(prefix + key, value)
        for key, value in other.margins.items():
            self.add_margin(prefix + key, value, other.tolerances.get(key, 0.0))
        for key, value in other.notes.items():
            self.add_note(prefix + key, value)

    def to_dict(self) -> dict:
        document = {
            'name': self.name,
            'anchor': self.anchor,
            'statement': self.statement,
            'metrics': self.metrics,
            'margins': self.margins,
            'pass': self.passed,
            'seed': self.seed,
            'budget': self.budget,
        }
        if self.samples is not None:
            document['samples'] = self.samples
        if self.notes:
            document['notes'] = self.notes
        return document

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), cls=ReportJSONEncoder, indent=indent)

    def to_text(self) -> str:
        lines = ['report: {0}'.format(self.name)]
        if self.anchor:
            lines.append('anchor: {0}'.format(self.anchor))
        if self.statement:
            lines.append('statement: {0}'.format(self.statement))
        for key in ('seed', 'budget', 'samples'):
            value = getattr(self, key)
            if value is not None:
                lines.append('{0}: {1}'.format(key, value))
        for key, value in self.metrics.items():
            lines.append('{0}: {1}'.format(key, format_float(value)))
        for key, value in self.margins.items():
            lines.append('margin {0}: {1}'.format(key, format_float(value)))
        for key, value in self.passed.items():
            lines.append('pass {0}: {1}'.format(key, 'yes' if value else 'NO'))
        for key, value in self.notes.items():
            text = format_float(value) if isinstance(value, float) else str(value)
            lines.append('note {0}: {1}'.format(key, text))
        return '\n'.join(lines) + '\n'


def reports_to_json(reports: Iterable[MetricReport], indent: Optional[int] = 2, **extra) -> str:
    document = dict(extra)
    document['reports'] = [r.to_dict() for r in reports]
    return json.dumps(document, cls=ReportJSONEncoder, indent=indent)


def reports_to_table(reports: Iterable[MetricReport], title: str = 'Verification') -> rich.table.Table:
    """One row per report: name, worst margin, result and anchor quote."""
    table = rich.table.Table(title=title)
    table.add_column('Suite')
    table.add_column('Worst margin', justify='right')
    table.add_column('Result')
    table.add_column('Anchor')
    for r in reports:
        worst = r.worst_margin
        table.add_row(r.name, format_float(worst) if worst is not None else '-',
                      '[green]pass' if r.ok else '[red]FAIL', r.anchor)
    return table
