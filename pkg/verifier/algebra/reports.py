"""
Check results and their two renderings: JSON lines and a plain table.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Optional

from ..exceptions import HeckeError

logger = logging.getLogger(__name__)

PASS, FAIL = 'ok', 'fail'


@dataclass
class CheckResult:
    """
    Outcome of one verification family.

    Fields:
        check: the name reported in every row
        passed: False once any row fails
        rows: report rows, each a flat dict with a ``status`` key
        failure: the first error recorded, re-raised by ``raise_for_failure``
    """
    check: str
    passed: bool = True
    rows: list = field(default_factory=list)
    failure: Optional[HeckeError] = None

    def add(self, ok=True, **values):
        row = {'check': self.check, **values, 'status': PASS if ok else FAIL}
        self.rows.append(row)
        if not ok:
            self.passed = False
        return row

    def fail(self, error, **values):
        """Record a failing row and keep the first error."""
        logger.warning('%s failed: %s', self.check, error)
        self.add(False, error=str(error), **values)
        if self.failure is None:
            self.failure = error

    def extend(self, other):
        self.rows.extend(other.rows)
        if not other.passed:
            self.passed = False
            if self.failure is None:
                self.failure = other.failure

    def raise_for_failure(self):
        if self.failure is not None:
            raise self.failure
        if not self.passed:
            raise HeckeError(f'{self.check} failed.')

    @property
    def counts(self):
        failed = sum(1 for row in self.rows if row['status'] == FAIL)
        return len(self.rows) - failed, failed


def summary_row(passed, failed):
    return {'summary': {'passed': passed, 'failed': failed}}


def json_lines(rows):
    """One canonical JSON document per row; key order is sorted."""
    return '\n'.join(json.dumps(row, sort_keys=True, default=str) for row in rows)


def render_table(rows):
    """Fixed-width table over the union of row keys, ``check`` first and ``status`` last."""
    if not rows:
        return ''
    keys = []
    for row in rows:
        for key in row:
            if key not in keys:
                keys.append(key)
    middle = sorted(k for k in keys if k not in ('check', 'status'))
    columns = [k for k in ('check',) if k in keys] + middle + [k for k in ('status',) if k in keys]
    cells = [[_cell(row.get(k, '')) for k in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ['  '.join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append('  '.join('-' * w for w in widths))
    lines.extend('  '.join(v.ljust(w) for v, w in zip(r, widths)) for r in cells)
    return '\n'.join(lines)


def _cell(value):
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True, default=str)
    return str(value)
