"""
Operator files and the ``--q`` parameter format.

An operator file is a JSON object::

    {"dim": 2, "q": "4", "label": "standard(2)",
     "entries": [[i, j, k, l, "<scalar>"], ...],
     "family": {"name": "standard", "dim": 2, "p": "2"}}

``entries`` lists the nonzero R^{kl}_{ij} with 0-based indices. ``label`` and
``family`` are optional; ``family`` lets the loader rebuild the operator at
another parameter.
"""
import json
import logging
from pathlib import Path

import sympy

from . import exact
from .operators import check_operator, from_entries, rebuild
from ..exceptions import OperatorFileError, ParameterMismatch, ScalarParseError

logger = logging.getLogger(__name__)

SYMBOLIC_FLAG = 'sym'
FAMILY_NAMES = ('standard', 'super', 'superflip', 'flip')


def parse_q(text):
    """
    Read a ``--q`` value.

    Returns (field, q) where q is None for the symbolic backend and the
    rational Hecke eigenvalue otherwise.

    Raises:
        ScalarParseError: for anything that is neither ``sym`` nor a nonzero rational.
    """
    if text is None:
        return exact.RATIONAL, None
    text = str(text).strip()
    if text.lower() == SYMBOLIC_FLAG:
        return exact.SYMBOLIC, None
    q = exact.RATIONAL.parse(text)
    if exact.RATIONAL.is_zero(q):
        raise ScalarParseError('The parameter q must be nonzero.')
    return exact.RATIONAL, q


def square_root(field, q):
    """The positive rational p with p² = q."""
    root = sympy.sqrt(field.domain.to_sympy(q))
    if not root.is_Rational:
        raise ScalarParseError(
            f'q = {field.format(q)} has no rational square root; family operators take q = p².'
        )
    return field(root)


def resolve_path(name, operator_dir=None):
    """
    Find an operator file by path, falling back to the bundled directory.

    Raises:
        OperatorFileError: if neither location holds the file.
    """
    path = Path(name)
    if path.is_file():
        return path
    if operator_dir:
        for candidate in (Path(operator_dir) / name, Path(operator_dir) / f'{name}.json'):
            if candidate.is_file():
                return candidate
    raise OperatorFileError(f'Operator file "{name}" not found.')


def read_operator_file(path):
    """Parse and schema-check the JSON document; no algebra is done here."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise OperatorFileError(f'Cannot read operator file {path}: {exc}') from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OperatorFileError(f'{path} is not valid JSON: {exc}') from exc
    _check_schema(data, path)
    return data


def _check_schema(data, path):
    if not isinstance(data, dict):
        raise OperatorFileError(f'{path}: the top level must be an object.')
    for key in ('dim', 'q', 'entries'):
        if key not in data:
            raise OperatorFileError(f'{path}: missing key "{key}".')
    dim = data['dim']
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise OperatorFileError(f'{path}: "dim" must be a positive integer.')
    if not isinstance(data['q'], (str, int)):
        raise OperatorFileError(f'{path}: "q" must be a scalar string.')
    if not isinstance(data['entries'], list):
        raise OperatorFileError(f'{path}: "entries" must be a list.')

    seen = set()
    for position, entry in enumerate(data['entries']):
        if not isinstance(entry, list) or len(entry) != 5:
            raise OperatorFileError(f'{path}: entry {position} must be [i, j, k, l, value].')
        indices = entry[:4]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in indices):
            raise OperatorFileError(f'{path}: entry {position} has non-integer indices.')
        if any(x < 0 or x >= dim for x in indices):
            raise OperatorFileError(f'{path}: entry {position} indices {indices} leave 0..{dim - 1}.')
        if tuple(indices) in seen:
            raise OperatorFileError(f'{path}: entry {indices} is listed twice.')
        seen.add(tuple(indices))

    family = data.get('family')
    if family is not None:
        if not isinstance(family, dict) or family.get('name') not in FAMILY_NAMES:
            raise OperatorFileError(f'{path}: "family" must name one of {", ".join(FAMILY_NAMES)}.')


def operator_from_data(data, field, label=None):
    """Build the HeckeOp exactly as listed, without validation."""
    try:
        q = field.parse(data['q'])
        entries = [(i, j, k, l, field.parse(v)) for i, j, k, l, v in data['entries']]
    except ScalarParseError as exc:
        raise OperatorFileError(f'{label or "operator"}: {exc}') from exc
    return from_entries(
        data['dim'], q, entries, field,
        label=data.get('label', label or 'custom'),
        family=data.get('family'),
    )


def load_operator(path, q_text=None, operator_dir=None, validate=True):
    """
    Load, optionally re-parametrize, and validate an operator file.

    ``q_text`` follows the ``--q`` flag: None keeps the file's parameter,
    ``sym`` rebuilds a family operator at the symbolic parameter, and a
    rational q rebuilds it at p = √q. With ``validate`` off the
    Yang-Baxter and Hecke checks are left to the caller.

    Raises:
        OperatorFileError: for missing, unreadable or malformed files.
        ParameterMismatch: if a new parameter is asked of an operator with no family.
        YangBaxterViolation, HeckeEquationViolation: if the operator is invalid.
    """
    path = resolve_path(path, operator_dir)
    data = read_operator_file(path)
    field, q = parse_q(q_text)
    op = operator_from_data(data, field, label=path.stem)
    family = data.get('family')

    if q_text is not None and (field.symbolic or q != op.q):
        if family is None:
            raise ParameterMismatch(
                f'{path.name} has no family, so it cannot be rebuilt at q = {q_text}.'
            )
        p = field.generator if field.symbolic else square_root(field, q)
        op = rebuild(family, field, p)
        logger.info('Rebuilt %s at q = %s', path.name, field.format(op.q))
    elif family is not None and rebuild(family, field) != op:
        logger.warning('%s: entries differ from family %s; loading them as given', path.name, family['name'])
        op.family = None

    if validate:
        check_operator(op)
    logger.debug('Loaded %r from %s', op, path)
    return op


def dump_operator(op, path=None):
    """
    Serialize to the operator file format; write to ``path`` when given.

    Returns the JSON text.
    """
    data = {
        'dim': op.dim,
        'q': op.field.format(op.q),
        'label': op.label,
        'entries': [[i, j, k, l, op.field.format(v)] for i, j, k, l, v in op.nonzero_entries()],
    }
    if op.family is not None:
        data['family'] = op.family
    text = json.dumps(data, indent=2)
    if path is not None:
        Path(path).write_text(text + '\n', encoding='utf-8')
    return text
