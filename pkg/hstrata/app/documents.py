"""
FormSpaceDocument: the JSON file format for a subspace V of R_j.

    {"field": "rational" | {"prime": p}, "j": 6, "forms": [[...], ...]}

Entry i of a row is the coefficient of x^(j-i) y^i. Rationals are written
as "num/den" strings, modular coefficients as integers.
"""

import json
import logging
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List

from hstrata.models.errors import InputError
from hstrata.models.fields import Field, field_from_spec
from hstrata.models.forms import FormSpace
from hstrata.utils.linalg import Matrix, rank

logger = logging.getLogger(__name__)


@dataclass
class FormSpaceDocument:
    field: Field
    j: int
    rows: List[List]
    meta: Dict[str, Any] = dc_field(default_factory=dict)

    def space(self) -> FormSpace:
        return FormSpace.span(self.field, self.j, self.rows)

    def to_json(self) -> Dict[str, Any]:
        doc = {
            'field': self.field.describe(),
            'j': self.j,
            'forms': [[self.field.encode(x) for x in row] for row in self.rows],
        }
        if self.meta:
            doc['meta'] = self.meta
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def from_space(V: FormSpace, meta: Dict[str, Any] = None) -> FormSpaceDocument:
    return FormSpaceDocument(V.field, V.j, [list(r) for r in V.basis.entries], dict(meta or {}))


def parse_document(raw: Dict[str, Any], default_prime: int) -> FormSpaceDocument:
    if not isinstance(raw, dict):
        raise InputError("document must be a JSON object")
    missing = [k for k in ('j', 'forms') if k not in raw]
    if missing:
        raise InputError(f"document is missing {', '.join(missing)}")
    field = field_from_spec(raw.get('field'), default_prime)
    j = raw['j']
    if isinstance(j, bool) or not isinstance(j, int) or j < 0:
        raise InputError(f"j must be a non-negative integer, got {j!r}")
    forms = raw['forms']
    if not isinstance(forms, list) or not forms:
        raise InputError("forms must be a non-empty list of coefficient rows")

    rows = []
    for k, row in enumerate(forms):
        if not isinstance(row, list):
            raise InputError(f"row {k} is not a list")
        if len(row) != j + 1:
            raise InputError(f"row {k} has {len(row)} coefficients, expected j+1 = {j + 1}")
        try:
            rows.append([field.decode(x) for x in row])
        except InputError as e:
            raise InputError(f"row {k}: {e}") from e
        if rank(Matrix(field, rows, j + 1)) < len(rows):
            raise InputError(f"row {k} is linearly dependent on the rows before it")
    return FormSpaceDocument(field, j, rows, dict(raw.get('meta') or {}))


def loads(text: str, default_prime: int) -> FormSpaceDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from e
    doc = parse_document(raw, default_prime)
    logger.debug(f"loaded document: j={doc.j}, {len(doc.rows)} rows over {doc.field!r}")
    return doc
