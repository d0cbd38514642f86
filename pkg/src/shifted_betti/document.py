"""JSON ideal documents.

    {"n": 4, "partitions": [[1,1,2,2], [0,2,2,2], [0,1,2,3]]}

Partitions are non-decreasing.  A document may instead carry an explicit
``"monomials"`` list of exponent vectors (the output of ``gens``).
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass

from .errors import PreconditionError, ValidationError
from .ideal import SymmetricIdeal, normalize
from .monomials import as_monomial, minimalize, orbit
from .partitions import as_partition, part


@dataclass(frozen=True)
class IdealDocument:
    n: int
    partitions: tuple[tuple[int, ...], ...] | None = None
    monomials: tuple[tuple[int, ...], ...] | None = None

    def to_ideal(self) -> SymmetricIdeal:
        if self.partitions is not None:
            return normalize(self.n, self.partitions)
        gens = minimalize(self.monomials)
        lambdas = sorted({part(u) for u in gens})
        if sorted(u for lam in lambdas for u in orbit(lam)) != gens:
            raise PreconditionError("the monomial list does not generate an S_n-fixed ideal")
        return normalize(self.n, lambdas)

    def oracle_source(self):
        return self.to_ideal() if self.partitions is not None else list(self.monomials)


def parse_document(text: str) -> IdealDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError('"n" must be a positive integer')
    has_p, has_m = "partitions" in doc, "monomials" in doc
    if has_p == has_m:
        raise ValidationError('document needs exactly one of "partitions" or "monomials"')
    key = "partitions" if has_p else "monomials"
    raw = doc[key]
    if not isinstance(raw, list):
        raise ValidationError(f'"{key}" must be a list')
    items = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in entry
        ):
            raise ValidationError(f"{key}[{idx}] must be a list of integers")
        try:
            items.append(as_partition(entry, n) if has_p else as_monomial(entry, n))
        except ValidationError as exc:
            raise ValidationError(f"{key}[{idx}]: {exc}") from None
    if has_p:
        return IdealDocument(n, partitions=tuple(items))
    return IdealDocument(n, monomials=tuple(items))


def load_document(path: str) -> IdealDocument:
    if path == "-":
        return parse_document(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def dump_ideal(ideal: SymmetricIdeal) -> str:
    return json.dumps({"n": ideal.n, "partitions": [list(lam) for lam in ideal.generators]})
