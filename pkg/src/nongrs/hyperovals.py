"""Hyperoval and o-polynomial checks over GF(2^m).

A function table f over GF(q), q = 2^m, defines the point set
{(1 : x : f(x))} plus the two frame points (0:1:0) and (0:0:1) in the
projective plane of order q.  The set is a hyperoval exactly when the
3 x (q+2) column matrix built from it generates an MDS code, i.e. when all
3 x 3 minors are nonsingular.  For monomial tables x^h with
gcd(h, q-1) = 1 this reduces to the complete symmetric function h_(h-2)
being nonzero on every distinct triple of field elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .codes import Certificate, GuardError
from .fields import BinaryField, Field
from .linalg import Matrix, det_ints
from .symfunc import complete_values

MAX_BRUTE_FORCE_M = 8   # C(q+2, 3) minors stay desk-scale up to here


@dataclass
class OMonomialReport:
    """Outcome of the triple test for one monomial exponent."""

    q: int
    h: int
    gcd_ok: bool
    verdict: str                       # "o-monomial" | "not"
    witness: tuple[int, int, int] | None = None

    def __post_init__(self):
        if self.verdict not in ("o-monomial", "not"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "not" and self.gcd_ok and self.witness is None:
            raise ValueError("a failing triple test must name a triple")

    @property
    def passed(self) -> bool:
        return self.verdict == "o-monomial"

    def to_dict(self) -> dict:
        out = {"q": self.q, "h": self.h, "gcdOk": self.gcd_ok, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _require_binary(field: Field) -> BinaryField:
    if field.kind != "gf2m":
        raise ValueError("hyperoval checks need a field of characteristic 2")
    return field


def _table_values(field: Field, table) -> list[int]:
    vals = [field.element(v).value for v in table]
    if len(vals) != field.q:
        raise ValueError(f"function table must list all {field.q} values")
    return vals


def monomial_table(field: Field, h: int) -> list[int]:
    """Value table of x^h over the whole field, canonical element order."""
    if h < 1:
        raise ValueError("need h >= 1")
    return [field.pow(x, h) for x in range(field.q)]


def hyperoval_matrix(field: Field, table) -> Matrix:
    """3 x (q+2) matrix with columns (1, x, f(x)) then (0,1,0) and (0,0,1)."""
    _require_binary(field)
    vals = _table_values(field, table)
    cols = [[1, x, fx] for x, fx in enumerate(vals)]
    cols.append([0, 1, 0])
    cols.append([0, 0, 1])
    return Matrix(field, [[c[i] for c in cols] for i in range(3)])


def is_o_polynomial(field: Field, table) -> Certificate:
    """Brute-force hyperoval test: every 3 x 3 minor must be nonsingular.

    Works on arbitrary value tables, so non-monomial candidates can be
    tested too.  A failing certificate names the first collinear column
    triple in canonical order.
    """
    f = _require_binary(field)
    if f.m > MAX_BRUTE_FORCE_M:
        raise GuardError(f"brute-force minors are capped at m <= {MAX_BRUTE_FORCE_M}")
    mat = hyperoval_matrix(f, table)
    params = {"field": f.spec_dict(), "q": f.q}
    cols = [mat.column(j) for j in range(mat.cols)]
    for subset in itertools.combinations(range(mat.cols), 3):
        rows = [[cols[c][i] for c in subset] for i in range(3)]
        if det_ints(f, rows) == 0:
            return Certificate(
                "fail", "o-monomial", {"columns": list(subset)}, params
            )
    return Certificate("pass", "o-monomial", None, params)


def is_o_monomial(field: Field, h: int) -> OMonomialReport:
    """Triple test for x^h: h_(h-2) nonzero on all distinct triples.

    When gcd(h, q-1) != 1 the characterization does not apply and the
    monomial is reported "not" without sweeping (the map is not even a
    bijection then).
    """
    f = _require_binary(field)
    if h < 1:
        raise ValueError("need h >= 1")
    q = f.q
    if gcd(h, q - 1) != 1:
        return OMonomialReport(q, h, False, "not")
    for triple in itertools.combinations(range(q), 3):
        if complete_values(f, triple, h - 2) == 0:
            return OMonomialReport(q, h, True, "not", triple)
    return OMonomialReport(q, h, True, "o-monomial")


def enumerate_o_monomials(m: int, poly: int | None = None) -> list[OMonomialReport]:
    """Reports for every exponent h in 1..q-2 over GF(2^m)."""
    if not 1 <= m <= MAX_BRUTE_FORCE_M:
        raise ValueError(f"need 1 <= m <= {MAX_BRUTE_FORCE_M}")
    field = BinaryField(m, poly)
    return [is_o_monomial(field, h) for h in range(1, field.q - 1)]
