"""Elementary and complete symmetric functions over finite-field points.

Conventions used throughout the package live here:

    e_0 = 1,  e_t = 0 for t > (number of points)
    h_0 = 1,  h_t = 0 for t < 0

where e_t is the elementary symmetric function (sum of all t-element
products) and h_t the complete one (sum of all degree-t monomials).  The
complete functions are evaluated through the alternating recurrence

    sum_{i=0..N} (-1)^i e_i h_{N-i} = 0      (N >= 1),

which costs O(N * n) instead of enumerating monomials.

Also here: the ordered evaluation-point set type, the Cramer dual weights
u_i = prod_{j != i} (a_i - a_j)^{-1}, and the alternating parity weights
used by the closed-form parity-check rows.
"""

from __future__ import annotations

from .fields import Field, FieldElement


class EvalSet:
    """Ordered tuple of pairwise-distinct field elements."""

    __slots__ = ("field", "points", "values")

    def __init__(self, field: Field, points):
        elems = tuple(field.element(p) for p in points)
        vals = tuple(e.value for e in elems)
        if not 1 <= len(vals) <= field.q:
            raise ValueError(f"need between 1 and q={field.q} points, got {len(vals)}")
        if len(set(vals)) != len(vals):
            raise ValueError("evaluation points must be pairwise distinct")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "points", elems)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, *_):
        raise AttributeError("evaluation sets are immutable")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return (
            isinstance(other, EvalSet)
            and self.field == other.field
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.field, self.values))

    def __repr__(self):
        return f"EvalSet(q={self.field.q}, {list(self.values)})"

    def to_dict(self) -> dict:
        return {"field": self.field.spec_dict(), "points": list(self.values)}

    @staticmethod
    def from_dict(d: dict) -> "EvalSet":
        from .fields import field_from_spec

        return EvalSet(field_from_spec(d["field"]), d["points"])


def _point_values(points):
    """(field, canonical values) from an EvalSet or element sequence."""
    if isinstance(points, EvalSet):
        return points.field, points.values
    elems = list(points)
    if not elems:
        raise ValueError("need at least one point")
    field = elems[0].field
    return field, tuple(field.element(e).value for e in elems)


# ---------------------------------------------------------------------------
# int-level kernels (canonical values in, canonical value out)
# ---------------------------------------------------------------------------

def elementary_prefix(field: Field, vals, tmax: int) -> list[int]:
    """[e_0, e_1, ..., e_tmax] via the product expansion of prod(1 + a_i x).

    One pass over the points, truncated at degree tmax.
    """
    coeffs = [0] * (tmax + 1)
    coeffs[0] = 1
    top = 0
    for v in vals:
        top = min(top + 1, tmax)
        for t in range(top, 0, -1):
            coeffs[t] = field.add(coeffs[t], field.mul(v, coeffs[t - 1]))
    return coeffs


def elementary_values(field: Field, vals, t: int) -> int:
    if t < 0:
        raise ValueError("elementary symmetric functions need t >= 0")
    if t > len(vals):
        return 0
    return elementary_prefix(field, vals, t)[t]


def complete_values(field: Field, vals, t: int) -> int:
    if t < 0:
        return 0
    if t == 0:
        return 1
    n = len(vals)
    sigma = elementary_prefix(field, vals, min(t, n))
    h = [0] * (t + 1)
    h[0] = 1
    for big_n in range(1, t + 1):
        acc = 0
        for i in range(1, min(big_n, n) + 1):
            term = field.mul(sigma[i], h[big_n - i])
            acc = field.add(acc, term) if i % 2 else field.sub(acc, term)
        h[big_n] = acc
    return h[t]


def dual_weight_values(field: Field, vals) -> list[int]:
    out = []
    for i, a in enumerate(vals):
        prod = 1
        for j, b in enumerate(vals):
            if j != i:
                prod = field.mul(prod, field.sub(a, b))
        out.append(field.inv(prod))
    return out


def parity_weight_values(field: Field, vals, r: int, k: int) -> list[int]:
    """The alternating weights sum_{j=0..r} (-1)^j e_j a_i^{(n-k)+(r-1)-j}.

    One value per point; e_j is taken over the whole point set.  Raises when
    some exponent would go negative, i.e. outside the supported parameter
    range n > k.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    n = len(vals)
    base = (n - k) + (r - 1)
    if base - r < 0:
        raise ValueError(f"negative exponent: n-k-1 = {n - k - 1} < 0")
    sigma = elementary_prefix(field, vals, min(r, n))
    out = []
    for a in vals:
        acc = 0
        for j in range(r + 1):
            if j > n:
                break
            term = field.mul(sigma[j], field.pow(a, base - j))
            acc = field.sub(acc, term) if j % 2 else field.add(acc, term)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# element-level API
# ---------------------------------------------------------------------------

def elementary_symmetric(t: int, points) -> FieldElement:
    """e_t over the given points (EvalSet or sequence of elements)."""
    field, vals = _point_values(points)
    return FieldElement(field, elementary_values(field, vals, t))


def complete_homogeneous(t: int, points) -> FieldElement:
    """h_t over the given points; h_t = 0 for t < 0."""
    field, vals = _point_values(points)
    return FieldElement(field, complete_values(field, vals, t))


def dual_weights(points) -> list[FieldElement]:
    """Cramer weights u_i = prod_{j != i}(a_i - a_j)^{-1}, all nonzero."""
    field, vals = _point_values(points)
    if len(vals) < 2:
        raise ValueError("dual weights need at least two points")
    return [FieldElement(field, v) for v in dual_weight_values(field, vals)]


def parity_weight(r: int, index: int, points, k: int) -> FieldElement:
    """Alternating parity weight of the point at `index` (0-based)."""
    field, vals = _point_values(points)
    if not 0 <= index < len(vals):
        raise ValueError("index out of range")
    return FieldElement(field, parity_weight_values(field, vals, r, k)[index])
