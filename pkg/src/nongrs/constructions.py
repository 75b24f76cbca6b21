"""The three evaluation-code families and their symmetric-function conditions.

The base family evaluates polynomials of degree up to k whose degree-(k-r)
coefficient is forced to zero, on n distinct field points.  Appending the
column (0,...,0,1) gives the one-column extension; appending additionally
(0,...,0,1,delta) gives the two-column extension.  MDS-ness of each family
is equivalent to a small set of subset conditions on elementary symmetric
functions; those conditions, the closed-form parity-check matrices, and the
explicit extension vectors linking the three families all live here.

Subset-quantified conditions are checked over unordered subsets in a fixed
canonical order (lexicographic by ascending canonical element values), and
a failing certificate always carries the first violating subset, so results
are byte-stable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .codes import Certificate, LinearCode
from .fields import Field, FieldElement, field_from_spec
from .linalg import Matrix, row_space_equal  # noqa: F401  (re-exported)
from .symfunc import (
    EvalSet,
    complete_values,
    dual_weight_values,
    elementary_prefix,
    elementary_values,
    parity_weight_values,
)

FAMILIES = ("crk", "c1", "c2")
CONDITION_NAMES = ("star", "star2", "star3", "hash", "r1delta")


@dataclass(frozen=True)
class ConstructionParams:
    family: str
    points: EvalSet
    k: int
    r: int
    delta: FieldElement | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not 1 <= self.r <= self.k - 1:
            raise ValueError(f"need 1 <= r <= k-1, got r={self.r}, k={self.k}")
        n = len(self.points)
        if not self.k < n <= self.points.field.q:
            raise ValueError(f"need k < n <= q, got k={self.k}, n={n}")
        if (self.delta is not None) != (self.family == "c2"):
            raise ValueError("delta is required for family c2 and only there")
        if self.delta is not None and self.delta.field != self.points.field:
            raise ValueError("delta must live in the evaluation field")

    @property
    def field(self) -> Field:
        return self.points.field

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def theorem_range(self) -> bool:
        """Whether 6 <= 2k <= n, the range of the non-GRS statements."""
        return 6 <= 2 * self.k <= self.n

    def base_params(self) -> dict:
        """JSON-safe parameter echo carried by certificates."""
        f = self.field
        out = {
            "family": self.family.upper(),
            "alphas": list(self.points.values),
            "k": self.k,
            "r": self.r,
            "theorem_range": self.theorem_range,
        }
        if f.kind == "prime":
            out["q"] = f.q
        else:
            out["field"] = f.spec_dict()
        if self.delta is not None:
            out["delta"] = self.delta.value
        return out

    def to_dict(self) -> dict:
        d = self.base_params()
        del d["theorem_range"]
        return d

    @staticmethod
    def from_dict(d: dict) -> "ConstructionParams":
        if "q" in d:
            field = field_from_spec({"kind": "prime", "p": d["q"]})
        else:
            field = field_from_spec(d["field"])
        family = d["family"].lower()
        delta = field.element(d["delta"]) if "delta" in d and d["delta"] is not None else None
        return ConstructionParams(
            family, EvalSet(field, d["alphas"]), d["k"], d["r"], delta
        )


def _exponents(k: int, r: int) -> list[int]:
    return list(range(k - r)) + list(range(k - r + 1, k + 1))


def generator_matrix(p: ConstructionParams) -> Matrix:
    """Exact generator of the requested family, rows by ascending exponent."""
    f = p.field
    exps = _exponents(p.k, p.r)
    rows = [[f.pow(a, e) for a in p.points.values] for e in exps]
    if p.family in ("c1", "c2"):
        for i, row in enumerate(rows):
            row.append(1 if i == p.k - 1 else 0)
    if p.family == "c2":
        for i, row in enumerate(rows):
            if i == p.k - 2:
                row.append(1)
            elif i == p.k - 1:
                row.append(p.delta.value)
            else:
                row.append(0)
    return Matrix(f, rows)


def parity_matrix(p: ConstructionParams) -> Matrix:
    """Closed-form parity check built from dual weights and parity weights."""
    f = p.field
    vals = p.points.values
    n, k, r = p.n, p.k, p.r
    u = dual_weight_values(f, vals)
    lam = parity_weight_values(f, vals, r, k)
    rows = [[f.mul(u[i], f.pow(vals[i], t)) for i in range(n)] for t in range(n - k - 1)]
    rows.append([f.mul(u[i], lam[i]) for i in range(n)])
    if p.family == "crk":
        return Matrix(f, rows)
    for row in rows:
        row.append(0)
    rows.append(
        [f.mul(u[i], f.pow(vals[i], n - k - 1)) for i in range(n)] + [f.neg(1)]
    )
    if p.family == "c1":
        return Matrix(f, rows)
    for row in rows:
        row.append(0)
    if r >= 2:
        b = f.sub(p.delta.value, elementary_values(f, vals, 1))
        last = [f.mul(u[i], f.pow(vals[i], n - k)) for i in range(n)] + [b, f.neg(1)]
    else:
        b = f.sub(p.delta.value, complete_values(f, vals, 2))
        last = [f.mul(u[i], f.pow(vals[i], n - k + 1)) for i in range(n)] + [b, f.neg(1)]
    rows.append(last)
    return Matrix(f, rows)


def code(p: ConstructionParams) -> LinearCode:
    return LinearCode(generator_matrix(p))


# ---------------------------------------------------------------------------
# subset conditions
# ---------------------------------------------------------------------------

def _subset_condition(name, sorted_vals, size, check):
    """Shared sweep: first failing subset (canonical order) or pass."""
    for subset in itertools.combinations(sorted_vals, size):
        if not check(subset):
            return Certificate(
                "fail", "condition",
                {"subset": list(subset)},
                {"condition": name},
            )
    return Certificate("pass", "condition", None, {"condition": name})


def check_condition(name: str, p: ConstructionParams) -> Certificate:
    """Evaluate one named subset condition over the evaluation points.

    star     : e_r nonzero on every k-subset
    star2    : e_(r-1) nonzero on every (k-1)-subset (vacuous for r = 1)
    star3    : e_(r-2) nonzero on every (k-2)-subset (vacuous for r <= 2)
    hash     : delta*e_(r-1) - e_1*e_(r-1) + e_r nonzero on every
               (k-1)-subset (needs delta, r >= 2)
    r1delta  : delta - e_1^2 + e_2 nonzero on every (k-1)-subset
               (needs delta, r = 1)
    """
    f = p.field
    k, r = p.k, p.r
    sorted_vals = tuple(sorted(p.points.values))
    meta = p.base_params()
    meta["condition"] = name

    def esp(vals, t):
        return elementary_values(f, vals, t)

    if name == "star":
        cert = _subset_condition(name, sorted_vals, k, lambda s: esp(s, r) != 0)
    elif name == "star2":
        if r == 1:
            cert = Certificate("pass", "condition", None, {"condition": name, "vacuous": True})
            meta["vacuous"] = True
        else:
            cert = _subset_condition(name, sorted_vals, k - 1, lambda s: esp(s, r - 1) != 0)
    elif name == "star3":
        if r <= 2:
            cert = Certificate("pass", "condition", None, {"condition": name, "vacuous": True})
            meta["vacuous"] = True
        else:
            cert = _subset_condition(name, sorted_vals, k - 2, lambda s: esp(s, r - 2) != 0)
    elif name == "hash":
        if p.delta is None:
            raise ValueError("condition 'hash' needs delta")
        if r < 2:
            raise ValueError("condition 'hash' applies to r >= 2 only")
        d = p.delta.value

        def hash_ok(s):
            sig = elementary_prefix(f, s, min(r, len(s)))
            e_rm1 = sig[r - 1] if r - 1 <= len(s) else 0
            e_r = sig[r] if r <= len(s) else 0
            e_1 = sig[1]
            val = f.add(f.mul(f.sub(d, e_1), e_rm1), e_r)
            return val != 0

        cert = _subset_condition(name, sorted_vals, k - 1, hash_ok)
    elif name == "r1delta":
        if p.delta is None:
            raise ValueError("condition 'r1delta' needs delta")
        if r != 1:
            raise ValueError("condition 'r1delta' applies to r = 1 only")
        d = p.delta.value

        def r1_ok(s):
            sig = elementary_prefix(f, s, min(2, len(s)))
            e_1 = sig[1]
            e_2 = sig[2] if len(s) >= 2 else 0
            val = f.add(f.sub(d, f.mul(e_1, e_1)), e_2)
            return val != 0

        cert = _subset_condition(name, sorted_vals, k - 1, r1_ok)
    else:
        raise ValueError(f"unknown condition {name!r}")
    cert.params = meta
    return cert


def mds_condition_names(family: str, r: int) -> list[str]:
    """Conditions whose conjunction is equivalent to MDS-ness of the family."""
    if family == "crk":
        return ["star"]
    if family == "c1":
        return ["star", "star2"]
    if family == "c2":
        return ["star", "r1delta"] if r == 1 else ["star", "star2", "star3", "hash"]
    raise ValueError(f"unknown family {family!r}")


@dataclass
class DeltaSweep:
    """Outcome of sweeping delta over the whole field."""

    prerequisites: list[Certificate]
    per_delta: list[Certificate]

    @property
    def prerequisites_ok(self) -> bool:
        return all(c.passed for c in self.prerequisites)

    @property
    def deltas(self) -> list[int] | None:
        """Admissible delta values, or None when a prerequisite failed."""
        if not self.prerequisites_ok:
            return None
        return [c.params["delta"] for c in self.per_delta if c.passed]


def admissible_deltas(points: EvalSet, k: int, r: int) -> DeltaSweep:
    """All delta making the two-column extension MDS (given prerequisites).

    The delta-free conditions are checked first; when one fails no delta can
    work and the sweep is skipped (reported via the prerequisite
    certificates).
    """
    field = points.field
    probe = ConstructionParams("crk", points, k, r)
    prereq_names = ["star", "star2", "star3"]
    prereqs = [check_condition(nm, probe) for nm in prereq_names]
    if not all(c.passed for c in prereqs):
        return DeltaSweep(prereqs, [])
    final = "r1delta" if r == 1 else "hash"
    per_delta = []
    for d in field.elements():
        p2 = ConstructionParams("c2", points, k, r, d)
        cert = check_condition(final, p2)
        per_delta.append(cert)
    return DeltaSweep(prereqs, per_delta)


# ---------------------------------------------------------------------------
# extension vectors and evaluation encoding
# ---------------------------------------------------------------------------

def extension_vector(stage: str, p: ConstructionParams) -> list[FieldElement]:
    """The explicit vector whose extension produces the next family.

    stage "c1": w in F^n supported on the first k+1 coordinates with
    G w^T = (0,...,0,1)^T over the base generator.  stage "c2": w in
    F^(n+1) with G1 w^T = (0,...,0,1,delta)^T.  The result is verified by
    substitution before returning.
    """
    f = p.field
    vals = p.points.values
    n, k = p.n, p.k
    if stage == "c1":
        head = dual_weight_values(f, vals[: k + 1])
        w = head + [0] * (n - k - 1)
        base = ConstructionParams("crk", p.points, k, p.r)
        got = [e.value for e in generator_matrix(base).vec_mul(w)]
        want = [0] * (k - 1) + [1]
    elif stage == "c2":
        if p.delta is None:
            raise ValueError("stage c2 needs delta")
        head = dual_weight_values(f, vals[:k])
        tail = 0
        for i in range(k):
            tail = f.add(tail, f.mul(f.pow(vals[i], k), head[i]))
        w = head + [0] * (n - k) + [f.sub(p.delta.value, tail)]
        mid = ConstructionParams("c1", p.points, k, p.r)
        got = [e.value for e in generator_matrix(mid).vec_mul(w)]
        want = [0] * (k - 2) + [1, p.delta.value]
    else:
        raise ValueError(f"unknown stage {stage!r}")
    if got != want:
        raise RuntimeError("extension vector failed its substitution check")
    return [FieldElement(f, v) for v in w]


def encode_polynomial(coeffs: dict, p: ConstructionParams) -> list[FieldElement]:
    """Codeword of the sparse polynomial under the family's evaluation map.

    coeffs maps degree -> coefficient; the degree k-r must be absent and no
    degree may exceed k.  Appended coordinates follow the family: the top
    coefficient for the one-column extension, then (next coefficient +
    delta * top) for the two-column one, where "next" is degree k-1 for
    r > 1 and k-2 for r = 1.
    """
    f = p.field
    k, r = p.k, p.r
    allowed = set(_exponents(k, r))
    cmap = {}
    for deg, c in coeffs.items():
        if deg not in allowed:
            raise ValueError(f"degree {deg} is outside the allowed gap pattern")
        cmap[deg] = f.element(c).value
    word = []
    for a in p.points.values:
        acc = 0
        for deg, c in cmap.items():
            acc = f.add(acc, f.mul(c, f.pow(a, deg)))
        word.append(acc)
    if p.family in ("c1", "c2"):
        word.append(cmap.get(k, 0))
    if p.family == "c2":
        j = 1 if r > 1 else 2
        word.append(f.add(cmap.get(k - j, 0), f.mul(p.delta.value, cmap.get(k, 0))))
    return [FieldElement(f, v) for v in word]


# ---------------------------------------------------------------------------
# evaluation-set search
# ---------------------------------------------------------------------------

SEARCH_STRATEGIES = ("consecutive", "exhaustive", "randomized")
_RANDOM_ATTEMPT_FACTOR = 200


def search_eval_sets(
    field: Field,
    n: int,
    k: int,
    r: int,
    strategy: str = "consecutive",
    required=("star",),
    limit: int = 1,
    seed: int | None = None,
) -> list[EvalSet]:
    """Evaluation sets passing all required delta-free conditions.

    consecutive tries only (0, 1, ..., n-1); exhaustive walks all n-subsets
    of the field in canonical order; randomized draws seeded samples (sets
    are deduplicated, at most 200 * limit draws).  An empty result is legal.
    """
    if strategy not in SEARCH_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    bad = [c for c in required if c not in ("star", "star2", "star3")]
    if bad:
        raise ValueError(f"search supports delta-free conditions only, got {bad}")
    if n > field.q:
        raise ValueError("need n <= q")

    def passes(vals) -> EvalSet | None:
        es = EvalSet(field, vals)
        p = ConstructionParams("crk", es, k, r)
        if all(check_condition(c, p).passed for c in required):
            return es
        return None

    found = []
    if strategy == "consecutive":
        hit = passes(range(n))
        if hit is not None:
            found.append(hit)
    elif strategy == "exhaustive":
        for combo in itertools.combinations(range(field.q), n):
            hit = passes(combo)
            if hit is not None:
                found.append(hit)
                if len(found) >= limit:
                    break
    else:
        rng = random.Random(seed)
        seen = set()
        for _ in range(_RANDOM_ATTEMPT_FACTOR * max(limit, 1)):
            vals = tuple(sorted(rng.sample(range(field.q), n)))
            if vals in seen:
                continue
            seen.add(vals)
            hit = passes(vals)
            if hit is not None:
                found.append(hit)
                if len(found) >= limit:
                    break
    return found[:limit]
