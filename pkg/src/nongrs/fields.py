"""Exact arithmetic in GF(p) and GF(2^m).

Elements are stored as canonical integers.  In a prime field the canonical
value is the representative in [0, p).  In a binary extension field it is an
m-bit mask: bit i carries the coefficient of x^i, and products are reduced
modulo a fixed degree-m irreducible polynomial, itself given as a bitmask
with bit m set.  Enumeration order is always ascending canonical value, so
0 comes first; every routine that walks "all subsets" elsewhere inherits
this order.

Two field handles compare equal iff they have identical specs, and elements
of distinct fields never mix: any cross-field operation raises ValueError.
"""

from __future__ import annotations

import math

# Largest prime modulus accepted; bigger moduli are out of scope.
MAX_PRIME_BITS = 64

# Smallest (by bitmask value) irreducible polynomial of each degree, used
# when the caller does not supply one.  Bit i is the coefficient of x^i.
DEFAULT_GF2_POLYS = {
    1: 0b10,          # x
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0b100011011,   # x^8 + x^4 + x^3 + x + 1
}

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 2^64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def gf2_degree(mask: int) -> int:
    return mask.bit_length() - 1


def gf2_mod(a: int, m: int) -> int:
    """Remainder of the GF(2)[x] division a mod m (both bitmasks)."""
    dm = gf2_degree(m)
    while a and gf2_degree(a) >= dm:
        a ^= m << (gf2_degree(a) - dm)
    return a


def gf2_is_irreducible(f: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(f)/2."""
    d = gf2_degree(f)
    if d < 1:
        return False
    for g in range(2, 1 << (d // 2 + 1)):
        if gf2_degree(g) >= 1 and gf2_mod(f, g) == 0:
            return False
    return True


class Field:
    """Common interface of the two field kinds.

    The int-valued methods (add, sub, mul, ...) operate directly on canonical
    values and are the fast path used by the linear-algebra kernels; the
    FieldElement wrapper delegates to them.
    """

    kind: str
    q: int

    # -- int-level arithmetic, implemented by subclasses -----------------
    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def canon(self, v: int) -> int:
        """Reduce an arbitrary integer to its canonical representative."""
        raise NotImplementedError

    def pow(self, a: int, e: int) -> int:
        """a^e for e >= 0, with 0^0 = 1 and 0^e = 0 for e > 0.

        For nonzero a the exponent is first reduced mod q-1, so arbitrarily
        large exponents cost one modular reduction.
        """
        raise NotImplementedError

    # -- elements ---------------------------------------------------------
    def element(self, v) -> "FieldElement":
        if isinstance(v, FieldElement):
            if v.field != self:
                raise ValueError("element belongs to a different field")
            return v
        return FieldElement(self, self.canon(int(v)))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        """All q elements, ascending canonical value (0 first)."""
        return [FieldElement(self, v) for v in range(self.q)]

    # -- spec (de)serialization --------------------------------------------
    def spec_dict(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec_dict() == other.spec_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.spec_dict().items())))


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if p.bit_length() > MAX_PRIME_BITS:
            raise ValueError(f"prime modulus must fit in {MAX_PRIME_BITS} bits")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.q = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def canon(self, v):
        return v % self.p

    def pow(self, a, e):
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if e == 0 else 0
        if self.p == 2:
            return 1
        return pow(a, e % (self.p - 1), self.p)

    def spec_dict(self):
        return {"kind": "prime", "p": self.p}

    def __repr__(self):
        return f"PrimeField({self.p})"


class BinaryField(Field):
    kind = "gf2m"

    def __init__(self, m: int, poly: int | None = None):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if poly is None:
            if m not in DEFAULT_GF2_POLYS:
                raise ValueError(f"no default polynomial for m={m}; pass one explicitly")
            poly = DEFAULT_GF2_POLYS[m]
        if gf2_degree(poly) != m:
            raise ValueError(f"polynomial 0b{poly:b} does not have degree {m}")
        if not gf2_is_irreducible(poly):
            raise ValueError(f"polynomial 0b{poly:b} is reducible over GF(2)")
        self.m = m
        self.poly = poly
        self.q = 1 << m
        self._exp = None
        self._log = None
        if self.q <= 1 << 16:
            self._build_log_tables()

    def _mul_raw(self, a: int, b: int) -> int:
        # carry-less product followed by reduction
        res = 0
        while b:
            if b & 1:
                res ^= a
            b >>= 1
            a <<= 1
            if a >> self.m & 1:
                a ^= self.poly
        return res

    def _build_log_tables(self):
        # any element of multiplicative order q-1 works as the table base
        order = self.q - 1
        for g in range(2, self.q):
            exp = [1] * order
            x = 1
            ok = True
            for i in range(1, order):
                x = self._mul_raw(x, g)
                if x == 1:
                    ok = False
                    break
                exp[i] = x
            if ok and self._mul_raw(x, g) == 1:
                log = [0] * self.q
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp = exp
                self._log = log
                return
        # q = 2 has trivial group; tables stay unset
        self._exp = [1]
        self._log = [0, 0]

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_raw(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self._pow_nonzero(a, self.q - 2)

    def canon(self, v):
        if v < 0:
            raise ValueError("binary-field values are non-negative masks")
        return gf2_mod(v, self.poly) if v >= self.q else v

    def pow(self, a, e):
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if e == 0 else 0
        if self.q == 2:
            return 1
        return self._pow_nonzero(a, e % (self.q - 1))

    def _pow_nonzero(self, a, e):
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def spec_dict(self):
        return {"kind": "gf2m", "m": self.m, "poly": self.poly}

    def __repr__(self):
        return f"BinaryField(m={self.m}, poly=0b{self.poly:b})"


class FieldElement:
    """Immutable field element; arithmetic rejects mixed fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("field elements are immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields cannot be combined")
            return other.value
        if isinstance(other, int):
            return self.field.canon(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(v, self.field.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.canon(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.field.q}({self.value})"


def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def binary_field(m: int, poly: int | None = None) -> BinaryField:
    return BinaryField(m, poly)


def field_from_spec(spec: dict) -> Field:
    """Build a field from its JSON spec.

    Accepted forms: {"kind": "prime", "p": 17} and
    {"kind": "gf2m", "m": 3, "poly": 11} (poly optional for m <= 8).
    """
    kind = spec.get("kind")
    if kind == "prime":
        return PrimeField(spec["p"])
    if kind == "gf2m":
        return BinaryField(spec["m"], spec.get("poly"))
    raise ValueError(f"unknown field kind: {kind!r}")


def smallest_irreducible(m: int) -> int:
    """Brute-force smallest degree-m irreducible bitmask (test oracle)."""
    for f in range(1 << m, 1 << (m + 1)):
        if gf2_is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")
