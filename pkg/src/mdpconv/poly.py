"""Univariate polynomials over GF(q)."""

from __future__ import annotations

from .finite_field import GF, FieldElement

NEG_INF = float("-inf")


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial with ascending coefficients encoded as field ints.

    The zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs=()):
        self.field = field
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                c = field(c).value
            elif field.prime:
                c = int(c) % field.p
            else:
                c = field.check(int(c))
            vals.append(c)
        self.coeffs = _trim(vals)
        self._hash = None

    @classmethod
    def _raw(cls, field: GF, coeffs) -> Poly:
        # trusted constructor: coeffs already canonical ints
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = _trim(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field: GF) -> Poly:
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: GF) -> Poly:
        return cls._raw(field, (1,))

    @classmethod
    def constant(cls, field: GF, c: int) -> Poly:
        return cls._raw(field, (c,))

    @classmethod
    def monomial(cls, field: GF, degree: int, c: int = 1) -> Poly:
        return cls._raw(field, (0,) * degree + (c,))

    # -- basic properties --------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other % self.field.p,)) if self.field.prime else NotImplemented
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c) if self.field.prime else "(" + ",".join(map(str, self.field.to_vector(c))) + ")"
            if i == 0:
                terms.append(cs)
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: Poly):
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            return Poly._raw(self.field, (self.field(other).value,))
        if isinstance(other, int):
            return Poly(self.field, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        f = self.field
        if f.prime:
            p = f.p
            out = [(x + y) % p for x, y in zip(a, b)] + list(a[len(b):])
        else:
            out = [f.add(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return Poly._raw(f, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, ())
        f = self.field
        out = [0] * (len(a) + len(b) - 1)
        if f.prime:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            p = f.p
            return Poly._raw(f, [c % p for c in out])
        add, mul = f.add, f.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(f, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        f = self.field
        if c == 0:
            return Poly._raw(f, ())
        return Poly._raw(f, [f.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> Poly:
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def __pow__(self, e: int):
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Poly):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly._raw(f, ()), self
        quot = [0] * (len(rem) - db)
        inv = f.inv(other.coeffs[-1])
        b = other.coeffs
        if f.prime:
            p = f.p
            for k in range(len(rem) - 1, db - 1, -1):
                c = (rem[k] * inv) % p
                if c:
                    s = k - db
                    quot[s] = c
                    for i, y in enumerate(b):
                        rem[s + i] = (rem[s + i] - c * y) % p
        else:
            for k in range(len(rem) - 1, db - 1, -1):
                c = f.mul(rem[k], inv)
                if c:
                    s = k - db
                    quot[s] = c
                    for i, y in enumerate(b):
                        rem[s + i] = f.sub(rem[s + i], f.mul(c, y))
        return Poly._raw(f, quot), Poly._raw(f, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        """True when ``self`` divides ``other`` (0 divides only 0)."""
        if not self.coeffs:
            return not other.coeffs
        return not (other % self).coeffs

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __call__(self, x) -> int:
        """Horner evaluation at a field element (encoded int or FieldElement)."""
        f = self.field
        if isinstance(x, FieldElement):
            x = f(x).value
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    a._check(b)
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    a._check(b)
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while r1.coeffs:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.coeffs:
        return r0, s0, t0
    inv = f.inv(r0.lead)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)
