"""Exact arithmetic in GF(p^m).

Elements are handled internally as plain integers in ``range(q)``: the
element with coefficient vector ``(c0, ..., c_{m-1})`` (ascending powers of
the class of ``z``) is encoded as ``c0 + c1*p + ... + c_{m-1}*p^(m-1)``.
Prime fields therefore use ordinary residues.  :class:`FieldElement` wraps
such an integer for callers that want operator syntax.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

MAX_FIELD_SIZE = 2**16

OPS = ("add", "neg", "mul", "inv", "pow")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p) as ascending int lists (used only for moduli) ---

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    """Remainder of ``a`` modulo the monic polynomial ``f`` over GF(p)."""
    a = _trim(x % p for x in a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1]
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        a = _trim(a)
    return a


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _pmod(prod, f, p)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, monic, p)
    return a


def _ppowmod(base, e, f, p):
    result = [1]
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def is_irreducible(coeffs, p: int) -> bool:
    """Rabin-style irreducibility test for a monic polynomial over GF(p).

    ``coeffs`` is ascending and monic.  A degree-m polynomial is irreducible
    iff gcd(z^(p^i) - z, f) = 1 for every 1 <= i <= m // 2.
    """
    f = _trim(c % p for c in coeffs)
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``m`` over GF(p).

    "Smallest" orders candidates by the integer ``sum(c_i * p**i)`` of the
    non-leading coefficients, so the answer is reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    for v in range(p**m):
        low = [(v // p**i) % p for i in range(m)]
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """The finite field GF(p^m) with an explicit modulus.

    Instances double as the field descriptor: two ``GF`` objects are equal when
    ``p``, ``m`` and the modulus agree.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_FIELD_SIZE:
            raise ValueError(f"field size {p}^{m} exceeds the cap {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = find_irreducible(p, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] % p != 1:
                raise ValueError("modulus must be monic of degree m (ascending coefficients)")
            if any(not 0 <= c < p for c in modulus):
                raise ValueError(f"modulus coefficients must lie in [0, {p})")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p**m
        self.prime = m == 1
        if not self.prime:
            self._build_tables()

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.prime:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    # -- encoding ----------------------------------------------------------
    def to_vector(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.m))

    def from_vector(self, vec) -> int:
        vec = list(vec)
        if len(vec) > self.m:
            raise ValueError(f"vector of length {len(vec)} for GF({self.p}^{self.m})")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(vec))

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of {self}")
        return a

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.from_vector(value))
        if self.prime:
            return FieldElement(self, int(value) % self.p)
        return FieldElement(self, self.check(int(value)))

    # -- tables for extension fields ---------------------------------------
    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmulmod(list(self.to_vector(a)), list(self.to_vector(b)), list(self.modulus), self.p)
        return self.from_vector(prod)

    def _build_tables(self):
        q = self.q
        order = q - 1
        factors = prime_factors(order)
        for g in range(2, q):
            ok = True
            for ell in factors:
                if self._slow_pow(g, order // ell) == 1:
                    ok = False
                    break
            if ok:
                break
        else:  # pragma: no cover - every finite field has a generator
            raise AssertionError("no primitive element")
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log
        self.generator = g

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    # -- arithmetic on encoded ints ----------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.prime:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.prime:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            out += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.prime:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.prime:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        if self.prime:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.prime:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    @cached_property
    def minus_one(self) -> int:
        return self.neg(1)


def field_from_order(q: int, modulus=None) -> GF:
    """Build GF(q) for a prime power ``q``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return GF(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    field: GF
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        return self.field.to_vector(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands belong to different fields")
            return other.value
        return self.field(other).value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        if self.field.prime:
            return f"{self.value}"
        return f"({','.join(map(str, self.rep))})"


def field_arith(field: GF, op: str, a, b=None) -> FieldElement:
    """Dispatch one of ``add, neg, mul, inv, pow`` on elements of ``field``.

    For ``pow`` the second operand is an integer exponent; ``neg`` and ``inv``
    ignore it.
    """
    a = field(a)
    if op == "add":
        return a + field(b)
    if op == "neg":
        return -a
    if op == "mul":
        return a * field(b)
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown field operation {op!r}; expected one of {OPS}")
