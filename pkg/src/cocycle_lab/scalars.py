"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is a vector of rational coordinates in the power basis
1, zeta, ..., zeta^(phi(N)-1) of Q(zeta_N), reduced modulo the N-th
cyclotomic polynomial.  Internally the vector is kept as integer
numerators over one positive denominator with gcd 1, so the
representation is canonical and equality is structural.

Values from different conductors are compared and combined by lifting
both to Q(zeta_lcm) via zeta_N = zeta_M^(M/N).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


# ----------------------------------------------------------------- #
# integer polynomial helpers (dense, ascending coefficients)
# ----------------------------------------------------------------- #

def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic integer polynomial; stays in integers."""
    assert den and den[-1] == 1
    num = list(num)
    d = len(den) - 1
    quot = [0] * max(len(num) - d, 0)
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k]
        if c:
            quot[k - d] = c
            for j in range(d + 1):
                num[k - d + j] -= c * den[j]
    return _poly_trim(quot), _poly_trim(num[:d])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(1)
    (-1, 1)
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod_monic(num, list(cyclotomic_polynomial(d)))
            assert not r
            num = q
    return tuple(num)


class CycScalar:
    """An exact element of Q(zeta_N).

    ``nums`` holds the numerators of the power-basis coordinates over the
    common positive denominator ``den``; gcd(den, *nums) == 1.
    """

    __slots__ = ("conductor", "nums", "den")

    def __init__(self, conductor: int, nums, den=1):
        conductor = int(conductor)
        phi_n = cyclotomic_polynomial(conductor)
        deg = len(phi_n) - 1
        nums = [int(x) for x in nums]
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if len(nums) > deg:
            _, nums = _poly_divmod_monic(nums, list(phi_n))
        nums = nums + [0] * (deg - len(nums))
        if den < 0:
            den, nums = -den, [-x for x in nums]
        g = den
        for x in nums:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = [x // g for x in nums]
        self.conductor = conductor
        self.nums = tuple(nums)
        self.den = den

    # -- constructors ------------------------------------------------ #

    @classmethod
    def rational(cls, value, conductor: int = 1) -> "CycScalar":
        q = Fraction(value)
        return cls(conductor, [q.numerator], q.denominator)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycScalar":
        return cls(conductor, [])

    @classmethod
    def one(cls, conductor: int = 1) -> "CycScalar":
        return cls(conductor, [1])

    # -- structure --------------------------------------------------- #

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.nums)

    def is_one(self) -> bool:
        return self.den == 1 and self.nums[0] == 1 and all(
            x == 0 for x in self.nums[1:]
        )

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.nums[1:])

    def as_rational(self) -> Fraction | None:
        if self.is_rational():
            return Fraction(self.nums[0], self.den)
        return None

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def lift(self, conductor: int) -> "CycScalar":
        """Embed into Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("can only lift to a multiple of the conductor")
        step = conductor // self.conductor
        lifted = [0] * ((len(self.nums) - 1) * step + 1) if self.nums else [0]
        for i, x in enumerate(self.nums):
            lifted[i * step] = x
        return CycScalar(conductor, lifted, self.den)

    def _pair(self, other) -> tuple["CycScalar", "CycScalar"]:
        if not isinstance(other, CycScalar):
            other = CycScalar.rational(other, 1)
        n = lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # -- field operations -------------------------------------------- #

    def __add__(self, other) -> "CycScalar":
        a, b = self._pair(other)
        nums = [
            x * b.den + y * a.den
            for x, y in zip(a.nums, b.nums)
        ]
        return CycScalar(a.conductor, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.conductor, [-x for x in self.nums], self.den)

    def __sub__(self, other) -> "CycScalar":
        return self + (-other if isinstance(other, CycScalar) else -Fraction(other))

    def __rsub__(self, other) -> "CycScalar":
        return (-self) + other

    def __mul__(self, other) -> "CycScalar":
        a, b = self._pair(other)
        return CycScalar(
            a.conductor, _poly_mul(list(a.nums), list(b.nums)), a.den * b.den
        )

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in the field")
        phi_n = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = [Fraction(x, self.den) for x in self.nums]
        # invariant: s*a = r (mod Phi_N) for (r, s) and (r2, s2)
        r, s = phi_n, [Fraction(0)]
        r2, s2 = a, [Fraction(1)]
        while any(r2):
            q, rem = _frac_divmod(r, r2)
            r, r2 = r2, rem
            s, s2 = s2, _frac_sub(s, _frac_mul(q, s2))
        # r is a nonzero constant: Phi_N is irreducible over Q
        assert len(_frac_trim(r)) == 1
        c = r[0]
        inv_nums = [x / c for x in s]
        den = 1
        for x in inv_nums:
            den = lcm(den, x.denominator)
        return CycScalar(self.conductor, [int(x * den) for x in inv_nums], den)

    def __truediv__(self, other) -> "CycScalar":
        a, b = self._pair(other)
        return a * b.inv()

    def __rtruediv__(self, other) -> "CycScalar":
        return self.inv() * other

    def __pow__(self, exponent: int) -> "CycScalar":
        exponent = int(exponent)
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = CycScalar.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycScalar.rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._pair(other)
        return a.nums == b.nums and a.den == b.den

    __hash__ = None  # values from different conductors compare equal; keep unhashable

    def __repr__(self) -> str:
        return f"CycScalar({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.nums[0], self.den))
        if self.conductor == 4:
            re, im = Fraction(self.nums[0], self.den), Fraction(self.nums[1], self.den)
            if re == 0:
                return "i" if im == 1 else ("-i" if im == -1 else f"{im}*i")
            sign = "+" if im > 0 else "-"
            mag = abs(im)
            term = "i" if mag == 1 else f"{mag}*i"
            return f"{re}{sign}{term}"
        k = as_root_exponent(self, self.conductor)
        if k is not None:
            return f"zeta{self.conductor}^{k}" if k != 1 else f"zeta{self.conductor}"
        terms = []
        for i, x in enumerate(self.nums):
            if x:
                z = "1" if i == 0 else (f"zeta{self.conductor}" + (f"^{i}" if i > 1 else ""))
                terms.append(f"{x}*{z}" if i else str(x))
        body = " + ".join(terms).replace("+ -", "- ")
        return body if self.den == 1 else f"({body})/{self.den}"

    # -- JSON form ---------------------------------------------------- #

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coefficients()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CycScalar":
        n = int(data["conductor"])
        coeffs = [Fraction(int(p), int(q)) for p, q in data["coeffs"]]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        return cls(n, [int(c * den) for c in coeffs], den)


# ----------------------------------------------------------------- #
# rational-coefficient polynomial helpers for inv()
# ----------------------------------------------------------------- #

def _frac_trim(a: list[Fraction]) -> list[Fraction]:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _frac_trim(out)


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _frac_trim(out)


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = _frac_trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(_frac_trim(a)) >= len(b):
        a = _frac_trim(a)
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    return _frac_trim(q), _frac_trim(a)


# ----------------------------------------------------------------- #
# roots of unity
# ----------------------------------------------------------------- #

@lru_cache(maxsize=None)
def root_of_unity(conductor: int, k: int = 1) -> CycScalar:
    """zeta_N^k in canonical form.

    >>> root_of_unity(4, 2) == -1
    True
    """
    conductor = int(conductor)
    if conductor < 1:
        raise ValueError("conductor must be a positive integer")
    k = int(k) % conductor
    return CycScalar(conductor, [0] * k + [1])  # constructor reduces mod Phi_N


@lru_cache(maxsize=None)
def _mu_lifted(m: int, conductor: int) -> tuple[CycScalar, ...]:
    return tuple(root_of_unity(m, k).lift(conductor) for k in range(m))


def as_root_exponent(x: CycScalar, m: int) -> int | None:
    """The exponent k in [0, m) with x = zeta_m^k, or None."""
    n = lcm(x.conductor, m)
    lifted = x.lift(n)
    for k, power in enumerate(_mu_lifted(m, n)):
        if lifted == power:
            return k
    return None


def is_square_in_mu(x: CycScalar, m: int) -> bool:
    """Whether x is the square of an m-th root of unity."""
    k = as_root_exponent(x, m)
    if k is None:
        raise ValueError("square-class undecidable in this backend")
    if m % 2 == 1:
        return True
    return k % 2 == 0


# ----------------------------------------------------------------- #
# square classes in the ambient field
# ----------------------------------------------------------------- #

def _squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    part = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            part *= d
        d += 1
    return sign * part * n


def rational_is_square_in_field(q, conductor: int) -> bool:
    """Whether a nonzero rational is a square in Q(zeta_N).

    A rational q = s*t^2 with s its signed squarefree part is a square in
    Q(zeta_N) iff sqrt(s) lies in the field, i.e. iff the conductor of
    Q(sqrt(s)) divides N (s = 1 is always a square).
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no square class in k*")
    s = _squarefree_part(q.numerator * q.denominator)
    if s == 1:
        return True
    field_conductor = abs(s) if s % 4 == 1 else 4 * abs(s)
    return conductor % field_conductor == 0


def square_class(x: CycScalar) -> str:
    """'trivial' / 'nontrivial' / 'undecided' square class of x in k*.

    Decidable inputs are the roots of unity mu_N and the rationals; the
    ambient field is Q(zeta_N) for N the conductor carried by x.
    """
    if x.is_zero():
        raise ValueError("zero has no square class in k*")
    n = x.conductor
    k = as_root_exponent(x, n)
    if k is not None:
        return "trivial" if is_square_in_mu(x, n) else "nontrivial"
    q = x.as_rational()
    if q is not None:
        return "trivial" if rational_is_square_in_field(q, n) else "nontrivial"
    return "undecided"


def coerce(value, conductor: int = 1) -> CycScalar:
    """Turn ints, Fractions, or CycScalars into a CycScalar."""
    if isinstance(value, CycScalar):
        return value
    return CycScalar.rational(value, conductor)
