"""Cochains on finite abelian groups with values in k*, and their cohomology.

A degree-n cochain is a total table G^n -> k* of nonzero cyclotomic
scalars.  The coboundary operators act multiplicatively; a degree-3
cochain phi is a cocycle when

    phi(y,z,t) phi(x,yz,t) phi(x,y,z) = phi(xy,z,t) phi(x,y,zt)

for all x, y, z, t.  Cochains valued in the m-th roots of unity embed
into (Z/m)^(G^n) by taking exponents, which turns coboundary membership
and cohomology into exact linear algebra over Z/m (see zmodlin).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groups import FiniteAbelianGroup, GroupElement, cyclic
from .scalars import CycScalar, as_root_exponent, coerce, root_of_unity
from .zmodlin import (
    howell_form,
    kernel_mod,
    module_size,
    quotient_invariant_factors,
    solve_mod,
)


class Cochain:
    """A total map G^n -> k* stored as a dense table."""

    __slots__ = ("group", "degree", "values")

    def __init__(self, group: FiniteAbelianGroup, degree: int, values: dict):
        if degree < 0:
            raise ValueError("cochain degree must be nonnegative")
        expected = group.size**degree
        if len(values) != expected:
            raise ValueError(f"table has {len(values)} entries, expected {expected}")
        table = {}
        for key, val in values.items():
            val = coerce(val)
            if val.is_zero():
                raise ValueError(f"cochain value at {key} is zero; values live in k*")
            table[key] = val
        self.group = group
        self.degree = degree
        self.values = table

    @classmethod
    def from_function(cls, group, degree, fn) -> "Cochain":
        return cls(group, degree, {args: fn(*args) for args in group.tuples(degree)})

    @classmethod
    def constant(cls, group, degree, value=1) -> "Cochain":
        val = coerce(value)
        return cls(group, degree, {args: val for args in group.tuples(degree)})

    def __call__(self, *args: GroupElement) -> CycScalar:
        return self.values[args]

    def __mul__(self, other: "Cochain") -> "Cochain":
        if (self.group, self.degree) != (other.group, other.degree):
            raise ValueError("cochains must share group and degree")
        return Cochain(
            self.group,
            self.degree,
            {k: v * other.values[k] for k, v in self.values.items()},
        )

    def inv(self) -> "Cochain":
        return Cochain(
            self.group, self.degree, {k: v.inv() for k, v in self.values.items()}
        )

    def __truediv__(self, other: "Cochain") -> "Cochain":
        return self * other.inv()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.group == other.group
            and self.degree == other.degree
            and all(v == other.values[k] for k, v in self.values.items())
        )

    __hash__ = None

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values.values())

    def delta(self) -> "Cochain":
        """The multiplicative coboundary, one degree up."""
        n = self.degree

        def value(*args):
            acc = self.values[args[1:]]
            sign = 1
            for i in range(1, n + 1):
                sign = -sign
                merged = args[: i - 1] + (args[i - 1] * args[i],) + args[i + 1 :]
                acc = acc * self.values[merged] if sign > 0 else acc * self.values[merged].inv()
            sign = -sign
            acc = acc * self.values[args[:n]] if sign > 0 else acc * self.values[args[:n]].inv()
            return acc

        return Cochain.from_function(self.group, n + 1, value)

    def __repr__(self) -> str:
        return f"Cochain({self.group!r}, degree={self.degree})"

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "degree": self.degree,
            "values": [
                {"args": [g.to_json() for g in key], "value": val.to_json()}
                for key, val in sorted(
                    self.values.items(), key=lambda kv: tuple(g.exponents for g in kv[0])
                )
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cochain":
        group = FiniteAbelianGroup.from_json(data["group"])
        degree = int(data["degree"])
        values = {}
        for entry in data["values"]:
            key = tuple(group.element(exps) for exps in entry["args"])
            values[key] = CycScalar.from_json(entry["value"])
        return cls(group, degree, values)


def delta2(g: Cochain) -> Cochain:
    if g.degree != 2:
        raise ValueError("delta2 expects a degree-2 cochain")
    return g.delta()


def delta3(f: Cochain) -> Cochain:
    if f.degree != 3:
        raise ValueError("delta3 expects a degree-3 cochain")
    return f.delta()


def cocycle3_failure(phi: Cochain):
    """First quadruple violating the 3-cocycle identity, or None."""
    if phi.degree != 3:
        raise ValueError("expected a degree-3 cochain")
    v = phi.values
    for x, y, z, t in phi.group.tuples(4):
        lhs = v[(y, z, t)] * v[(x, y * z, t)] * v[(x, y, z)]
        rhs = v[(x * y, z, t)] * v[(x, y, z * t)]
        if lhs != rhs:
            return (x, y, z, t)
    return None


def is_cocycle3(phi: Cochain) -> bool:
    return cocycle3_failure(phi) is None


def is_normalized3(phi: Cochain) -> bool:
    if phi.degree != 3:
        raise ValueError("expected a degree-3 cochain")
    e = phi.group.identity()
    return all(
        phi.values[(x, e, z)].is_one()
        for x in phi.group.elements()
        for z in phi.group.elements()
    )


def is_normalized2(psi: Cochain) -> bool:
    """Whether psi(e, x) = psi(z, e) for all x, z (one common constant)."""
    if psi.degree != 2:
        raise ValueError("expected a degree-2 cochain")
    e = psi.group.identity()
    c = psi.values[(e, e)]
    return all(
        psi.values[(e, x)] == c and psi.values[(x, e)] == c
        for x in psi.group.elements()
    )


def normalize3(phi: Cochain) -> tuple[Cochain, Cochain]:
    """Normalized representative phi * delta2(g) and the witness g.

    The witness is g(x, y) = phi(e, e, y)^(-1) phi(x, e, e); for a cocycle
    the product is normalized.
    """
    bad = cocycle3_failure(phi)
    if bad is not None:
        raise ValueError(f"input is not a 3-cocycle; fails at {bad}")
    e = phi.group.identity()
    witness = Cochain.from_function(
        phi.group, 2, lambda x, y: phi.values[(e, e, y)].inv() * phi.values[(x, e, e)]
    )
    normalized = phi * delta2(witness)
    assert is_normalized3(normalized)
    return normalized, witness


# ----------------------------------------------------------------- #
# cocycle families on cyclic groups
# ----------------------------------------------------------------- #

def cyclic_phi_q(n: int, q) -> Cochain:
    """The step cocycle on C_n: 1 when y+z < n, else q^x (q an n-th root).

    >>> phi = cyclic_phi_q(2, -1)
    >>> c = phi.group.generator()
    >>> phi(c, c, c) == -1
    True
    """
    q = coerce(q)
    if not (q**n).is_one():
        raise ValueError("q must satisfy q^n = 1")
    group = cyclic(n)

    def value(x, y, z):
        if y.exponents[0] + z.exponents[0] < n:
            return CycScalar.one(q.conductor)
        return q ** x.exponents[0]

    return Cochain.from_function(group, 3, value)


def cyclic_qabc(n: int, q) -> Cochain:
    """The product-exponent cocycle q^(abc) on C_n, for q an n-th root."""
    q = coerce(q)
    if not (q**n).is_one():
        raise ValueError("q must satisfy q^n = 1")
    group = cyclic(n)
    return Cochain.from_function(
        group, 3, lambda x, y, z: q ** (x.exponents[0] * y.exponents[0] * z.exponents[0])
    )


def cyclic_qabc_coboundary_witness(n: int, q) -> Cochain:
    """g with delta2(g) = cyclic_qabc(n, q); needs q^(n(n-1)/2) = 1."""
    q = coerce(q)
    if not (q**n).is_one():
        raise ValueError("q must satisfy q^n = 1")
    if not (q ** (n * (n - 1) // 2)).is_one():
        raise ValueError("not a coboundary for this q")
    group = cyclic(n)

    def value(x, y):
        a, b = x.exponents[0], y.exponents[0]
        return q ** (-(a - 1) * a * b // 2)

    return Cochain.from_function(group, 2, value)


# ----------------------------------------------------------------- #
# the additive Z/m engine
# ----------------------------------------------------------------- #

def _tuple_index(group: FiniteAbelianGroup, n: int) -> dict:
    return {args: i for i, args in enumerate(group.tuples(n))}


def boundary_matrix(group: FiniteAbelianGroup, n: int, m: int) -> np.ndarray:
    """Matrix of the degree-n coboundary on exponent vectors over Z/m.

    Columns index G^n, rows index G^(n+1); a cochain with values
    zeta_m^v(args) maps to the cochain with exponent vector M @ v.
    """
    cols = _tuple_index(group, n)
    rows = list(group.tuples(n + 1))
    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, args in enumerate(rows):
        matrix[r, cols[args[1:]]] += 1
        sign = 1
        for i in range(1, n + 1):
            sign = -sign
            merged = args[: i - 1] + (args[i - 1] * args[i],) + args[i + 1 :]
            matrix[r, cols[merged]] += sign
        matrix[r, cols[args[:n]]] += -sign
    return matrix % m


def cochain_exponents(phi: Cochain, m: int) -> np.ndarray:
    """Exponent vector of a mu_m-valued cochain; error outside mu_m."""
    vec = np.zeros(len(phi.values), dtype=np.int64)
    index = _tuple_index(phi.group, phi.degree)
    for args, val in phi.values.items():
        k = as_root_exponent(val, m)
        if k is None:
            raise ValueError(f"value at {args} is not in mu_{m}; undecidable in mu_{m} backend")
        vec[index[args]] = k
    return vec


def cochain_from_exponents(group, degree: int, vec, m: int) -> Cochain:
    values = {}
    for i, args in enumerate(group.tuples(degree)):
        values[args] = root_of_unity(m, int(vec[i]) % m)
    return Cochain(group, degree, values)


def is_coboundary_mu(phi: Cochain, m: int) -> Cochain | None:
    """A witness g with delta(g) = phi, or None; exact over mu_m."""
    target = cochain_exponents(phi, m)
    matrix = boundary_matrix(phi.group, phi.degree - 1, m)
    solution = solve_mod(matrix, target, m)
    if solution is None:
        return None
    witness = cochain_from_exponents(phi.group, phi.degree - 1, solution, m)
    if witness.delta() != phi:
        raise RuntimeError("linear engine returned an invalid witness")
    return witness


@dataclass
class CohomologyReport:
    """Invariant factors of H^n(G, mu_m) with generator cochains."""

    group: FiniteAbelianGroup
    degree: int
    modulus: int
    invariant_factors: list[int]
    generators: list[Cochain] = field(repr=False)
    kernel_size: int = 0
    image_size: int = 0

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "degree": self.degree,
            "modulus": self.modulus,
            "invariant_factors": list(self.invariant_factors),
            "kernel_size": self.kernel_size,
            "image_size": self.image_size,
        }


def cohomology(group: FiniteAbelianGroup, n: int, m: int) -> CohomologyReport:
    """H^n(G, mu_m) = ker(delta_n) / im(delta_(n-1)) by exact Z/m reduction."""
    outer = boundary_matrix(group, n, m)
    inner = boundary_matrix(group, n - 1, m)
    kernel = kernel_mod(outer, m)
    image = inner.T % m
    factors, gen_vectors = quotient_invariant_factors(kernel, image, m)
    generators = [cochain_from_exponents(group, n, v, m) for v in gen_vectors]
    return CohomologyReport(
        group=group,
        degree=n,
        modulus=m,
        invariant_factors=factors,
        generators=generators,
        kernel_size=module_size(kernel, m),
        image_size=module_size(howell_form(image, m), m),
    )
