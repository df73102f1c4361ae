"""Exact arithmetic for the scalar domain of all operator matrix entries.

Every coefficient produced by this package is a monomial

    xi^k * i^a * c*sqrt(s)

with k an integer exponent of the formal unit-modulus parameter ``xi``,
a an exponent of the imaginary unit modulo 4, c a nonnegative rational and
s a squarefree positive integer.  :class:`Radical` stores that normal form;
two values are equal iff all four components agree, so equality is decidable
without any floating point.

``xi`` is never evaluated during exact computation.  Because it is assumed
to lie on the unit circle, conjugation maps ``xi -> xi^-1`` (and ``i -> -i``).
Optional numeric evaluation at a concrete complex ``xi`` is provided for
cross-checking against floating arithmetic.

Sums of monomials appear only when two operator words are subtracted
(commutator and adjoint checks).  :class:`RadicalSum` keeps like terms
merged; since square roots of distinct squarefree integers are linearly
independent over the rationals, a sum is zero iff every merged coefficient
is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n >= 1 as g*g*s with s squarefree.  Returns (g, s)."""
    if n <= 0:
        raise ValueError(f"positive integer required, got {n}")
    g, s = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            g *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    # leftover n is 1 or prime, hence squarefree
    return g, s * n


@dataclass(frozen=True, slots=True)
class Radical:
    """Normal form xi^xi_exp * i^phase * coeff * sqrt(root).

    coeff >= 0, root squarefree >= 1, phase in {0,1,2,3}; the zero value is
    canonically (0, 0, 0, 1).  Use :meth:`make` (or the classmethod
    constructors) rather than the raw constructor so the normal form holds.
    """

    xi_exp: int = 0
    phase: int = 0
    coeff: Fraction = Fraction(1)
    root: int = 1

    @staticmethod
    def make(xi_exp: int = 0, phase: int = 0, coeff=Fraction(1), root: int = 1) -> "Radical":
        coeff = Fraction(coeff)
        if coeff < 0:
            coeff, phase = -coeff, phase + 2
        if coeff == 0:
            return Radical(0, 0, Fraction(0), 1)
        g, s = squarefree_decompose(root)
        return Radical(xi_exp, phase % 4, coeff * g, s)

    @classmethod
    def zero(cls) -> "Radical":
        return cls(0, 0, Fraction(0), 1)

    @classmethod
    def one(cls) -> "Radical":
        return cls(0, 0, Fraction(1), 1)

    @classmethod
    def from_rational(cls, q) -> "Radical":
        return cls.make(coeff=Fraction(q))

    @classmethod
    def sqrt_rational(cls, r, phase: int = 0, xi_exp: int = 0) -> "Radical":
        """Principal square root of a nonnegative rational, times i^phase * xi^xi_exp."""
        r = Fraction(r)
        if r < 0:
            raise ValueError("radicand must be nonnegative")
        if r == 0:
            return cls.zero()
        return cls.make(xi_exp, phase, Fraction(1, r.denominator), r.numerator * r.denominator)

    @classmethod
    def xi_power(cls, k: int) -> "Radical":
        return cls(k, 0, Fraction(1), 1)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: "Radical") -> "Radical":
        if not isinstance(other, Radical):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Radical.zero()
        g = gcd(self.root, other.root)
        return Radical(
            self.xi_exp + other.xi_exp,
            (self.phase + other.phase) % 4,
            self.coeff * other.coeff * g,
            (self.root // g) * (other.root // g),
        )

    def times_rational(self, q) -> "Radical":
        q = Fraction(q)
        if q == 0 or self.is_zero:
            return Radical.zero()
        phase = self.phase if q > 0 else (self.phase + 2) % 4
        return Radical(self.xi_exp, phase, self.coeff * abs(q), self.root)

    def __pow__(self, k: int) -> "Radical":
        if k < 0:
            raise ValueError("negative powers are not defined for radicals")
        out = Radical.one()
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "Radical":
        """Complex conjugate under the unit-circle rule xi -> xi^-1."""
        if self.is_zero:
            return self
        return Radical(-self.xi_exp, (-self.phase) % 4, self.coeff, self.root)

    def as_rational(self) -> Fraction:
        """Exact rational value; raises if the value is not rational."""
        if self.is_zero:
            return Fraction(0)
        if self.xi_exp != 0 or self.root != 1 or self.phase % 2 != 0:
            raise ValueError(f"{self} is not rational")
        return self.coeff if self.phase == 0 else -self.coeff

    def value(self, xi: complex = 1.0) -> complex:
        """Numeric evaluation at a concrete nonzero xi."""
        if self.is_zero:
            return 0j
        if xi == 0:
            raise ValueError("xi must be nonzero")
        return (xi ** self.xi_exp) * (1j ** self.phase) * float(self.coeff) * (self.root ** 0.5)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.xi_exp:
            parts.append(f"xi^{self.xi_exp}")
        if self.phase:
            parts.append(f"i^{self.phase}")
        if self.root == 1:
            parts.append(str(self.coeff))
        elif self.coeff == 1:
            parts.append(f"sqrt({self.root})")
        else:
            parts.append(f"{self.coeff}*sqrt({self.root})")
        return " * ".join(parts) if parts else "1"


class RadicalSum:
    """Finite formal sum of Radical monomials with exact zero detection.

    Terms are merged on the key (xi exponent, imaginary bit, squarefree
    root); the merged coefficient is a signed rational.
    """

    __slots__ = ("_terms",)

    def __init__(self):
        self._terms: dict[tuple[int, int, int], Fraction] = {}

    @classmethod
    def from_radical(cls, r: Radical) -> "RadicalSum":
        out = cls()
        out._iadd_radical(r)
        return out

    @classmethod
    def from_rational(cls, q) -> "RadicalSum":
        return cls.from_radical(Radical.from_rational(q))

    def _iadd_radical(self, r: Radical, negate: bool = False) -> None:
        if r.is_zero:
            return
        sign = Fraction(-1 if r.phase >= 2 else 1)
        if negate:
            sign = -sign
        key = (r.xi_exp, r.phase % 2, r.root)
        c = self._terms.get(key, Fraction(0)) + sign * r.coeff
        if c == 0:
            self._terms.pop(key, None)
        else:
            self._terms[key] = c

    def _iadd_sum(self, other: "RadicalSum", negate: bool = False) -> None:
        for (k, im, s), c in other._terms.items():
            cc = -c if negate else c
            key = (k, im, s)
            v = self._terms.get(key, Fraction(0)) + cc
            if v == 0:
                self._terms.pop(key, None)
            else:
                self._terms[key] = v

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        out = self.copy()
        out._iadd_sum(other)
        return out

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        out = self.copy()
        out._iadd_sum(other, negate=True)
        return out

    def add_radical(self, r: Radical) -> "RadicalSum":
        out = self.copy()
        out._iadd_radical(r)
        return out

    def mul(self, other: "RadicalSum") -> "RadicalSum":
        out = RadicalSum()
        for (k1, i1, s1), c1 in self._terms.items():
            for (k2, i2, s2), c2 in other._terms.items():
                g = gcd(s1, s2)
                c = c1 * c2 * g
                if i1 + i2 == 2:
                    c = -c  # i * i = -1
                key = (k1 + k2, (i1 + i2) % 2, (s1 // g) * (s2 // g))
                v = out._terms.get(key, Fraction(0)) + c
                if v == 0:
                    out._terms.pop(key, None)
                else:
                    out._terms[key] = v
        return out

    def mul_radical(self, r: Radical) -> "RadicalSum":
        return self.mul(RadicalSum.from_radical(r))

    def conjugate(self) -> "RadicalSum":
        out = RadicalSum()
        for (k, im, s), c in self._terms.items():
            out._terms[(-k, im, s)] = -c if im else c
        return out

    def copy(self) -> "RadicalSum":
        out = RadicalSum()
        out._terms = dict(self._terms)
        return out

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[Radical]:
        out = []
        for (k, im, s), c in sorted(self._terms.items()):
            phase = im if c > 0 else im + 2
            out.append(Radical(k, phase, abs(c), s))
        return out

    def as_radical(self) -> Radical:
        """The value as a single monomial; raises if the sum has 2+ terms."""
        ts = self.terms()
        if not ts:
            return Radical.zero()
        if len(ts) > 1:
            raise ValueError(f"not a monomial: {self}")
        return ts[0]

    def value(self, xi: complex = 1.0) -> complex:
        return sum((t.value(xi) for t in self.terms()), 0j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        raise TypeError("RadicalSum is unhashable")

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(str(t) for t in self.terms())
