"""Exact arithmetic in cyclotomic fields Q(zeta_e).

An element is a finite sum  sum_k c_k * zeta_e^k  with rational c_k, stored
in a canonical reduced form so that equality is syntactic:

* For each prime power p^a || e write the exponent k in its "digit"
  c_p = k * (e/p^a)^-1 mod p^a.  The canonical basis keeps c_p below
  (p-1)*p^(a-1); larger digits are rewritten with the vanishing sum
  1 + zeta_{p^a}^(p^(a-1)) + ... + zeta_{p^a}^((p-1)p^(a-1)) = 0.
  This is the tensor-product power basis, of dimension phi(e).
* The conductor e is then minimized prime by prime (an element lies in a
  subfield iff the corresponding digits vanish), so rationals always end
  up with conductor 1.  Conductors never end up congruent to 2 mod 4.

Rationals are exact fractions throughout; there is no floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .numth import crt, factorint

_ZERO = Fraction(0)


def _digit_reduce(n: int, terms: dict[int, Fraction]) -> dict[int, Fraction]:
    """Rewrite all exponents into the canonical digit ranges for conductor n."""
    if n == 1:
        return {0: c for k, c in terms.items() if c}
    fact = factorint(n)
    units = {p: n // p**a for p, a in fact.items()}
    invs = {p: pow(units[p], -1, p ** fact[p]) for p in fact}
    out: dict[int, Fraction] = {}
    work = [(k % n, c) for k, c in terms.items() if c]
    while work:
        k, c = work.pop()
        for p, a in fact.items():
            pa = p**a
            digit = (k * invs[p]) % pa
            step = pa // p
            thresh = (p - 1) * step
            if digit >= thresh:
                t = digit - thresh
                for i in range(p - 1):
                    newk = (k + (t + i * step - digit) * units[p]) % n
                    work.append((newk, -c))
                break
        else:
            out[k] = out.get(k, _ZERO) + c
    return {k: c for k, c in out.items() if c}


def _conductor_reduce(n: int, terms: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    """Minimize the conductor of digit-canonical terms."""
    while n > 1:
        if not terms:
            return 1, {}
        fact = factorint(n)
        for p, a in fact.items():
            pa = p**a
            unit = n // pa
            inv = pow(unit, -1, pa)
            digits = {k: (k * inv) % pa for k in terms}
            if a == 1 and all(d == 0 for d in digits.values()):
                n2 = n // p
                terms = {_rebuild(n2, n, k, {p: None}): c for k, c in terms.items()}
                n = n2
                break
            if a > 1 and all(d % p == 0 for d in digits.values()):
                n2 = n // p
                terms = {_rebuild(n2, n, k, {p: digits[k] // p}): c for k, c in terms.items()}
                n = n2
                break
        else:
            return n, terms
    return 1, dict(terms)


def _rebuild(n2: int, n: int, k: int, override: dict[int, int | None]) -> int:
    """CRT-reconstruct an exponent at conductor n2 from its digits at n."""
    residues: dict[int, int] = {}
    for q, b in factorint(n2).items():
        qb = q**b
        if q in override:
            residues[qb] = override[q]  # type: ignore[assignment]
        else:
            unit = n // q ** factorint(n)[q]
            residues[qb] = (k * pow(unit, -1, qb)) % qb
    # digits are w.r.t. units of n2: value x with x*(n2/qb)^-1 = digit
    return crt({qb: (d * (n2 // qb)) % qb for qb, d in residues.items()}) if residues else 0


class Cyclo:
    """An element of a cyclotomic field in canonical form; immutable."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: dict[int, Fraction] | None = None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        if conductor == 1:
            c = sum(coeffs.values(), _ZERO) if coeffs else _ZERO
            object.__setattr__(self, "conductor", 1)
            object.__setattr__(self, "coeffs", {0: c} if c else {})
            return
        terms = _digit_reduce(conductor, coeffs or {})
        n, terms = _conductor_reduce(conductor, terms)
        object.__setattr__(self, "conductor", n)
        object.__setattr__(self, "coeffs", dict(sorted(terms.items())))

    @classmethod
    def _make(cls, conductor: int, coeffs: dict[int, Fraction]) -> "Cyclo":
        """Trusted constructor for terms already in canonical form."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    # construction -----------------------------------------------------

    @staticmethod
    def rational(value) -> "Cyclo":
        return Cyclo(1, {0: Fraction(value)})

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclo":
        """The root of unity zeta_n^k."""
        if n < 1:
            raise ValueError("order must be positive")
        return Cyclo(n, {k % n: Fraction(1)})

    # arithmetic -------------------------------------------------------

    def _lift(self, n: int) -> dict[int, Fraction]:
        scale = n // self.conductor
        return {k * scale: c for k, c in self.coeffs.items()}

    def __add__(self, other) -> "Cyclo":
        other = _coerce(other)
        n = lcm(self.conductor, other.conductor)
        terms = self._lift(n)
        for k, c in other._lift(n).items():
            terms[k] = terms.get(k, _ZERO) + c
        return Cyclo(n, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.conductor, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "Cyclo":
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def scale(self, q) -> "Cyclo":
        """Multiply by an exact rational; preserves canonical form."""
        q = Fraction(q)
        if not q:
            return ZERO
        return Cyclo._make(self.conductor, {k: c * q for k, c in self.coeffs.items()})

    def __mul__(self, other) -> "Cyclo":
        other = _coerce(other)
        if other.conductor == 1:
            return self.scale(other.coeffs.get(0, _ZERO)) if other.coeffs else ZERO
        if self.conductor == 1:
            return other.scale(self.coeffs.get(0, _ZERO)) if self.coeffs else ZERO
        n = lcm(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        terms: dict[int, Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = (k1 + k2) % n
                terms[k] = terms.get(k, _ZERO) + c1 * c2
        return Cyclo(n, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other) -> "Cyclo":
        other = _coerce(other)
        q = other.as_rational()
        if q is None:
            raise ZeroDivisionError("division only by nonzero rationals")
        if q == 0:
            raise ZeroDivisionError("division by zero")
        return self * Cyclo.rational(Fraction(1, 1) / q)

    def conj(self) -> "Cyclo":
        """Complex conjugation: zeta_e -> zeta_e^-1."""
        n = self.conductor
        return Cyclo(n, {(-k) % n: c for k, c in self.coeffs.items()})

    def galois(self, j: int) -> "Cyclo":
        """The automorphism zeta_e -> zeta_e^j for gcd(j, e) = 1."""
        n = self.conductor
        if gcd(j, n) != 1:
            raise ValueError(f"{j} is not coprime to {n}")
        return Cyclo(n, {(k * j) % n: c for k, c in self.coeffs.items()})

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_rational(self) -> Fraction | None:
        if self.conductor != 1:
            return None
        return self.coeffs.get(0, _ZERO)

    def is_nonneg_integer(self) -> bool:
        q = self.as_rational()
        return q is not None and q.denominator == 1 and q >= 0

    def as_integer(self) -> int:
        q = self.as_rational()
        if q is None or q.denominator != 1:
            raise ValueError(f"not an integer: {self}")
        return q.numerator

    # ordering / rendering ----------------------------------------------

    def sort_key(self):
        """A total deterministic order; 1 sorts before everything else."""
        if self.coeffs == {0: Fraction(1)}:
            return (0, 0, ())
        items = tuple((k, c.numerator, c.denominator) for k, c in self.coeffs.items())
        return (1, self.conductor, items)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.conductor, tuple(self.coeffs.items())))

    def __str__(self):
        return render_cyclo(self)

    def __repr__(self):
        return f"Cyclo({render_cyclo(self)})"


def _coerce(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclo.rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyclo")


def cyclo_sum(items) -> Cyclo:
    """Sum many values with a single canonicalization pass.

    Embedding a canonical element into a larger cyclotomic field keeps its
    digits canonical, so the merged term dict only needs zero-dropping and
    conductor minimization.
    """
    items = list(items)
    n = 1
    for x in items:
        n = lcm(n, x.conductor)
    terms: dict[int, Fraction] = {}
    for x in items:
        scale = n // x.conductor
        for k, c in x.coeffs.items():
            kk = k * scale
            terms[kk] = terms.get(kk, _ZERO) + c
    nz = {k: c for k, c in terms.items() if c}
    n2, t2 = _conductor_reduce(n, nz)
    return Cyclo._make(n2, dict(sorted(t2.items())))


def root_product(pairs) -> Cyclo:
    """Product of roots of unity zeta_m^k over (m, k) pairs, in one step."""
    n = 1
    for m, _ in pairs:
        n = lcm(n, m)
    e = 0
    for m, k in pairs:
        e += k * (n // m)
    return Cyclo(n, {e % n: Fraction(1)})


def render_cyclo(x: Cyclo) -> str:
    """Render as 'a0 + a1*z(e)^k + ...'; exact round-trip with parse_cyclo."""
    if x.is_zero():
        return "0"
    parts = []
    for k, c in x.coeffs.items():
        if k == 0 and x.conductor == 1:
            parts.append(str(c))
        elif k == 0:
            parts.append(str(c))
        else:
            parts.append(f"{c}*z({x.conductor})^{k}")
    return " + ".join(parts)


_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*z\((\d+)\)\^(\d+))?$")


def parse_cyclo(text: str) -> Cyclo:
    """Inverse of render_cyclo."""
    text = text.strip()
    if text == "0":
        return Cyclo.rational(0)
    total = Cyclo.rational(0)
    for raw in text.split(" + "):
        m = _TERM_RE.match(raw.strip())
        if not m:
            raise ValueError(f"bad cyclotomic term {raw!r}")
        coeff = Fraction(m.group(1))
        if m.group(2) is None:
            total = total + Cyclo.rational(coeff)
        else:
            n, k = int(m.group(2)), int(m.group(3))
            total = total + Cyclo(n, {k: coeff})
    return total


ZERO = Cyclo.rational(0)
ONE = Cyclo.rational(1)
