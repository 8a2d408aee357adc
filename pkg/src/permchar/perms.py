"""Permutations of {0..n-1} and the cycle-notation text format.

A permutation is stored as its image tuple; composition acts on the right,
so x^(p*q) = (x^p)^q.  The text format used by group files and reports is
one permutation per line, cycles in parentheses, points as decimal integers
from 0, whitespace-separated inside a cycle.
"""

from __future__ import annotations

import re
from functools import lru_cache


class CycleParseError(ValueError):
    """Malformed cycle-notation input; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class Perm:
    """An immutable permutation given by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images are not a bijection on 0..n-1")
        object.__setattr__(self, "images", images)

    @classmethod
    def _unsafe(cls, images: tuple) -> "Perm":
        """Skip validation for images produced by group operations."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @staticmethod
    def identity(degree: int) -> "Perm":
        return _identity(degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        o = other.images
        if len(o) != len(self.images):
            raise ValueError("degree mismatch")
        return Perm._unsafe(tuple(o[i] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._unsafe(tuple(inv))

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        result = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def order(self) -> int:
        n = 1
        for c in self.cycles(include_fixed=False):
            m = len(c)
            n = n * m // _gcd(n, m)
        return n

    def smallest_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen:
                continue
            cyc = [i]
            j = self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __repr__(self):
        return f"Perm[{self.degree}]{self.cycle_string()}"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _identity(degree: int) -> Perm:
    return Perm(range(degree))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int, line: int | None = None) -> Perm:
    """Parse one permutation written as a product of cycles.

    '()' and the empty string denote the identity.
    """
    stripped = text.strip()
    body_parts = _CYCLE_RE.findall(stripped)
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover:
        raise CycleParseError(f"unexpected text {leftover!r}", line)
    images = list(range(degree))
    for body in body_parts:
        tokens = body.replace(",", " ").split()
        if not tokens:
            continue
        try:
            pts = [int(t) for t in tokens]
        except ValueError as exc:
            raise CycleParseError(f"bad point in cycle ({body})", line) from exc
        if len(set(pts)) != len(pts):
            raise CycleParseError(f"repeated point in cycle ({body})", line)
        for pt in pts:
            if not 0 <= pt < degree:
                raise CycleParseError(f"point {pt} out of range for degree {degree}", line)
        cyc = {a: b for a, b in zip(pts, pts[1:] + pts[:1])}
        # written cycles compose left to right: x^(c1 c2) = (x^c1)^c2
        images = [cyc.get(x, x) for x in images]
    return Perm(images)


def parse_group_text(text: str) -> tuple[int, list[Perm]]:
    """Parse the group file format: 'degree <n>' then one permutation per line."""
    degree = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", stripped)
            if not m:
                raise CycleParseError("expected header 'degree <n>'", lineno)
            degree = int(m.group(1))
            continue
        gens.append(parse_cycles(stripped, degree, line=lineno))
    if degree is None:
        raise CycleParseError("missing 'degree <n>' header", 1)
    return degree, gens


def render_group_text(degree: int, gens) -> str:
    lines = [f"degree {degree}"]
    lines.extend(g.cycle_string() for g in gens)
    return "\n".join(lines) + "\n"
