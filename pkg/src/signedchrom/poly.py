"""Exact integer polynomial arithmetic in x and in (x, y).

Univariate polynomials are dense tuples of coefficients indexed by degree;
bivariate polynomials are sparse maps (x_degree, y_degree) -> coefficient.
Coefficients are plain Python ints, so every operation is exact at any size.
Canonical form: no trailing zero coefficients / no zero-valued terms, which
makes equality, hashing and the JSON serialization bit-stable.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ArityMismatchError, NegativeIndexError


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in x with integer coefficients, ascending by degree."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def constant(c: int) -> "UniPoly":
        return UniPoly((c,))

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return UniPoly((other,))
        if isinstance(other, BiPoly):
            raise ArityMismatchError("cannot mix univariate and bivariate polynomials")
        if isinstance(other, UniPoly):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise NegativeIndexError("negative polynomial power")
        out = UniPoly.one()
        for _ in range(e):
            out = out * self
        return out

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def shifted(self, dx: int) -> "UniPoly":
        """Return p(x + dx), expanded exactly (Horner in the shifted variable)."""
        if dx == 0:
            return self
        acc = UniPoly.zero()
        base = UniPoly((dx, 1))
        for c in reversed(self.coeffs):
            acc = acc * base + c
        return acc

    def __str__(self) -> str:
        return format_unipoly(self)


class BiPoly:
    """Sparse polynomial in x and y with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        d: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (i, j), c in items:
                if c:
                    k = (i, j)
                    nc = d.get(k, 0) + c
                    if nc:
                        d[k] = nc
                    elif k in d:
                        del d[k]
        self._terms = d

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly({(0, 0): 1})

    @staticmethod
    def x() -> "BiPoly":
        return BiPoly({(1, 0): 1})

    @staticmethod
    def y() -> "BiPoly":
        return BiPoly({(0, 1): 1})

    @staticmethod
    def constant(c: int) -> "BiPoly":
        return BiPoly({(0, 0): c})

    # -- queries -----------------------------------------------------------

    def items(self):
        """Terms as ((x_degree, y_degree), coefficient), lexicographic order."""
        return sorted(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return BiPoly({(0, 0): other})
        if isinstance(other, UniPoly):
            raise ArityMismatchError("cannot mix univariate and bivariate polynomials")
        if isinstance(other, BiPoly):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
        r = BiPoly()
        r._terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = BiPoly()
        r._terms = {k: -c for k, c in self._terms.items()}
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                nc = out.get(k, 0) + c1 * c2
                if nc:
                    out[k] = nc
                elif k in out:
                    del out[k]
        r = BiPoly()
        r._terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise NegativeIndexError("negative polynomial power")
        out = BiPoly.one()
        for _ in range(e):
            out = out * self
        return out

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x0: int, y0: int) -> int:
        return sum(c * x0**i * y0**j for (i, j), c in self._terms.items())

    def shifted(self, dx: int, dy: int) -> "BiPoly":
        """Return p(x + dx, y + dy), expanded exactly."""
        if dx == 0 and dy == 0:
            return self
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._terms.items():
            xrow = _shift_row(i, dx)
            yrow = _shift_row(j, dy)
            for a, ca in enumerate(xrow):
                cca = c * ca
                if not cca:
                    continue
                for b, cb in enumerate(yrow):
                    if not cb:
                        continue
                    k = (a, b)
                    nc = out.get(k, 0) + cca * cb
                    if nc:
                        out[k] = nc
                    elif k in out:
                        del out[k]
        r = BiPoly()
        r._terms = out
        return r

    def substitute_y(self, y0: int) -> UniPoly:
        """Return p(x, y0) as a univariate polynomial."""
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            out[i] = out.get(i, 0) + c * y0**j
        if not out:
            return UniPoly.zero()
        coeffs = [0] * (max(out) + 1)
        for i, c in out.items():
            coeffs[i] = c
        return UniPoly(tuple(coeffs))

    def diagonal(self) -> UniPoly:
        """Return p(x, x): substitute y = x."""
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            out[i + j] = out.get(i + j, 0) + c
        if not out:
            return UniPoly.zero()
        coeffs = [0] * (max(out) + 1)
        for i, c in out.items():
            coeffs[i] = c
        return UniPoly(tuple(coeffs))

    def __str__(self) -> str:
        return format_bipoly(self)


@functools.lru_cache(maxsize=None)
def _shift_row(n: int, d: int) -> tuple[int, ...]:
    """Coefficients of (t + d)^n in t, ascending."""
    return tuple(math.comb(n, k) * d ** (n - k) for k in range(n + 1))


class ChromaticPair(NamedTuple):
    """The (even, odd) univariate chromatic polynomials of a signed graph."""

    even: UniPoly
    odd: UniPoly


class BivariatePair(NamedTuple):
    """The (even, odd) bivariate chromatic polynomials of a signed graph."""

    even: BiPoly
    odd: BiPoly


# -- arity-generic operation wrappers ----------------------------------------


def shift_substitute(p, dx: int, dy: int = 0):
    """Return p(x+dx) or p(x+dx, y+dy); dy is ignored for univariate p."""
    if isinstance(p, UniPoly):
        return p.shifted(dx)
    if isinstance(p, BiPoly):
        return p.shifted(dx, dy)
    raise ArityMismatchError(f"not a polynomial: {type(p).__name__}")


def evaluate(p, x0: int, y0: int | None = None) -> int:
    """Evaluate exactly; y0 must be supplied iff p is bivariate."""
    if isinstance(p, UniPoly):
        if y0 is not None:
            raise ArityMismatchError("y value supplied for a univariate polynomial")
        return p.evaluate(x0)
    if isinstance(p, BiPoly):
        if y0 is None:
            raise ArityMismatchError("bivariate polynomial needs a y value")
        return p.evaluate(x0, y0)
    raise ArityMismatchError(f"not a polynomial: {type(p).__name__}")


# -- combinatorial sequences -------------------------------------------------


@functools.lru_cache(maxsize=None)
def falling_factorial(n: int) -> UniPoly:
    """(x)_n = x (x-1) ... (x-n+1); the empty product for n = 0."""
    if n < 0:
        raise NegativeIndexError("falling factorial needs n >= 0")
    p = UniPoly.one()
    for j in range(n):
        p = p * UniPoly((-j, 1))
    return p


@functools.lru_cache(maxsize=None)
def double_falling(n: int) -> UniPoly:
    """x (x-2) (x-4) ... (x-2n+2); the empty product for n = 0."""
    if n < 0:
        raise NegativeIndexError("double falling factorial needs n >= 0")
    p = UniPoly.one()
    for j in range(n):
        p = p * UniPoly((-2 * j, 1))
    return p


def integer_falling(a: int, t: int) -> int:
    """a (a-1) ... (a-t+1) with value 1 for t = 0."""
    if t < 0:
        raise NegativeIndexError("integer falling factorial needs t >= 0")
    out = 1
    for j in range(t):
        out *= a - j
    return out


@functools.lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind; 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def matchings_T(n: int, k: int) -> int:
    """Number of k-edge matchings in the complete graph on n vertices."""
    if n < 0 or k < 0 or n < 2 * k:
        return 0
    return integer_falling(n, 2 * k) // (2**k * math.factorial(k))


# -- canonical JSON serialization --------------------------------------------


def unipoly_to_json(p: UniPoly) -> list[str]:
    """Decimal coefficient strings ascending by degree; [] for zero."""
    return [str(c) for c in p.coeffs]


def json_to_unipoly(obj) -> UniPoly:
    return UniPoly(tuple(int(s) for s in obj))


def bipoly_to_json(p: BiPoly) -> list[list]:
    """[x_degree, y_degree, "coefficient"] triples, lexicographic order."""
    return [[i, j, str(c)] for (i, j), c in p.items()]


def json_to_bipoly(obj) -> BiPoly:
    return BiPoly({(int(i), int(j)): int(c) for i, j, c in obj})


def pair_to_json(pair) -> dict:
    if isinstance(pair, ChromaticPair):
        return {"even": unipoly_to_json(pair.even), "odd": unipoly_to_json(pair.odd)}
    return {"even": bipoly_to_json(pair.even), "odd": bipoly_to_json(pair.odd)}


# -- human-readable rendering -------------------------------------------------


def _term_str(c: int, monomial: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    body = monomial if mag == 1 and monomial else (f"{mag}" if not monomial else f"{mag}*{monomial}")
    if first:
        return body if c > 0 else f"-{body}"
    return f" {sign} {body}"


def format_unipoly(p: UniPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        parts.append(_term_str(c, mono, not parts))
    return "".join(parts)


def format_bipoly(p: BiPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    terms = sorted(p._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
    for (i, j), c in terms:
        xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        ys = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
        mono = xs + ("*" if xs and ys else "") + ys
        parts.append(_term_str(c, mono, not parts))
    return "".join(parts)
