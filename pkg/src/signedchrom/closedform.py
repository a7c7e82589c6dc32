"""Closed-form chromatic polynomials for joins of signed complete graphs.

Four three-parameter families are covered, each with an even polynomial
H1..H4 and a companion "hat" polynomial that corrects the odd constituent:

  family 1: (-K_l) joined+ (+K_m) joined+ (-K_n)
  family 2: (-K_l) joined+ (-K_m) joined+ (-K_n)
  family 3: ((+K_l) joined- (+K_m)) joined+ (+K_n)
  family 4: ((+K_l) joined- (+K_m)) joined+ (-K_n)

H(n, x) is the special case of family 1 with l = m = 0 (the all-negative
complete graph).  All functions return the zero polynomial whenever any
parameter is negative.  identity_suite machine-checks the nine exchange and
collapse identities these families satisfy.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb, factorial

from .errors import BadIndexError, NegativeParameterError
from .graphs import SignedGraph, complete_graph, join
from .poly import (
    ChromaticPair,
    UniPoly,
    double_falling,
    falling_factorial,
    integer_falling,
    matchings_T,
    stirling2,
)


@functools.lru_cache(maxsize=None)
def _falling_shifted(m: int, a: int) -> UniPoly:
    """(x - a)_m as a polynomial in x."""
    return falling_factorial(m).shifted(-a)


@functools.lru_cache(maxsize=None)
def H(n: int) -> UniPoly:
    """Sum of stirling2(n, i) * double_falling(i); zero for n < 0."""
    if n < 0:
        return UniPoly.zero()
    acc = UniPoly.zero()
    for i in range(n + 1):
        acc = acc + stirling2(n, i) * double_falling(i)
    return acc


@functools.lru_cache(maxsize=None)
def H1(l: int, m: int, n: int) -> UniPoly:
    if l < 0 or m < 0 or n < 0:
        return UniPoly.zero()
    acc = UniPoly.zero()
    for i in range(l + 1):
        si = stirling2(l, i)
        if not si:
            continue
        for j in range(n + 1):
            sj = stirling2(n, j)
            if not sj:
                continue
            tail = _falling_shifted(m, i + j)
            for k in range(min(i, j) + 1):
                w = factorial(k) * comb(i, k) * comb(j, k) * si * sj
                acc = acc + w * (double_falling(i + j - k) * tail)
    return acc


@functools.lru_cache(maxsize=None)
def H2(l: int, m: int, n: int) -> UniPoly:
    if l < 0 or m < 0 or n < 0:
        return UniPoly.zero()
    acc = UniPoly.zero()
    for i in range(l + 1):
        si = stirling2(l, i)
        if not si:
            continue
        for j in range(m + 1):
            sj = stirling2(m, j)
            if not sj:
                continue
            for k in range(n + 1):
                sk = stirling2(n, k)
                if not sk:
                    continue
                for s in range(min(i, j) + 1):
                    fs = factorial(s) * comb(i, s) * comb(j, s)
                    for t in range(k + 1):
                        w = (
                            fs
                            * comb(k, t)
                            * si
                            * sj
                            * sk
                            * integer_falling(i + j - 2 * s, t)
                        )
                        if w:
                            acc = acc + w * double_falling(i + j + k - t - s)
    return acc


@functools.lru_cache(maxsize=None)
def H3(l: int, m: int, n: int) -> UniPoly:
    if l < 0 or m < 0 or n < 0:
        return UniPoly.zero()
    acc = UniPoly.zero()
    for i in range(min(l, m) + 1):
        fi = factorial(i) * comb(l, i) * comb(m, i)
        tail = _falling_shifted(n, l + m - i)
        for j in range((l - i) // 2 + 1):
            tj = matchings_T(l - i, j)
            if not tj:
                continue
            for k in range((m - i) // 2 + 1):
                tk = matchings_T(m - i, k)
                if not tk:
                    continue
                w = fi * tj * tk
                acc = acc + w * (double_falling(l + m - i - j - k) * tail)
    return acc


def U_x(i: int, j: int, k: int, l: int, m: int, s: int, t: int) -> UniPoly:
    """double_falling(l+m+s-i-j-k-t) times the integer (l+m-i-2j-2k)_t."""
    if not l + m + s - i - j - k >= t >= 0:
        raise BadIndexError(f"need l+m+s-i-j-k >= t >= 0, got t={t}")
    return integer_falling(l + m - i - 2 * j - 2 * k, t) * double_falling(
        l + m + s - i - j - k - t
    )


@functools.lru_cache(maxsize=None)
def H4(l: int, m: int, n: int) -> UniPoly:
    if l < 0 or m < 0 or n < 0:
        return UniPoly.zero()
    acc = UniPoly.zero()
    for i in range(min(l, m) + 1):
        fi = factorial(i) * comb(l, i) * comb(m, i)
        for j in range((l - i) // 2 + 1):
            tj = matchings_T(l - i, j)
            if not tj:
                continue
            for k in range((m - i) // 2 + 1):
                tk = matchings_T(m - i, k)
                if not tk:
                    continue
                for s in range(n + 1):
                    ss = stirling2(n, s)
                    if not ss:
                        continue
                    for t in range(s + 1):
                        w = fi * tj * tk * ss * comb(s, t)
                        if w:
                            acc = acc + w * U_x(i, j, k, l, m, s, t)
    return acc


_FAMILY = {1: H1, 2: H2, 3: H3, 4: H4}


def _hat(h, l: int, m: int, n: int) -> UniPoly:
    """l*h(l-1,m,n)(x-1) + m*h(l,m-1,n)(x-1) + n*h(l,m,n-1)(x-1)."""
    acc = UniPoly.zero()
    for w, args in ((l, (l - 1, m, n)), (m, (l, m - 1, n)), (n, (l, m, n - 1))):
        if w:
            acc = acc + w * h(*args).shifted(-1)
    return acc


def hat_H1(l: int, m: int, n: int) -> UniPoly:
    return _hat(H1, l, m, n)


def hat_H2(l: int, m: int, n: int) -> UniPoly:
    return _hat(H2, l, m, n)


def hat_H3(l: int, m: int, n: int) -> UniPoly:
    return _hat(H3, l, m, n)


def hat_H4(l: int, m: int, n: int) -> UniPoly:
    return _hat(H4, l, m, n)


def join_pair(family: int, l: int, m: int, n: int) -> ChromaticPair:
    """Chromatic pair of the family's join graph from the closed forms.

    The even constituent is the family polynomial itself; the odd one is the
    even constituent shifted to x-1 plus the family's hat polynomial.
    """
    if family not in _FAMILY:
        raise NegativeParameterError(f"family must be 1..4, got {family!r}")
    if l < 0 or m < 0 or n < 0:
        raise NegativeParameterError(f"parameters must be >= 0, got {(l, m, n)}")
    h = _FAMILY[family]
    even = h(l, m, n)
    odd = even.shifted(-1) + _hat(h, l, m, n)
    return ChromaticPair(even, odd)


def join_family_graph(family: int, l: int, m: int, n: int) -> SignedGraph:
    """The explicit signed graph whose pair join_pair computes."""
    if family not in _FAMILY:
        raise NegativeParameterError(f"family must be 1..4, got {family!r}")
    if l < 0 or m < 0 or n < 0:
        raise NegativeParameterError(f"parameters must be >= 0, got {(l, m, n)}")
    if family == 1:
        return join(join(complete_graph(l, -1), complete_graph(m, 1), 1),
                    complete_graph(n, -1), 1)
    if family == 2:
        return join(join(complete_graph(l, -1), complete_graph(m, -1), 1),
                    complete_graph(n, -1), 1)
    if family == 3:
        return join(join(complete_graph(l, 1), complete_graph(m, 1), -1),
                    complete_graph(n, 1), 1)
    return join(join(complete_graph(l, 1), complete_graph(m, 1), -1),
                complete_graph(n, -1), 1)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    description: str
    checked: int
    status: str  # "pass" | "fail"
    counterexample: str | None = None


@dataclass(frozen=True)
class IdentitySuiteReport:
    max_param: int
    results: tuple[IdentityResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            line = f"{r.name}: {r.description} [params <= {self.max_param}, {r.checked} checks] {r.status.upper()}"
            if r.counterexample:
                line += f"  first counterexample: {r.counterexample}"
            out.append(line)
        return out

    def to_dict(self) -> dict:
        return {
            "max_param": self.max_param,
            "all_pass": self.all_pass,
            "identities": [
                {
                    "name": r.name,
                    "description": r.description,
                    "checked": r.checked,
                    "status": r.status,
                    "counterexample": r.counterexample,
                }
                for r in self.results
            ],
        }


def identity_suite(max_param: int) -> IdentitySuiteReport:
    """Check the nine family identities for all parameters up to max_param."""
    rng = range(max_param + 1)
    results = []

    def run(name, description, cases):
        checked = 0
        bad = None
        for label, lhs, rhs in cases:
            checked += 1
            if lhs != rhs and bad is None:
                bad = label
        results.append(
            IdentityResult(name, description, checked, "fail" if bad else "pass", bad)
        )

    run(
        "i",
        "H1(l,m,n) = H1(n,m,l)",
        (
            (f"(l,m,n)={(l, m, n)}", H1(l, m, n), H1(n, m, l))
            for l in rng for m in rng for n in rng
        ),
    )
    run(
        "ii",
        "H2 symmetric in all three parameters",
        (
            (f"(l,m,n)={(l, m, n)} perm={p}", H2(l, m, n), H2(*p))
            for l in rng for m in rng for n in rng
            for p in ((l, n, m), (m, l, n), (m, n, l), (n, l, m), (n, m, l))
        ),
    )
    run(
        "iii",
        "H1(l,1,n) = H2(l,1,n)",
        (
            (f"(l,n)={(l, n)}", H1(l, 1, n), H2(l, 1, n))
            for l in rng for n in rng
        ),
    )
    run(
        "iv",
        "H1(q,0,r) = H2(q,0,r) = H(q+r)",
        (
            case
            for q in rng for r in rng
            for case in (
                (f"(q,r)={(q, r)} H1", H1(q, 0, r), H(q + r)),
                (f"(q,r)={(q, r)} H2", H2(q, 0, r), H(q + r)),
            )
        ),
    )
    run(
        "v",
        "H4(l,m,n) = H4(m,l,n)",
        (
            (f"(l,m,n)={(l, m, n)}", H4(l, m, n), H4(m, l, n))
            for l in rng for m in rng for n in rng
        ),
    )
    run(
        "vi",
        "H3 symmetric in all three parameters",
        (
            (f"(l,m,n)={(l, m, n)} perm={p}", H3(l, m, n), H3(*p))
            for l in rng for m in rng for n in rng
            for p in ((l, n, m), (m, l, n), (m, n, l), (n, l, m), (n, m, l))
        ),
    )
    run(
        "vii",
        "H3(l,m,1) = H4(l,m,1)",
        (
            (f"(l,m)={(l, m)}", H3(l, m, 1), H4(l, m, 1))
            for l in rng for m in rng
        ),
    )
    viii_cases = []
    for q in rng:
        for r in rng:
            viii_cases.append(
                (f"(q,r)={(q, r)} H3", H3(q, r, 0), falling_factorial(q + r))
            )
            viii_cases.append(
                (f"(q,r)={(q, r)} H4", H4(q, r, 0), falling_factorial(q + r))
            )
    for n in range(2 * max_param + 1):
        tsum = sum(
            (matchings_T(n, j) * double_falling(n - j) for j in range(n // 2 + 1)),
            UniPoly.zero(),
        )
        viii_cases.append((f"n={n} T-sum", falling_factorial(n), tsum))
    run(
        "viii",
        "H3(q,r,0) = H4(q,r,0) = (x)_{q+r}; (x)_n = sum_j T(n,j) * 2-falling(n-j)",
        viii_cases,
    )
    run(
        "ix",
        "H1(0,m,n) = H4(1,m,n-1) for n >= 1",
        (
            (f"(m,n)={(m, n)}", H1(0, m, n), H4(1, m, n - 1))
            for m in rng for n in range(1, max_param + 1)
        ),
    )
    return IdentitySuiteReport(max_param, tuple(results))
