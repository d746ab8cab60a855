"""Truncated trivariate power series with exact integer coefficients.

The ring is Z[x, y, q] cut off at a fixed x-degree: a series keeps every
term whose x-degree is at most ``trunc`` and silently discards the rest.
Coefficients are plain Python ints, so nothing overflows or rounds.
Truncation acts on the x-degree only; in every series this package builds,
a term's y- and q-degrees never exceed its x-degree, so the single cutoff
keeps all computations finite.

Inversion is restricted to series whose entire x^0 slice is the constant
+1 or -1.  Those are the only divisions the closed forms ever need, and
their inverses again have integer coefficients.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

DEFAULT_TRUNC = 20

Key = tuple[int, int, int]
TermsLike = Union[Mapping[Key, int], Iterable[tuple[Key, int]], None]


class NonUnitError(ArithmeticError):
    """Raised when inverting a series that is not a unit of the ring."""


class TriSeries:
    """Immutable series in x, y and q, truncated at a fixed x-degree.

    ``trunc`` is the largest retained x-degree.  Terms are stored sparsely
    as a map from (x_deg, y_deg, q_deg) to a nonzero int.  Series with
    different truncation orders compare coefficient-wise up to the smaller
    order; binary operations truncate their result to the smaller of the
    operands' orders.  Plain ints coerce to constant series.
    """

    __slots__ = ("trunc", "_terms", "_slice_cache")

    def __init__(self, trunc: int, terms: TermsLike = None):
        if trunc < 1:
            raise ValueError(f"truncation order must be >= 1, got {trunc}")
        acc: dict[Key, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (a, b, s), c in items:
                if a < 0 or b < 0 or s < 0:
                    raise ValueError(f"negative exponents in term ({a}, {b}, {s})")
                if c and a <= trunc:
                    key = (a, b, s)
                    acc[key] = acc.get(key, 0) + c
        self.trunc = trunc
        self._terms = {k: c for k, c in acc.items() if c}
        self._slice_cache: dict[int, dict[tuple[int, int], int]] | None = None

    # -- inspection --------------------------------------------------------

    def coeff(self, a: int, b: int, s: int) -> int:
        """Exact coefficient of x^a y^b q^s (zero for absent terms)."""
        if a < 0 or b < 0 or s < 0:
            raise ValueError("exponents must be non-negative")
        if a > self.trunc:
            raise ValueError(f"x-degree {a} exceeds truncation order {self.trunc}")
        return self._terms.get((a, b, s), 0)

    def terms(self) -> Iterator[tuple[Key, int]]:
        """Nonzero terms in lexicographic (x, y, q) order."""
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.trunc, o.trunc)
        for key, c in self._terms.items():
            if key[0] <= n and o._terms.get(key, 0) != c:
                return False
        for key in o._terms:
            if key[0] <= n and key not in self._terms:
                return False
        return True

    __hash__ = None  # mutable-dict backing; equality spans truncation orders

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.trunc, o.trunc)
        out = {k: c for k, c in self._terms.items() if k[0] <= n}
        for k, c in o._terms.items():
            if k[0] <= n:
                out[k] = out.get(k, 0) + c
        return TriSeries(n, out)

    __radd__ = __add__

    def __neg__(self):
        return TriSeries(self.trunc, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.trunc, o.trunc)
        out: dict[Key, int] = {}
        right = o._slices()
        for a1, left_slice in self._slices().items():
            if a1 > n:
                continue
            for a2, right_slice in right.items():
                a = a1 + a2
                if a > n:
                    continue
                for (b1, s1), c1 in left_slice.items():
                    for (b2, s2), c2 in right_slice.items():
                        key = (a, b1 + b2, s1 + s2)
                        out[key] = out.get(key, 0) + c1 * c2
        return TriSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> TriSeries:
        """Multiplicative inverse up to the truncation order.

        The x^0 slice must be exactly +1 or -1.  Anything else raises
        NonUnitError: a different constant breaks integrality, and extra
        x^0 terms in y or q would give the inverse unboundedly many terms
        at a fixed x-degree.
        """
        slices = self._slices()
        head = slices.get(0, {})
        const = head.get((0, 0), 0)
        if const not in (1, -1) or len(head) != 1:
            raise NonUnitError(
                "series is invertible only when its x^0 slice is the constant +1 or -1"
            )
        inv0 = const
        g: dict[int, dict[tuple[int, int], int]] = {0: {(0, 0): inv0}}
        for a in range(1, self.trunc + 1):
            acc: dict[tuple[int, int], int] = {}
            for i in range(1, a + 1):
                fi = slices.get(i)
                gj = g.get(a - i)
                if not fi or not gj:
                    continue
                for (b1, s1), c1 in fi.items():
                    for (b2, s2), c2 in gj.items():
                        key = (b1 + b2, s1 + s2)
                        acc[key] = acc.get(key, 0) + c1 * c2
            slice_a = {k: -inv0 * v for k, v in acc.items() if v}
            if slice_a:
                g[a] = slice_a
        return TriSeries(
            self.trunc,
            {(a, b, s): c for a, sl in g.items() for (b, s), c in sl.items()},
        )

    # -- specializations -----------------------------------------------------

    def at_q1(self) -> TriSeries:
        """Substitute q := 1, folding all q-degrees together."""
        out: dict[Key, int] = {}
        for (a, b, _s), c in self._terms.items():
            key = (a, b, 0)
            out[key] = out.get(key, 0) + c
        return TriSeries(self.trunc, out)

    def diff_q(self) -> TriSeries:
        """Formal partial derivative with respect to q."""
        out: dict[Key, int] = {}
        for (a, b, s), c in self._terms.items():
            if s:
                out[a, b, s - 1] = s * c
        return TriSeries(self.trunc, out)

    def truncated(self, trunc: int) -> TriSeries:
        """Copy with a smaller truncation order; terms above it are dropped."""
        if trunc > self.trunc:
            raise ValueError("cannot extend a truncated series")
        if trunc == self.trunc:
            return self
        return TriSeries(trunc, self._terms)

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        """JSON-ready dict; coefficients become decimal strings."""
        return {
            "trunc": self.trunc,
            "terms": [
                {"a": a, "b": b, "s": s, "c": str(c)}
                for (a, b, s), c in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> TriSeries:
        terms = {
            (int(t["a"]), int(t["b"]), int(t["s"])): int(t["c"])
            for t in obj["terms"]
        }
        return cls(int(obj["trunc"]), terms)

    # -- display ---------------------------------------------------------------

    def __repr__(self):
        return f"TriSeries(trunc={self.trunc}, nterms={len(self._terms)})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for key, c in sorted(self._terms.items()):
            out.append(_format_term(key, c, first=not out))
        return "".join(out)

    # -- internals -------------------------------------------------------------

    def _slices(self) -> dict[int, dict[tuple[int, int], int]]:
        """Terms regrouped by x-degree (cached; treated as read-only)."""
        if self._slice_cache is None:
            grouped: dict[int, dict[tuple[int, int], int]] = {}
            for (a, b, s), c in self._terms.items():
                grouped.setdefault(a, {})[b, s] = c
            self._slice_cache = grouped
        return self._slice_cache

    def _coerce(self, other) -> TriSeries | None:
        if isinstance(other, TriSeries):
            return other
        if isinstance(other, int):
            return TriSeries(self.trunc, {(0, 0, 0): other})
        return None


def _format_term(key: Key, c: int, first: bool) -> str:
    a, b, s = key
    factors = []
    for name, e in (("x", a), ("y", b), ("q", s)):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if abs(c) != 1 or not factors:
        factors.insert(0, str(abs(c)))
    body = "*".join(factors)
    if first:
        return body if c > 0 else "-" + body
    return (" + " if c > 0 else " - ") + body


def zero(trunc: int = DEFAULT_TRUNC) -> TriSeries:
    return TriSeries(trunc)


def one(trunc: int = DEFAULT_TRUNC) -> TriSeries:
    return TriSeries(trunc, {(0, 0, 0): 1})


def monomial(a: int, b: int, s: int, coeff: int = 1, trunc: int = DEFAULT_TRUNC) -> TriSeries:
    """Single-term series coeff * x^a y^b q^s (the zero series if a > trunc)."""
    return TriSeries(trunc, {(a, b, s): coeff})


def variables(trunc: int = DEFAULT_TRUNC) -> tuple[TriSeries, TriSeries, TriSeries]:
    """The three generators (x, y, q) at the given truncation order."""
    return (
        monomial(1, 0, 0, 1, trunc),
        monomial(0, 1, 0, 1, trunc),
        monomial(0, 0, 1, 1, trunc),
    )
