"""Sparse exact arithmetic for differential polynomials over the rationals.

A differential polynomial is a rational linear combination of monomials in
the derivatives u, u', u'', ... of finitely many declared indeterminates.
The derivation maps the k-th derivative of an indeterminate to the
(k+1)-st, kills rational constants, and extends to products by the Leibniz
rule.

Values are immutable and canonical: coefficients are reduced fractions,
zero terms are never stored, and structural equality coincides with
mathematical equality.  The zero polynomial has an empty term map.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import (
    MissingAssignment,
    RecursiveSubstitution,
    UnknownIndeterminate,
)

Scalar = Union[int, Fraction]

_IDENT_RE = re.compile(r"[a-z][a-z0-9]*\Z")
_ZERO = Fraction(0)


class DerivVar(NamedTuple):
    """The ``order``-th derivative of a declared indeterminate."""

    name: str
    order: int


class Context:
    """Ordered declaration of the differential indeterminates in play.

    The declaration order fixes the canonical monomial order (and thereby
    printing order and deterministic coefficient selection).  Derivative
    orders are unbounded; only the base names are declared.
    """

    __slots__ = ("names", "_index")

    def __init__(self, *names: str):
        if not names:
            raise ValueError("at least one indeterminate must be declared")
        for name in names:
            if not isinstance(name, str) or not _IDENT_RE.match(name):
                raise ValueError(f"invalid indeterminate name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate indeterminate names in {names!r}")
        self.names = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownIndeterminate(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Context) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Context({', '.join(map(repr, self.names))})"

    # Convenience constructors.

    def var(self, name: str, order: int = 0) -> DiffPoly:
        self.index(name)
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        return DiffPoly(self, {Monomial(((DerivVar(name, order), 1),)): 1})

    def constant(self, value: Scalar) -> DiffPoly:
        return DiffPoly(self, {Monomial.UNIT: Fraction(value)})

    def zero(self) -> DiffPoly:
        return DiffPoly(self, {})

    def one(self) -> DiffPoly:
        return self.constant(1)


class Monomial:
    """A finite product of derivative variables with positive exponents.

    Factors are stored sorted by (name, derivative order), so equal
    monomials are structurally identical regardless of construction order.
    The empty product is the unit monomial.
    """

    __slots__ = ("factors", "_hash")

    factors: tuple[tuple[DerivVar, int], ...]

    def __init__(self, factors: Iterable[tuple[DerivVar, int]] = ()):
        kept = []
        for var, exp in factors:
            if exp < 0:
                raise ValueError(f"negative exponent for {var}")
            if exp:
                kept.append((var, exp))
        kept.sort()
        if len({v for v, _ in kept}) != len(kept):
            raise ValueError("repeated variable in monomial factors")
        self.factors = tuple(kept)
        self._hash = hash(self.factors)

    @classmethod
    def _make(cls, sorted_factors: tuple[tuple[DerivVar, int], ...]) -> Monomial:
        # Internal fast path: factors already sorted, positive, distinct.
        m = object.__new__(cls)
        m.factors = sorted_factors
        m._hash = hash(sorted_factors)
        return m

    UNIT: Monomial  # assigned below

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def exponent(self, var: DerivVar) -> int:
        for v, e in self.factors:
            if v == var:
                return e
        return 0

    def variables(self) -> Iterator[DerivVar]:
        return (v for v, _ in self.factors)

    def __mul__(self, other: Monomial) -> Monomial:
        # Merge-join of two sorted factor tuples.
        a, b = self.factors, other.factors
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            va, ea = a[i]
            vb, eb = b[j]
            if va == vb:
                out.append((va, ea + eb))
                i += 1
                j += 1
            elif va < vb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._make(tuple(out))

    def divide(self, other: Monomial) -> Monomial | None:
        """Quotient monomial, or None when ``other`` does not divide."""
        left = dict(self.factors)
        for v, e in other.factors:
            have = left.get(v, 0)
            if have < e:
                return None
            if have == e:
                del left[v]
            else:
                left[v] = have - e
        return Monomial._make(tuple(sorted(left.items())))

    def split(self, name: str) -> tuple[Monomial, Monomial]:
        """Partition into (factors on ``name``, remaining factors)."""
        mine = tuple((v, e) for v, e in self.factors if v.name == name)
        rest = tuple((v, e) for v, e in self.factors if v.name != name)
        return Monomial._make(mine), Monomial._make(rest)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.factors:
            return "Monomial()"
        body = ", ".join(f"({v.name!r},{v.order})^{e}" for v, e in self.factors)
        return f"Monomial[{body}]"


Monomial.UNIT = Monomial()


def monomial_key(mono: Monomial, ctx: Context):
    """Graded lexicographic sort key.

    Total degree compares first; ties read exponents from the highest
    variable down, variables ordered by (declaration index, derivative
    order).
    """
    ranked = sorted(
        ((ctx.index(v.name), v.order, e) for v, e in mono.factors), reverse=True
    )
    return (mono.degree, tuple(ranked))


class DiffPoly:
    """A differential polynomial with exact rational coefficients.

    Instances are immutable; all arithmetic returns new canonical values.
    Mixed arithmetic with int and Fraction treats the scalar as a constant
    polynomial.
    """

    __slots__ = ("ctx", "_terms")

    def __init__(
        self,
        ctx: Context,
        terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            c = acc.get(mono, _ZERO) + Fraction(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        self.ctx = ctx
        self._terms = acc

    @classmethod
    def _raw(cls, ctx: Context, terms: dict[Monomial, Fraction]) -> DiffPoly:
        # Internal fast path: terms already canonical (Fractions, no zeros).
        p = object.__new__(cls)
        p.ctx = ctx
        p._terms = terms
        return p

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _coerce(self, other) -> DiffPoly | None:
        if isinstance(other, DiffPoly):
            if other.ctx != self.ctx:
                raise ValueError("operands declare different indeterminates")
            return other
        if isinstance(other, (int, Fraction)):
            return DiffPoly(self.ctx, {Monomial.UNIT: other})
        return None

    def __add__(self, other) -> DiffPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in q._terms.items():
            s = acc.get(mono, _ZERO) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        return DiffPoly._raw(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self) -> DiffPoly:
        return DiffPoly._raw(self.ctx, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> DiffPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> DiffPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> DiffPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self._terms or not q._terms:
            return DiffPoly._raw(self.ctx, {})
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in q._terms.items():
                mono = m1 * m2
                s = acc.get(mono, _ZERO) + c1 * c2
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        return DiffPoly._raw(self.ctx, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> DiffPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = DiffPoly._raw(self.ctx, {Monomial.UNIT: Fraction(1)})
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DiffPoly(self.ctx, {Monomial.UNIT: other})
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    __hash__ = None  # mutable-dict internals; value identity is structural

    # ------------------------------------------------------------------
    # Structure queries

    def variables(self) -> set[DerivVar]:
        seen: set[DerivVar] = set()
        for mono in self._terms:
            seen.update(mono.variables())
        return seen

    def order_in(self, name: str) -> int | None:
        """Largest derivative order of ``name`` present, or None if absent."""
        self.ctx.index(name)
        best: int | None = None
        for mono in self._terms:
            for v in mono.variables():
                if v.name == name and (best is None or v.order > best):
                    best = v.order
        return best

    def degree_in(self, var: DerivVar) -> int:
        return max((m.exponent(var) for m in self._terms), default=0)

    def total_degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def coefficient_of(self, var: DerivVar, power: int) -> DiffPoly:
        """Coefficient of ``var**power``, with ``var`` removed."""
        acc: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            if mono.exponent(var) == power:
                rest = Monomial._make(tuple(f for f in mono.factors if f[0] != var))
                acc[rest] = acc.get(rest, _ZERO) + c
        return DiffPoly(self.ctx, acc)

    def constant_value(self) -> Fraction:
        """The coefficient of the unit monomial."""
        return self._terms.get(Monomial.UNIT, _ZERO)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Largest term under the canonical monomial order."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        mono = max(self._terms, key=lambda m: monomial_key(m, self.ctx))
        return mono, self._terms[mono]

    # ------------------------------------------------------------------
    # Calculus

    def partial(self, var: DerivVar) -> DiffPoly:
        """Formal partial derivative with respect to one derivative variable."""
        acc: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            e = mono.exponent(var)
            if not e:
                continue
            reduced = dict(mono.factors)
            if e == 1:
                del reduced[var]
            else:
                reduced[var] = e - 1
            m = Monomial._make(tuple(sorted(reduced.items())))
            acc[m] = acc.get(m, _ZERO) + c * e
        return DiffPoly._raw(self.ctx, {m: c for m, c in acc.items() if c})

    def delta(self, k: int = 1) -> DiffPoly:
        """Apply the derivation ``k`` times."""
        if k < 0:
            raise ValueError("derivation count must be non-negative")
        p = self
        for _ in range(k):
            p = p._delta_once()
        return p

    def _delta_once(self) -> DiffPoly:
        acc: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            for var, exp in mono.factors:
                bumped = dict(mono.factors)
                if exp == 1:
                    del bumped[var]
                else:
                    bumped[var] = exp - 1
                up = DerivVar(var.name, var.order + 1)
                bumped[up] = bumped.get(up, 0) + 1
                m = Monomial._make(tuple(sorted(bumped.items())))
                s = acc.get(m, _ZERO) + c * exp
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return DiffPoly._raw(self.ctx, acc)

    def evaluate(self, assignment: Mapping[DerivVar, Scalar]) -> Fraction:
        """Exact value under a point assignment covering all variables."""
        total = _ZERO
        for mono, c in self._terms.items():
            value = c
            for var, exp in mono.factors:
                if var not in assignment:
                    raise MissingAssignment(var)
                value *= Fraction(assignment[var]) ** exp
            total += value
        return total

    def substitute(self, target: str, image: DiffPoly) -> DiffPoly:
        """Differential substitution: each k-th derivative of ``target`` is
        replaced by the k-th derivative of ``image``."""
        self.ctx.index(target)
        if image.ctx != self.ctx:
            raise ValueError("image declares different indeterminates")
        if image.order_in(target) is not None:
            raise RecursiveSubstitution(
                f"image of {target!r} mentions {target!r}"
            )
        derivs: list[DiffPoly] = [image]

        def image_deriv(k: int) -> DiffPoly:
            while len(derivs) <= k:
                derivs.append(derivs[-1].delta())
            return derivs[k]

        result = DiffPoly._raw(self.ctx, {})
        for mono, c in self._terms.items():
            mine, rest = mono.split(target)
            piece = DiffPoly(self.ctx, {rest: c})
            for var, exp in mine.factors:
                piece = piece * image_deriv(var.order) ** exp
            result = result + piece
        return result

    # ------------------------------------------------------------------

    def __str__(self) -> str:
        from .syntax import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"<DiffPoly {self}>"


def exact_div(p: DiffPoly, q: DiffPoly) -> DiffPoly:
    """Exact quotient p / q in the polynomial ring.

    Raises ValueError when q does not divide p exactly; used where
    divisibility is guaranteed (fraction-free elimination pivots).

    Each round cancels the remainder's leading term against q's, so the
    leading monomial strictly decreases and the loop runs once per
    quotient term.  The remainder lives in a plain dict; its current
    leading monomial comes from a lazy max-heap of inverted sort keys,
    which keeps large divisions affordable.
    """
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return p
    ctx = p.ctx
    lt_q_mono, lt_q_coeff = q.leading_term()
    q_tail = [(m, c) for m, c in q._terms.items() if m is not lt_q_mono]

    def inverted_key(mono: Monomial):
        # Element-wise negation inverts the graded-lex order: the degree
        # component always differs first unless the ranked tuples have equal
        # length (equal-degree monomials are never strict prefixes of one
        # another).
        degree, ranked = monomial_key(mono, ctx)
        return (-degree, tuple((-i, -o, -e) for i, o, e in ranked))

    rem = dict(p._terms)
    heap = [(inverted_key(mono), seq, mono) for seq, mono in enumerate(rem)]
    heapq.heapify(heap)
    counter = len(heap)
    quotient: dict[Monomial, Fraction] = {}
    while rem:
        lt_r_mono = None
        while heap:
            _, _, candidate = heapq.heappop(heap)
            if candidate in rem:
                lt_r_mono = candidate
                break
        assert lt_r_mono is not None
        lt_r_coeff = rem.pop(lt_r_mono)
        mono = lt_r_mono.divide(lt_q_mono)
        if mono is None:
            raise ValueError("polynomials do not divide exactly")
        coeff = lt_r_coeff / lt_q_coeff
        quotient[mono] = coeff
        for m2, c2 in q_tail:
            mm = mono * m2
            if mm in rem:
                s = rem[mm] - coeff * c2
                if s:
                    rem[mm] = s
                else:
                    del rem[mm]
            else:
                rem[mm] = -coeff * c2
                counter += 1
                heapq.heappush(heap, (inverted_key(mm), counter, mm))
    return DiffPoly(ctx, quotient)
