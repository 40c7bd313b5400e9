"""Normal forms in the quantum Heisenberg algebra H_{p,q}.

Generators x, y, z obey

    z x = p^-1 x z,    z y = p y z,    y x - q x y = z,

and the monomials z^i x^j y^k form a basis.  A PbwElement is a finite
rational-cyclotomic combination of such monomials, stored as a map from
exponent triples (i, j, k) to nonzero coefficients; equality is literal
map equality, so normal forms are canonical.

Products are computed two ways: a closed-form fast path built on the
reordering identity  y x^j = q^j x^j y + [j]_{p,q} x^(j-1) z  (the
default), and a literal rewriting engine driven by the three relations
(kept for cross-checking).
"""

from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction

from .arith import AlgebraParams
from .cyclotomic import CycNumber

DEGREE_CAP = 10 ** 6

_Triple = tuple[int, int, int]


@dataclasses.dataclass(frozen=True, order=True)
class LexDegree:
    """An (x, y)-degree pair, ordered lexicographically: x first, then y."""

    u: int
    v: int


@functools.lru_cache(maxsize=None)
def _p_power(params: AlgebraParams, e: int) -> CycNumber:
    return params.p ** e


@functools.lru_cache(maxsize=None)
def _q_power(params: AlgebraParams, e: int) -> CycNumber:
    return params.q ** e


@functools.lru_cache(maxsize=None)
def pq_number(params: AlgebraParams, k: int) -> CycNumber:
    """The twisted integer [k]_{p,q} = sum of q^i p^-(k-1-i) for 0 <= i < k.

    Equals (q^k - p^-k)/(q - p^-1); vanishes exactly when both ord(p) and
    ord(q) divide k, equivalently when ord(pq) divides k.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    acc = CycNumber.zero(params.conductor)
    for i in range(k):
        acc = acc + _q_power(params, i) * _p_power(params, -(k - 1 - i))
    return acc


class PbwElement:
    """An element of H_{p,q} in the z-before-x-before-y normal form."""

    __slots__ = ("params", "terms")

    def __init__(self, params: AlgebraParams, terms: dict[_Triple, CycNumber]):
        clean: dict[_Triple, CycNumber] = {}
        for (i, j, k), c in terms.items():
            if i < 0 or j < 0 or k < 0:
                raise ValueError("negative exponent")
            if i > DEGREE_CAP or j > DEGREE_CAP or k > DEGREE_CAP:
                raise OverflowError(f"exponent beyond the degree cap {DEGREE_CAP}")
            if not isinstance(c, CycNumber):
                c = CycNumber.from_rational(params.conductor, c)
            if not c.is_zero():
                clean[(i, j, k)] = c
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PbwElement is immutable")

    # --- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, params: AlgebraParams) -> PbwElement:
        return cls(params, {})

    @classmethod
    def scalar(cls, params: AlgebraParams, c) -> PbwElement:
        return cls(params, {(0, 0, 0): _coerce_scalar(params, c)})

    @classmethod
    def one(cls, params: AlgebraParams) -> PbwElement:
        return cls.scalar(params, 1)

    @classmethod
    def monomial(cls, params: AlgebraParams, i: int, j: int, k: int,
                 coeff=1) -> PbwElement:
        return cls(params, {(i, j, k): _coerce_scalar(params, coeff)})

    # --- ring structure ----------------------------------------------------

    def _check(self, other: PbwElement) -> None:
        if self.params != other.params:
            raise ValueError("params mismatch between operands")

    def __add__(self, other):
        if isinstance(other, (CycNumber, int, Fraction)):
            other = PbwElement.scalar(self.params, other)
        if not isinstance(other, PbwElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        zero = CycNumber.zero(self.params.conductor)
        for key, c in other.terms.items():
            out[key] = out.get(key, zero) + c
        return PbwElement(self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement(self.params,
                          {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (CycNumber, int, Fraction)):
            other = PbwElement.scalar(self.params, other)
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> PbwElement:
        c = _coerce_scalar(self.params, c)
        return PbwElement(self.params,
                          {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PbwElement):
            return product(self, other)
        if isinstance(other, (CycNumber, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycNumber, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> PbwElement:
        if not isinstance(e, int) or e < 0:
            raise ValueError("powers must be non-negative integers")
        result = PbwElement.one(self.params)
        base = self
        while e:
            if e & 1:
                result = product(result, base)
            base = product(base, base) if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (CycNumber, int, Fraction)):
            other = PbwElement.scalar(self.params, other)
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # --- inspection --------------------------------------------------------

    def coefficient(self, i: int, j: int, k: int) -> CycNumber:
        return self.terms.get((i, j, k), CycNumber.zero(self.params.conductor))

    def sorted_terms(self) -> list[tuple[_Triple, CycNumber]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in self.sorted_terms():
            mon = "".join(f"{g}^{e}" if e > 1 else g
                          for g, e in (("z", i), ("x", j), ("y", k)) if e)
            cs = str(c)
            if mon:
                parts.append(mon if cs == "1" else f"({cs})*{mon}")
            else:
                parts.append(f"({cs})" if ("+" in cs or "-" in cs[1:]) else cs)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PbwElement({self})"

    # --- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"params": self.params.to_json(),
                "terms": [{"i": i, "j": j, "k": k, "c": c.to_json()}
                          for (i, j, k), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict) -> PbwElement:
        params = AlgebraParams.from_json(data["params"])
        return cls(params, {(t["i"], t["j"], t["k"]): CycNumber.from_json(t["c"])
                            for t in data["terms"]})


def _coerce_scalar(params: AlgebraParams, c) -> CycNumber:
    if isinstance(c, CycNumber):
        if c.conductor != params.conductor:
            raise ValueError("scalar conductor differs from params conductor")
        return c
    return CycNumber.from_rational(params.conductor, c)


def generators(params: AlgebraParams) -> tuple[PbwElement, PbwElement, PbwElement]:
    """The generator triple (x, y, z)."""
    return (PbwElement.monomial(params, 0, 1, 0),
            PbwElement.monomial(params, 0, 0, 1),
            PbwElement.monomial(params, 1, 0, 0))


# --- products ---------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _yk_xj(params: AlgebraParams, k: int, j: int):
    """Normal form of y^k x^j as a tuple of ((i, j, k), coeff) items.

    Recursion peels one y:  y^k x^j = q^j (y^(k-1) x^j) y
                                      + [j] p^(j-k) z (y^(k-1) x^(j-1)).
    """
    if k == 0:
        return (((0, j, 0), CycNumber.one(params.conductor)),)
    if j == 0:
        return (((0, 0, k), CycNumber.one(params.conductor)),)
    acc: dict[_Triple, CycNumber] = {}
    qj = _q_power(params, j)
    for (a, b, c), cf in _yk_xj(params, k - 1, j):
        key = (a, b, c + 1)
        acc[key] = acc.get(key, CycNumber.zero(params.conductor)) + qj * cf
    factor = pq_number(params, j) * _p_power(params, j - k)
    if not factor.is_zero():
        for (a, b, c), cf in _yk_xj(params, k - 1, j - 1):
            key = (a + 1, b, c)
            acc[key] = acc.get(key, CycNumber.zero(params.conductor)) + factor * cf
    return tuple(sorted((key, cf) for key, cf in acc.items() if not cf.is_zero()))


def product(a: PbwElement, b: PbwElement) -> PbwElement:
    """Normal form of a*b via the closed-form reordering identity."""
    a._check(b)
    params = a.params
    zero = CycNumber.zero(params.conductor)
    out: dict[_Triple, CycNumber] = {}
    for (i1, j1, k1), c1 in a.terms.items():
        for (i2, j2, k2), c2 in b.terms.items():
            base = c1 * c2 * _p_power(params, (j1 - k1) * i2)
            for (ai, bj, ck), cf in _yk_xj(params, k1, j2):
                key = (i1 + i2 + ai, j1 + bj, ck + k2)
                out[key] = out.get(key, zero) + base * cf * _p_power(params, j1 * ai)
    return PbwElement(params, out)


_RANK = {"z": 0, "x": 1, "y": 2}


def product_via_rewriting(a: PbwElement, b: PbwElement) -> PbwElement:
    """Normal form of a*b by literal application of the defining relations.

    Rules (applied at the leftmost adjacency violation of z < x < y):

        x z -> p z x,      y z -> p^-1 z y,      y x -> q x y + z.

    Termination: order words by (length, number of inversions).  The two
    swap rules keep the length and remove an inversion; the y x rule
    yields one shorter word and one swapped word, so every rewrite
    strictly decreases the measure.
    """
    a._check(b)
    params = a.params
    p, q = params.p, params.q
    p_inv = _p_power(params, -1)
    zero = CycNumber.zero(params.conductor)
    out: dict[_Triple, CycNumber] = {}
    for (i1, j1, k1), c1 in a.terms.items():
        for (i2, j2, k2), c2 in b.terms.items():
            word = "z" * i1 + "x" * j1 + "y" * k1 + "z" * i2 + "x" * j2 + "y" * k2
            work = [(word, c1 * c2)]
            while work:
                w, c = work.pop()
                for t in range(len(w) - 1):
                    if _RANK[w[t]] > _RANK[w[t + 1]]:
                        pair = w[t] + w[t + 1]
                        swapped = w[:t] + w[t + 1] + w[t] + w[t + 2:]
                        if pair == "xz":
                            work.append((swapped, c * p))
                        elif pair == "yz":
                            work.append((swapped, c * p_inv))
                        else:  # "yx"
                            work.append((swapped, c * q))
                            work.append((w[:t] + "z" + w[t + 2:], c))
                        break
                else:
                    key = (w.count("z"), w.count("x"), w.count("y"))
                    out[key] = out.get(key, zero) + c
    return PbwElement(params, out)


# --- distinguished elements -------------------------------------------------

def theta(params: AlgebraParams) -> PbwElement:
    """The twist element yx - p^-1 xy, in normal form (q - p^-1) xy + z."""
    return PbwElement(params, {
        (0, 1, 1): params.q - _p_power(params, -1),
        (1, 0, 0): CycNumber.one(params.conductor)})


def omega(params: AlgebraParams) -> PbwElement:
    """The mixed central element z^r theta^s with (r, s) from pair_rs."""
    from .arith import pair_rs
    r, s = pair_rs(params)
    return product(PbwElement.monomial(params, r, 0, 0), theta(params) ** s)


def center_generators(params: AlgebraParams) -> list[PbwElement]:
    """The five generators of the center: z^m, theta^n, x^l, y^l, omega."""
    return [PbwElement.monomial(params, params.m, 0, 0),
            theta(params) ** params.n,
            PbwElement.monomial(params, 0, params.l, 0),
            PbwElement.monomial(params, 0, 0, params.l),
            omega(params)]


def is_central(a: PbwElement) -> bool:
    """Whether a commutes with x, y and z (hence with everything)."""
    return all(product(a, g) == product(g, a) for g in generators(a.params))


def commutation_twist(a: PbwElement, gen: str) -> CycNumber | None:
    """The scalar c with gen*a = c*(a*gen), or None if no such scalar.

    The side convention is fixed as left multiplication by the generator:
    e.g. the twist element th = yx - p^-1 xy satisfies x*th = q^-1*(th*x),
    so commutation_twist(th, "x") returns q^-1.
    """
    if a.is_zero():
        raise ValueError("zero element has no commutation twist")
    if gen not in ("x", "y", "z"):
        raise ValueError("gen must be one of 'x', 'y', 'z'")
    x, y, z = generators(a.params)
    g = {"x": x, "y": y, "z": z}[gen]
    left = product(g, a)
    right = product(a, g)
    key = next(iter(right.terms))
    if key not in left.terms:
        return None
    c = left.terms[key] * right.terms[key].inverse()
    return c if left == right.scale(c) else None


def xy_coefficient(a: PbwElement, u: int, v: int) -> PbwElement:
    """The z-polynomial coefficient of x^u y^v inside a."""
    return PbwElement(a.params, {(i, 0, 0): c for (i, j, k), c in a.terms.items()
                                 if (j, k) == (u, v)})


def lex_degree(a: PbwElement) -> tuple[LexDegree, PbwElement]:
    """Largest (x, y)-exponent pair in lexicographic order, with its coefficient.

    The coefficient is returned as a polynomial in z (a PbwElement
    supported on x^0 y^0 monomials).
    """
    if a.is_zero():
        raise ValueError("zero element has no degree")
    u, v = max((j, k) for (_, j, k) in a.terms)
    return LexDegree(u, v), xy_coefficient(a, u, v)
