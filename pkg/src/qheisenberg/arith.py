"""Root-of-unity parameter arithmetic for the quantum Heisenberg algebra.

The algebra H_{p,q} is generated by x, y, z subject to

    z x = p^-1 x z,    z y = p y z,    y x - q x y = z.

Here both deformation scalars are roots of unity: ord(p) = m, ord(q) = n,
with p q != 1.  Writing g = gcd(m, n), l = lcm(m, n), s1 = n/g, s2 = m/g,
every such pair arises as p = w^(s1 k1), q = w^(s2 k2) for a primitive
l-th root w and indices gcd(k1, m) = gcd(k2, n) = 1; the pq != 1 condition
is s1 k1 + s2 k2 != 0 (mod l).

This module handles everything about the integer side: admissible index
pairs, the skew-commutator exponent matrix and its Smith normal form, the
PI degree, the multiplicative order of pq, and the classification of
order pairs (m, n) by whether ord(pq) always, never, or sometimes attains
its maximum l.
"""

from __future__ import annotations

import dataclasses
import functools
import math

from .cyclotomic import CycNumber, zeta_power

ALWAYS_MAX = "ALWAYS_MAX"
ALWAYS_NONMAX = "ALWAYS_NONMAX"
MIXED = "MIXED"


class InvalidParameters(ValueError):
    """Raised for parameter choices violating the admissibility conditions."""


@dataclasses.dataclass(frozen=True)
class AlgebraParams:
    """A concrete admissible parameter choice, with p and q materialized.

    conductor is the cyclotomic field Q(zeta_conductor) all scalar data
    lives in; it defaults to l = lcm(m, n) and must be a multiple of it.
    """

    m: int
    n: int
    k1: int
    k2: int
    s1: int
    s2: int
    l: int
    conductor: int
    p: CycNumber
    q: CycNumber

    def to_json(self) -> dict:
        data = {"m": self.m, "n": self.n, "k1": self.k1, "k2": self.k2}
        if self.conductor != self.l:
            data["conductor"] = self.conductor
        return data

    @classmethod
    def from_json(cls, data: dict) -> AlgebraParams:
        return derive_params(data["m"], data["n"], data["k1"], data["k2"],
                             conductor=data.get("conductor"))


def is_valid_pair(m: int, n: int, k1: int, k2: int) -> bool:
    if m < 1 or n < 1 or (m == 1 and n == 1):
        return False
    if not (0 <= k1 < m and 0 <= k2 < n):
        return False
    if math.gcd(k1, m) != 1 or math.gcd(k2, n) != 1:
        return False
    g = math.gcd(m, n)
    l = m * n // g
    return (n // g * k1 + m // g * k2) % l != 0


def valid_pairs(m: int, n: int) -> list[tuple[int, int]]:
    """All admissible (k1, k2) for the order pair (m, n), sorted."""
    return [(k1, k2) for k1 in range(m) for k2 in range(n)
            if is_valid_pair(m, n, k1, k2)]


def _order_is(a: CycNumber, k: int) -> bool:
    # ord(a) == k via the divisor criterion: a^k = 1 and a^(k/r) != 1
    # for every prime r | k; binary powering keeps large conductors cheap
    if a ** k != 1:
        return False
    r = 2
    kk = k
    while r * r <= kk:
        if kk % r == 0:
            if a ** (k // r) == 1:
                return False
            while kk % r == 0:
                kk //= r
        r += 1
    if kk > 1 and a ** (k // kk) == 1:
        return False
    return True


@functools.lru_cache(maxsize=None)
def _derive(m: int, n: int, k1: int, k2: int, conductor: int) -> AlgebraParams:
    g = math.gcd(m, n)
    l = m * n // g
    s1, s2 = n // g, m // g
    scale = conductor // l
    p = zeta_power(conductor, scale * s1 * k1)
    q = zeta_power(conductor, scale * s2 * k2)
    if not _order_is(p, m) or not _order_is(q, n):
        raise ArithmeticError("constructed scalars have the wrong order")
    return AlgebraParams(m=m, n=n, k1=k1, k2=k2, s1=s1, s2=s2, l=l,
                         conductor=conductor, p=p, q=q)


def derive_params(m: int, n: int, k1: int | None = None, k2: int | None = None,
                  conductor: int | None = None) -> AlgebraParams:
    """Materialize p, q in Q(zeta_conductor) for the index pair (k1, k2).

    Omitted k1, k2 default to the lexicographically smallest admissible
    pair.  Raises InvalidParameters when the inputs violate any
    admissibility condition or no admissible pair exists.
    """
    if m < 1 or n < 1:
        raise InvalidParameters("orders m, n must be >= 1")
    if m == 1 and n == 1:
        raise InvalidParameters("m = n = 1 forces p = q = 1, excluded")
    if k1 is None or k2 is None:
        pairs = valid_pairs(m, n)
        if not pairs:
            raise InvalidParameters(f"no admissible parameters for (m, n) = ({m}, {n})")
        if k1 is None and k2 is None:
            k1, k2 = pairs[0]
        elif k1 is None:
            k1 = min(a for a, b in pairs if b == k2)
        else:
            k2 = min(b for a, b in pairs if a == k1)
    if not (0 <= k1 < m):
        raise InvalidParameters(f"k1 must satisfy 0 <= k1 < m, got {k1}")
    if not (0 <= k2 < n):
        raise InvalidParameters(f"k2 must satisfy 0 <= k2 < n, got {k2}")
    if math.gcd(k1, m) != 1:
        raise InvalidParameters(f"gcd(k1, m) = gcd({k1}, {m}) != 1")
    if math.gcd(k2, n) != 1:
        raise InvalidParameters(f"gcd(k2, n) = gcd({k2}, {n}) != 1")
    if not is_valid_pair(m, n, k1, k2):
        raise InvalidParameters(
            f"(k1, k2) = ({k1}, {k2}) gives p*q = 1, excluded")
    l = math.lcm(m, n)
    if conductor is None:
        conductor = l
    elif conductor % l != 0:
        raise InvalidParameters(f"conductor must be a multiple of l = {l}")
    return _derive(m, n, k1, k2, conductor)


# --- integer matrices -------------------------------------------------------

def int_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def int_det(mat: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in mat]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(mat: list[list[int]]):
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns (diag, U, V) with U @ mat @ V diagonal, each diagonal entry
    nonnegative and dividing the next, and det(U), det(V) = +-1.

    >>> d, U, V = smith_normal_form([[0, -3, 3], [3, 0, -2], [-3, 2, 0]])
    >>> d
    [1, 1, 0]
    >>> smith_normal_form([[2, 0], [0, 3]])[0]
    [1, 6]
    """
    a = [row[:] for row in mat]
    rows, cols = len(a), len(a[0])
    u = int_identity(rows)
    v = int_identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def add_row(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, c):
        for r in range(rows):
            a[r][i] += c * a[r][j]
        for r in range(cols):
            v[r][i] += c * v[r][j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None
                                    or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            if a[t][t] < 0:
                negate_row(t)
            # clear column t, then row t; a nonzero remainder becomes the
            # new (strictly smaller) pivot, so this terminates
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # force divisibility of the trailing block by the pivot
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
    diag = [a[i][i] for i in range(min(rows, cols))]
    return diag, u, v


# --- derived integer invariants --------------------------------------------

def relation_matrix(params: AlgebraParams) -> list[list[int]]:
    """Exponent matrix of the pairwise scalar twists among x, y, z.

    Entry (i, j) is e with  g_i g_j = w^e g_j g_i  for the generator order
    (x, y, z), where w is the primitive l-th root underlying p and q.
    """
    e1 = params.s1 * params.k1
    e2 = params.s2 * params.k2
    return [[0, -e1, e1],
            [e1, 0, -e2],
            [-e1, e2, 0]]


def pi_degree_snf(params: AlgebraParams) -> int:
    """PI degree l / gcd(h1, l), h1 = first invariant factor of the twist matrix."""
    diag, _, _ = smith_normal_form(relation_matrix(params))
    h1 = diag[0]
    # the 3x3 twist matrix always has invariant factors (h1, h1, 0)
    assert diag[1] == h1 and diag[2] == 0
    assert h1 == math.gcd(params.s1 * params.k1, params.s2 * params.k2)
    return params.l // math.gcd(h1, params.l)


def pi_degree(m: int, n: int) -> int:
    """PI degree of the whole algebra: lcm(m, n)."""
    if not valid_pairs(m, n):
        raise InvalidParameters(f"no admissible parameters for (m, n) = ({m}, {n})")
    return math.lcm(m, n)


def ord_formula(m: int, n: int, k1: int, k2: int) -> int:
    """ord(pq) for the index pair, as an integer computation."""
    g = math.gcd(m, n)
    l = m * n // g
    v1 = l // math.gcd(n // g * k1 + m // g * k2, l)
    v2 = (m * n) // math.gcd(m * k2 + n * k1, m * n)
    assert v1 == v2
    return v1


def ord_pq(params: AlgebraParams, cross_check: bool = True) -> int:
    """Multiplicative order of p*q; cross-checked against the field element."""
    value = ord_formula(params.m, params.n, params.k1, params.k2)
    if cross_check:
        from .cyclotomic import order_of_unit
        assert order_of_unit(params.p * params.q) == value
    return value


def pair_rs(params: AlgebraParams) -> tuple[int, int]:
    """Exponents (r, s) with p^r = q^s pairing the two central torsion parts.

    These feed the mixed central generator z^r theta^s; the defining
    identity p^r = q^s is verified in the field.
    """
    g = math.gcd(params.k1, params.k2)
    r = (params.s2 * (params.k2 // g)) % params.m
    s = (params.s1 * (params.k1 // g)) % params.n
    assert params.p ** r == params.q ** s
    return r, s


# --- order-pair classification ---------------------------------------------

def _prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_odd_prime(n: int) -> bool:
    return n > 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclasses.dataclass
class OrderReport:
    """Brute-force ord(pq) table over every admissible (k1, k2) for (m, n)."""

    m: int
    n: int
    verdict: str
    entries: dict[tuple[int, int], int]  # (k1, k2) -> ord(pq)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "verdict": self.verdict,
                "entries": [{"k1": k1, "k2": k2, "ord": o}
                            for (k1, k2), o in sorted(self.entries.items())]}


def scan_orders(m: int, n: int) -> OrderReport:
    """Enumerate admissible pairs and record ord(pq) for each.

    The verdict is observed from the scan: ALWAYS_MAX if every order
    equals l = lcm(m, n), ALWAYS_NONMAX if none does, MIXED otherwise.
    """
    pairs = valid_pairs(m, n)
    if not pairs:
        raise InvalidParameters(f"no admissible parameters for (m, n) = ({m}, {n})")
    l = math.lcm(m, n)
    entries = {(k1, k2): ord_formula(m, n, k1, k2) for k1, k2 in pairs}
    if all(o == l for o in entries.values()):
        verdict = ALWAYS_MAX
    elif all(o < l for o in entries.values()):
        verdict = ALWAYS_NONMAX
    else:
        verdict = MIXED
    return OrderReport(m=m, n=n, verdict=verdict, entries=entries)


def classify_pair(m: int, n: int) -> str:
    """Predict the scan verdict from m and n alone.

    ALWAYS_MAX iff m = n is an odd prime, or every prime dividing m or n
    divides them to different powers.  ALWAYS_NONMAX iff m and n are
    exactly divisible by the same positive power of 2.  MIXED otherwise.
    """
    if not valid_pairs(m, n):
        raise InvalidParameters(f"no admissible parameters for (m, n) = ({m}, {n})")
    em = _prime_factorization(m)
    en = _prime_factorization(n)
    if (m == n and _is_odd_prime(m)) or all(
            em.get(r, 0) != en.get(r, 0) for r in set(em) | set(en)):
        return ALWAYS_MAX
    if em.get(2, 0) == en.get(2, 0) >= 1:
        return ALWAYS_NONMAX
    return MIXED
