"""Finite-dimensional simple modules as explicit matrix tuples.

Right modules are realized on row vectors: a module element is a row v,
a generator a acts as v * M_a, and products act left-to-right, so the
assignment a -> M_a is multiplicative (M_ab = M_a * M_b).  All relation
residuals, simplicity certificates, and intertwining equations below are
written in that convention.

Three weight-module families cover the torsionfree cases:

* ``V1(mu, lam, gamma)``: x acts by an invertible cycle, dimension l.
* ``V2(mu, lam)``: x nilpotent, y an invertible cycle, dimension l.
* ``V3(lam)``: x and y both nilpotent, dimension ord(pq).

Torsion cases degenerate to quantum-plane weight modules (``QPlaneZ``
where z acts by zero, ``QPlaneTheta`` where the theta matrix vanishes)
and to one-dimensional modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import AlgebraParams, ord_formula
from .cyclotomic import CycNumber, nth_root_in_field, roots_of_unity
from .linalg import (FieldMatrix, algebra_span_dim, is_invertible,
                     matrix_hom_space, row_reduce, scalar_of)
from .pbw import pq_number

Z_TORSION = "Z_TORSION"
THETA_TORSION = "THETA_TORSION"

KIND_V1 = "V1"
KIND_V2 = "V2"
KIND_V3 = "V3"
KIND_QPLANE_Z = "QPlaneZ"
KIND_QPLANE_THETA = "QPlaneTheta"
KIND_ONE_DIM = "OneDim"

_KINDS = (KIND_V1, KIND_V2, KIND_V3, KIND_QPLANE_Z, KIND_QPLANE_THETA,
          KIND_ONE_DIM)


@dataclass(frozen=True)
class MatrixRep:
    """A concrete module: dimension plus the three generator matrices."""

    params: AlgebraParams
    d: int
    Mx: FieldMatrix
    My: FieldMatrix
    Mz: FieldMatrix

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "d": self.d,
            "Mx": self.Mx.to_json(),
            "My": self.My.to_json(),
            "Mz": self.Mz.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> MatrixRep:
        return cls(params=AlgebraParams.from_json(data["params"]),
                   d=data["d"],
                   Mx=FieldMatrix.from_json(data["Mx"]),
                   My=FieldMatrix.from_json(data["My"]),
                   Mz=FieldMatrix.from_json(data["Mz"]))


@dataclass(frozen=True)
class ModuleDescriptor:
    """A module family tag plus its defining scalars.

    Slot conventions per kind (unused slots stay None):

    * V1: mu (x cycle), lam (z weight base), gamma (theta weight base)
    * V2: mu (y cycle), lam (z weight base)
    * V3: lam (z weight base)
    * QPlaneZ: mu (y cycle), gamma (x weight base)
    * QPlaneTheta: mu (x cycle), lam (y weight base)
    * OneDim: mu (x scalar), lam (z scalar), gamma (y scalar)
    """

    kind: str
    mu: CycNumber | None = None
    lam: CycNumber | None = None
    gamma: CycNumber | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.mu is not None:
            out["mu"] = self.mu.to_json()
        if self.lam is not None:
            out["lambda"] = self.lam.to_json()
        if self.gamma is not None:
            out["gamma"] = self.gamma.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> ModuleDescriptor:
        def grab(key):
            return CycNumber.from_json(data[key]) if key in data else None
        return cls(kind=data["kind"], mu=grab("mu"), lam=grab("lambda"),
                   gamma=grab("gamma"))


@dataclass(frozen=True)
class RelationCheck:
    ok: bool
    residuals: dict


def _coerce_scalar(params: AlgebraParams, value, name: str,
                   nonzero: bool = True) -> CycNumber:
    if isinstance(value, CycNumber):
        if value.conductor != params.conductor:
            if params.conductor % value.conductor == 0:
                value = value.embed(params.conductor)
            else:
                raise ValueError(
                    f"{name} lies outside Q(zeta_{params.conductor})")
    elif isinstance(value, (int, Fraction)):
        value = CycNumber.from_rational(params.conductor, value)
    else:
        raise TypeError(f"{name} must be a CycNumber, int, or Fraction")
    if nonzero and value.is_zero():
        raise ValueError(f"{name} must be nonzero")
    return value


def _powers(base: CycNumber, count: int) -> list[CycNumber]:
    out = [CycNumber.one(base.conductor)]
    for _ in range(count - 1):
        out.append(out[-1] * base)
    return out


def build_v1(params: AlgebraParams, mu, lam, gamma) -> MatrixRep:
    """x-invertible weight module of dimension l.

    Basis v_0..v_{l-1}; z acts by p^k lam on v_k, x shifts up the cycle
    with scalar mu, theta acts by q^{-k} gamma, and the y coefficients
    are forced by the straightening relation.
    """
    l = params.l
    cond = params.conductor
    mu = _coerce_scalar(params, mu, "mu")
    lam = _coerce_scalar(params, lam, "lam")
    gamma = _coerce_scalar(params, gamma, "gamma")
    p, q = params.p, params.q
    pq = p * q
    qinv_pow = _powers(q.inverse(), l)
    p_pow = _powers(p, l)
    pq_pow = _powers(pq, l + 1)
    mu_inv = mu.inverse()
    denom_inv = (pq - CycNumber.one(cond)).inverse()
    zero = CycNumber.zero(cond)
    mz = FieldMatrix.diagonal([p_pow[k] * lam for k in range(l)], cond)
    mx_rows = [[zero] * l for _ in range(l)]
    my_rows = [[zero] * l for _ in range(l)]
    for k in range(l):
        mx_rows[k][(k + 1) % l] = mu
        my_rows[k][(k - 1) % l] = (mu_inv * qinv_pow[k]
                                   * (pq * gamma - pq_pow[k] * lam)
                                   * denom_inv)
    return MatrixRep(params, l, FieldMatrix(mx_rows, cond),
                     FieldMatrix(my_rows, cond), mz)


def build_v2(params: AlgebraParams, mu, lam) -> MatrixRep:
    """x-nilpotent, y-invertible weight module of dimension l.

    z acts by p^{-k} lam on v_k, y shifts up the cycle with scalar mu,
    and x lowers with coefficient mu^{-1} lam [k]_{p,q} (zero on v_0).
    """
    l = params.l
    cond = params.conductor
    mu = _coerce_scalar(params, mu, "mu")
    lam = _coerce_scalar(params, lam, "lam")
    pinv_pow = _powers(params.p.inverse(), l)
    mu_inv = mu.inverse()
    zero = CycNumber.zero(cond)
    mz = FieldMatrix.diagonal([pinv_pow[k] * lam for k in range(l)], cond)
    mx_rows = [[zero] * l for _ in range(l)]
    my_rows = [[zero] * l for _ in range(l)]
    for k in range(l):
        my_rows[k][(k + 1) % l] = mu
        if k > 0:
            mx_rows[k][k - 1] = mu_inv * lam * pq_number(params, k)
    return MatrixRep(params, l, FieldMatrix(mx_rows, cond),
                     FieldMatrix(my_rows, cond), mz)


def build_v3(params: AlgebraParams, lam) -> MatrixRep:
    """x- and y-nilpotent weight module of dimension ord(pq).

    Same weight ladder as V2 truncated at the first vanishing
    (p,q)-number, with the y cycle cut open.
    """
    cond = params.conductor
    lam = _coerce_scalar(params, lam, "lam")
    d = ord_formula(params.m, params.n, params.k1, params.k2)
    pinv_pow = _powers(params.p.inverse(), d)
    zero = CycNumber.zero(cond)
    one = CycNumber.one(cond)
    mz = FieldMatrix.diagonal([pinv_pow[k] * lam for k in range(d)], cond)
    mx_rows = [[zero] * d for _ in range(d)]
    my_rows = [[zero] * d for _ in range(d)]
    for k in range(d):
        if k + 1 < d:
            my_rows[k][k + 1] = one
        if k > 0:
            mx_rows[k][k - 1] = lam * pq_number(params, k)
    return MatrixRep(params, d, FieldMatrix(mx_rows, cond),
                     FieldMatrix(my_rows, cond), mz)


def build_qplane(params: AlgebraParams, mode: str, a, b) -> MatrixRep:
    """Quantum-plane weight module for the two torsion quotients.

    ``a`` always scales the x action and ``b`` the y action.  Z_TORSION
    kills z (dimension n, x diagonal, y cyclic); THETA_TORSION kills the
    theta matrix (dimension m, x cyclic, y diagonal, z forced).
    """
    cond = params.conductor
    a = _coerce_scalar(params, a, "a")
    b = _coerce_scalar(params, b, "b")
    zero = CycNumber.zero(cond)
    if mode == Z_TORSION:
        d = params.n
        q_pow = _powers(params.q, d)
        mx = FieldMatrix.diagonal([a * q_pow[k] for k in range(d)], cond)
        my_rows = [[zero] * d for _ in range(d)]
        for k in range(d):
            my_rows[k][(k + 1) % d] = b
        return MatrixRep(params, d, mx, FieldMatrix(my_rows, cond),
                         FieldMatrix.zeros(d, d, cond))
    if mode == THETA_TORSION:
        d = params.m
        p_pow = _powers(params.p, d)
        mx_rows = [[zero] * d for _ in range(d)]
        for k in range(d):
            mx_rows[k][(k + 1) % d] = a
        mx = FieldMatrix(mx_rows, cond)
        my = FieldMatrix.diagonal([b * p_pow[k] for k in range(d)], cond)
        # theta = (q - p^{-1})xy + z, so killing theta forces the z matrix
        mz = (mx * my).scale(params.p.inverse() - params.q)
        return MatrixRep(params, d, mx, my, mz)
    raise ValueError(f"unknown torsion mode {mode!r}")


def build_one_dim(params: AlgebraParams, x_scalar, z_scalar, y_scalar) -> MatrixRep:
    """One-dimensional module from three scalars (not validated here)."""
    cond = params.conductor
    x_scalar = _coerce_scalar(params, x_scalar, "x_scalar", nonzero=False)
    z_scalar = _coerce_scalar(params, z_scalar, "z_scalar", nonzero=False)
    y_scalar = _coerce_scalar(params, y_scalar, "y_scalar", nonzero=False)
    return MatrixRep(params, 1,
                     FieldMatrix([[x_scalar]], cond),
                     FieldMatrix([[y_scalar]], cond),
                     FieldMatrix([[z_scalar]], cond))


def build_from_descriptor(params: AlgebraParams,
                          desc: ModuleDescriptor) -> MatrixRep:
    if desc.kind == KIND_V1:
        return build_v1(params, desc.mu, desc.lam, desc.gamma)
    if desc.kind == KIND_V2:
        return build_v2(params, desc.mu, desc.lam)
    if desc.kind == KIND_V3:
        return build_v3(params, desc.lam)
    if desc.kind == KIND_QPLANE_Z:
        return build_qplane(params, Z_TORSION, desc.gamma, desc.mu)
    if desc.kind == KIND_QPLANE_THETA:
        return build_qplane(params, THETA_TORSION, desc.mu, desc.lam)
    if desc.kind == KIND_ONE_DIM:
        return build_one_dim(params, desc.mu, desc.lam, desc.gamma)
    raise ValueError(f"unknown descriptor kind {desc.kind!r}")


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    if a.params != b.params:
        raise ValueError("params mismatch between summands")
    cond = a.params.conductor
    zero = CycNumber.zero(cond)

    def block(ma: FieldMatrix, mb: FieldMatrix) -> FieldMatrix:
        d = a.d + b.d
        rows = [[zero] * d for _ in range(d)]
        for i in range(a.d):
            for j in range(a.d):
                rows[i][j] = ma.rows[i][j]
        for i in range(b.d):
            for j in range(b.d):
                rows[a.d + i][a.d + j] = mb.rows[i][j]
        return FieldMatrix(rows, cond)

    return MatrixRep(a.params, a.d + b.d, block(a.Mx, b.Mx),
                     block(a.My, b.My), block(a.Mz, b.Mz))


def verify_relations(rep: MatrixRep) -> RelationCheck:
    """Exact residuals of the three defining relations.

    Keys: "zx" for Mz Mx - p^{-1} Mx Mz, "zy" for Mz My - p My Mz,
    "yx" for My Mx - q Mx My - Mz.  ok is True iff all three vanish.
    """
    p, q = rep.params.p, rep.params.q
    mx, my, mz = rep.Mx, rep.My, rep.Mz
    residuals = {
        "zx": mz * mx - (mx * mz).scale(p.inverse()),
        "zy": mz * my - (my * mz).scale(p),
        "yx": my * mx - (mx * my).scale(q) - mz,
    }
    ok = all(r.is_zero() for r in residuals.values())
    return RelationCheck(ok=ok, residuals=residuals)


def theta_matrix(rep: MatrixRep) -> FieldMatrix:
    """Matrix of theta = yx - p^{-1}xy in the given module."""
    p = rep.params.p
    return rep.My * rep.Mx - (rep.Mx * rep.My).scale(p.inverse())


def is_simple(rep: MatrixRep) -> bool:
    """Burnside test: the generators span the full matrix algebra."""
    if not verify_relations(rep).ok:
        raise ValueError("relation check failed: input is not a module")
    ident = FieldMatrix.identity(rep.d, rep.params.conductor)
    return algebra_span_dim([rep.Mx, rep.My, rep.Mz, ident]) == rep.d * rep.d


def _left_kernel_with_support(mat: FieldMatrix):
    """Left kernel {v : v mat = 0} plus the one-hot coordinate columns.

    Each basis row carries a 1 at its own support index and 0 at every
    other support index, so coordinates in this basis can be read off.
    """
    rref, rank, null = row_reduce(mat.transpose())
    pivot_cols = []
    for i in range(rank):
        pivot_cols.append(next(j for j, e in enumerate(rref.rows[i])
                               if not e.is_zero()))
    support = [c for c in range(mat.shape[0]) if c not in pivot_cols]
    return [list(v) for v in null], support


def _restrict(op: FieldMatrix, basis: list, support: list[int],
              conductor: int) -> FieldMatrix:
    """Matrix of op on the invariant span of basis, in that basis."""
    zero = CycNumber.zero(conductor)
    out = []
    for vec in basis:
        image = [zero] * op.shape[1]
        for t, c in enumerate(vec):
            if c.is_zero():
                continue
            row = op.rows[t]
            for j in range(len(image)):
                if not row[j].is_zero():
                    image[j] = image[j] + c * row[j]
        coords = [image[s] for s in support]
        # the span must be op-invariant: rebuild the image and compare
        rebuilt = [zero] * op.shape[1]
        for w, bvec in zip(coords, basis):
            if w.is_zero():
                continue
            for j, e in enumerate(bvec):
                if not e.is_zero():
                    rebuilt[j] = rebuilt[j] + w * e
        if rebuilt != image:
            raise ValueError("inconsistent scalar extraction: "
                             "weight space is not invariant")
        out.append(coords)
    return FieldMatrix(out, conductor)


def _matrix_eigenvalue(mat: FieldMatrix, exponent: int) -> CycNumber:
    """Some exact eigenvalue of mat, deterministically chosen.

    Scans diagonal entries first (weight modules are upper-triangular in
    a suitable order, so this almost always hits), then falls back to
    root candidates of the scalar mat^exponent.
    """
    s = mat.shape[0]
    cond = mat.conductor
    ident = FieldMatrix.identity(s, cond)
    seen = []
    for i in range(s):
        t = mat.rows[i][i]
        if t in seen:
            continue
        seen.append(t)
        if row_reduce(mat - ident.scale(t))[1] < s:
            return t
    power = scalar_of(mat ** exponent)
    if power is not None and not power.is_zero():
        base = nth_root_in_field(power, exponent)
        if base is not None:
            for w in roots_of_unity(cond):
                cand = base * w
                if cand ** exponent == power and cand not in seen:
                    if row_reduce(mat - ident.scale(cand))[1] < s:
                        return cand
    raise ValueError("inconsistent scalar extraction: no eigenvalue found")


def _scalar_root(mat: FieldMatrix, exponent: int, name: str) -> CycNumber:
    power = scalar_of(mat ** exponent)
    if power is None or power.is_zero():
        raise ValueError(f"inconsistent scalar extraction: {name}^{exponent} "
                         "is not a nonzero scalar")
    root = nth_root_in_field(power, exponent)
    if root is None:
        raise ValueError(f"inconsistent scalar extraction: {name}^{exponent} "
                         "has no root in the working field")
    return root


def classify(rep: MatrixRep) -> ModuleDescriptor:
    """Identify a simple module and return a rebuildable descriptor.

    Decides the torsion type from exact invertibility of the z and theta
    matrices, then of Mx and My; extracts the cycle scalar as a root of
    the central scalar Mx^l or My^l and the weight scalars from a joint
    eigenvector.  The result is self-checked: the canonical build of the
    returned descriptor admits an exact invertible intertwiner with the
    input.  When ord(pq) < l several weight scalars describe the same V2
    module; the first weight vector is used, deterministically.
    """
    check = verify_relations(rep)
    if not check.ok:
        raise ValueError("relation check failed: input is not a module")
    params = rep.params
    d = rep.d
    cond = params.conductor
    ident = FieldMatrix.identity(d, cond)
    if algebra_span_dim([rep.Mx, rep.My, rep.Mz, ident]) != d * d:
        raise ValueError("input module is not simple")

    if d == 1:
        desc = ModuleDescriptor(KIND_ONE_DIM, mu=rep.Mx.rows[0][0],
                                lam=rep.Mz.rows[0][0],
                                gamma=rep.My.rows[0][0])
        return _self_check(rep, desc)

    th = theta_matrix(rep)
    z_zero = rep.Mz.is_zero()
    th_zero = th.is_zero()

    if z_zero and th_zero:
        raise ValueError("inconsistent scalar extraction: z and theta "
                         "both vanish on a module of dimension > 1")
    if z_zero:
        if d != params.n:
            raise ValueError(f"z-torsion module of dimension {d}, "
                             f"expected {params.n}")
        b = _scalar_root(rep.My, params.n, "My")
        a = _matrix_eigenvalue(rep.Mx, params.n)
        return _self_check(rep, ModuleDescriptor(KIND_QPLANE_Z, mu=b, gamma=a))
    if th_zero:
        if d != params.m:
            raise ValueError(f"theta-torsion module of dimension {d}, "
                             f"expected {params.m}")
        a = _scalar_root(rep.Mx, params.m, "Mx")
        b = _matrix_eigenvalue(rep.My, params.m)
        return _self_check(rep, ModuleDescriptor(KIND_QPLANE_THETA, mu=a, lam=b))

    # torsionfree: z and theta are normal, so they must act invertibly
    if not is_invertible(rep.Mz) or not is_invertible(th):
        raise ValueError("inconsistent scalar extraction: z or theta acts "
                         "neither by zero nor invertibly")
    l = params.l
    if is_invertible(rep.Mx):
        if d != l:
            raise ValueError(f"x-invertible module of dimension {d}, "
                             f"expected {l}")
        mu = _scalar_root(rep.Mx, l, "Mx")
        lam = _matrix_eigenvalue(rep.Mz, params.m)
        basis, support = _left_kernel_with_support(rep.Mz - ident.scale(lam))
        gamma = _matrix_eigenvalue(_restrict(th, basis, support, cond),
                                   params.n)
        return _self_check(rep, ModuleDescriptor(KIND_V1, mu=mu, lam=lam,
                                                 gamma=gamma))
    if is_invertible(rep.My):
        if d != l:
            raise ValueError(f"y-invertible module of dimension {d}, "
                             f"expected {l}")
        if not (rep.Mx ** l).is_zero():
            raise ValueError("inconsistent scalar extraction: Mx is "
                             "singular but not nilpotent")
        mu = _scalar_root(rep.My, l, "My")
        basis, support = _left_kernel_with_support(rep.Mx)
        lam = _matrix_eigenvalue(_restrict(rep.Mz, basis, support, cond),
                                 params.m)
        return _self_check(rep, ModuleDescriptor(KIND_V2, mu=mu, lam=lam))
    o = ord_formula(params.m, params.n, params.k1, params.k2)
    if d != o:
        raise ValueError(f"x,y-nilpotent module of dimension {d}, "
                         f"expected {o}")
    basis, support = _left_kernel_with_support(rep.Mx)
    lam = _matrix_eigenvalue(_restrict(rep.Mz, basis, support, cond),
                             params.m)
    return _self_check(rep, ModuleDescriptor(KIND_V3, lam=lam))


def _self_check(rep: MatrixRep, desc: ModuleDescriptor) -> ModuleDescriptor:
    canonical = build_from_descriptor(rep.params, desc)
    if find_intertwiner(rep, canonical) is None:
        raise ValueError("inconsistent scalar extraction: descriptor does "
                         "not rebuild the input module")
    return desc


def _orbit_shift(base: CycNumber, target: CycNumber, step: CycNumber,
                 count: int) -> int | None:
    """Smallest k < count with target = step^k * base, or None."""
    cur = base
    for k in range(count):
        if cur == target:
            return k
        cur = cur * step
    return None


def iso_test(kind: str, desc_a: ModuleDescriptor, desc_b: ModuleDescriptor,
             params: AlgebraParams) -> tuple[bool, int | None]:
    """Decide isomorphism of two same-kind modules from their scalars.

    Returns (True, witness shift k) or (False, None).  For V1 the
    witness satisfies lam_b = p^k lam_a and gamma_b = q^{-k} gamma_a;
    the quantum-plane kinds use the analogous weight shift, and V2, V3,
    OneDim admit only k = 0.
    """
    if desc_a.kind != kind or desc_b.kind != kind:
        raise ValueError("kind mismatch between descriptors")
    p, q = params.p, params.q
    l = params.l
    if kind == KIND_V1:
        if desc_a.mu ** l != desc_b.mu ** l:
            return False, None
        k = _orbit_shift(desc_a.lam, desc_b.lam, p, l)
        qinv = q.inverse()
        while k is not None:
            if desc_b.gamma == qinv ** k * desc_a.gamma:
                return True, k
            nxt = _orbit_shift(desc_a.lam * p ** (k + 1), desc_b.lam, p,
                               l - k - 1)
            k = None if nxt is None else k + 1 + nxt
        return False, None
    if kind == KIND_V2:
        if desc_a.mu ** l == desc_b.mu ** l and desc_a.lam == desc_b.lam:
            return True, 0
        return False, None
    if kind == KIND_V3:
        if desc_a.lam == desc_b.lam:
            return True, 0
        return False, None
    if kind == KIND_QPLANE_Z:
        n = params.n
        if desc_a.mu ** n != desc_b.mu ** n:
            return False, None
        k = _orbit_shift(desc_a.gamma, desc_b.gamma, q, n)
        return (True, k) if k is not None else (False, None)
    if kind == KIND_QPLANE_THETA:
        m = params.m
        if desc_a.mu ** m != desc_b.mu ** m:
            return False, None
        k = _orbit_shift(desc_a.lam, desc_b.lam, p, m)
        return (True, k) if k is not None else (False, None)
    if kind == KIND_ONE_DIM:
        same = (desc_a.mu == desc_b.mu and desc_a.lam == desc_b.lam
                and desc_a.gamma == desc_b.gamma)
        return (True, 0) if same else (False, None)
    raise ValueError(f"unknown descriptor kind {kind!r}")


def intertwiner(kind: str, desc_a: ModuleDescriptor,
                desc_b: ModuleDescriptor, k: int,
                params: AlgebraParams) -> FieldMatrix:
    """Explicit invertible P with M_a P = P M'_a for the witness k.

    Realizes psi(v_i) = (mu^{-1} mu')^i v_{i-k} on the weight bases; the
    result is verified exactly against both canonical builds before it
    is returned.
    """
    ok, _ = iso_test(kind, desc_a, desc_b, params)
    if not ok:
        raise ValueError("called on a non-isomorphic pair")
    rep_a = build_from_descriptor(params, desc_a)
    rep_b = build_from_descriptor(params, desc_b)
    d = rep_a.d
    cond = params.conductor
    if kind == KIND_ONE_DIM:
        mat = FieldMatrix.identity(1, cond)
    else:
        if kind in (KIND_V3,):
            ratio = CycNumber.one(cond)
        else:
            ratio = desc_a.mu.inverse() * desc_b.mu
        zero = CycNumber.zero(cond)
        rows = [[zero] * d for _ in range(d)]
        cur = CycNumber.one(cond)
        for i in range(d):
            rows[i][(i - k) % d] = cur
            cur = cur * ratio
        mat = FieldMatrix(rows, cond)
    for a_mat, b_mat in ((rep_a.Mx, rep_b.Mx), (rep_a.My, rep_b.My),
                         (rep_a.Mz, rep_b.Mz)):
        if a_mat * mat != mat * b_mat:
            raise ValueError("intertwiner formula failed verification")
    if not is_invertible(mat):
        raise ValueError("intertwiner formula produced a singular matrix")
    return mat


def find_intertwiner(rep_a: MatrixRep, rep_b: MatrixRep) -> FieldMatrix | None:
    """Solve the intertwining equations exactly; None if only P = 0.

    For simple inputs a nonzero solution is automatically invertible
    (Schur); a nonzero singular solution means some input was not
    simple, and is reported as an error.
    """
    if rep_a.params != rep_b.params:
        raise ValueError("params mismatch between modules")
    basis = matrix_hom_space([rep_a.Mx, rep_a.My, rep_a.Mz],
                             [rep_b.Mx, rep_b.My, rep_b.Mz])
    if not basis:
        return None
    for mat in basis:
        if rep_a.d == rep_b.d and is_invertible(mat):
            return mat
    raise ValueError("nonzero singular intertwiner: inputs are not "
                     "both simple")
