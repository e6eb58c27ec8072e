"""Elementary symplectic transformations.

Three kinds appear in the reduction:

* ``TransformSH``     rank-one symplectic Householder  T = I + c v v^J,
                      with adjoint T^J = I - c v v^J
* ``TransformGivens`` plane rotation in coordinates (k, n+k); orthogonal
                      and symplectic
* ``TransformVLH``    the same ordinary Householder reflector applied to
                      rows k..n and n+k..2n; orthogonal and symplectic

The SH constructors use the normalized parametrizations needed by the
reduction drivers: ``sh1`` maps a vector to rho*e1, ``sh2`` fixes e1 and
maps a vector onto the span of e1 and e_{n+1}; ``osh1``/``osh2`` pick the
free parameter that minimizes the 2-norm condition number.  ``embed``
pads an SH transform into a larger space with identity action on the
leading coordinates of each half.

All applications are in-place rank-one / two-row / block updates; the
dense matrix of a transform is only formed by ``densify`` for testing
and diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import adjoint_mat, j_inner, spectral_norm

__all__ = [
    "DEFAULT_BREAKDOWN_TOL",
    "Breakdown",
    "MappingBreakdown",
    "InvalidParam",
    "FreeParams",
    "TransformSH",
    "TransformGivens",
    "TransformVLH",
    "SymplecticTransform",
    "general_mapping",
    "sh1",
    "sh2",
    "osh1",
    "osh2",
    "vlg",
    "vlh",
    "embed",
    "apply_left",
    "apply_right_adjoint",
    "densify",
    "densify_adjoint",
    "cond2",
]

# Relative pivot threshold: |pivot| <= tol * ||a||_2 counts as a breakdown.
DEFAULT_BREAKDOWN_TOL = 2.0 ** -26


class Breakdown(Exception):
    """A pivot required by a transform constructor is numerically zero."""

    def __init__(self, kind: str, pivot_value: float, message: str | None = None):
        self.kind = kind
        self.pivot_value = float(pivot_value)
        super().__init__(message or f"division by zero: pivot {pivot_value!r} ({kind})")


class MappingBreakdown(Breakdown):
    """No symplectic Householder maps x to y: x != y and x^J y ~ 0."""

    def __init__(self, pivot_value: float):
        super().__init__("ZeroPivot", pivot_value,
                         f"x^J y = {pivot_value!r} is numerically zero; no mapping exists")


class InvalidParam(ValueError):
    """A free parameter violates its constraint (rho = 0 or mu = a(1))."""


@dataclass(frozen=True)
class FreeParams:
    """Record of the free parameters a transform was built from."""

    rho: float | None = None
    mu: float | None = None
    nu: float | None = None
    xi: float | None = None


@dataclass(frozen=True, eq=False)
class TransformSH:
    """T = I + c v v^J with direction v = [0^offset, u, 0^offset, w].

    ``m`` is the half-dimension of the space the transform acts on; the
    compact ``u``/``w`` pair (length m - offset each) stores only the
    support, so an embedded transform applies with exactly the arithmetic
    of its reduced-space original.  ``c == 0`` means the identity.
    """

    c: float
    u: np.ndarray
    w: np.ndarray
    offset: int
    m: int
    params: FreeParams | None = None

    def __post_init__(self):
        if not 0 <= self.offset < self.m:
            raise ValueError("offset must lie in [0, m)")
        span = self.m - self.offset
        if self.u.shape != (span,) or self.w.shape != (span,):
            raise ValueError("u and w must both have length m - offset")

    @property
    def v(self) -> np.ndarray:
        """The full direction vector of length 2m."""
        full = np.zeros(2 * self.m)
        full[self.offset:self.m] = self.u
        full[self.m + self.offset:] = self.w
        return full

    @property
    def is_identity(self) -> bool:
        return self.c == 0.0

    def adjoint(self) -> "TransformSH":
        """T^J = I - c v v^J, itself a symplectic Householder transform."""
        return TransformSH(-self.c, self.u, self.w, self.offset, self.m, self.params)


@dataclass(frozen=True, eq=False)
class TransformGivens:
    """Rotation in the (k, n+k) plane; k is 1-based, c^2 + s^2 = 1."""

    k: int
    c: float
    s: float
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError("k must lie in 1..n")
        if abs(self.c * self.c + self.s * self.s - 1.0) > 1e-14:
            raise ValueError("c^2 + s^2 must equal 1")

    @property
    def is_identity(self) -> bool:
        return self.c == 1.0 and self.s == 0.0

    def adjoint(self) -> "TransformGivens":
        return TransformGivens(self.k, self.c, -self.s, self.n)


@dataclass(frozen=True, eq=False)
class TransformVLH:
    """Direct sum of one reflector P = I - beta w w^T on rows k..n and n+k..2n.

    ``beta == 0`` means the identity; otherwise beta = 2 / (w^T w).
    k is 1-based.
    """

    k: int
    beta: float
    w: np.ndarray
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError("k must lie in 1..n")
        if self.w.shape != (self.n - self.k + 1,):
            raise ValueError("w must have length n - k + 1")
        if self.beta != 0.0:
            wtw = float(self.w @ self.w)
            if abs(self.beta * wtw - 2.0) > 1e-13 * max(1.0, abs(self.beta) * wtw):
                raise ValueError("beta must equal 2 / (w^T w)")

    @property
    def is_identity(self) -> bool:
        return self.beta == 0.0

    def adjoint(self) -> "TransformVLH":
        return self  # symmetric and orthogonal


SymplecticTransform = TransformSH | TransformGivens | TransformVLH


def _as_vector(a) -> np.ndarray:
    v = np.asarray(a, dtype=np.float64)
    if v.ndim != 1 or v.size == 0 or v.size % 2:
        raise ValueError("expected a 1-D vector of even length")
    return v


def _identity_sh(m: int, params: FreeParams | None = None) -> TransformSH:
    z = np.zeros(m)
    return TransformSH(0.0, z, z, 0, m, params)


def _sign(x: float) -> float:
    # sign(0) := 1, the usual Householder convention
    return 1.0 if x >= 0.0 else -1.0


def general_mapping(x, y, tol: float = DEFAULT_BREAKDOWN_TOL) -> TransformSH:
    """Symplectic Householder T with T x = y.

    Exists when x == y (identity) or x^J y != 0, in which case
    T = I - (1/x^J y) (y - x)(y - x)^J.
    """
    xv = _as_vector(x)
    yv = _as_vector(y)
    if xv.size != yv.size:
        raise ValueError("x and y must have the same length")
    m = xv.size // 2
    if np.array_equal(xv, yv):
        return _identity_sh(m)
    pivot = j_inner(xv, yv)
    scale = float(np.linalg.norm(xv) * np.linalg.norm(yv))
    if abs(pivot) <= tol * scale:
        raise MappingBreakdown(pivot)
    d = yv - xv
    return TransformSH(-1.0 / pivot, d[:m], d[m:], 0, m)


def sh1(a, rho: float, tol: float = DEFAULT_BREAKDOWN_TOL) -> TransformSH:
    """T with T a = rho e1; rho is a free nonzero scalar.

    Returns the identity when a(1) == rho already.  Breaks down when the
    pairing pivot a(n+1) is negligible relative to ||a||.
    """
    av = _as_vector(a)
    if rho == 0.0:
        raise InvalidParam("rho must be nonzero")
    m = av.size // 2
    aux = av[0] - rho
    nu = av[m]
    params = FreeParams(rho=rho, nu=float(nu))
    if aux == 0.0:
        return _identity_sh(m, params)
    if abs(nu) <= tol * float(np.linalg.norm(av)):
        raise Breakdown("ZeroPivot", nu)
    v = av / aux
    v[0] = 1.0
    c = aux * aux / (rho * nu)
    return TransformSH(float(c), v[:m], v[m:], 0, m, params)


def sh2(a, mu: float, tol: float = DEFAULT_BREAKDOWN_TOL) -> TransformSH:
    """T with T e1 = e1 and T a = mu e1 + nu e_{n+1}, where nu = a(n+1).

    mu is a free scalar different from a(1).  In the 2-dimensional space
    (n == 1) there is nothing to eliminate and the identity is returned.
    """
    av = _as_vector(a)
    m = av.size // 2
    if m == 1:
        return _identity_sh(m, FreeParams(mu=mu, nu=float(av[1])))
    nu = av[m]
    if abs(nu) <= tol * float(np.linalg.norm(av)):
        raise Breakdown("ZeroNu", nu)
    if mu == av[0]:
        raise InvalidParam("mu must differ from a(1)")
    v = -av.copy()
    v[0] += mu
    v[m] += nu  # exactly zero: T keeps the (n+1)-th coordinate fixed
    c = -1.0 / (nu * (av[0] - mu))
    return TransformSH(float(c), v[:m], v[m:], 0, m, FreeParams(mu=mu, nu=float(nu)))


def osh1(a, tol: float = DEFAULT_BREAKDOWN_TOL) -> TransformSH:
    """sh1 with the minimum-condition choice rho = sign(a(1)) ||a||_2.

    A zero vector is already of target form, so it yields the identity.
    """
    av = _as_vector(a)
    rho = _sign(float(av[0])) * float(np.linalg.norm(av))
    if rho == 0.0:
        return _identity_sh(av.size // 2, FreeParams(rho=0.0, nu=0.0))
    return sh1(av, rho, tol)


def osh2(a, tol: float = DEFAULT_BREAKDOWN_TOL) -> TransformSH:
    """sh2 with the minimum-condition choice mu = a(1) + xi.

    xi is the norm of a over the indices {2..n, n+2..2n}; xi == 0 means the
    eliminations are already done and the identity is returned.
    """
    av = _as_vector(a)
    m = av.size // 2
    if m == 1:
        return _identity_sh(m, FreeParams(mu=float(av[0]), nu=float(av[1]), xi=0.0))
    tail = np.concatenate((av[1:m], av[m + 1:]))
    xi = float(np.linalg.norm(tail))
    nu = av[m]
    if xi == 0.0:
        return _identity_sh(m, FreeParams(mu=float(av[0]), nu=float(nu), xi=0.0))
    if abs(nu) <= tol * float(np.linalg.norm(av)):
        raise Breakdown("ZeroNu", nu)
    v = -av / xi
    v[0] = 1.0
    v[m] = 0.0
    c = xi / nu
    return TransformSH(float(c), v[:m], v[m:], 0, m,
                       FreeParams(mu=float(av[0] + xi), nu=float(nu), xi=xi))


def vlg(k: int, a) -> TransformGivens:
    """Givens rotation in the (k, n+k) plane eliminating a(n+k) into a(k).

    k is 1-based.  When both entries vanish the identity (c=1, s=0) is
    returned.
    """
    av = _as_vector(a)
    n = av.size // 2
    if not 1 <= k <= n:
        raise ValueError("k must lie in 1..n")
    f, g = float(av[k - 1]), float(av[n + k - 1])
    r = float(np.hypot(f, g))
    if r == 0.0:
        return TransformGivens(k, 1.0, 0.0, n)
    return TransformGivens(k, f / r, g / r, n)


def _vlh_from_segment(k: int, segment: np.ndarray, n: int) -> TransformVLH:
    """Reflector concentrating ``segment`` into its first entry.

    The transform applies the same P = I - beta w w^T to rows k..n and
    n+k..2n; the caller decides which half of a column ``segment`` was
    read from.
    """
    seg = np.asarray(segment, dtype=np.float64)
    if seg.shape != (n - k + 1,):
        raise ValueError("segment must have length n - k + 1")
    r1 = float(seg[1:] @ seg[1:])
    r = float(np.sqrt(seg[0] * seg[0] + r1))
    if r == 0.0:
        return TransformVLH(k, 0.0, np.zeros_like(seg), n)
    w = seg.copy()
    w[0] = seg[0] + _sign(float(seg[0])) * r
    beta = 2.0 / (w[0] * w[0] + r1)
    return TransformVLH(k, float(beta), w, n)


def vlh(k: int, a) -> TransformVLH:
    """Direct-sum reflector zeroing a(k+1..n) into a(k); k is 1-based.

    An all-zero segment a(k..n) yields the identity (beta = 0).
    """
    av = _as_vector(a)
    n = av.size // 2
    if not 1 <= k <= n:
        raise ValueError("k must lie in 1..n")
    return _vlh_from_segment(k, av[k - 1:n], n)


def embed(t: TransformSH, offset: int, n: int) -> TransformSH:
    """Pad an SH transform into the 2n-space with ``offset`` leading zeros
    in each half of its direction; the action on the padded coordinates is
    the identity."""
    if not isinstance(t, TransformSH):
        raise TypeError("only symplectic Householder transforms can be embedded")
    if offset < 0 or t.m + offset != n:
        raise ValueError(f"size mismatch: transform acts on 2*{t.m}, "
                         f"target 2*{n} with offset {offset}")
    return TransformSH(t.c, t.u, t.w, t.offset + offset, n, t.params)


def _half_of(t: SymplecticTransform) -> int:
    return t.m if isinstance(t, TransformSH) else t.n


def _check_rows(t: SymplecticTransform, m: np.ndarray) -> int:
    n = _half_of(t)
    if m.shape[0] != 2 * n:
        raise ValueError(f"transform acts on 2*{n} rows, matrix has {m.shape[0]}")
    return n


def _check_cols(t: SymplecticTransform, m: np.ndarray) -> int:
    n = _half_of(t)
    cols = m.shape[-1] if m.ndim == 2 else m.shape[0]
    if cols != 2 * n:
        raise ValueError(f"transform acts on 2*{n} columns, matrix has {cols}")
    return n


def apply_left(t: SymplecticTransform, m: np.ndarray) -> None:
    """In-place M <- T M.  Accepts a 2n-vector or a 2n-by-k matrix."""
    if isinstance(t, TransformSH):
        n = _check_rows(t, m)
        if t.is_identity:
            return
        up = slice(t.offset, n)
        lo = slice(n + t.offset, 2 * n)
        if m.ndim == 1:
            coef = t.c * (t.u @ m[lo] - t.w @ m[up])  # c * v^J x
            m[up] += coef * t.u
            m[lo] += coef * t.w
        else:
            row = t.u @ m[lo, :] - t.w @ m[up, :]  # v^J M on the support
            m[up, :] += t.c * np.outer(t.u, row)
            m[lo, :] += t.c * np.outer(t.w, row)
    elif isinstance(t, TransformGivens):
        n = _check_rows(t, m)
        if t.is_identity:
            return
        i, j = t.k - 1, n + t.k - 1
        ri = t.c * m[i] + t.s * m[j]
        rj = -t.s * m[i] + t.c * m[j]
        m[i] = ri
        m[j] = rj
    elif isinstance(t, TransformVLH):
        n = _check_rows(t, m)
        if t.is_identity:
            return
        for block in (slice(t.k - 1, n), slice(n + t.k - 1, 2 * n)):
            if m.ndim == 1:
                m[block] -= (t.beta * (t.w @ m[block])) * t.w
            else:
                m[block, :] -= t.beta * np.outer(t.w, t.w @ m[block, :])
    else:
        raise TypeError(f"not a symplectic transform: {type(t).__name__}")


def apply_right_adjoint(t: SymplecticTransform, m: np.ndarray) -> None:
    """In-place M <- M T^J.  For the orthogonal kinds T^J = T^T."""
    if m.ndim != 2:
        raise ValueError("right application expects a 2-D matrix")
    if isinstance(t, TransformSH):
        n = _check_cols(t, m)
        if t.is_identity:
            return
        # M T^J = M - c (M v) (v^T J), and v^T J = [-w, u] on the support.
        up = slice(t.offset, n)
        lo = slice(n + t.offset, 2 * n)
        mv = m[:, up] @ t.u + m[:, lo] @ t.w
        m[:, up] += t.c * np.outer(mv, t.w)
        m[:, lo] -= t.c * np.outer(mv, t.u)
    elif isinstance(t, TransformGivens):
        n = _check_cols(t, m)
        if t.is_identity:
            return
        i, j = t.k - 1, n + t.k - 1
        ci = t.c * m[:, i] + t.s * m[:, j]
        cj = -t.s * m[:, i] + t.c * m[:, j]
        m[:, i] = ci
        m[:, j] = cj
    elif isinstance(t, TransformVLH):
        n = _check_cols(t, m)
        if t.is_identity:
            return
        for block in (slice(t.k - 1, n), slice(n + t.k - 1, 2 * n)):
            m[:, block] -= t.beta * np.outer(m[:, block] @ t.w, t.w)
    else:
        raise TypeError(f"not a symplectic transform: {type(t).__name__}")


def densify(t: SymplecticTransform) -> np.ndarray:
    """Explicit 2n-by-2n matrix of a transform (diagnostics and tests)."""
    n = _half_of(t)
    out = np.eye(2 * n)
    if isinstance(t, TransformSH):
        if not t.is_identity:
            v = t.v
            vj = np.concatenate((-v[n:], v[:n]))  # row vector v^T J
            out += t.c * np.outer(v, vj)
    elif isinstance(t, TransformGivens):
        i, j = t.k - 1, n + t.k - 1
        out[i, i] = t.c
        out[i, j] = t.s
        out[j, i] = -t.s
        out[j, j] = t.c
    elif isinstance(t, TransformVLH):
        if not t.is_identity:
            p = np.eye(t.w.size) - t.beta * np.outer(t.w, t.w)
            out[t.k - 1:n, t.k - 1:n] = p
            out[n + t.k - 1:, n + t.k - 1:] = p
    else:
        raise TypeError(f"not a symplectic transform: {type(t).__name__}")
    return out


def densify_adjoint(t: SymplecticTransform) -> np.ndarray:
    """Explicit matrix of T^J."""
    return adjoint_mat(densify(t))


def cond2(t: SymplecticTransform) -> float:
    """2-norm condition number of the densified transform,
    spectral_norm(T) * spectral_norm(T^J)."""
    d = densify(t)
    return spectral_norm(d) * spectral_norm(adjoint_mat(d))
