"""Pure-numpy evaluation kernels for orthonormal element bases.

Mirrors the API of the compiled extension ``spfilter._kernels``; the
two implementations must stay interchangeable (equality is asserted in
the test suite).  Tensor-product elements use normalized Legendre
polynomials; simplices use the collapsed-coordinate (Proriol/Koornwinder/
Dubiner-type) orthonormal family.

Mode ordering (shared with the compiled kernels):
  segment: n = 0..N
  quad:    (i, j), j fastest, m = i*(N+1) + j
  hex:     (i, j, k), k fastest
  tri:     (i, j) with i + j <= N, i outer
  tet:     (i, j, k) with i + j + k <= N, i outer, then j
"""

import math

import numpy as np

SEGMENT, QUAD, TRI, HEX, TET = 0, 1, 2, 3, 4

_DIMS = {SEGMENT: 1, QUAD: 2, TRI: 2, HEX: 3, TET: 3}

# collapsed-coordinate guard near the singular vertex/edge
_COLLAPSE_TOL = 1e-12

_SQRT2 = math.sqrt(2.0)


def space_dim(kind):
    return _DIMS[kind]


def mode_count(kind, order):
    n = order + 1
    if kind == SEGMENT:
        return n
    if kind == QUAD:
        return n * n
    if kind == HEX:
        return n * n * n
    if kind == TRI:
        return n * (n + 1) // 2
    if kind == TET:
        return n * (n + 1) * (n + 2) // 6
    raise ValueError(f"unknown element kind {kind}")


def jacobi_table(alpha, beta, nmax, x):
    """Orthonormal Jacobi polynomials P^(alpha,beta)_0..nmax at points x.

    Normalized against the weight (1-x)^alpha (1+x)^beta on [-1, 1].
    Returns shape (len(x), nmax+1).
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((x.shape[0], nmax + 1))
    if abs(alpha + beta + 1.0) < 1e-14:
        gamma0 = math.gamma(alpha + 1) * math.gamma(beta + 1)
    else:
        gamma0 = (2.0 ** (alpha + beta + 1) / (alpha + beta + 1)
                  * math.gamma(alpha + 1) * math.gamma(beta + 1)
                  / math.gamma(alpha + beta + 1))
    out[:, 0] = 1.0 / math.sqrt(gamma0)
    if nmax == 0:
        return out
    gamma1 = (alpha + 1) * (beta + 1) / (alpha + beta + 3) * gamma0
    out[:, 1] = ((alpha + beta + 2) * x / 2 + (alpha - beta) / 2) / math.sqrt(gamma1)
    aold = 2.0 / (2 + alpha + beta) * math.sqrt(
        (alpha + 1) * (beta + 1) / (alpha + beta + 3))
    for i in range(1, nmax):
        h1 = 2.0 * i + alpha + beta
        foo = ((i + 1.0) * (i + 1 + alpha + beta) * (i + 1 + alpha)
               * (i + 1 + beta) / (h1 + 1) / (h1 + 3))
        anew = 2.0 / (h1 + 2) * math.sqrt(foo)
        bnew = -(alpha * alpha - beta * beta) / (h1 * (h1 + 2))
        out[:, i + 1] = (-aold * out[:, i - 1] + (x - bnew) * out[:, i]) / anew
        aold = anew
    return out


def jacobi_deriv_table(alpha, beta, nmax, x):
    """d/dx of the orthonormal Jacobi table (same shape as jacobi_table)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros((x.shape[0], nmax + 1))
    if nmax >= 1:
        shifted = jacobi_table(alpha + 1, beta + 1, nmax - 1, x)
        for n in range(1, nmax + 1):
            out[:, n] = math.sqrt(n * (n + alpha + beta + 1)) * shifted[:, n - 1]
    return out


def _legendre_tables(order, x, deriv):
    val = jacobi_table(0.0, 0.0, order, x)
    if not deriv:
        return val, None
    return val, jacobi_deriv_table(0.0, 0.0, order, x)


def _tri_collapse(pts):
    r, s = pts[:, 0], pts[:, 1]
    den = 1.0 - s
    safe = np.abs(den) > _COLLAPSE_TOL
    a = np.where(safe, 2.0 * (1.0 + r) / np.where(safe, den, 1.0) - 1.0, -1.0)
    return a, s.copy()


def _tet_collapse(pts):
    r, s, t = pts[:, 0], pts[:, 1], pts[:, 2]
    den_a = s + t
    safe_a = np.abs(den_a) > _COLLAPSE_TOL
    a = np.where(safe_a, -2.0 * (1.0 + r) / np.where(safe_a, den_a, 1.0) - 1.0, -1.0)
    den_b = 1.0 - t
    safe_b = np.abs(den_b) > _COLLAPSE_TOL
    b = np.where(safe_b, 2.0 * (1.0 + s) / np.where(safe_b, den_b, 1.0) - 1.0, -1.0)
    return a, b, t.copy()


def vandermonde(kind, order, pts):
    """Tabulate all basis functions at pts: out[q, m] = psi_m(pts[q])."""
    pts = np.ascontiguousarray(pts, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != space_dim(kind):
        raise ValueError("pts must have shape (n, dim)")
    npts = pts.shape[0]
    P = mode_count(kind, order)
    out = np.empty((npts, P))

    if kind == SEGMENT:
        out[:] = jacobi_table(0.0, 0.0, order, pts[:, 0])
        return out

    if kind in (QUAD, HEX):
        tabs = [jacobi_table(0.0, 0.0, order, pts[:, d])
                for d in range(space_dim(kind))]
        m = 0
        if kind == QUAD:
            for i in range(order + 1):
                for j in range(order + 1):
                    out[:, m] = tabs[0][:, i] * tabs[1][:, j]
                    m += 1
        else:
            for i in range(order + 1):
                for j in range(order + 1):
                    for k in range(order + 1):
                        out[:, m] = tabs[0][:, i] * tabs[1][:, j] * tabs[2][:, k]
                        m += 1
        return out

    if kind == TRI:
        a, b = _tri_collapse(pts)
        fa = jacobi_table(0.0, 0.0, order, a)
        omb = 1.0 - b
        m = 0
        for i in range(order + 1):
            gb = jacobi_table(2.0 * i + 1.0, 0.0, order - i, b)
            pw = omb ** i
            for j in range(order + 1 - i):
                out[:, m] = _SQRT2 * fa[:, i] * gb[:, j] * pw
                m += 1
        return out

    if kind == TET:
        a, b, c = _tet_collapse(pts)
        fa = jacobi_table(0.0, 0.0, order, a)
        omb, omc = 1.0 - b, 1.0 - c
        m = 0
        for i in range(order + 1):
            gb = jacobi_table(2.0 * i + 1.0, 0.0, order - i, b)
            pb = omb ** i
            for j in range(order + 1 - i):
                hc = jacobi_table(2.0 * (i + j) + 2.0, 0.0, order - i - j, c)
                pc = omc ** (i + j)
                for k in range(order + 1 - i - j):
                    out[:, m] = 2.0 * _SQRT2 * fa[:, i] * gb[:, j] * pb * hc[:, k] * pc
                    m += 1
        return out

    raise ValueError(f"unknown element kind {kind}")


def grad_vandermonde(kind, order, pts):
    """Tabulate basis gradients: out[q, m, d] = d psi_m / d x_d at pts[q]."""
    pts = np.ascontiguousarray(pts, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != space_dim(kind):
        raise ValueError("pts must have shape (n, dim)")
    npts = pts.shape[0]
    P = mode_count(kind, order)
    dim = space_dim(kind)
    out = np.empty((npts, P, dim))

    if kind == SEGMENT:
        out[:, :, 0] = jacobi_deriv_table(0.0, 0.0, order, pts[:, 0])
        return out

    if kind in (QUAD, HEX):
        val = [jacobi_table(0.0, 0.0, order, pts[:, d]) for d in range(dim)]
        der = [jacobi_deriv_table(0.0, 0.0, order, pts[:, d]) for d in range(dim)]
        m = 0
        if kind == QUAD:
            for i in range(order + 1):
                for j in range(order + 1):
                    out[:, m, 0] = der[0][:, i] * val[1][:, j]
                    out[:, m, 1] = val[0][:, i] * der[1][:, j]
                    m += 1
        else:
            for i in range(order + 1):
                for j in range(order + 1):
                    for k in range(order + 1):
                        out[:, m, 0] = der[0][:, i] * val[1][:, j] * val[2][:, k]
                        out[:, m, 1] = val[0][:, i] * der[1][:, j] * val[2][:, k]
                        out[:, m, 2] = val[0][:, i] * val[1][:, j] * der[2][:, k]
                        m += 1
        return out

    if kind == TRI:
        a, b = _tri_collapse(pts)
        fa = jacobi_table(0.0, 0.0, order, a)
        dfa = jacobi_deriv_table(0.0, 0.0, order, a)
        omb = 1.0 - b
        m = 0
        for i in range(order + 1):
            gb = jacobi_table(2.0 * i + 1.0, 0.0, order - i, b)
            dgb = jacobi_deriv_table(2.0 * i + 1.0, 0.0, order - i, b)
            pw = omb ** i
            pwm1 = omb ** (i - 1) if i >= 1 else np.zeros(npts)
            for j in range(order + 1 - i):
                # psi = sqrt(2) fa(a) gb(b) (1-b)^i with a = 2(1+r)/(1-s) - 1
                out[:, m, 0] = 2.0 * _SQRT2 * dfa[:, i] * gb[:, j] * pwm1
                out[:, m, 1] = _SQRT2 * (
                    dfa[:, i] * gb[:, j] * (1.0 + a) * pwm1
                    + fa[:, i] * (dgb[:, j] * pw - i * gb[:, j] * pwm1))
                m += 1
        return out

    if kind == TET:
        a, b, c = _tet_collapse(pts)
        fa = jacobi_table(0.0, 0.0, order, a)
        dfa = jacobi_deriv_table(0.0, 0.0, order, a)
        omb, omc = 1.0 - b, 1.0 - c
        K = 2.0 * _SQRT2
        m = 0
        for i in range(order + 1):
            gb = jacobi_table(2.0 * i + 1.0, 0.0, order - i, b)
            dgb = jacobi_deriv_table(2.0 * i + 1.0, 0.0, order - i, b)
            pb = omb ** i
            pbm1 = omb ** (i - 1) if i >= 1 else np.zeros(npts)
            for j in range(order + 1 - i):
                hc = jacobi_table(2.0 * (i + j) + 2.0, 0.0, order - i - j, c)
                dhc = jacobi_deriv_table(2.0 * (i + j) + 2.0, 0.0, order - i - j, c)
                pc = omc ** (i + j)
                pcm1 = omc ** (i + j - 1) if i + j >= 1 else np.zeros(npts)
                gbracket = dgb * pb[:, None] - i * gb * pbm1[:, None]
                for k in range(order + 1 - i - j):
                    common = dfa[:, i] * gb[:, j] * pbm1 * hc[:, k] * pcm1
                    out[:, m, 0] = K * 4.0 * common
                    out[:, m, 1] = K * (2.0 * (1.0 + a) * common
                                        + 2.0 * fa[:, i] * gbracket[:, j]
                                        * hc[:, k] * pcm1)
                    out[:, m, 2] = K * (2.0 * (1.0 + a) * common
                                        + (1.0 + b) * fa[:, i] * gbracket[:, j]
                                        * hc[:, k] * pcm1
                                        + fa[:, i] * gb[:, j] * pb
                                        * (dhc[:, k] * pc
                                           - (i + j) * hc[:, k] * pcm1))
                    m += 1
        return out

    raise ValueError(f"unknown element kind {kind}")
