"""Pure-Python dense complex eigensolver (fallback kernel).

Same algorithm as the compiled kernel: Parlett-Reinsch balancing,
Householder reduction to upper Hessenberg form, then explicitly shifted
QR iteration with Wilkinson shifts and aggressive deflation.  Right
eigenvectors come from back-substitution on the Schur form.  Intended
for matrices of modest size (the compiled kernel is the fast path).
"""

import numpy as np

BACKEND_NAME = "python"

_EPS = np.finfo(np.float64).eps
_MAXITER_PER_EIG = 60


def _balance(a):
    """Parlett-Reinsch balancing, radix 2.  Returns the scale vector d
    such that the balanced matrix is diag(d)^-1 @ a_in @ diag(d)."""
    n = a.shape[0]
    d = np.ones(n)
    radix = 2.0
    done = False
    while not done:
        done = True
        for i in range(n):
            c = np.sum(np.abs(a[:, i])) - abs(a[i, i])
            r = np.sum(np.abs(a[i, :])) - abs(a[i, i])
            if c == 0.0 or r == 0.0:
                continue
            s = c + r
            f = 1.0
            while c < r / radix:
                c *= radix
                r /= radix
                f *= radix
            while c >= r * radix:
                c /= radix
                r *= radix
                f /= radix
            if (c + r) < 0.95 * s and f != 1.0:
                done = False
                d[i] *= f
                a[i, :] /= f
                a[:, i] *= f
    return d


def _hessenberg(a, q):
    """In-place Householder reduction to upper Hessenberg form.
    If q is not None it accumulates the unitary similarity (q @ hess @ q^H
    reproduces the input)."""
    n = a.shape[0]
    for j in range(n - 2):
        x = a[j + 1:, j]
        xnorm = np.linalg.norm(x)
        if xnorm == 0.0:
            continue
        alpha = x[0]
        phase = alpha / abs(alpha) if alpha != 0.0 else 1.0
        v = x.copy()
        v[0] += phase * xnorm
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        a[j + 1, j] = -phase * xnorm
        a[j + 2:, j] = 0.0
        a[j + 1:, j + 1:] -= 2.0 * np.outer(v, v.conj() @ a[j + 1:, j + 1:])
        a[:, j + 1:] -= 2.0 * np.outer(a[:, j + 1:] @ v, v.conj())
        if q is not None:
            q[:, j + 1:] -= 2.0 * np.outer(q[:, j + 1:] @ v, v.conj())


def _rotation(a, b):
    """Complex Givens rotation G = [[c, s], [-conj(s), c]] with c real,
    mapping (a, b) to (r, 0)."""
    aa, ab = abs(a), abs(b)
    if ab == 0.0:
        return 1.0, 0.0 + 0.0j
    r = np.hypot(aa, ab)
    if aa == 0.0:
        return 0.0, np.conj(b) / ab
    return aa / r, (a / aa) * np.conj(b) / r


def _qr_iterate(h, z, want_t):
    """Shifted QR iteration on a Hessenberg matrix, in place.

    z, if given, accumulates the Schur vectors; want_t keeps the full
    triangular factor valid (needed for eigenvectors).  Returns
    (eigenvalues, converged).
    """
    n = h.shape[0]
    hnorm = np.max(np.abs(h))
    if hnorm == 0.0:
        return np.zeros(n, dtype=complex), True
    cs = np.empty(n, dtype=np.float64)
    sn = np.empty(n, dtype=complex)
    ihi = n - 1
    its = 0
    while ihi >= 0:
        # deflation scan: find the active block [ilo..ihi]
        ilo = ihi
        while ilo > 0:
            s = abs(h[ilo - 1, ilo - 1]) + abs(h[ilo, ilo])
            if s == 0.0:
                s = hnorm
            if abs(h[ilo, ilo - 1]) <= _EPS * s:
                h[ilo, ilo - 1] = 0.0
                break
            ilo -= 1
        if ilo == ihi:
            ihi -= 1
            its = 0
            continue
        its += 1
        if its > _MAXITER_PER_EIG:
            return h.diagonal().copy(), False
        if its % 10 == 0:
            # exceptional shift to break stagnation cycles
            shift = abs(h[ihi, ihi - 1])
            if ihi - 2 >= ilo:
                shift += abs(h[ihi - 1, ihi - 2])
        else:
            # Wilkinson shift: trailing 2x2 eigenvalue nearest h[ihi, ihi]
            a = h[ihi - 1, ihi - 1]
            b = h[ihi - 1, ihi]
            c = h[ihi, ihi - 1]
            d = h[ihi, ihi]
            tr = 0.5 * (a + d)
            disc = np.sqrt(complex(tr * tr - (a * d - b * c)))
            m1 = tr + disc
            m2 = tr - disc
            shift = m1 if abs(m1 - d) <= abs(m2 - d) else m2
        col_lo = 0 if want_t else ilo
        col_hi = n - 1 if want_t else ihi
        for i in range(ilo, ihi + 1):
            h[i, i] -= shift
        # left rotations: Q^H (H - shift I) = R
        for i in range(ilo, ihi):
            c_, s_ = _rotation(h[i, i], h[i + 1, i])
            cs[i] = c_
            sn[i] = s_
            t1 = c_ * h[i, i:col_hi + 1] + s_ * h[i + 1, i:col_hi + 1]
            h[i + 1, i:col_hi + 1] = (-np.conj(s_) * h[i, i:col_hi + 1]
                                      + c_ * h[i + 1, i:col_hi + 1])
            h[i, i:col_hi + 1] = t1
        # right rotations: R Q restores Hessenberg form
        for i in range(ilo, ihi):
            c_, s_ = cs[i], sn[i]
            rhi = min(i + 2, ihi if not want_t else n - 1)
            ci = h[col_lo:rhi + 1, i]
            cj = h[col_lo:rhi + 1, i + 1]
            t1 = c_ * ci + np.conj(s_) * cj
            h[col_lo:rhi + 1, i + 1] = -s_ * ci + c_ * cj
            h[col_lo:rhi + 1, i] = t1
            if z is not None:
                zi = z[:, i].copy()
                z[:, i] = c_ * zi + np.conj(s_) * z[:, i + 1]
                z[:, i + 1] = -s_ * zi + c_ * z[:, i + 1]
        for i in range(ilo, ihi + 1):
            h[i, i] += shift
    return h.diagonal().copy(), True


def _tri_eigvecs(t, z):
    """Right eigenvectors from the Schur factorization (t, z) by
    back-substitution; tiny pivots are perturbed so defective clusters
    still return a usable direction."""
    n = t.shape[0]
    v = np.empty((n, n), dtype=complex)
    smin = _EPS * max(np.max(np.abs(t)), 1.0)
    for k in range(n):
        lam = t[k, k]
        x = np.zeros(k + 1, dtype=complex)
        x[k] = 1.0
        for i in range(k - 1, -1, -1):
            rhs = -np.dot(t[i, i + 1:k + 1], x[i + 1:k + 1])
            den = t[i, i] - lam
            if abs(den) < smin:
                den = smin
            x[i] = rhs / den
            ax = abs(x[i])
            if ax > 1e120:  # rescale to dodge overflow in pathological cases
                x /= ax
        full = z[:, :k + 1] @ x
        v[:, k] = full / np.linalg.norm(full)
    return v


def eig(a, vectors=False):
    """Eigenvalues (and optionally right eigenvectors) of a dense complex
    matrix.  Returns (w, v_or_None, converged); eigenvalue order is the
    deflation order, not sorted."""
    a = np.array(a, dtype=complex, order="C")
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if n == 1:
        w = a.diagonal().copy()
        v = np.ones((1, 1), dtype=complex) if vectors else None
        return w, v, True
    d = _balance(a)
    q = np.eye(n, dtype=complex) if vectors else None
    _hessenberg(a, q)
    w, ok = _qr_iterate(a, q, want_t=vectors)
    if not vectors:
        return w, None, ok
    v = _tri_eigvecs(a, q)
    v *= d[:, None]  # undo balancing
    v /= np.linalg.norm(v, axis=0, keepdims=True)
    return w, v, ok
