# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend: closed-form dynamics plus small dense solves.

Semantics match hzdlab._kernels.reference; this module only removes the
interpreter from the per-control-step hot path.
"""

from libc.math cimport fabs

import numpy as np

include "_generated.pxi"

BACKEND = "compiled"


cdef int _dense_solve(double* K, double* X, int n, int m, double* rc) noexcept nogil:
    """Gaussian elimination with partial pivoting, K (n*n) and X (n*m) row-major.

    X is overwritten with the solution.  rc receives min|pivot| / max|K| as a
    cheap reciprocal-condition proxy.  Returns 0 on success, 1 if singular.
    """
    cdef int i, j, k, prow
    cdef double amax, fac, pivot, tmp
    cdef double minpiv = 1e300
    cdef double anorm = 0.0
    for i in range(n * n):
        if fabs(K[i]) > anorm:
            anorm = fabs(K[i])
    if anorm == 0.0:
        rc[0] = 0.0
        return 1
    for k in range(n):
        prow = k
        amax = fabs(K[k * n + k])
        for i in range(k + 1, n):
            if fabs(K[i * n + k]) > amax:
                amax = fabs(K[i * n + k])
                prow = i
        if amax == 0.0:
            rc[0] = 0.0
            return 1
        if prow != k:
            for j in range(n):
                tmp = K[k * n + j]
                K[k * n + j] = K[prow * n + j]
                K[prow * n + j] = tmp
            for j in range(m):
                tmp = X[k * m + j]
                X[k * m + j] = X[prow * m + j]
                X[prow * m + j] = tmp
        pivot = K[k * n + k]
        if fabs(pivot) < minpiv:
            minpiv = fabs(pivot)
        for i in range(k + 1, n):
            fac = K[i * n + k] / pivot
            if fac != 0.0:
                for j in range(k + 1, n):
                    K[i * n + j] -= fac * K[k * n + j]
                for j in range(m):
                    X[i * m + j] -= fac * X[k * m + j]
    for k in range(n - 1, -1, -1):
        for j in range(m):
            tmp = X[k * m + j]
            for i in range(k + 1, n):
                tmp -= K[k * n + i] * X[i * m + j]
            X[k * m + j] = tmp / K[k * n + k]
    rc[0] = minpiv / anorm
    return 0


cdef void _pack_kkt(double* D, double* J, double* K) noexcept nogil:
    cdef int i, j
    for i in range(9 * 9):
        K[i] = 0.0
    for i in range(7):
        for j in range(7):
            K[i * 9 + j] = D[i * 7 + j]
    for i in range(2):
        for j in range(7):
            K[(7 + i) * 9 + j] = J[i * 7 + j]
            K[j * 9 + 7 + i] = -J[i * 7 + j]


cdef int _accel_c(const double* q, const double* dq, const double* p,
                  const double* u, double* qdd, double* lam, double* rc) noexcept nogil:
    cdef double D[49]
    cdef double h[7]
    cdef double G[7]
    cdef double Jst[14]
    cdef double jdq_st[2]
    cdef double Jsw[14]
    cdef double jdq_sw[2]
    cdef double K[81]
    cdef double X[9]
    cdef int i, status
    _dyn_core(q, dq, p, D, h, G, Jst, jdq_st, Jsw, jdq_sw)
    _pack_kkt(D, Jst, K)
    for i in range(7):
        X[i] = -h[i] - G[i]
    X[2] += u[0]
    X[3] += u[1]
    X[4] += u[2]
    X[5] += u[3]
    X[7] = -jdq_st[0]
    X[8] = -jdq_st[1]
    status = _dense_solve(K, X, 9, 1, rc)
    for i in range(7):
        qdd[i] = X[i]
    lam[0] = X[7]
    lam[1] = X[8]
    return status


def dyn_terms(double[::1] q, double[::1] dq, double[::1] p):
    D = np.empty((7, 7))
    C = np.empty((7, 7))
    G = np.empty(7)
    Jst = np.empty((2, 7))
    dJst = np.empty((2, 7))
    Jsw = np.empty((2, 7))
    dJsw = np.empty((2, 7))
    cdef double[:, ::1] Dv = D, Cv = C, J1 = Jst, dJ1 = dJst, J2 = Jsw, dJ2 = dJsw
    cdef double[::1] Gv = G
    _dyn_full(&q[0], &dq[0], &p[0], &Dv[0, 0], &Cv[0, 0], &Gv[0],
              &J1[0, 0], &dJ1[0, 0], &J2[0, 0], &dJ2[0, 0])
    return D, C, G, Jst, dJst, Jsw, dJsw


def dyn_core(double[::1] q, double[::1] dq, double[::1] p):
    D = np.empty((7, 7))
    h = np.empty(7)
    G = np.empty(7)
    Jst = np.empty((2, 7))
    jdq_st = np.empty(2)
    Jsw = np.empty((2, 7))
    jdq_sw = np.empty(2)
    cdef double[:, ::1] Dv = D, J1 = Jst, J2 = Jsw
    cdef double[::1] hv = h, Gv = G, s1 = jdq_st, s2 = jdq_sw
    _dyn_core(&q[0], &dq[0], &p[0], &Dv[0, 0], &hv[0], &Gv[0],
              &J1[0, 0], &s1[0], &J2[0, 0], &s2[0])
    return D, h, G, Jst, jdq_st, Jsw, jdq_sw


def solve_dense(K, X):
    Kc = np.array(K, dtype=float, order="C")
    Xc = np.array(X, dtype=float, order="C")
    squeeze = Xc.ndim == 1
    if squeeze:
        Xc = Xc[:, None]
    cdef double[:, ::1] Kv = Kc
    cdef double[:, ::1] Xv = Xc
    cdef double rc = 0.0
    cdef int status
    status = _dense_solve(&Kv[0, 0], &Xv[0, 0], Kc.shape[0], Xc.shape[1], &rc)
    if status != 0:
        Xc[:] = np.nan
        rc = 0.0
    return (Xc[:, 0] if squeeze else Xc), rc


def accel(double[::1] q, double[::1] dq, double[::1] p, double[::1] u):
    qdd = np.empty(7)
    lam = np.empty(2)
    cdef double[::1] av = qdd, lv = lam
    cdef double rc = 0.0
    if _accel_c(&q[0], &dq[0], &p[0], &u[0], &av[0], &lv[0], &rc):
        qdd[:] = np.nan
        lam[:] = np.nan
    return qdd, lam, rc


def accel_torque_map(double[::1] q, double[::1] dq, double[::1] p):
    cdef double D[49]
    cdef double h[7]
    cdef double G[7]
    cdef double Jst[14]
    cdef double jdq_st[2]
    cdef double Jsw[14]
    cdef double jdq_sw[2]
    cdef double K[81]
    cdef double X[45]
    cdef double rc = 0.0
    cdef int i, j, status
    _dyn_core(&q[0], &dq[0], &p[0], D, h, G, Jst, jdq_st, Jsw, jdq_sw)
    _pack_kkt(D, Jst, K)
    for i in range(45):
        X[i] = 0.0
    for i in range(7):
        X[i * 5] = -h[i] - G[i]
    X[7 * 5] = -jdq_st[0]
    X[8 * 5] = -jdq_st[1]
    for j in range(4):
        X[(2 + j) * 5 + 1 + j] = 1.0
    status = _dense_solve(K, X, 9, 5, &rc)
    qdd0 = np.empty(7)
    lam0 = np.empty(2)
    A = np.empty((7, 4))
    lamA = np.empty((2, 4))
    if status != 0:
        qdd0[:] = np.nan
        lam0[:] = np.nan
        A[:] = np.nan
        lamA[:] = np.nan
        return qdd0, lam0, A, lamA, 0.0
    for i in range(7):
        qdd0[i] = X[i * 5]
        for j in range(4):
            A[i, j] = X[i * 5 + 1 + j]
    for i in range(2):
        lam0[i] = X[(7 + i) * 5]
        for j in range(4):
            lamA[i, j] = X[(7 + i) * 5 + 1 + j]
    return qdd0, lam0, A, lamA, rc


def rk4_step(double[::1] q, double[::1] dq, double[::1] p, double[::1] u,
             double dt, int nsub=1):
    qn = np.array(q, dtype=float)
    dqn = np.array(dq, dtype=float)
    lam = np.empty(2)
    cdef double[::1] qv = qn, dv = dqn, lv = lam
    cdef double a1[7]
    cdef double a2[7]
    cdef double a3[7]
    cdef double a4[7]
    cdef double qt[7]
    cdef double dt_[7]
    cdef double lam_s[2]
    cdef double rc = 0.0, rcmin = 1e300, hh
    cdef int i, s, bad = 0
    hh = dt / nsub
    with nogil:
        for s in range(nsub):
            bad |= _accel_c(&qv[0], &dv[0], &p[0], &u[0], a1, lam_s, &rc)
            if s == 0:
                lv[0] = lam_s[0]
                lv[1] = lam_s[1]
            if rc < rcmin:
                rcmin = rc
            for i in range(7):
                qt[i] = qv[i] + 0.5 * hh * dv[i]
                dt_[i] = dv[i] + 0.5 * hh * a1[i]
            bad |= _accel_c(qt, dt_, &p[0], &u[0], a2, lam_s, &rc)
            if rc < rcmin:
                rcmin = rc
            for i in range(7):
                qt[i] = qv[i] + 0.5 * hh * (dv[i] + 0.5 * hh * a1[i])
                dt_[i] = dv[i] + 0.5 * hh * a2[i]
            bad |= _accel_c(qt, dt_, &p[0], &u[0], a3, lam_s, &rc)
            if rc < rcmin:
                rcmin = rc
            for i in range(7):
                qt[i] = qv[i] + hh * (dv[i] + 0.5 * hh * a2[i])
                dt_[i] = dv[i] + hh * a3[i]
            bad |= _accel_c(qt, dt_, &p[0], &u[0], a4, lam_s, &rc)
            if rc < rcmin:
                rcmin = rc
            for i in range(7):
                qv[i] = qv[i] + hh / 6.0 * (dv[i] + 2.0 * (dv[i] + 0.5 * hh * a1[i])
                                            + 2.0 * (dv[i] + 0.5 * hh * a2[i])
                                            + (dv[i] + hh * a3[i]))
                dv[i] = dv[i] + hh / 6.0 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i])
            if bad:
                break
    if bad:
        qn[:] = np.nan
        dqn[:] = np.nan
        rcmin = 0.0
    return qn, dqn, lam, rcmin


def impact_solve(double[::1] q, double[::1] dq, double[::1] p):
    cdef double D[49]
    cdef double h[7]
    cdef double G[7]
    cdef double Jst[14]
    cdef double jdq_st[2]
    cdef double Jsw[14]
    cdef double jdq_sw[2]
    cdef double K[81]
    cdef double X[9]
    cdef double rc = 0.0
    cdef int i, j, status
    _dyn_core(&q[0], &dq[0], &p[0], D, h, G, Jst, jdq_st, Jsw, jdq_sw)
    _pack_kkt(D, Jsw, K)
    for i in range(7):
        X[i] = 0.0
        for j in range(7):
            X[i] += D[i * 7 + j] * dq[j]
    X[7] = 0.0
    X[8] = 0.0
    status = _dense_solve(K, X, 9, 1, &rc)
    dq_plus = np.empty(7)
    dlam = np.empty(2)
    if status != 0:
        dq_plus[:] = np.nan
        dlam[:] = np.nan
        return dq_plus, dlam, 0.0
    for i in range(7):
        dq_plus[i] = X[i]
    dlam[0] = X[7]
    dlam[1] = X[8]
    return dq_plus, dlam, rc


def fk_points(double[::1] q, double[::1] p):
    P = np.empty((7, 2))
    cdef double[:, ::1] Pv = P
    _fk(&q[0], &p[0], &Pv[0, 0])
    return P


def guard_eval(double[::1] q, double[::1] dq, double[::1] p):
    cdef double out[2]
    _guard(&q[0], &dq[0], &p[0], out)
    return out[0], out[1]


def energy(double[::1] q, double[::1] dq, double[::1] p):
    cdef double out[2]
    _energy(&q[0], &dq[0], &p[0], out)
    return out[0], out[1]
