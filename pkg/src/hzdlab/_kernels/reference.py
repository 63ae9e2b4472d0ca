"""Pure-Python kernel backend (numpy); mirrors the compiled extension.

All functions operate on bare float64 arrays: q, dq are length-7, p is the
13-entry parameter vector [mT, mF, mS, lT, lF, lS, cT, cF, cS, IT, IF, IS, g].
Linear solves report a reciprocal-condition estimate so callers can detect
kinematic singularities uniformly across backends.
"""

import numpy as np

from . import _gen_py

BACKEND = "python"

# torques act on q1..q4 (state indices 2..5)
_ACT = (2, 3, 4, 5)


def dyn_terms(q, dq, p):
    D = np.empty((7, 7))
    C = np.empty((7, 7))
    G = np.empty(7)
    Jst = np.empty((2, 7))
    dJst = np.empty((2, 7))
    Jsw = np.empty((2, 7))
    dJsw = np.empty((2, 7))
    _gen_py.dyn_full(q, dq, p, D, C, G, Jst, dJst, Jsw, dJsw)
    return D, C, G, Jst, dJst, Jsw, dJsw


def dyn_core(q, dq, p):
    D = np.empty((7, 7))
    h = np.empty(7)
    G = np.empty(7)
    Jst = np.empty((2, 7))
    jdq_st = np.empty(2)
    Jsw = np.empty((2, 7))
    jdq_sw = np.empty(2)
    _gen_py.dyn_core(q, dq, p, D, h, G, Jst, jdq_st, Jsw, jdq_sw)
    return D, h, G, Jst, jdq_st, Jsw, jdq_sw


def _kkt(D, J):
    K = np.zeros((9, 9))
    K[:7, :7] = D
    K[:7, 7:] = -J.T
    K[7:, :7] = J
    return K


def solve_dense(K, X):
    """Dense solve returning (solution, rcond estimate)."""
    K = np.asarray(K, dtype=float)
    rc = 1.0 / np.linalg.cond(K)
    if not np.isfinite(rc) or rc == 0.0:
        return np.full(np.shape(X), np.nan), 0.0
    return np.linalg.solve(K, X), rc


def accel(q, dq, p, u):
    D, h, G, Jst, jdq_st, _, _ = dyn_core(q, dq, p)
    rhs = np.zeros(9)
    rhs[:7] = -h - G
    rhs[list(_ACT)] += u
    rhs[7:] = -jdq_st
    sol, rc = solve_dense(_kkt(D, Jst), rhs)
    return sol[:7], sol[7:], rc


def accel_torque_map(q, dq, p):
    """Drift acceleration plus the linear torque->(qdd, lambda) maps."""
    D, h, G, Jst, jdq_st, _, _ = dyn_core(q, dq, p)
    rhs = np.zeros((9, 5))
    rhs[:7, 0] = -h - G
    rhs[7:, 0] = -jdq_st
    for k, i in enumerate(_ACT):
        rhs[i, 1 + k] = 1.0
    sol, rc = solve_dense(_kkt(D, Jst), rhs)
    return sol[:7, 0], sol[7:, 0], sol[:7, 1:], sol[7:, 1:], rc


def _f(q, dq, p, u):
    qdd, lam, rc = accel(q, dq, p, u)
    return qdd, lam, rc


def rk4_step(q, dq, p, u, dt, nsub=1):
    """RK4 with u held constant (zero-order hold). Returns (q, dq, lam, rcond)."""
    q = q.copy()
    dq = dq.copy()
    h = dt / nsub
    lam0 = None
    rcmin = np.inf
    for _ in range(nsub):
        a1, lam, rc1 = _f(q, dq, p, u)
        if lam0 is None:
            lam0 = lam
        a2, _, rc2 = _f(q + 0.5 * h * dq, dq + 0.5 * h * a1, p, u)
        a3, _, rc3 = _f(q + 0.5 * h * (dq + 0.5 * h * a1), dq + 0.5 * h * a2, p, u)
        a4, _, rc4 = _f(q + h * (dq + 0.5 * h * a2), dq + h * a3, p, u)
        qn = q + h / 6.0 * (dq + 2.0 * (dq + 0.5 * h * a1) + 2.0 * (dq + 0.5 * h * a2) + (dq + h * a3))
        dqn = dq + h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        q, dq = qn, dqn
        rcmin = min(rcmin, rc1, rc2, rc3, rc4)
    return q, dq, lam0, rcmin


def impact_solve(q, dq, p):
    """Plastic impact at the swing foot: returns (dq_plus, impulse, rcond)."""
    D, _, _, _, _, Jsw, _ = dyn_core(q, dq, p)
    rhs = np.zeros(9)
    rhs[:7] = D @ dq
    sol, rc = solve_dense(_kkt(D, Jsw), rhs)
    return sol[:7], sol[7:], rc


def fk_points(q, p):
    P = np.empty((7, 2))
    _gen_py.fk(q, p, P)
    return P


def guard_eval(q, dq, p):
    out = np.empty(2)
    _gen_py.guard(q, dq, p, out)
    return out[0], out[1]


def energy(q, dq, p):
    out = np.empty(2)
    _gen_py.energy(q, dq, p, out)
    return out[0], out[1]
