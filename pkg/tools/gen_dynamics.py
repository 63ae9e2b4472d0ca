#!/usr/bin/env python3
"""Offline derivation of the five-link biped dynamics, emitted as code.

Derives D, C (Christoffel), G, foot Jacobians and kinematics for the planar
five-link chain with coordinates q = [x, y, q1, q2, q3, q4, q5] (hip position,
relative femur angles w.r.t. torso, relative knee angles, absolute torso
angle; angles positive clockwise when +x is the walking direction).

Writes two files under src/hzdlab/_kernels/:
  _gen_py.py      pure-Python scalar kernels (fallback backend)
  _generated.pxi  the same kernels as C-level Cython functions

Run from the repo root:  python3 tools/gen_dynamics.py
"""

import os
import sys

import numpy as np
import sympy as sp
from sympy.printing.str import StrPrinter


class ScalarPrinter(StrPrinter):
    """Prints expressions as plain C-compatible scalar arithmetic."""

    def _print_Pow(self, expr):
        base, exp = expr.args
        if exp is sp.S(2):
            s = self.parenthesize(base, 75)
            return f"{s}*{s}"
        if exp is sp.S(3):
            s = self.parenthesize(base, 75)
            return f"{s}*{s}*{s}"
        if exp is sp.S.NegativeOne:
            return f"1.0/({self._print(base)})"
        return super()._print_Pow(expr)

    def _print_Rational(self, expr):
        return f"({expr.p}.0/{expr.q}.0)"

    def _print_Half(self, expr):
        return "0.5"


PRINTER = ScalarPrinter()

Q_NAMES = ["qx", "qy", "q1", "q2", "q3", "q4", "q5"]
DQ_NAMES = ["dqx", "dqy", "dq1", "dq2", "dq3", "dq4", "dq5"]
P_NAMES = ["mT", "mF", "mS", "lT", "lF", "lS", "cT", "cF", "cS", "IT", "IF", "IS", "grav"]


def derive():
    q = sp.Matrix([sp.Symbol(n) for n in Q_NAMES])
    dq = sp.Matrix([sp.Symbol(n) for n in DQ_NAMES])
    p = {n: sp.Symbol(n) for n in P_NAMES}
    qx, qy, q1, q2, q3, q4, q5 = q
    mT, mF, mS, lT, lF, lS, cT, cF, cS, IT, IF, IS, g = (p[n] for n in P_NAMES)

    # Clockwise-positive angles; legs measured from straight down, torso from
    # straight up.  The stance-leg angle q5 + q1 + q3/2 then increases
    # monotonically while the hip passes over the stance foot going +x.
    def down(a):
        return sp.Matrix([-sp.sin(a), -sp.cos(a)])

    up5 = sp.Matrix([sp.sin(q5), sp.cos(q5)])
    hip = sp.Matrix([qx, qy])
    a1, a2 = q5 + q1, q5 + q2
    a3, a4 = a1 + q3, a2 + q4

    torso_top = hip + lT * up5
    knee_st = hip + lF * down(a1)
    knee_sw = hip + lF * down(a2)
    foot_st = knee_st + lS * down(a3)
    foot_sw = knee_sw + lS * down(a4)

    links = [
        (mT, IT, hip + cT * up5, q5),
        (mF, IF, hip + cF * down(a1), a1),
        (mF, IF, hip + cF * down(a2), a2),
        (mS, IS, knee_st + cS * down(a3), a3),
        (mS, IS, knee_sw + cS * down(a4), a4),
    ]

    ke = sp.S.Zero
    pe = sp.S.Zero
    com = sp.zeros(2, 1)
    mtot = sp.S.Zero
    for m, inertia, pos, ang in links:
        vel = pos.jacobian(q) * dq
        w = (sp.Matrix([ang]).jacobian(q) * dq)[0]
        ke += m / 2 * (vel.T * vel)[0] + inertia / 2 * w**2
        pe += m * g * pos[1]
        com += m * pos
        mtot += m
    ke = sp.expand(ke)
    com = com / mtot

    D = sp.hessian(ke, dq)
    G = sp.Matrix([pe]).jacobian(q).T

    # Christoffel construction: guarantees d/dt(D) - 2C skew-symmetric.
    C = sp.zeros(7, 7)
    for i in range(7):
        for j in range(7):
            cij = sp.S.Zero
            for k in range(7):
                cij += (D[i, j].diff(q[k]) + D[i, k].diff(q[j]) - D[j, k].diff(q[i])) * dq[k]
            C[i, j] = sp.expand(cij / 2)

    def jac_dot(J):
        Jd = sp.zeros(*J.shape)
        for k in range(7):
            Jd += J.diff(q[k]) * dq[k]
        return Jd

    Jst = foot_st.jacobian(q)
    Jsw = foot_sw.jacobian(q)
    dJst = jac_dot(Jst)
    dJsw = jac_dot(Jsw)

    h = sp.expand(C * dq)        # Coriolis vector C(q,dq)*dq
    jdq_st = sp.expand(dJst * dq)
    jdq_sw = sp.expand(dJsw * dq)

    vel_sw = foot_sw.jacobian(q) * dq
    points = sp.Matrix([hip.T, torso_top.T, knee_st.T, foot_st.T, knee_sw.T, foot_sw.T, com.T])

    return {
        "q": q, "dq": dq,
        "dyn_full": [("D", D, True), ("C", C, False), ("G", G, False),
                     ("Jst", Jst, False), ("dJst", dJst, False),
                     ("Jsw", Jsw, False), ("dJsw", dJsw, False)],
        "dyn_core": [("D", D, True), ("h", h, False), ("G", G, False),
                     ("Jst", Jst, False), ("jdq_st", jdq_st, False),
                     ("Jsw", Jsw, False), ("jdq_sw", jdq_sw, False)],
        "fk": [("P", points, False)],
        "guard": [("out", sp.Matrix([foot_sw[1], vel_sw[1]]), False)],
        "energy": [("out", sp.Matrix([ke, pe]), False)],
    }


def emit_body(outputs, target):
    """CSE the output matrices and emit assignment lines.

    target: 'py' (2-D numpy indexing) or 'cy' (flat double* indexing).
    Symmetric matrices emit the upper triangle plus mirror assignments.
    """
    exprs, slots = [], []
    mirrors = []
    for name, mat, symmetric in outputs:
        rows, cols = mat.shape
        for i in range(rows):
            for j in range(cols):
                if symmetric and j < i:
                    mirrors.append((name, i, j, cols))
                    continue
                exprs.append(mat[i, j])
                slots.append((name, i, j, cols))

    temps, reduced = sp.cse(exprs, symbols=sp.numbered_symbols("e"), order="none")

    def idx(name, i, j, cols):
        if target == "py":
            return f"{name}[{i}, {j}]" if cols > 1 else f"{name}[{i}]"
        return f"{name}[{i * cols + j}]" if cols > 1 else f"{name}[{i}]"

    used = set()
    for expr in list(reduced) + [t[1] for t in temps]:
        used |= {s.name for s in expr.free_symbols}

    lines = []
    for k, names in (("q", Q_NAMES), ("dq", DQ_NAMES), ("p", P_NAMES)):
        for n, sym in enumerate(names):
            if sym in used:
                decl = "cdef double " if target == "cy" else ""
                lines.append(f"{decl}{sym} = {k}[{n}]")
    if target == "cy" and temps:
        tnames = [str(t[0]) for t in temps]
        for a in range(0, len(tnames), 16):
            lines.append("cdef double " + ", ".join(tnames[a:a + 16]))
    for tsym, texpr in temps:
        lines.append(f"{tsym} = {PRINTER.doprint(texpr)}")
    for (name, i, j, cols), expr in zip(slots, reduced):
        lines.append(f"{idx(name, i, j, cols)} = {PRINTER.doprint(expr)}")
    for name, i, j, cols in mirrors:
        lines.append(f"{idx(name, i, j, cols)} = {idx(name, j, i, cols)}")
    return lines


SIGS = {
    "dyn_full": ("q, dq, p", ["D", "C", "G", "Jst", "dJst", "Jsw", "dJsw"]),
    "dyn_core": ("q, dq, p", ["D", "h", "G", "Jst", "jdq_st", "Jsw", "jdq_sw"]),
    "fk": ("q, p", ["P"]),
    "guard": ("q, dq, p", ["out"]),
    "energy": ("q, dq, p", ["out"]),
}


def write_python(derived, path):
    parts = [
        '"""Auto-generated by tools/gen_dynamics.py -- do not edit."""\n',
        "from math import sin, cos\n\n",
    ]
    for fn in ("dyn_full", "dyn_core", "fk", "guard", "energy"):
        ins, outs = SIGS[fn]
        body = emit_body(derived[fn], "py")
        parts.append(f"def {fn}({ins}, {', '.join(outs)}):\n")
        parts.append("".join(f"    {ln}\n" for ln in body))
        parts.append("\n\n")
    with open(path, "w") as f:
        f.write("".join(parts).rstrip() + "\n")


def write_cython(derived, path):
    parts = [
        "# Auto-generated by tools/gen_dynamics.py -- do not edit.\n",
        "from libc.math cimport sin, cos\n\n",
    ]
    for fn in ("dyn_full", "dyn_core", "fk", "guard", "energy"):
        ins, outs = SIGS[fn]
        cins = ", ".join(f"const double* {n.strip()}" for n in ins.split(", "))
        couts = ", ".join(f"double* {n}" for n in outs)
        body = emit_body(derived[fn], "cy")
        parts.append(f"cdef void _{fn}({cins}, {couts}) noexcept nogil:\n")
        parts.append("".join(f"    {ln}\n" for ln in body))
        parts.append("\n\n")
    with open(path, "w") as f:
        f.write("".join(parts).rstrip() + "\n")


def verify(derived, py_path):
    """Check the emitted python module against sympy lambdify on random input."""
    import importlib.util

    spec = importlib.util.spec_from_file_location("_gen_py_check", py_path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)

    rng = np.random.default_rng(0)
    syms = [sp.Symbol(n) for n in Q_NAMES + DQ_NAMES + P_NAMES]
    for trial in range(3):
        qv = rng.normal(0, 1.0, 7)
        dqv = rng.normal(0, 2.0, 7)
        pv = np.abs(rng.normal(1.0, 0.3, 13)) + 0.1
        vals = list(qv) + list(dqv) + list(pv)
        for fn, outs in (("dyn_full", SIGS["dyn_full"][1]), ("dyn_core", SIGS["dyn_core"][1]),
                         ("fk", SIGS["fk"][1]), ("guard", SIGS["guard"][1]),
                         ("energy", SIGS["energy"][1])):
            shapes = [np.array(derived[fn][k][1]).shape for k in range(len(derived[fn]))]
            bufs = [np.zeros(s if s[1] > 1 else (s[0],)) for s in shapes]
            args = (qv, dqv, pv) if fn not in ("fk",) else (qv, pv)
            getattr(mod, fn)(*args, *bufs)
            for (name, mat, _), buf in zip(derived[fn], bufs):
                ref = np.array(sp.lambdify(syms, mat, "numpy")(*vals), dtype=float)
                got = buf.reshape(ref.shape)
                err = np.max(np.abs(ref - got))
                assert err < 1e-11, (fn, name, err)
    print("verify: generated python kernels match sympy reference")


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out_dir = os.path.join(root, "src", "hzdlab", "_kernels")
    derived = derive()
    py_path = os.path.join(out_dir, "_gen_py.py")
    write_python(derived, py_path)
    write_cython(derived, os.path.join(out_dir, "_generated.pxi"))
    verify(derived, py_path)
    print("wrote", py_path)
    print("wrote", os.path.join(out_dir, "_generated.pxi"))


if __name__ == "__main__":
    sys.exit(main())
