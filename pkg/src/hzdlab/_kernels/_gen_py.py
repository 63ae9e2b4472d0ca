"""Auto-generated by tools/gen_dynamics.py -- do not edit."""
from math import sin, cos

def dyn_full(q, dq, p, D, C, G, Jst, dJst, Jsw, dJsw):
    q1 = q[2]
    q2 = q[3]
    q3 = q[4]
    q4 = q[5]
    q5 = q[6]
    dq1 = dq[2]
    dq2 = dq[3]
    dq3 = dq[4]
    dq4 = dq[5]
    dq5 = dq[6]
    mT = p[0]
    mF = p[1]
    mS = p[2]
    lF = p[4]
    lS = p[5]
    cT = p[6]
    cF = p[7]
    cS = p[8]
    IT = p[9]
    IF = p[10]
    IS = p[11]
    grav = p[12]
    e0 = 2*mF
    e1 = 2*mS
    e2 = e0 + e1 + mT
    e3 = q1 + q5
    e4 = cos(e3)
    e5 = cF*mF
    e6 = e4*e5
    e7 = e3 + q3
    e8 = cos(e7)
    e9 = cS*mS
    e10 = e8*e9
    e11 = e4*lF
    e12 = e11*mS
    e13 = e10 + e12 + e6
    e14 = q2 + q5
    e15 = cos(e14)
    e16 = e15*e5
    e17 = e14 + q4
    e18 = cos(e17)
    e19 = e18*e9
    e20 = e15*lF
    e21 = e20*mS
    e22 = e16 + e19 + e21
    e23 = cos(q5)
    e24 = sin(e3)
    e25 = e24*e5
    e26 = sin(e7)
    e27 = cS*e26
    e28 = e27*mS
    e29 = e24*lF
    e30 = e29*mS
    e31 = e25 + e28 + e30
    e32 = sin(e14)
    e33 = e32*e5
    e34 = sin(e17)
    e35 = cS*e34
    e36 = e35*mS
    e37 = e32*lF
    e38 = e37*mS
    e39 = e33 + e36 + e38
    e40 = sin(q5)
    e41 = cT*mT
    e42 = e40*e41
    e43 = cS*cS*mS
    e44 = e26*e26*e43 + e43*e8*e8
    e45 = IS + e44
    e46 = e4*e4
    e47 = cF*cF*mF
    e48 = e24*e24
    e49 = lF*lF*mS
    e50 = cS*e1
    e51 = e1*e27*e29 + e11*e50*e8 + e46*e47 + e46*e49 + e47*e48 + e48*e49
    e52 = IF + e45 + e51
    e53 = e10*e11 + e28*e29 + e45
    e54 = e18*e18*e43 + e34*e34*e43
    e55 = IS + e54
    e56 = e15*e15
    e57 = e32*e32
    e58 = e1*e35*e37 + e18*e20*e50 + e47*e56 + e47*e57 + e49*e56 + e49*e57
    e59 = IF + e55 + e58
    e60 = e19*e20 + e36*e37 + e55
    e61 = cT*cT*mT
    e62 = dq1*e28 + dq3*e28 + dq5*e28
    e63 = dq1*e25 + dq1*e30 + dq5*e25 + dq5*e30 + e62
    e64 = dq2*e36 + dq4*e36 + dq5*e36
    e65 = dq2*e33 + dq2*e38 + dq5*e33 + dq5*e38 + e64
    e66 = dq1*e12
    e67 = dq5*e12
    e68 = dq1*e10
    e69 = dq3*e10
    e70 = dq5*e10
    e71 = e68 + e69 + e70
    e72 = dq1*e6 + dq5*e6 + e66 + e67 + e71
    e73 = dq2*e21
    e74 = dq5*e21
    e75 = dq2*e19
    e76 = dq4*e19
    e77 = dq5*e19
    e78 = e75 + e76 + e77
    e79 = dq2*e16 + dq5*e16 + e73 + e74 + e78
    e80 = -dq3*e12*e27 + e29*e69
    e81 = -e27*e66 - e27*e67 + e29*e68 + e29*e70
    e82 = e80 + e81
    e83 = -dq4*e21*e35 + e37*e76
    e84 = -e35*e73 - e35*e74 + e37*e75 + e37*e77
    e85 = e83 + e84
    e86 = -e81
    e87 = -e84
    e88 = grav*mT
    e89 = grav*mS
    e90 = e25*grav + e89*(e27 + e29)
    e91 = e33*grav + e89*(e35 + e37)
    e92 = e8*lS
    e93 = e11 + e92
    e94 = -e93
    e95 = e26*lS
    e96 = e29 + e95
    e97 = dq3*e95
    e98 = dq1*e96 + dq5*e96 + e97
    e99 = dq3*e92
    e100 = dq1*e93 + dq5*e93 + e99
    e101 = e18*lS
    e102 = e101 + e20
    e103 = -e102
    e104 = e34*lS
    e105 = e104 + e37
    e106 = dq4*e104
    e107 = dq2*e105 + dq5*e105 + e106
    e108 = dq4*e101
    e109 = dq2*e102 + dq5*e102 + e108
    D[0, 0] = e2
    D[0, 1] = 0
    D[0, 2] = -e13
    D[0, 3] = -e22
    D[0, 4] = -e10
    D[0, 5] = -e19
    D[0, 6] = cT*e23*mT - e13 - e22
    D[1, 1] = e2
    D[1, 2] = e31
    D[1, 3] = e39
    D[1, 4] = e28
    D[1, 5] = e36
    D[1, 6] = e31 + e39 - e42
    D[2, 2] = e52
    D[2, 3] = 0
    D[2, 4] = e53
    D[2, 5] = 0
    D[2, 6] = e52
    D[3, 3] = e59
    D[3, 4] = 0
    D[3, 5] = e60
    D[3, 6] = e59
    D[4, 4] = e45
    D[4, 5] = 0
    D[4, 6] = e53
    D[5, 5] = e55
    D[5, 6] = e60
    D[6, 6] = 2*IF + 2*IS + IT + e23*e23*e61 + e40*e40*e61 + e44 + e51 + e54 + e58
    C[0, 0] = 0
    C[0, 1] = 0
    C[0, 2] = e63
    C[0, 3] = e65
    C[0, 4] = e62
    C[0, 5] = e64
    C[0, 6] = -dq5*e42 + e63 + e65
    C[1, 0] = 0
    C[1, 1] = 0
    C[1, 2] = e72
    C[1, 3] = e79
    C[1, 4] = e71
    C[1, 5] = e78
    C[1, 6] = -dq5*e23*e41 + e72 + e79
    C[2, 0] = 0
    C[2, 1] = 0
    C[2, 2] = e80
    C[2, 3] = 0
    C[2, 4] = e82
    C[2, 5] = 0
    C[2, 6] = e80
    C[3, 0] = 0
    C[3, 1] = 0
    C[3, 2] = 0
    C[3, 3] = e83
    C[3, 4] = 0
    C[3, 5] = e85
    C[3, 6] = e83
    C[4, 0] = 0
    C[4, 1] = 0
    C[4, 2] = e86
    C[4, 3] = 0
    C[4, 4] = 0
    C[4, 5] = 0
    C[4, 6] = e86
    C[5, 0] = 0
    C[5, 1] = 0
    C[5, 2] = 0
    C[5, 3] = e87
    C[5, 4] = 0
    C[5, 5] = 0
    C[5, 6] = e87
    C[6, 0] = 0
    C[6, 1] = 0
    C[6, 2] = e80
    C[6, 3] = e83
    C[6, 4] = e82
    C[6, 5] = e85
    C[6, 6] = e80 + e83
    G[0] = 0
    G[1] = e0*grav + e1*grav + e88
    G[2] = e90
    G[3] = e91
    G[4] = e28*grav
    G[5] = e36*grav
    G[6] = -cT*e40*e88 + e90 + e91
    Jst[0, 0] = 1
    Jst[0, 1] = 0
    Jst[0, 2] = e94
    Jst[0, 3] = 0
    Jst[0, 4] = -e92
    Jst[0, 5] = 0
    Jst[0, 6] = e94
    Jst[1, 0] = 0
    Jst[1, 1] = 1
    Jst[1, 2] = e96
    Jst[1, 3] = 0
    Jst[1, 4] = e95
    Jst[1, 5] = 0
    Jst[1, 6] = e96
    dJst[0, 0] = 0
    dJst[0, 1] = 0
    dJst[0, 2] = e98
    dJst[0, 3] = 0
    dJst[0, 4] = dq1*e95 + dq5*e95 + e97
    dJst[0, 5] = 0
    dJst[0, 6] = e98
    dJst[1, 0] = 0
    dJst[1, 1] = 0
    dJst[1, 2] = e100
    dJst[1, 3] = 0
    dJst[1, 4] = dq1*e92 + dq5*e92 + e99
    dJst[1, 5] = 0
    dJst[1, 6] = e100
    Jsw[0, 0] = 1
    Jsw[0, 1] = 0
    Jsw[0, 2] = 0
    Jsw[0, 3] = e103
    Jsw[0, 4] = 0
    Jsw[0, 5] = -e101
    Jsw[0, 6] = e103
    Jsw[1, 0] = 0
    Jsw[1, 1] = 1
    Jsw[1, 2] = 0
    Jsw[1, 3] = e105
    Jsw[1, 4] = 0
    Jsw[1, 5] = e104
    Jsw[1, 6] = e105
    dJsw[0, 0] = 0
    dJsw[0, 1] = 0
    dJsw[0, 2] = 0
    dJsw[0, 3] = e107
    dJsw[0, 4] = 0
    dJsw[0, 5] = dq2*e104 + dq5*e104 + e106
    dJsw[0, 6] = e107
    dJsw[1, 0] = 0
    dJsw[1, 1] = 0
    dJsw[1, 2] = 0
    dJsw[1, 3] = e109
    dJsw[1, 4] = 0
    dJsw[1, 5] = dq2*e101 + dq5*e101 + e108
    dJsw[1, 6] = e109
    D[1, 0] = D[0, 1]
    D[2, 0] = D[0, 2]
    D[2, 1] = D[1, 2]
    D[3, 0] = D[0, 3]
    D[3, 1] = D[1, 3]
    D[3, 2] = D[2, 3]
    D[4, 0] = D[0, 4]
    D[4, 1] = D[1, 4]
    D[4, 2] = D[2, 4]
    D[4, 3] = D[3, 4]
    D[5, 0] = D[0, 5]
    D[5, 1] = D[1, 5]
    D[5, 2] = D[2, 5]
    D[5, 3] = D[3, 5]
    D[5, 4] = D[4, 5]
    D[6, 0] = D[0, 6]
    D[6, 1] = D[1, 6]
    D[6, 2] = D[2, 6]
    D[6, 3] = D[3, 6]
    D[6, 4] = D[4, 6]
    D[6, 5] = D[5, 6]


def dyn_core(q, dq, p, D, h, G, Jst, jdq_st, Jsw, jdq_sw):
    q1 = q[2]
    q2 = q[3]
    q3 = q[4]
    q4 = q[5]
    q5 = q[6]
    dq1 = dq[2]
    dq2 = dq[3]
    dq3 = dq[4]
    dq4 = dq[5]
    dq5 = dq[6]
    mT = p[0]
    mF = p[1]
    mS = p[2]
    lF = p[4]
    lS = p[5]
    cT = p[6]
    cF = p[7]
    cS = p[8]
    IT = p[9]
    IF = p[10]
    IS = p[11]
    grav = p[12]
    e0 = 2*mF
    e1 = 2*mS
    e2 = e0 + e1 + mT
    e3 = q1 + q5
    e4 = cos(e3)
    e5 = cF*mF
    e6 = e4*e5
    e7 = e3 + q3
    e8 = cos(e7)
    e9 = cS*mS
    e10 = e8*e9
    e11 = e4*lF
    e12 = e11*mS
    e13 = e10 + e12 + e6
    e14 = q2 + q5
    e15 = cos(e14)
    e16 = e15*e5
    e17 = e14 + q4
    e18 = cos(e17)
    e19 = e18*e9
    e20 = e15*lF
    e21 = e20*mS
    e22 = e16 + e19 + e21
    e23 = cos(q5)
    e24 = sin(e3)
    e25 = e24*e5
    e26 = sin(e7)
    e27 = cS*e26
    e28 = e27*mS
    e29 = e24*lF
    e30 = e29*mS
    e31 = e25 + e28 + e30
    e32 = sin(e14)
    e33 = e32*e5
    e34 = sin(e17)
    e35 = cS*e34
    e36 = e35*mS
    e37 = e32*lF
    e38 = e37*mS
    e39 = e33 + e36 + e38
    e40 = sin(q5)
    e41 = cT*mT
    e42 = e40*e41
    e43 = cS*cS*mS
    e44 = e26*e26*e43 + e43*e8*e8
    e45 = IS + e44
    e46 = e4*e4
    e47 = cF*cF*mF
    e48 = e24*e24
    e49 = lF*lF*mS
    e50 = cS*e1
    e51 = e50*e8
    e52 = e1*e27
    e53 = e11*e51 + e29*e52 + e46*e47 + e46*e49 + e47*e48 + e48*e49
    e54 = IF + e45 + e53
    e55 = e10*e11 + e28*e29 + e45
    e56 = e18*e18*e43 + e34*e34*e43
    e57 = IS + e56
    e58 = e15*e15
    e59 = e32*e32
    e60 = e18*e50
    e61 = e1*e35
    e62 = e20*e60 + e37*e61 + e47*e58 + e47*e59 + e49*e58 + e49*e59
    e63 = IF + e57 + e62
    e64 = e19*e20 + e36*e37 + e57
    e65 = cT*cT*mT
    e66 = dq1*dq1
    e67 = dq2*dq2
    e68 = dq5*dq5
    e69 = dq3*dq3
    e70 = dq4*dq4
    e71 = dq1*dq5
    e72 = cF*e0
    e73 = e71*e72
    e74 = dq2*dq5
    e75 = e72*e74
    e76 = dq3*e52
    e77 = dq1*e76
    e78 = dq4*e61
    e79 = dq2*e78
    e80 = dq5*e76
    e81 = dq5*e78
    e82 = e1*e71
    e83 = e1*e74
    e84 = e10*e69
    e85 = e19*e70
    e86 = dq3*e51
    e87 = dq1*e86
    e88 = e51*e71
    e89 = dq4*e60
    e90 = dq2*e89
    e91 = e60*e74
    e92 = dq5*e86
    e93 = dq5*e89
    e94 = -e11*e77 - e11*e80 - e12*e27*e69 + e29*e84 + e29*e87 + e29*e92
    e95 = -e20*e79 - e20*e81 - e21*e35*e70 + e37*e85 + e37*e90 + e37*e93
    e96 = e29*e66
    e97 = e29*e68
    e98 = e37*e67
    e99 = e37*e68
    e100 = grav*mT
    e101 = grav*mS
    e102 = e101*(e27 + e29) + e25*grav
    e103 = e101*(e35 + e37) + e33*grav
    e104 = e8*lS
    e105 = -e104 - e11
    e106 = e26*lS
    e107 = e106 + e29
    e108 = 2*dq1
    e109 = e106*e108
    e110 = dq5*e108
    e111 = 2*dq5
    e112 = dq3*e111
    e113 = e18*lS
    e114 = -e113 - e20
    e115 = e34*lS
    e116 = e115 + e37
    e117 = dq2*e115
    e118 = 2*dq4
    e119 = dq2*e111
    e120 = dq4*e111
    D[0, 0] = e2
    D[0, 1] = 0
    D[0, 2] = -e13
    D[0, 3] = -e22
    D[0, 4] = -e10
    D[0, 5] = -e19
    D[0, 6] = cT*e23*mT - e13 - e22
    D[1, 1] = e2
    D[1, 2] = e31
    D[1, 3] = e39
    D[1, 4] = e28
    D[1, 5] = e36
    D[1, 6] = e31 + e39 - e42
    D[2, 2] = e54
    D[2, 3] = 0
    D[2, 4] = e55
    D[2, 5] = 0
    D[2, 6] = e54
    D[3, 3] = e63
    D[3, 4] = 0
    D[3, 5] = e64
    D[3, 6] = e63
    D[4, 4] = e45
    D[4, 5] = 0
    D[4, 6] = e55
    D[5, 5] = e57
    D[5, 6] = e64
    D[6, 6] = 2*IF + 2*IS + IT + e23*e23*e65 + e40*e40*e65 + e44 + e53 + e56 + e62
    h[0] = e24*e73 + e25*e66 + e25*e68 + e28*e66 + e28*e68 + e28*e69 + e29*e82 + e30*e66 + e30*e68 + e32*e75 + e33*e67 + e33*e68 + e36*e67 + e36*e68 + e36*e70 + e37*e83 + e38*e67 + e38*e68 - e42*e68 + e52*e71 + e61*e74 + e77 + e79 + e80 + e81
    h[1] = e10*e66 + e10*e68 + e11*e82 + e12*e66 + e12*e68 + e15*e75 + e16*e67 + e16*e68 + e19*e67 + e19*e68 + e20*e83 + e21*e67 + e21*e68 - e23*e41*e68 + e4*e73 + e6*e66 + e6*e68 + e84 + e85 + e87 + e88 + e90 + e91 + e92 + e93
    h[2] = e94
    h[3] = e95
    h[4] = 2*cS*dq1*dq5*e26*e4*lF*mS + cS*e26*e4*e66*lF*mS + cS*e26*e4*e68*lF*mS - e10*e96 - e10*e97 - e29*e88
    h[5] = 2*cS*dq2*dq5*e15*e34*lF*mS + cS*e15*e34*e67*lF*mS + cS*e15*e34*e68*lF*mS - e19*e98 - e19*e99 - e37*e91
    h[6] = e94 + e95
    G[0] = 0
    G[1] = e0*grav + e1*grav + e100
    G[2] = e102
    G[3] = e103
    G[4] = e28*grav
    G[5] = e36*grav
    G[6] = -cT*e100*e40 + e102 + e103
    Jst[0, 0] = 1
    Jst[0, 1] = 0
    Jst[0, 2] = e105
    Jst[0, 3] = 0
    Jst[0, 4] = -e104
    Jst[0, 5] = 0
    Jst[0, 6] = e105
    Jst[1, 0] = 0
    Jst[1, 1] = 1
    Jst[1, 2] = e107
    Jst[1, 3] = 0
    Jst[1, 4] = e106
    Jst[1, 5] = 0
    Jst[1, 6] = e107
    jdq_st[0] = dq3*e109 + dq5*e109 + e106*e112 + e106*e66 + e106*e68 + e106*e69 + e110*e29 + e96 + e97
    jdq_st[1] = dq3*e104*e108 + e104*e110 + e104*e112 + e104*e66 + e104*e68 + e104*e69 + e11*e110 + e11*e66 + e11*e68
    Jsw[0, 0] = 1
    Jsw[0, 1] = 0
    Jsw[0, 2] = 0
    Jsw[0, 3] = e114
    Jsw[0, 4] = 0
    Jsw[0, 5] = -e113
    Jsw[0, 6] = e114
    Jsw[1, 0] = 0
    Jsw[1, 1] = 1
    Jsw[1, 2] = 0
    Jsw[1, 3] = e116
    Jsw[1, 4] = 0
    Jsw[1, 5] = e115
    Jsw[1, 6] = e116
    jdq_sw[0] = e111*e117 + e115*e120 + e115*e67 + e115*e68 + e115*e70 + e117*e118 + e119*e37 + e98 + e99
    jdq_sw[1] = dq2*e113*e118 + e113*e119 + e113*e120 + e113*e67 + e113*e68 + e113*e70 + e119*e20 + e20*e67 + e20*e68
    D[1, 0] = D[0, 1]
    D[2, 0] = D[0, 2]
    D[2, 1] = D[1, 2]
    D[3, 0] = D[0, 3]
    D[3, 1] = D[1, 3]
    D[3, 2] = D[2, 3]
    D[4, 0] = D[0, 4]
    D[4, 1] = D[1, 4]
    D[4, 2] = D[2, 4]
    D[4, 3] = D[3, 4]
    D[5, 0] = D[0, 5]
    D[5, 1] = D[1, 5]
    D[5, 2] = D[2, 5]
    D[5, 3] = D[3, 5]
    D[5, 4] = D[4, 5]
    D[6, 0] = D[0, 6]
    D[6, 1] = D[1, 6]
    D[6, 2] = D[2, 6]
    D[6, 3] = D[3, 6]
    D[6, 4] = D[4, 6]
    D[6, 5] = D[5, 6]


def fk(q, p, P):
    qx = q[0]
    qy = q[1]
    q1 = q[2]
    q2 = q[3]
    q3 = q[4]
    q4 = q[5]
    q5 = q[6]
    mT = p[0]
    mF = p[1]
    mS = p[2]
    lT = p[3]
    lF = p[4]
    lS = p[5]
    cT = p[6]
    cF = p[7]
    cS = p[8]
    e0 = sin(q5)
    e1 = cos(q5)
    e2 = -qx
    e3 = q1 + q5
    e4 = sin(e3)
    e5 = e2 + e4*lF
    e6 = -qy
    e7 = cos(e3)
    e8 = e6 + e7*lF
    e9 = e3 + q3
    e10 = sin(e9)
    e11 = cos(e9)
    e12 = q2 + q5
    e13 = sin(e12)
    e14 = e13*lF + e2
    e15 = cos(e12)
    e16 = e15*lF + e6
    e17 = e12 + q4
    e18 = sin(e17)
    e19 = cos(e17)
    e20 = 1.0/(2*mF + 2*mS + mT)
    P[0, 0] = qx
    P[0, 1] = qy
    P[1, 0] = e0*lT + qx
    P[1, 1] = e1*lT + qy
    P[2, 0] = -e5
    P[2, 1] = -e8
    P[3, 0] = -e10*lS - e5
    P[3, 1] = -e11*lS - e8
    P[4, 0] = -e14
    P[4, 1] = -e16
    P[5, 0] = -e14 - e18*lS
    P[5, 1] = -e16 - e19*lS
    P[6, 0] = e20*(mF*(-cF*e13 - e2) + mF*(-cF*e4 - e2) + mS*(-cS*e10 - e5) + mS*(-cS*e18 - e14) + mT*(cT*e0 + qx))
    P[6, 1] = e20*(mF*(-cF*e15 - e6) + mF*(-cF*e7 - e6) + mS*(-cS*e11 - e8) + mS*(-cS*e19 - e16) + mT*(cT*e1 + qy))


def guard(q, dq, p, out):
    qy = q[1]
    q2 = q[3]
    q4 = q[5]
    q5 = q[6]
    dqy = dq[1]
    dq2 = dq[3]
    dq4 = dq[5]
    dq5 = dq[6]
    lF = p[4]
    lS = p[5]
    e0 = q2 + q5
    e1 = e0 + q4
    e2 = lS*sin(e1)
    e3 = e2 + lF*sin(e0)
    out[0] = -lF*cos(e0) - lS*cos(e1) + qy
    out[1] = dq2*e3 + dq4*e2 + dq5*e3 + dqy


def energy(q, dq, p, out):
    qy = q[1]
    q1 = q[2]
    q2 = q[3]
    q3 = q[4]
    q4 = q[5]
    q5 = q[6]
    dqx = dq[0]
    dqy = dq[1]
    dq1 = dq[2]
    dq2 = dq[3]
    dq3 = dq[4]
    dq4 = dq[5]
    dq5 = dq[6]
    mT = p[0]
    mF = p[1]
    mS = p[2]
    lF = p[4]
    cT = p[6]
    cF = p[7]
    cS = p[8]
    IT = p[9]
    IF = p[10]
    IS = p[11]
    grav = p[12]
    e0 = dq5*dq5
    e1 = dqx*dqx
    e2 = dqy*dqy
    e3 = dq1*dq1
    e4 = IF/2
    e5 = dq2*dq2
    e6 = IS/2
    e7 = dq3*dq3
    e8 = dq4*dq4
    e9 = e0/2
    e10 = mT/2
    e11 = IF*dq5
    e12 = IS*dq1
    e13 = IS*dq2
    e14 = IS*dq5
    e15 = e3/2
    e16 = q1 + q5
    e17 = cos(e16)
    e18 = e17*e17
    e19 = cF*cF*mF
    e20 = e18*e19
    e21 = sin(e16)
    e22 = e21*e21
    e23 = e19*e22
    e24 = q2 + q5
    e25 = cos(e24)
    e26 = e25*e25
    e27 = e19*e26
    e28 = e5/2
    e29 = sin(e24)
    e30 = e29*e29
    e31 = e19*e30
    e32 = e16 + q3
    e33 = cos(e32)
    e34 = e33*e33
    e35 = cS*cS*mS
    e36 = e15*e35
    e37 = sin(e32)
    e38 = e37*e37
    e39 = e24 + q4
    e40 = cos(e39)
    e41 = e40*e40
    e42 = e28*e35
    e43 = sin(e39)
    e44 = e43*e43
    e45 = e35/2
    e46 = e45*e7
    e47 = e45*e8
    e48 = e35*e9
    e49 = lF*lF*mS
    e50 = e15*e49
    e51 = e28*e49
    e52 = e49*e9
    e53 = cos(q5)
    e54 = cT*cT*e9*mT
    e55 = sin(q5)
    e56 = cF*mF
    e57 = dq1*dqy
    e58 = e21*e57
    e59 = dqy*e56
    e60 = dq2*e29
    e61 = dq5*e59
    e62 = cS*mS
    e63 = e37*e62
    e64 = e43*e62
    e65 = dqy*e64
    e66 = dqy*e63
    e67 = cT*e53
    e68 = dq5*dqx
    e69 = dq1*e35
    e70 = dq3*e69
    e71 = dq1*dq5
    e72 = dq5*e69
    e73 = e49*e71
    e74 = lF*mS
    e75 = dq2*e35
    e76 = dq4*e75
    e77 = dq2*dq5
    e78 = dq5*e75
    e79 = e49*e77
    e80 = dqy*e74
    e81 = dq5*e35
    e82 = dq3*e81
    e83 = dq4*e81
    e84 = dq5*e80
    e85 = cF*e17
    e86 = dqx*mF
    e87 = cF*e25
    e88 = e68*mF
    e89 = cS*e33
    e90 = dqx*mS
    e91 = e89*e90
    e92 = cS*e40
    e93 = e90*e92
    e94 = e68*mS
    e95 = e17*lF
    e96 = dq1*e95
    e97 = e25*lF
    e98 = dq2*e97
    e99 = e89*mS
    e100 = e95*e99
    e101 = e21*e63*lF
    e102 = e92*mS
    e103 = e102*e97
    e104 = e64*lF
    e105 = e104*e29
    e106 = dq3*e101
    e107 = e104*e60
    e108 = dq4*dq5
    e109 = 2*e71
    e110 = -qy
    e111 = grav*mF
    e112 = grav*mS
    out[0] = IF*e0 + IS*e0 + IT*e9 - cT*dq5*dqy*e55*mT + dq1*e106 + dq1*e11 - dq1*e85*e86 - dq1*e91 + dq2*e11 + dq2*e65 - dq2*e86*e87 - dq2*e93 + dq3*dq5*e100 + dq3*e12 + dq3*e14 + dq3*e66 - dq3*e91 + dq3*e96*e99 + dq4*e102*e98 + dq4*e107 + dq4*e13 + dq4*e14 + dq4*e65 - dq4*e93 + dq5*e106 + 2*dq5*e107 + dq5*e12 + dq5*e13 + dq5*e65 + dq5*e66 + e0*e100 + e0*e101 + e0*e103 + e0*e105 + e1*e10 + e1*mF + e1*mS + e10*e2 + e100*e109 + e100*e3 + e101*e109 + e101*e3 + e103*e108 + e103*e5 + 2*e103*e77 + e105*e108 + e105*e5 + e15*e20 + e15*e23 + e18*e50 + e18*e52 + e18*e73 + e2*mF + e2*mS + e20*e71 + e20*e9 + e21*e61 + e21*e84 + e22*e50 + e22*e52 + e22*e73 + e23*e71 + e23*e9 + e26*e51 + e26*e52 + e26*e79 + e27*e28 + e27*e77 + e27*e9 + e28*e31 + e29*e61 + e29*e84 + e3*e4 + e3*e6 + e30*e51 + e30*e52 + e30*e79 + e31*e77 + e31*e9 + e34*e36 + e34*e46 + e34*e48 + e34*e70 + e34*e72 + e34*e82 + e36*e38 + e38*e46 + e38*e48 + e38*e70 + e38*e72 + e38*e82 + e4*e5 + e41*e42 + e41*e47 + e41*e48 + e41*e76 + e41*e78 + e41*e83 + e42*e44 + e44*e47 + e44*e48 + e44*e76 + e44*e78 + e44*e83 + e5*e6 + e53*e53*e54 + e54*e55*e55 + e56*e58 + e57*e63 + e58*e74 + e59*e60 + e6*e7 + e6*e8 + e60*e80 + e67*e68*mT - e85*e88 - e87*e88 - e89*e94 - e90*e96 - e90*e98 - e92*e94 - e94*e95 - e94*e97
    out[1] = e111*(-e110 - e85) + e111*(-e110 - e87) + e112*(-e110 - e89 - e95) + e112*(-e110 - e92 - e97) + grav*mT*(e67 + qy)
