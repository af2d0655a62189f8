"""Yetter-Drinfeld modules of both kinds, conversion, braiding, and the
right adjoint R of the forgetful functor.

A coaction is stored as a (d*n) x n matrix over the (H leg, module leg)
layout h*n + v.  The first kind satisfies the three Drinfeld-center style
axioms; the second kind the three axioms driven by the five-leg associator
element; conversion between the two is through p_R / q_R and roundtrips
exactly.
"""

from __future__ import annotations

from .algebra import AlgebraError, CheckEntry, QuasiHopfAlgebra
from .linalg import Matrix
from .modules import HModule, tensor_module
from .tensor import TensorElt, apply_leg, fuse_legs, weave_mul


class YDModule:
    def __init__(self, module: HModule, coact: Matrix, kind: str, name: str = ""):
        if kind not in ("first", "second"):
            raise ValueError("kind must be 'first' or 'second'")
        A = module.alg
        if coact.rows != A.dim * module.n or coact.cols != module.n:
            raise AlgebraError("coaction matrix has wrong shape")
        self.alg = A
        self.module = module
        self.coact = coact
        self.kind = kind
        self.name = name or module.name

    @property
    def n(self):
        return self.module.n

    def coact_terms(self, v: int):
        """Nonzero (h index, module index, coeff) of the coaction of basis v."""
        n = self.n
        col = self.coact.column(v)
        for pos, c in enumerate(col):
            if c:
                yield pos // n, pos % n, c

    def __repr__(self):
        return "YDModule(%s, kind=%s, n=%d)" % (self.name, self.kind, self.n)


def _counit_axiom(m: YDModule) -> bool:
    A = m.alg
    n = m.n
    for v in range(n):
        acc = [A.field.zero] * n
        for k, w, c in m.coact_terms(v):
            ek = A.counit[k]
            if ek:
                acc[w] = acc[w] + c * ek
        if acc != [A.field.one if i == v else A.field.zero for i in range(n)]:
            return False
    return True


def _first_kind_compat(m: YDModule) -> bool:
    # h_(1) v_(-1) (x) h_(2) v_(0) = (h_(1) v)_(-1) h_(2) (x) (h_(1) v)_(0)
    A, V = m.alg, m.module
    n = m.n
    for h in range(A.dim):
        for v in range(n):
            lhs = {}
            rhs = {}
            for (h1, h2), c in A.d2(h):
                for k, w, ck in m.coact_terms(v):
                    hv = A.vmul(A.e(h1), A.e(k))
                    wv = V.mats[h2].column(w)
                    for i, ci in enumerate(hv):
                        if not ci:
                            continue
                        for mm, cm in enumerate(wv):
                            if cm:
                                key = (i, mm)
                                lhs[key] = lhs.get(key, A.field.zero) + c * ck * ci * cm
                av = V.mats[h1].column(v)
                for a, ca in enumerate(av):
                    if not ca:
                        continue
                    for k, w, ck in m.coact_terms(a):
                        hv = A.vmul(A.e(k), A.e(h2))
                        for i, ci in enumerate(hv):
                            if ci:
                                key = (i, w)
                                rhs[key] = rhs.get(key, A.field.zero) + c * ca * ck * ci
            if {k: v2 for k, v2 in lhs.items() if v2} != {k: v2 for k, v2 in rhs.items() if v2}:
                return False
    return True


def _first_kind_coassoc(m: YDModule) -> bool:
    # phi_1 v_(-1) (x) (phi_2 v_(0))_(-1) phi_3 (x) (phi_2 v_(0))_(0)
    #   = phi'_1 (phi_1 v)_(-1)(1) phi_2 (x) phi'_2 (phi_1 v)_(-1)(2) phi_3
    #     (x) phi'_3 (phi_1 v)_(0)
    A, V = m.alg, m.module
    n = m.n
    d = A.dim
    for v in range(n):
        lhs = {}
        for (x, y, z), c in A.phi.terms():
            for k, w, ck in m.coact_terms(v):
                yv = V.mats[y].column(w)
                for a, ca in enumerate(yv):
                    if not ca:
                        continue
                    for k2, w2, ck2 in m.coact_terms(a):
                        h1 = A.vmul(A.e(x), A.e(k))
                        h2 = A.vmul(A.e(k2), A.e(z))
                        coeff = c * ck * ca * ck2
                        for i, ci in enumerate(h1):
                            if not ci:
                                continue
                            for j, cj in enumerate(h2):
                                if cj:
                                    key = (i * d + j, w2)
                                    lhs[key] = lhs.get(key, A.field.zero) + coeff * ci * cj
        rhs = {}
        for (xp, yp, zp), cp in A.phi.terms():
            for (x, y, z), c in A.phi.terms():
                xv = V.mats[x].column(v)
                for a, ca in enumerate(xv):
                    if not ca:
                        continue
                    for k, w, ck in m.coact_terms(a):
                        for (k1, k2), cd in A.d2(k):
                            h1 = A.vmul(A.e(xp), A.e(k1), A.e(y))
                            h2 = A.vmul(A.e(yp), A.e(k2), A.e(z))
                            wv = V.mats[zp].column(w)
                            coeff = cp * c * ca * ck * cd
                            for i, ci in enumerate(h1):
                                if not ci:
                                    continue
                                ci2 = coeff * ci
                                for j, cj in enumerate(h2):
                                    if not cj:
                                        continue
                                    for mm, cm in enumerate(wv):
                                        if cm:
                                            key = (i * d + j, mm)
                                            rhs[key] = rhs.get(key, A.field.zero) + ci2 * cj * cm
        if {k: v2 for k, v2 in lhs.items() if v2} != {k: v2 for k, v2 in rhs.items() if v2}:
            return False
    return True


def _second_kind_compat(m: YDModule) -> bool:
    # delta(h v) = h_(1,1) v_(-1) S(h_(2)) (x) h_(1,2) v_(0)
    A, V = m.alg, m.module
    n = m.n
    for h in range(A.dim):
        for v in range(n):
            lhs = {}
            hv = V.act_vec(A.e(h), [A.field.one if i == v else A.field.zero
                                    for i in range(n)])
            for a, ca in enumerate(hv):
                if not ca:
                    continue
                for k, w, ck in m.coact_terms(a):
                    key = (k, w)
                    lhs[key] = lhs.get(key, A.field.zero) + ca * ck
            rhs = {}
            for (x, y, z), c in A.d3l(h):
                for k, w, ck in m.coact_terms(v):
                    hvv = A.vmul(A.e(x), A.e(k), A.Se(z))
                    wv = V.mats[y].column(w)
                    for i, ci in enumerate(hvv):
                        if not ci:
                            continue
                        for mm, cm in enumerate(wv):
                            if cm:
                                key = (i, mm)
                                rhs[key] = rhs.get(key, A.field.zero) + c * ck * ci * cm
            if {k: v2 for k, v2 in lhs.items() if v2} != {k: v2 for k, v2 in rhs.items() if v2}:
                return False
    return True


def _second_kind_coassoc(m: YDModule) -> bool:
    # v_(-1) (x) v_(0)(-1) (x) v_(0)(0)
    #   = omega_1 (v_(-1))_(1) omega_5 (x) omega_2 (v_(-1))_(2) omega_4
    #     (x) omega_3 v_(0)
    A, V = m.alg, m.module
    D = A.derived()
    n = m.n
    d = A.dim
    for v in range(n):
        lhs = {}
        for k, w, c in m.coact_terms(v):
            for k2, w2, c2 in m.coact_terms(w):
                key = (k * d + k2, w2)
                lhs[key] = lhs.get(key, A.field.zero) + c * c2
        rhs = {}
        for (o1, o2, o3, o4, o5), c in D.omega.terms():
            for k, w, ck in m.coact_terms(v):
                for (k1, k2), cd in A.d2(k):
                    h1 = A.vmul(A.e(o1), A.e(k1), A.e(o5))
                    h2 = A.vmul(A.e(o2), A.e(k2), A.e(o4))
                    wv = V.mats[o3].column(w)
                    coeff = c * ck * cd
                    for i, ci in enumerate(h1):
                        if not ci:
                            continue
                        ci2 = coeff * ci
                        for j, cj in enumerate(h2):
                            if not cj:
                                continue
                            for mm, cm in enumerate(wv):
                                if cm:
                                    key = (i * d + j, mm)
                                    rhs[key] = rhs.get(key, A.field.zero) + ci2 * cj * cm
        if {k: v2 for k, v2 in lhs.items() if v2} != {k: v2 for k, v2 in rhs.items() if v2}:
            return False
    return True


def yd_verify(m: YDModule) -> list:
    """The three axioms of m's declared kind."""
    if m.kind == "first":
        return [CheckEntry("YD-1-1", _first_kind_coassoc(m), "coassociativity fails"),
                CheckEntry("YD-1-2", _counit_axiom(m), "counit axiom fails"),
                CheckEntry("YD-1-3", _first_kind_compat(m), "action compatibility fails")]
    return [CheckEntry("YD-2-1", _second_kind_coassoc(m), "coassociativity fails"),
            CheckEntry("YD-2-2", _counit_axiom(m), "counit axiom fails"),
            CheckEntry("YD-2-3", _second_kind_compat(m), "action compatibility fails")]


def yd_convert(m: YDModule) -> YDModule:
    """Switch between the two coaction presentations."""
    A, V = m.alg, m.module
    D = A.derived()
    n = m.n
    out = Matrix(A.field, A.dim * n, n)
    if m.kind == "first":
        # delta2(v) = (pR_1 v)_(-1) pR_2 (x) (pR_1 v)_(0)
        for (i, j), c in D.pR.terms():
            block = A.rmul_mat(A.e(j)).kron(Matrix.identity(A.field, n))
            out = out + (block * m.coact * V.mats[i]).scaled(c)
        return YDModule(V, out, "second", m.name)
    # delta1(v) = qR_1(1) v_(-1) S(qR_2) (x) qR_1(2) v_(0)
    for (i, j), c in D.qR.terms():
        for (a, b), cd in A.d2(i):
            block = (A.lmul_mat(A.e(a)) * A.rmul_mat(A.Se(j))).kron(V.mats[b])
            out = out + (block * m.coact).scaled(c * cd)
    return YDModule(V, out, "first", m.name)


def trivial_yd(A: QuasiHopfAlgebra, kind: str = "first") -> YDModule:
    from .modules import trivial_module
    V = trivial_module(A)
    coact = Matrix(A.field, A.dim, 1)
    for i, c in enumerate(A.unit):
        coact.a[i][0] = c
    m = YDModule(V, coact, "first", "1")
    return m if kind == "first" else yd_convert(m)


def braiding(m: YDModule, X: HModule) -> Matrix:
    """sigma_{V,X}(v (x) x) = v_(-1) x (x) v_(0), first kind only."""
    if m.kind != "first":
        raise AlgebraError("the braiding is defined through the first kind")
    A = m.alg
    nV, nX = m.n, X.n
    out = Matrix(A.field, nX * nV, nV * nX)
    for v in range(nV):
        for k, w, c in m.coact_terms(v):
            kx = X.mats[k]
            for x in range(nX):
                for xp in range(nX):
                    cm = kx.a[xp][x]
                    if cm:
                        out.a[xp * nV + w][v * nX + x] = \
                            out.a[xp * nV + w][v * nX + x] + c * cm
    return out


def braiding_is_linear(m: YDModule, X: HModule) -> bool:
    A = m.alg
    sig = braiding(m, X)
    vx = tensor_module(m.module, X)
    xv = tensor_module(X, m.module)
    return all(sig * vx.mats[i] == xv.mats[i] * sig for i in range(A.dim))


# -- the right adjoint R -----------------------------------------------------


def r_functor(A: QuasiHopfAlgebra, V: HModule) -> YDModule:
    """R(V) = H (x) V with the twisted-conjugation action and the free
    second-kind coaction from the five-leg associator element."""
    D = A.derived()
    d, nV = A.dim, V.n
    n = d * nV
    mats = []
    for h in range(d):
        m = Matrix(A.field, n, n)
        for (x, y, z), c in A.d3l(h):
            blk = (A.lmul_mat(A.e(x)) * A.rmul_mat(A.Se(z))).kron(V.mats[y])
            m = m + blk.scaled(c)
        mats.append(m)
    mod = HModule(A, mats, check=False, name="R(%s)" % V.name)
    coact = Matrix(A.field, d * n, n)
    for a in range(d):
        for (a1, a2), cd in A.d2(a):
            for (o1, o2, o3, o4, o5), c in D.omega.terms():
                h1 = A.vmul(A.e(o1), A.e(a1), A.e(o5))
                h2 = A.vmul(A.e(o2), A.e(a2), A.e(o4))
                coeff = cd * c
                for i, ci in enumerate(h1):
                    if not ci:
                        continue
                    ci2 = coeff * ci
                    for j, cj in enumerate(h2):
                        if not cj:
                            continue
                        cij = ci2 * cj
                        for v in range(nV):
                            col = V.mats[o3].column(v)
                            for w, cw in enumerate(col):
                                if cw:
                                    r = i * n + (j * nV + w)
                                    coln = a * nV + v
                                    coact.a[r][coln] = coact.a[r][coln] + cij * cw
    return YDModule(mod, coact, "second", "R(%s)" % V.name)


def r_counit(A: QuasiHopfAlgebra, V: HModule) -> Matrix:
    """epsilon_V: F R(V) -> V, a (x) v |-> eps(a) v."""
    d, nV = A.dim, V.n
    out = Matrix(A.field, nV, d * nV)
    for a in range(d):
        ea = A.counit[a]
        if ea:
            for v in range(nV):
                out.a[v][a * nV + v] = ea
    return out


def r_unit_vector(A: QuasiHopfAlgebra) -> list:
    """R^(0)(1) in R(1) = H: must equal beta."""
    m = trivial_yd(A, kind="second")
    return m.coact.column(0)


def r2_kernel(A: QuasiHopfAlgebra) -> TensorElt:
    """The five-leg kernel K of the monoidal structure of R:
    R^(2)((a x x) (x) (b x y)) = K_1 a K_2 b K_3 (x) K_4 x (x) K_5 y."""
    D = A.derived()
    C = A.comul_mat

    def wv(a, la, b, lb, n):
        return weave_mul(a, la, b, lb, n, A)

    # slots: 1: phi_1 phibar_1(1) qR_1(1) phibar'_1(1,1)
    #        2: qR_2 phibar'_1(2)            (S applied)
    #        3: phibar'_2 phi'_1
    #        4: phibar_3 phibar'_3(2) phi'_3 (S applied)
    #        5: phi_2 phibar_1(2) qR_1(2) phibar'_1(1,2)
    #        6: phi_3 phibar_2 phibar'_3(1) phi'_2
    t = apply_leg(C, A.phi_inv, 1)
    t = apply_leg(C, t, 1)
    t = apply_leg(C, t, 5)
    x = wv(t, (1, 5, 2, 3, 6, 4), permute_phi(A, (1, 3, 2)), (3, 4, 6), 6)
    q = apply_leg(C, D.qR, 1)
    x = wv(q, (1, 5, 2), x, (1, 2, 3, 4, 5, 6), 6)
    pb = apply_leg(C, A.phi_inv, 1)
    x = wv(pb, (1, 5, 6, 4), x, (1, 2, 3, 4, 5, 6), 6)
    x = wv(A.phi, (1, 5, 6), x, (1, 2, 3, 4, 5, 6), 6)
    x = apply_leg(A.S, x, 2)
    x = apply_leg(A.S, x, 4)
    x = fuse_legs(x, 2, A)
    return x


def permute_phi(A: QuasiHopfAlgebra, perm: tuple) -> TensorElt:
    from .tensor import permute_legs
    return permute_legs(A.phi, perm)


def r2_matrix(A: QuasiHopfAlgebra, X: HModule, Y: HModule) -> Matrix:
    """R^(2)_{X,Y}: R(X) (x) R(Y) -> R(X (x) Y) from the literal kernel."""
    K = r2_kernel(A)
    d, nX, nY = A.dim, X.n, Y.n
    src = (d * nX) * (d * nY)
    dst = d * nX * nY
    out = Matrix(A.field, dst, src)
    kterms = list(K.terms())
    for a in range(d):
        for x in range(nX):
            for b in range(d):
                for y in range(nY):
                    colidx = (a * nX + x) * (d * nY) + (b * nY + y)
                    for (k1, k2, k3, k4, k5), c in kterms:
                        hvec = A.vmul(A.e(k1), A.e(a), A.e(k2), A.e(b), A.e(k3))
                        xv = X.mats[k4].column(x)
                        yv = Y.mats[k5].column(y)
                        for i, ci in enumerate(hvec):
                            if not ci:
                                continue
                            ci2 = c * ci
                            for xp, cx in enumerate(xv):
                                if not cx:
                                    continue
                                ci3 = ci2 * cx
                                for yp, cy in enumerate(yv):
                                    if cy:
                                        r = (i * nX + xp) * nY + yp
                                        out.a[r][colidx] = out.a[r][colidx] + ci3 * cy
    return out


def yd_tensor(m1: YDModule, m2: YDModule) -> YDModule:
    """Tensor product in the Yetter-Drinfeld category (first kind):
    delta(v x w) = phi_1 (phibar_1 phi'_1 v)_(-1) phibar_2 (phi'_2 w)_(-1) phi'_3
                   (x) phi_2 (phibar_1 phi'_1 v)_(0) (x) phi_3 phibar_3 (phi'_2 w)_(0)."""
    if m1.kind != "first" or m2.kind != "first":
        raise AlgebraError("tensor coaction is defined through the first kind")
    A = m1.alg
    V, W = m1.module, m2.module
    nV, nW = V.n, W.n
    mod = tensor_module(V, W)
    n = nV * nW
    coact = Matrix(A.field, A.dim * n, n)
    for (u1, u2, u3), cu in A.phi_inv.terms():
        for (p1, p2, p3), cp in A.phi.terms():
            pre_v = V.act(A.vmul(A.e(u1), A.e(p1)))
            pre_w = W.mats[p2]
            for v in range(nV):
                av = pre_v.column(v)
                for a, ca in enumerate(av):
                    if not ca:
                        continue
                    for k, vp, ck in m1.coact_terms(a):
                        for w in range(nW):
                            bw = pre_w.column(w)
                            for b, cb in enumerate(bw):
                                if not cb:
                                    continue
                                for k2, wp, ck2 in m2.coact_terms(b):
                                    mid = A.vmul(A.e(k), A.e(u2), A.e(k2), A.e(p3))
                                    coeff = cu * cp * ca * ck * cb * ck2
                                    for (x, y, z), cf in A.phi.terms():
                                        h = A.vmul(A.e(x), mid)
                                        vv = V.mats[y].column(vp)
                                        wv2 = W.act_vec(A.vmul(A.e(z), A.e(u3)),
                                                        [A.field.one if q == wp else A.field.zero
                                                         for q in range(nW)])
                                        cc = coeff * cf
                                        for i, ci in enumerate(h):
                                            if not ci:
                                                continue
                                            ci2 = cc * ci
                                            for vq, cvq in enumerate(vv):
                                                if not cvq:
                                                    continue
                                                ci3 = ci2 * cvq
                                                for wq, cwq in enumerate(wv2):
                                                    if cwq:
                                                        r = i * n + (vq * nW + wq)
                                                        cidx = v * nW + w
                                                        coact.a[r][cidx] = coact.a[r][cidx] + ci3 * cwq
    return YDModule(mod, coact, "first", "%s(x)%s" % (m1.name, m2.name))


def yd_is_morphism(f: Matrix, src: YDModule, dst: YDModule) -> bool:
    """H-linear and colinear (both modules in the same kind)."""
    if src.kind != dst.kind:
        raise AlgebraError("kind mismatch")
    A = src.alg
    if not all(f * src.module.mats[i] == dst.module.mats[i] * f
               for i in range(A.dim)):
        return False
    idH = Matrix.identity(A.field, A.dim)
    return idH.kron(f) * src.coact == dst.coact * f
