"""Integrals, cointegrals, the modular function, the Nakayama automorphism
and the Frobenius dual-basis machinery.

Cointegrals are computed by two genuinely independent routes:

* the coinvariants of the dual quasi-Hopf bimodules (image of the
  projector E), which is the defining construction;
* the linear characterizations (items (2)-(5) of the two equivalence
  theorems), each a small linear system in the coordinates of the
  functional.

The characterization route (item (4), the cheapest system) is the default;
span equality with the coinvariant route and with the remaining items is
part of the acceptance suite.
"""

from __future__ import annotations

from .algebra import (AlgebraError, QuasiHopfAlgebra, elt_harpoon_l,
                      fun_harpoon_l, fun_harpoon_r)
from .linalg import Matrix, kernel_basis, mat_inverse, row_space_basis
from .tensor import TensorElt


class IntegralError(AlgebraError):
    pass


def left_integrals(A: QuasiHopfAlgebra) -> list:
    """Canonical basis of {L : h L = eps(h) L for all h}."""
    d = A.dim
    m = Matrix(A.field, d * d, d)
    for h in range(d):
        blk = A.lmul_mat(A.e(h))
        eh = A.eps(A.e(h))
        for i in range(d):
            for j in range(d):
                m.a[h * d + i][j] = blk.a[i][j] - (eh if i == j else A.field.zero)
    return kernel_basis(m)


def right_integrals(A: QuasiHopfAlgebra) -> list:
    d = A.dim
    m = Matrix(A.field, d * d, d)
    for h in range(d):
        blk = A.rmul_mat(A.e(h))
        eh = A.eps(A.e(h))
        for i in range(d):
            for j in range(d):
                m.a[h * d + i][j] = blk.a[i][j] - (eh if i == j else A.field.zero)
    return kernel_basis(m)


def modular_function(A: QuasiHopfAlgebra) -> list:
    """The algebra map mu with Lambda h = mu(h) Lambda for left integrals."""
    ints = left_integrals(A)
    if len(ints) != 1:
        raise IntegralError("left integrals not one-dimensional: dim=%d" % len(ints))
    Lam = ints[0]
    piv = next(i for i, c in enumerate(Lam) if c)
    mu = []
    for h in range(A.dim):
        prod = A.vmul(Lam, A.e(h))
        val = prod[piv] / Lam[piv]
        if [val * c for c in Lam] != prod:
            raise IntegralError("Lambda h is not proportional to Lambda")
        mu.append(val)
    # consistency: mu is an algebra map and mu o S drives right integrals
    for i in range(A.dim):
        for j in range(A.dim):
            if A.pair(mu, A.vmul(A.e(i), A.e(j))) != mu[i] * mu[j]:
                raise IntegralError("modular function is not an algebra map")
    if A.pair(mu, A.unit) != A.field.one:
        raise IntegralError("mu(1) != 1")
    for LamR in right_integrals(A):
        for h in range(A.dim):
            lhs = A.vmul(A.e(h), LamR)
            mbar = A.pair(mu, A.Se(h))
            if lhs != [mbar * c for c in LamR]:
                raise IntegralError("h Lambda_R != mu(S(h)) Lambda_R")
    return mu


# -- coinvariant route ----------------------------------------------------


def _dual_left_coaction(A: QuasiHopfAlgebra) -> Matrix:
    """Right coaction of H on the right-dual bimodule of H (functionals),
    as a (d*d) x d matrix: column m = coaction of the dual basis e^m,
    coordinates ordered (functional leg, H leg)."""
    D = A.derived()
    d = A.dim
    out = Matrix(A.field, d * d, d)
    for i in range(d):
        for (a, b), c in A.d2(i):
            for (x, y), cv in D.VL.terms():
                for (u, v), cu in D.UL.terms():
                    hvec = A.vmul(A.e(x), A.e(a), A.e(u))
                    arg = A.vmul(A.e(y), A.e(b), A.e(v))
                    coeff = c * cv * cu
                    for m in range(d):
                        am = arg[m]
                        if not am:
                            continue
                        for k in range(d):
                            if hvec[k]:
                                out.a[i * d + k][m] = out.a[i * d + k][m] + coeff * am * hvec[k]
    return out


def _dual_right_coaction(A: QuasiHopfAlgebra) -> Matrix:
    """Left coaction of H on the left-dual bimodule of H, as a (d*d) x d
    matrix: column m = coaction of e^m, coordinates (H leg, functional leg)."""
    D = A.derived()
    d = A.dim
    out = Matrix(A.field, d * d, d)
    for i in range(d):
        for (a, b), c in A.d2(i):
            for (x, y), cv in D.VR.terms():
                for (u, v), cu in D.UR.terms():
                    arg = A.vmul(A.e(x), A.e(a), A.e(u))
                    hvec = A.vmul(A.e(y), A.e(b), A.e(v))
                    coeff = c * cv * cu
                    for m in range(d):
                        am = arg[m]
                        if not am:
                            continue
                        for k in range(d):
                            if hvec[k]:
                                out.a[k * d + i][m] = out.a[k * d + i][m] + coeff * am * hvec[k]
    return out


def coinvariant_projector_left(A: QuasiHopfAlgebra) -> Matrix:
    """The projector onto left cointegrals inside H*:
    E(xi) = S(beta S(qR_2 xi_(1))) -> xi_(0) <- Sbar(qR_1)."""
    D = A.derived()
    d = A.dim
    co = _dual_left_coaction(A)
    E = Matrix(A.field, d, d)
    for m in range(d):
        col = co.column(m)
        acc = [A.field.zero] * d
        for i in range(d):
            for k in range(d):
                c = col[i * d + k]
                if not c:
                    continue
                for (q1, q2), cq in D.qR.terms():
                    w = A.vS(A.vmul(A.beta, A.vS(A.vmul(A.e(q2), A.e(k)))))
                    row = fun_harpoon_l(A, fun_harpoon_r(A, w, A.e(i)), A.vSbar(A.e(q1)))
                    acc = [u + c * cq * v for u, v in zip(acc, row)]
        for i in range(d):
            E.a[i][m] = acc[i]
    return E


def coinvariant_projector_right(A: QuasiHopfAlgebra) -> Matrix:
    """The projector onto right cointegrals inside H*:
    E(xi) = Sbar(Sbar(beta) Sbar(qL_1 xi_(-1))) -> xi_(0) <- S(qL_2)."""
    D = A.derived()
    d = A.dim
    co = _dual_right_coaction(A)
    E = Matrix(A.field, d, d)
    for m in range(d):
        col = co.column(m)
        acc = [A.field.zero] * d
        for i in range(d):
            for k in range(d):
                c = col[k * d + i]
                if not c:
                    continue
                for (q1, q2), cq in D.qL.terms():
                    w = A.vSbar(A.vmul(A.vSbar(A.beta), A.vSbar(A.vmul(A.e(q1), A.e(k)))))
                    row = fun_harpoon_l(A, fun_harpoon_r(A, w, A.e(i)), A.vS(A.e(q2)))
                    acc = [u + c * cq * v for u, v in zip(acc, row)]
        for i in range(d):
            E.a[i][m] = acc[i]
    return E


def _image_basis(E: Matrix) -> list:
    return row_space_basis([E.column(j) for j in range(E.cols)], E.field, E.rows)


def cointegrals_via_coinvariants(A: QuasiHopfAlgebra):
    """(left basis, right basis) as images of the two projectors."""
    return _image_basis(coinvariant_projector_left(A)), \
        _image_basis(coinvariant_projector_right(A))


# -- characterization route --------------------------------------------------


def _arg_out_matrix(A, pairs) -> Matrix:
    """Matrix M with M[i][j] = sum of coeff * out_i * arg_j over the given
    (coeff, out_vec, arg_vec) triples; encodes lambda |-> sum coeff <lambda, arg> out."""
    d = A.dim
    M = Matrix(A.field, d, d)
    for coeff, out, arg in pairs:
        for j in range(d):
            aj = arg[j]
            if not aj:
                continue
            caj = coeff * aj
            for i in range(d):
                if out[i]:
                    M.a[i][j] = M.a[i][j] + caj * out[i]
    return M


def _sandwich_matrix(A, left2: TensorElt, hvec: list, right2: TensorElt,
                     arg_leg: int) -> Matrix:
    """For K = left2 * Delta(h) * right2 in H (x) H, the matrix of
    lambda |-> <lambda, K_argleg> K_otherleg."""
    K = A.tmul(left2, A.vdelta(hvec), right2)
    d = A.dim
    M = Matrix(A.field, d, d)
    for (i, j), c in K.terms():
        if arg_leg == 2:
            M.a[i][j] = M.a[i][j] + c
        else:
            M.a[j][i] = M.a[j][i] + c
    return M


def characterization_system(A: QuasiHopfAlgebra, side: str, item: int,
                            mu: list | None = None) -> list:
    """Solution space (canonical basis) of one cointegral characterization.

    side is "left" or "right", item one of 2, 3, 4, 5 following the two
    equivalence theorems; every system is linear in the functional.
    """
    D = A.derived()
    d = A.dim
    if mu is None:
        mu = modular_function(A)
    rows = []

    def add_block(M: Matrix):
        rows.extend(M.a)

    if side == "left":
        if item in (2, 4):
            right2 = D.UL if item == 2 else D.WL(mu)
            for h in range(d):
                lhs = _sandwich_matrix(A, D.VL, A.e(h), right2, arg_leg=2)
                if item == 2:
                    pairs = []
                    for (x, y, z), c in A.phi_inv.terms():
                        pairs.append((c * A.pair(mu, A.e(x)), A.e(z),
                                      A.vmul(A.e(h), A.Se(y))))
                    rhs = _arg_out_matrix(A, pairs)
                else:
                    rhs = Matrix(A.field, d, d)
                    for i in range(d):
                        rhs.a[i][h] = A.unit[i]
                add_block(lhs - rhs)
        elif item == 3:
            for h in range(d):
                lhs = _sandwich_matrix(A, D.qR, A.e(h), D.pR, arg_leg=2)
                pairs = []
                for (x, y, z), c in A.phi_inv.terms():
                    cm = A.pair(mu, A.e(x))
                    if not cm:
                        continue
                    for (q1, q2), cq in D.qL.terms():
                        for (p1, p2), cp in D.pL.terms():
                            arg = A.vmul(A.Sbare(q1), A.e(h),
                                         A.vS(A.vmul(A.e(y), A.e(p1))))
                            out = A.vmul(A.e(q2), A.e(z), A.e(p2))
                            pairs.append((c * cm * cq * cp, out, arg))
                add_block(lhs - _arg_out_matrix(A, pairs))
        elif item == 5:
            mu_beta = A.pair(mu, A.beta)
            for Lam in left_integrals(A):
                lhs = _sandwich_matrix(A, D.qR, Lam, D.pR, arg_leg=2)
                rhs = Matrix(A.field, d, d)
                for i in range(d):
                    for j in range(d):
                        rhs.a[i][j] = mu_beta * Lam[j] * A.unit[i]
                add_block(lhs - rhs)
        else:
            raise ValueError("item must be 2, 3, 4 or 5")
    elif side == "right":
        if item in (2, 4):
            right2 = D.UR if item == 2 else D.WR(mu)
            for h in range(d):
                lhs = _sandwich_matrix(A, D.VR, A.e(h), right2, arg_leg=1)
                if item == 2:
                    pairs = []
                    for (x, y, z), c in A.phi.terms():
                        pairs.append((c * A.pair(mu, A.e(z)), A.e(x),
                                      A.vmul(A.e(h), A.Sbare(y))))
                    rhs = _arg_out_matrix(A, pairs)
                else:
                    rhs = Matrix(A.field, d, d)
                    for i in range(d):
                        rhs.a[i][h] = A.unit[i]
                add_block(lhs - rhs)
        elif item == 3:
            for h in range(d):
                lhs = _sandwich_matrix(A, D.qL, A.e(h), D.pL, arg_leg=1)
                pairs = []
                for (x, y, z), c in A.phi.terms():
                    cm = A.pair(mu, A.e(z))
                    if not cm:
                        continue
                    for (q1, q2), cq in D.qR.terms():
                        for (p1, p2), cp in D.pR.terms():
                            out = A.vmul(A.e(q1), A.e(x), A.e(p1))
                            arg = A.vmul(A.Se(q2), A.e(h),
                                         A.vSbar(A.vmul(A.e(y), A.e(p2))))
                            pairs.append((c * cm * cq * cp, out, arg))
                add_block(lhs - _arg_out_matrix(A, pairs))
        elif item == 5:
            mu_sb = A.pair(mu, A.vSbar(A.beta))
            for Lam in left_integrals(A):
                lhs = _sandwich_matrix(A, D.qL, Lam, D.pL, arg_leg=1)
                rhs = Matrix(A.field, d, d)
                for i in range(d):
                    for j in range(d):
                        rhs.a[i][j] = mu_sb * Lam[j] * A.unit[i]
                add_block(lhs - rhs)
        else:
            raise ValueError("item must be 2, 3, 4 or 5")
    else:
        raise ValueError("side must be 'left' or 'right'")
    return kernel_basis(Matrix(A.field, len(rows), d, rows))


def cointegrals_via_characterization(A: QuasiHopfAlgebra, mu: list | None = None):
    """(left basis, right basis) via characterization item (4)."""
    return (characterization_system(A, "left", 4, mu),
            characterization_system(A, "right", 4, mu))


# -- downstream structure ---------------------------------------------------


def xi_map(A: QuasiHopfAlgebra, lam: list) -> Matrix:
    """The fundamental-theorem map h |-> S(h) -> lam as a d x d matrix."""
    if all(not c for c in lam):
        raise IntegralError("zero functional is not a cointegral")
    cols = [fun_harpoon_r(A, A.Se(j), lam) for j in range(A.dim)]
    m = Matrix.from_columns(A.field, cols)
    if mat_inverse(m) is None:
        raise IntegralError("Xi is singular; input is not a left cointegral")
    return m


def nakayama(A: QuasiHopfAlgebra, lam: list, mu: list | None = None) -> Matrix:
    """nu(h) = S(S(h) <- mu), validated against lambda(h h') = lambda(h' nu(h))."""
    if mu is None:
        mu = modular_function(A)
    d = A.dim
    hl = Matrix.from_columns(A.field, [elt_harpoon_l(A, A.e(j), mu) for j in range(d)])
    nu = A.S * hl * A.S
    for i in range(d):
        ni = nu.column(i)
        for j in range(d):
            if A.pair(lam, A.vmul(A.e(i), A.e(j))) != A.pair(lam, A.vmul(A.e(j), ni)):
                raise IntegralError("Nakayama property fails at basis pair (%d, %d)" % (i, j))
    return nu


class IntegralData:
    """Everything the later sections need, normalized once:

    lam: left cointegral with first nonzero canonical coordinate 1;
    lam_r: right cointegral, same normalization;
    Lambda: left integral scaled so <lam, Lambda> = mu(beta)^{-1}.
    """

    def __init__(self, A: QuasiHopfAlgebra):
        self.alg = A
        self.left_integrals = left_integrals(A)
        self.right_integrals = right_integrals(A)
        self.mu = modular_function(A)
        self.unimodular = self.mu == A.counit
        lc, rc = cointegrals_via_characterization(A, self.mu)
        self.left_cointegrals = lc
        self.right_cointegrals = rc
        if len(lc) != 1 or len(rc) != 1 or len(self.left_integrals) != 1 \
                or len(self.right_integrals) != 1:
            raise IntegralError("(co)integral spaces are not all one-dimensional")
        self.lam = lc[0]
        self.lam_r = rc[0]
        pairing = A.pair(self.lam, self.left_integrals[0])
        if not pairing:
            raise IntegralError("lambda(Lambda) = 0")
        mu_beta = A.pair(self.mu, A.beta)
        scale = (A.field.one / mu_beta) / pairing
        self.Lambda = [scale * c for c in self.left_integrals[0]]

    def lambda_tilde(self) -> TensorElt:
        D = self.alg.derived()
        return self.alg.tmul(D.qR, self.alg.vdelta(self.Lambda), D.pR)


def integral_data(A: QuasiHopfAlgebra) -> IntegralData:
    data = getattr(A, "_integral_data", None)
    if data is None:
        data = IntegralData(A)
        A._integral_data = data
    return data


def frobenius_maps(A: QuasiHopfAlgebra, data: IntegralData | None = None):
    """(Theta_L, Theta_R, Theta_L^-1, Theta_R^-1) as d x d matrices.

    The inverses come from the closed dual-basis formulas with
    Lambda-tilde; composing to the identity is the caller-facing check.
    """
    if data is None:
        data = integral_data(A)
    d = A.dim
    lam, mu = data.lam, data.mu
    theta_l = Matrix.from_columns(A.field, [fun_harpoon_r(A, A.e(j), lam) for j in range(d)])
    theta_r = Matrix.from_columns(A.field, [fun_harpoon_l(A, lam, A.e(j)) for j in range(d)])
    lt = data.lambda_tilde()
    inv_l = Matrix(A.field, d, d)
    inv_r = Matrix(A.field, d, d)
    for (i, j), c in lt.terms():
        v_r = A.vSbar(A.e(i))
        v_l = A.vS(elt_harpoon_l(A, A.e(i), mu))
        for k in range(d):
            inv_r.a[k][j] = inv_r.a[k][j] + c * v_r[k]
            inv_l.a[k][j] = inv_l.a[k][j] + c * v_l[k]
    return theta_l, theta_r, inv_l, inv_r


def check_left_cointegral_bilinear(A: QuasiHopfAlgebra, lam: list, mu: list) -> bool:
    """The colinearity consequence of the fundamental-theorem map:
    V^L_1 h_(1) U^L_1 <lam, V^L_2 h_(2) U^L_2 S(h')> =
    mu(phibar_1) <lam, h S(phibar_2 h'_(1))> phibar_3 h'_(2), all basis pairs."""
    D = A.derived()
    d = A.dim
    for h in range(d):
        K = A.tmul(D.VL, A.vdelta(A.e(h)), D.UL)
        for hp in range(d):
            lhs = [A.field.zero] * d
            for (i, j), c in K.terms():
                val = A.pair(lam, A.vmul(A.e(j), A.Se(hp)))
                if val:
                    lhs[i] = lhs[i] + c * val
            rhs = [A.field.zero] * d
            for (x, y, z), c in A.phi_inv.terms():
                cm = A.pair(mu, A.e(x))
                if not cm:
                    continue
                for (a, b), cd in A.d2(hp):
                    val = A.pair(lam, A.vmul(A.e(h), A.vS(A.vmul(A.e(y), A.e(a)))))
                    if not val:
                        continue
                    out = A.vmul(A.e(z), A.e(b))
                    coeff = c * cm * cd * val
                    rhs = [u + coeff * v for u, v in zip(rhs, out)]
            if lhs != rhs:
                return False
    return True


def check_xi_bilinear(A: QuasiHopfAlgebra, lam: list, mu: list) -> bool:
    """Xi intertwines the bimodule actions: for all basis pairs (h, h'),
    Xi(h . (lam (x) h')) = h . Xi(lam (x) h')."""
    for h in range(A.dim):
        for hp in range(A.dim):
            lhs = [A.field.zero] * A.dim
            for (a, b), c in A.d2(h):
                cm = c * A.pair(mu, A.e(a))
                if not cm:
                    continue
                row = fun_harpoon_r(A, A.vS(A.vmul(A.e(b), A.e(hp))), lam)
                lhs = [u + cm * v for u, v in zip(lhs, row)]
            rhs = fun_harpoon_l(A, fun_harpoon_r(A, A.Se(hp), lam), A.vSbar(A.e(h)))
            if lhs != rhs:
                return False
    return True
