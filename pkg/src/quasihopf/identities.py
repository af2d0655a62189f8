"""The section-3 identity suite: every numbered identity relating the
derived elements, evaluated on both sides and compared exactly.

Each identity is transcribed as a pipeline of leg operations (comultiply a
leg, apply the antipode to a leg, interleave a two-leg element, fuse
adjacent legs), so the code mirrors the displayed formula term by term.
Quantified identities run over all basis elements h, which is exhaustive
since both sides are linear in h.  Identities about H^op / H^cop compare
against derived elements recomputed from scratch on the freshly built
opposite/coopposite algebra.
"""

from __future__ import annotations

from .algebra import CheckEntry, QuasiHopfAlgebra
from .tensor import apply_leg, fuse_legs, kron, permute_legs, tensor_mul, weave_mul


def _ck(tag, ok, witness=None):
    return CheckEntry(tag, ok, witness)


def _quantified(A, tag, per_basis):
    for h in range(A.dim):
        if not per_basis(h):
            return _ck(tag, False, "basis element %s" % A.basis[h])
    return _ck(tag, True)


def identity_suite(A: QuasiHopfAlgebra) -> list[CheckEntry]:
    D = A.derived()
    C, S, Sb = A.comul_mat, A.S, A.Sbar
    one1 = A.vec_as_tensor(A.unit)
    one2 = A.one_tensor(2)
    entries = []

    def wv(a, la, b, lb, n, op=frozenset()):
        return weave_mul(a, la, b, lb, n, A, op)

    def et(h):
        return A.vec_as_tensor(A.e(h))

    def d3l(h):
        return apply_leg(C, apply_leg(C, et(h), 1), 1)

    def d3r(h):
        return apply_leg(C, apply_leg(C, et(h), 1), 2)

    # --- the four defining p/q identities, quantified over h -----------

    def chk_pR(h):
        # h_(1,1) pR_1 (x) h_(1,2) pR_2 S(h_(2))  =  pR (h (x) 1)
        u = apply_leg(S, d3l(h), 3)
        lhs = fuse_legs(wv(u, (1, 2, 3), D.pR, (1, 2), 3), 2, A)
        return lhs == A.tmul(D.pR, kron(et(h), one1))

    entries.append(_quantified(A, "q-Hopf-pR", chk_pR))

    def chk_qR(h):
        # qR_1 h_(1,1) (x) Sbar(h_(2)) qR_2 h_(1,2)  =  (h (x) 1) qR
        w = permute_legs(apply_leg(Sb, d3l(h), 3), (1, 3, 2))
        lhs = fuse_legs(wv(D.qR, (1, 2), w, (1, 2, 3), 3, {2}), 2, A)
        return lhs == A.tmul(kron(et(h), one1), D.qR)

    entries.append(_quantified(A, "q-Hopf-qR", chk_qR))

    def chk_pL(h):
        # h_(2,1) pL_1 Sbar(h_(1)) (x) h_(2,2) pL_2  =  pL (1 (x) h)
        w = permute_legs(apply_leg(Sb, d3r(h), 1), (2, 1, 3))
        x = wv(w, (1, 3, 4), D.pL, (2, 4), 4)
        lhs = fuse_legs(fuse_legs(x, 1, A), 1, A)
        return lhs == A.tmul(D.pL, kron(one1, et(h)))

    entries.append(_quantified(A, "q-Hopf-pL", chk_pL))

    def chk_qL(h):
        # S(h_(1)) qL_1 h_(2,1) (x) qL_2 h_(2,2)  =  (1 (x) h) qL
        u = apply_leg(S, d3r(h), 1)
        x = wv(u, (1, 3, 4), D.qL, (2, 4), 4, {4})
        lhs = fuse_legs(fuse_legs(x, 1, A), 1, A)
        return lhs == A.tmul(kron(one1, et(h)), D.qL)

    entries.append(_quantified(A, "q-Hopf-qL", chk_qL))

    # --- p against q ----------------------------------------------------

    # qR_1(1) pR_1 (x) qR_1(2) pR_2 S(qR_2) = 1 (x) 1
    u = apply_leg(S, apply_leg(C, D.qR, 1), 3)
    lhs = fuse_legs(wv(u, (1, 2, 3), D.pR, (1, 2), 3), 2, A)
    entries.append(_ck("q-Hopf-pR-qR-1", lhs == one2))

    # qR_1 pR_1(1) (x) Sbar(pR_2) qR_2 pR_1(2) = 1 (x) 1
    w = permute_legs(apply_leg(Sb, apply_leg(C, D.pR, 1), 3), (1, 3, 2))
    lhs = fuse_legs(wv(D.qR, (1, 2), w, (1, 2, 3), 3, {2}), 2, A)
    entries.append(_ck("q-Hopf-pR-qR-2", lhs == one2))

    # qL_2(1) pL_1 Sbar(qL_1) (x) qL_2(2) pL_2 = 1 (x) 1
    w = permute_legs(apply_leg(Sb, apply_leg(C, D.qL, 2), 1), (2, 1, 3))
    x = wv(w, (1, 3, 4), D.pL, (2, 4), 4)
    entries.append(_ck("q-Hopf-pL-qL-1", fuse_legs(fuse_legs(x, 1, A), 1, A) == one2))

    # S(pL_1) qL_1 pL_2(1) (x) qL_2 pL_2(2) = 1 (x) 1
    u = apply_leg(S, apply_leg(C, D.pL, 2), 1)
    x = wv(u, (1, 3, 4), D.qL, (2, 4), 4, {4})
    entries.append(_ck("q-Hopf-pL-qL-2", fuse_legs(fuse_legs(x, 1, A), 1, A) == one2))

    # --- the gauge element f ---------------------------------------------

    def chk_f1(h):
        # f Delta(S(h)) f^-1 = S(h_(2)) (x) S(h_(1)), eps(S(h)) = eps(h)
        lhs = A.tmul(D.f, A.vdelta(A.vS(A.e(h))), D.f_inv)
        rhs = permute_legs(apply_leg(S, apply_leg(S, A.vdelta(A.e(h)), 1), 2), (2, 1))
        if lhs != rhs:
            return False
        return A.eps(A.vS(A.e(h))) == A.eps(A.e(h))

    entries.append(_quantified(A, "q-Hopf-f-1", chk_f1))

    phi_f = A.tmul(kron(one1, D.f),
                   apply_leg(C, D.f, 2),
                   A.phi,
                   apply_leg(C, D.f_inv, 1),
                   kron(D.f_inv, one1))
    lhs = permute_legs(apply_leg(S, apply_leg(S, apply_leg(S, A.phi, 1), 2), 3), (3, 2, 1))
    entries.append(_ck("q-Hopf-f-3", lhs == phi_f))

    sb = fuse_legs(apply_leg(S, D.f_inv, 1), 1, A, mid=A.alpha)
    sa = fuse_legs(apply_leg(S, D.f, 2), 1, A, mid=A.beta)
    entries.append(_ck("q-Hopf-f-4",
                       sb.coords == A.vS(A.beta) and sa.coords == A.vS(A.alpha),
                       "S(beta) or S(alpha) formula fails"))

    entries.append(_ck("q-Hopf-delta-alpha",
                       A.vdelta(A.alpha) == A.tmul(D.f_inv, D.a_elt)
                       and A.vdelta(A.beta) == A.tmul(D.b_elt, D.f),
                       "Delta(alpha) = f^-1 a or Delta(beta) = b f fails"))

    entries.append(_ck("q-Hopf-def-a", D.a_elt == D.a_alt,
                       "the two defining expressions differ"))
    entries.append(_ck("q-Hopf-def-b", D.b_elt == D.b_alt,
                       "the two defining expressions differ"))

    # --- op / cop comparisons (independent reconstruction) ----------------

    Dop = A.opposite().derived()
    Dcop = A.coopposite().derived()

    f_op_expect = permute_legs(apply_leg(Sb, apply_leg(Sb, D.f_inv, 1), 2), (2, 1))
    f_cop_expect = apply_leg(Sb, apply_leg(Sb, D.f, 1), 2)
    entries.append(_ck("q-Hopf-f-op-cop",
                       Dop.f == f_op_expect and Dcop.f == f_cop_expect,
                       "f of H^op or H^cop differs from the closed form"))

    entries.append(_ck("q-Hopf-pq-op",
                       Dop.pR == D.qR and Dop.qR == D.pR
                       and Dop.pL == D.qL and Dop.qL == D.pL,
                       "p/q of H^op do not swap as expected"))

    sw = (2, 1)
    entries.append(_ck("q-Hopf-pq-cop",
                       Dcop.pR == permute_legs(D.pL, sw)
                       and Dcop.qR == permute_legs(D.qL, sw)
                       and Dcop.pL == permute_legs(D.pR, sw)
                       and Dcop.qL == permute_legs(D.qR, sw),
                       "p/q of H^cop do not swap as expected"))

    entries.append(_ck("q-Hopf-UL-VR-cop",
                       Dcop.UL == permute_legs(D.UR, sw)
                       and Dcop.VR == permute_legs(D.VL, sw),
                       "U^L/V^R of H^cop differ from U^R/V^L swapped"))

    # --- moving p/q through phi -------------------------------------------

    # qR_1(1) phibar_1 (x) qR_1(2) phibar_2 (x) qR_2 phibar_3
    #   = phi_1 (x) qR_1 phi_2(1) (x) Sbar(phi_3) qR_2 phi_2(2)
    lhs = A.tmul(apply_leg(C, D.qR, 1), A.phi_inv)
    w = permute_legs(apply_leg(Sb, apply_leg(C, A.phi, 2), 4), (1, 2, 4, 3))
    rhs = fuse_legs(wv(D.qR, (2, 3), w, (1, 2, 3, 4), 4, {3}), 3, A)
    entries.append(_ck("q-Hopf-qR-phi", lhs == rhs))

    # phi_1 pR_1(1) (x) phi_2 pR_1(2) (x) phi_3 pR_2
    #   = phibar_1 (x) phibar_2(1) pR_1 (x) phibar_2(2) pR_2 S(phibar_3)
    lhs = A.tmul(A.phi, apply_leg(C, D.pR, 1))
    v = apply_leg(S, apply_leg(C, A.phi_inv, 2), 4)
    rhs = fuse_legs(wv(v, (1, 2, 3, 4), D.pR, (2, 3), 4), 3, A)
    entries.append(_ck("q-Hopf-pR-phi", lhs == rhs))

    # --- mixed p/q identities whose right sides define U/V ---------------

    # S(pR_1) qL_1 pR_2(1) (x) qL_2 pR_2(2) = V^R
    u = apply_leg(S, apply_leg(C, D.pR, 2), 1)
    x = wv(u, (1, 3, 4), D.qL, (2, 4), 4, {4})
    entries.append(_ck("q-Hopf-pquv-1", fuse_legs(fuse_legs(x, 1, A), 1, A) == D.VR))

    # qR_2(1) pL_1 Sbar(qR_1) (x) qR_2(2) pL_2 = U^R
    w = permute_legs(apply_leg(Sb, apply_leg(C, D.qR, 2), 1), (2, 1, 3))
    x = wv(w, (1, 3, 4), D.pL, (2, 4), 4)
    entries.append(_ck("q-Hopf-pquv-2", fuse_legs(fuse_legs(x, 1, A), 1, A) == D.UR))

    # qR_1 pL_1(1) (x) Sbar(pL_2) qR_2 pL_1(2) = V^L
    w = permute_legs(apply_leg(Sb, apply_leg(C, D.pL, 1), 3), (1, 3, 2))
    lhs = fuse_legs(wv(D.qR, (1, 2), w, (1, 2, 3), 3, {2}), 2, A)
    entries.append(_ck("q-Hopf-pquv-3", lhs == D.VL))

    # qL_1(1) pR_1 (x) qL_1(2) pR_2 S(qL_2) = U^L
    u = apply_leg(S, apply_leg(C, D.qL, 1), 3)
    lhs = fuse_legs(wv(u, (1, 2, 3), D.pR, (1, 2), 3), 2, A)
    entries.append(_ck("q-Hopf-pquv-4", lhs == D.UL))

    # --- reconstruction of the right-handed data from the left-handed ----

    # (qL_2 (x) 1) V^L Delta(Sbar(qL_1)) = q^R
    v = apply_leg(C, apply_leg(Sb, D.qL, 1), 1)
    z = wv(permute_legs(v, (3, 1, 2)), (1, 3, 5), D.VL, (2, 4), 5)
    lhs = fuse_legs(fuse_legs(fuse_legs(z, 1, A), 1, A), 2, A)
    # Delta(S(pL_1)) U^L (pL_2 (x) 1) = p^R
    v = apply_leg(C, apply_leg(S, D.pL, 1), 1)
    z = wv(permute_legs(v, (1, 3, 2)), (1, 3, 4), D.UL, (2, 5), 5)
    rhs2 = fuse_legs(fuse_legs(fuse_legs(z, 1, A), 1, A), 2, A)
    entries.append(_ck("HN-Eq-7.2-7.3",
                       lhs == D.qR and rhs2 == D.pR,
                       "q^R or p^R reconstruction fails"))

    return entries


def omega_report(A: QuasiHopfAlgebra) -> list[CheckEntry]:
    """Consistency of the five-leg associator element (legs 4, 5 multiply in
    the opposite algebra); separate from the main suite since it is only
    needed by the Yetter-Drinfeld layer."""
    D = A.derived()
    entries = [_ck("q-Hopf-def-chi", D.chi == D.chi_alt,
                   "the two defining expressions differ")]
    one5 = A.one_tensor(5)
    ops = {4, 5}
    entries.append(_ck("q-Hopf-def-omega",
                       tensor_mul(D.omega, D.omega_tilde, A, ops) == one5
                       and tensor_mul(D.omega_tilde, D.omega, A, ops) == one5,
                       "omega and omega-tilde are not mutually inverse"))
    return entries
