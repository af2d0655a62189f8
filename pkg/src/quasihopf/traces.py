"""Pivotal elements, partial pivotal traces, twisted symmetric forms and
module traces on free modules.

The pivotal search solves the linear conjugation condition first and then
filters by the quadratic comultiplication condition: over a prime field
the candidate space is enumerated exhaustively, over the rationals each
canonical basis vector is tested together with all its scalar multiples
(the two sides scale with different powers, so one proportionality solve
decides the whole line).  The report is explicit about which of the three
outcomes happened.
"""

from __future__ import annotations

import random as _random

from .algebra import AlgebraError, QuasiHopfAlgebra, elt_harpoon_l
from .integrals import IntegralData, integral_data
from .linalg import Matrix, in_span, kernel_basis, mat_inverse, row_space_basis
from .modules import HModule, one_dim_module, regular_module, tensor_module, \
    trivial_module


class PivotalElement:
    __slots__ = ("g", "g_inv")

    def __init__(self, g: list, g_inv: list):
        self.g = g
        self.g_inv = g_inv

    def __repr__(self):
        return "PivotalElement(%r)" % (self.g,)


def _pivot_delta_gap(A: QuasiHopfAlgebra, v: list):
    """(Delta(v), fbar_1 S(f_2) v (x) fbar_2 S(f_1) v); a pivotal element
    satisfies equality of the two."""
    D = A.derived()
    lhs = A.vdelta(v)
    rhs = A.T(2)
    for (i, j), ci in D.f_inv.terms():
        for (x, y), cf in D.f.terms():
            rhs.acc(ci * cf,
                    A.vmul(A.e(i), A.vS(A.e(y)), v),
                    A.vmul(A.e(j), A.vS(A.e(x)), v))
    return lhs, rhs


def _try_pivot(A: QuasiHopfAlgebra, v: list):
    """Some scalar multiple of v satisfying the comultiplication condition,
    or None.  Scaling v by c scales the two sides by c and c^2, so the
    multiple is decided by one proportionality solve."""
    lhs, rhs = _pivot_delta_gap(A, v)
    if rhs.is_zero():
        return None
    piv = next(pos for pos, c in enumerate(rhs.coords) if c)
    if not lhs.coords[piv]:
        return None
    c = lhs.coords[piv] / rhs.coords[piv]
    if lhs != rhs.scaled(c):
        return None
    g = [c * x for x in v]
    ginvm = mat_inverse(A.lmul_mat(g))
    if ginvm is None:
        return None
    return PivotalElement(g, ginvm.apply(A.unit))


def pivotal_candidate_space(A: QuasiHopfAlgebra) -> list:
    """Canonical basis of {g : g h = S^2(h) g for all h}."""
    d = A.dim
    s2 = A.S * A.S
    rows = []
    for h in range(d):
        blk = A.rmul_mat(A.e(h)) - A.lmul_mat(s2.column(h))
        rows.extend(blk.a)
    return kernel_basis(Matrix(A.field, len(rows), d, rows))


def find_pivotal_elements(A: QuasiHopfAlgebra, enumeration_bound: int = 100000):
    """(list of pivotal elements, status).

    status: "found", "provably-none" (empty candidate space, or exhaustive
    enumeration over F_p came up empty), or "none-in-candidate-set" (the
    rational semi-decision tested every canonical candidate line without
    success)."""
    cand = pivotal_candidate_space(A)
    if not cand:
        return [], "provably-none"
    found = []
    exhaustive = False
    if not A.field.is_rationals and A.field.p ** len(cand) <= enumeration_bound:
        exhaustive = True
        p = A.field.p
        dims = len(cand)
        for code in range(1, p ** dims):
            coeffs = []
            c = code
            for _ in range(dims):
                coeffs.append(A.field.of(c % p))
                c //= p
            v = [A.field.zero] * A.dim
            for co, b in zip(coeffs, cand):
                if co:
                    v = [x + co * y for x, y in zip(v, b)]
            if all(not x for x in v):
                continue
            lhs, rhs = _pivot_delta_gap(A, v)
            if lhs != rhs:
                continue
            ginvm = mat_inverse(A.lmul_mat(v))
            if ginvm is not None:
                found.append(PivotalElement(v, ginvm.apply(A.unit)))
    else:
        for v in cand:
            piv = _try_pivot(A, v)
            if piv is not None:
                found.append(piv)
    if found:
        return found, "found"
    return [], "provably-none" if exhaustive else "none-in-candidate-set"


def verify_pivotal(A: QuasiHopfAlgebra, piv: PivotalElement) -> bool:
    s2 = A.S * A.S
    for h in range(A.dim):
        if A.vmul(piv.g, A.e(h)) != A.vmul(s2.column(h), piv.g):
            return False
    lhs, rhs = _pivot_delta_gap(A, piv.g)
    if lhs != rhs:
        return False
    return A.vmul(piv.g, piv.g_inv) == A.unit


# -- partial pivotal trace -----------------------------------------------------


def partial_pivotal_trace(A: QuasiHopfAlgebra, g: list, f: Matrix,
                          V: HModule, W: HModule, X: HModule,
                          check_linear: bool = True) -> Matrix:
    """ptr over X of an H-linear f: V (x) X -> W (x) X, through the
    vector-space trace of f~ = (1 (x) g) q_R f (p_R -)."""
    D = A.derived()
    VX = tensor_module(V, X)
    WX = tensor_module(W, X)
    if check_linear and not all(f * VX.mats[i] == WX.mats[i] * f
                                for i in range(A.dim)):
        raise AlgebraError("input to the partial trace is not H-linear")
    pre = Matrix(A.field, V.n * X.n, V.n * X.n)
    for (i, j), c in D.pR.terms():
        pre = pre + V.mats[i].kron(X.mats[j]).scaled(c)
    post = Matrix(A.field, W.n * X.n, W.n * X.n)
    for (i, j), c in D.qR.terms():
        post = post + W.mats[i].kron(X.mats[j]).scaled(c)
    post = Matrix.identity(A.field, W.n).kron(X.act(g)) * post
    ft = post * f * pre
    out = Matrix(A.field, W.n, V.n)
    for w in range(W.n):
        for v in range(V.n):
            s = A.field.zero
            for x in range(X.n):
                s = s + ft.a[w * X.n + x][v * X.n + x]
            out.a[w][v] = s
    return out


# -- twisted symmetric forms ---------------------------------------------------


def hh0_space(A: QuasiHopfAlgebra, mu: list) -> list:
    """{t in H* : t(a b) = t((b <- mu) a)}, the mu-twisted symmetric forms."""
    d = A.dim
    rows = []
    for a in range(d):
        for b in range(d):
            ab = A.vmul(A.e(a), A.e(b))
            ba = A.vmul(elt_harpoon_l(A, A.e(b), mu), A.e(a))
            rows.append([x - y for x, y in zip(ab, ba)])
    return kernel_basis(Matrix(A.field, len(rows), d, rows))


def mu_symmetrized_cointegrals(A: QuasiHopfAlgebra, g: list,
                               data: IntegralData | None = None) -> list:
    """{(lam o Sbar) <- g : lam a left cointegral} (a line)."""
    if data is None:
        data = integral_data(A)
    out = []
    for lam in data.left_cointegrals:
        t = [A.pair(lam, A.vSbar(A.vmul(g, A.e(j)))) for j in range(A.dim)]
        out.append(t)
    return row_space_basis(out, A.field, A.dim)


def progen_table(A: QuasiHopfAlgebra, g: list, t: list, mu: list) -> list:
    """Per-basis-element truth of
    <t, h> 1 = mu(phibar_1) <t, (qR_1 <- mu) phibar_2 h_(1) pR_1>
               g qR_2 phibar_3 h_(2) pR_2."""
    D = A.derived()
    d = A.dim
    C2 = A.T(2)
    for (x, y, z), c in A.phi_inv.terms():
        cm = c * A.pair(mu, A.e(x))
        if not cm:
            continue
        for (i, j), cq in D.qR.terms():
            C2.acc(cm * cq,
                   A.vmul(elt_harpoon_l(A, A.e(i), mu), A.e(y)),
                   A.vmul(g, A.e(j), A.e(z)))
    table = []
    for h in range(d):
        T = A.tmul(C2, A.vdelta(A.e(h)), D.pR)
        rhs = [A.field.zero] * d
        for (i, j), c in T.terms():
            if t[i]:
                rhs[j] = rhs[j] + c * t[i]
        th = t[h]
        table.append(rhs == [th * u for u in A.unit])
    return table


def check_progen_condition(A: QuasiHopfAlgebra, g: list, t: list,
                           mu: list) -> bool:
    return all(progen_table(A, g, t, mu))


def progen_solution_space(A: QuasiHopfAlgebra, g: list, mu: list) -> list:
    """All t in HH0 satisfying the projective-generator condition (it is
    linear in t, so this is one kernel computation intersected with HH0)."""
    D = A.derived()
    d = A.dim
    C2 = A.T(2)
    for (x, y, z), c in A.phi_inv.terms():
        cm = c * A.pair(mu, A.e(x))
        if not cm:
            continue
        for (i, j), cq in D.qR.terms():
            C2.acc(cm * cq,
                   A.vmul(elt_harpoon_l(A, A.e(i), mu), A.e(y)),
                   A.vmul(g, A.e(j), A.e(z)))
    rows = []
    for a in range(d):
        for b in range(d):
            ab = A.vmul(A.e(a), A.e(b))
            ba = A.vmul(elt_harpoon_l(A, A.e(b), mu), A.e(a))
            rows.append([x - y for x, y in zip(ab, ba)])
    for h in range(d):
        T = A.tmul(C2, A.vdelta(A.e(h)), D.pR)
        # rows over t: for each output coordinate j:
        #   sum_i T[(i,j)] t_i - unit_j t_h = 0
        M = Matrix(A.field, d, d)
        for (i, j), c in T.terms():
            M.a[j][i] = M.a[j][i] + c
        for j in range(d):
            row = list(M.a[j])
            row[h] = row[h] - A.unit[j]
            rows.append(row)
    return kernel_basis(Matrix(A.field, len(rows), d, rows))


# -- twisted traces on free modules --------------------------------------------


def theta_matrix(A: QuasiHopfAlgebra, V: HModule) -> Matrix:
    """theta: H (x) V0 -> H (x) V, h (x) v |-> h_(1) pR_1 (x) h_(2) pR_2 v."""
    D = A.derived()
    d, nV = A.dim, V.n
    out = Matrix(A.field, d * nV, d * nV)
    for h in range(d):
        for (a, b), cd in A.d2(h):
            for (i, j), c in D.pR.terms():
                hv = A.vmul(A.e(a), A.e(i))
                vm = V.act(A.vmul(A.e(b), A.e(j)))
                coeff = cd * c
                for k, ck in enumerate(hv):
                    if not ck:
                        continue
                    ck2 = coeff * ck
                    for v in range(nV):
                        for w in range(nV):
                            cw = vm.a[w][v]
                            if cw:
                                out.a[k * nV + w][h * nV + v] = \
                                    out.a[k * nV + w][h * nV + v] + ck2 * cw
    return out


def theta_inv_matrix(A: QuasiHopfAlgebra, V: HModule) -> Matrix:
    """theta^-1: h (x) v |-> qR_1 h_(1) (x) S(qR_2 h_(2)) v."""
    D = A.derived()
    d, nV = A.dim, V.n
    out = Matrix(A.field, d * nV, d * nV)
    for h in range(d):
        for (a, b), cd in A.d2(h):
            for (i, j), c in D.qR.terms():
                hv = A.vmul(A.e(i), A.e(a))
                vm = V.act(A.vS(A.vmul(A.e(j), A.e(b))))
                coeff = cd * c
                for k, ck in enumerate(hv):
                    if not ck:
                        continue
                    ck2 = coeff * ck
                    for v in range(nV):
                        for w in range(nV):
                            cw = vm.a[w][v]
                            if cw:
                                out.a[k * nV + w][h * nV + v] = \
                                    out.a[k * nV + w][h * nV + v] + ck2 * cw
    return out


class FreeModuleTrace:
    """The twisted trace t_P on P = H (x) V (tensor action) built from a
    mu-twisted symmetric form through the dual-basis system a_i, b_i that
    the isomorphism theta transports from the free presentation."""

    def __init__(self, A: QuasiHopfAlgebra, t: list, mu: list, V: HModule):
        self.alg = A
        self.t = t
        self.mu = mu
        self.V = V
        self.theta = theta_matrix(A, V)
        self.theta_inv = theta_inv_matrix(A, V)
        if self.theta * self.theta_inv != Matrix.identity(A.field, A.dim * V.n):
            raise AlgebraError("theta is not invertible")
        self.module = tensor_module(regular_module(A), V)
        self.twisted = tensor_module(one_dim_module(A, mu, name="mu"), self.module)

    def is_input_valid(self, f: Matrix) -> bool:
        A = self.alg
        return all(f * self.module.mats[i] == self.twisted.mats[i] * f
                   for i in range(A.dim))

    def value(self, f: Matrix, check: bool = True):
        """t_P(f) for H-linear f: P -> mu (x) P (underlying matrix on P)."""
        A = self.alg
        if check and not self.is_input_valid(f):
            raise AlgebraError("f is not H-linear into the twisted module")
        d, nV = A.dim, self.V.n
        total = A.field.zero
        for i in range(nV):
            a_i1 = [A.field.zero] * (d * nV)
            for h, ch in enumerate(A.unit):
                if ch:
                    a_i1[h * nV + i] = ch
            vec = f.apply(self.theta.apply(a_i1))
            vec = self.theta_inv.apply(vec)
            hpart = [A.field.zero] * d
            for h in range(d):
                hpart[h] = vec[h * nV + i]
            total = total + A.pair(self.t, hpart)
        return total


def random_free_linear(A: QuasiHopfAlgebra, V: HModule, W: HModule,
                       rng, mu: list | None = None) -> Matrix:
    """A random H-linear map H (x) V -> H (x) W (or -> mu (x) (H (x) W)
    when mu is given), generated through the free presentations."""
    d = A.dim
    nV, nW = V.n, W.n

    def rnd():
        if A.field.is_rationals:
            return A.field.of(rng.randrange(-3, 4))
        return A.field.of(rng.randrange(A.field.p))

    # images of 1 (x) v_i: arbitrary vectors in the target underlying space
    images = [[rnd() for _ in range(d * nW)] for _ in range(nV)]
    f0 = Matrix(A.field, d * nW, d * nV)
    for h in range(d):
        if mu is None:
            act = A.lmul_mat(A.e(h)).kron(Matrix.identity(A.field, nW))
        else:
            act = Matrix(A.field, d * nW, d * nW)
            for (a, b), c in A.d2(h):
                cm = c * A.pair(mu, A.e(a))
                if cm:
                    act = act + A.lmul_mat(A.e(b)).kron(
                        Matrix.identity(A.field, nW)).scaled(cm)
        for v in range(nV):
            col = act.apply(images[v])
            for r in range(d * nW):
                f0.a[r][h * nV + v] = col[r]
    th_v = theta_inv_matrix(A, V)
    th_w = theta_matrix(A, W)
    return th_w * f0 * th_v


def gamma_prime(A: QuasiHopfAlgebra, mu: list, xi: list, x: list, y: list) -> Matrix:
    """The spanning maps of Hom_H(H (x) H, mu (x) H (x) H):
    Gamma(h (x) h') = <xi, h'> mu(h_(1)) h_(2) x (x) y, conjugated by theta."""
    d = A.dim
    g0 = Matrix(A.field, d * d, d * d)
    for h in range(d):
        hx = [A.field.zero] * d
        for (a, b), c in A.d2(h):
            cm = c * A.pair(mu, A.e(a))
            if cm:
                prod = A.vmul(A.e(b), x)
                hx = [u + cm * v for u, v in zip(hx, prod)]
        for hp in range(d):
            cxi = xi[hp]
            if not cxi:
                continue
            for i, ci in enumerate(hx):
                if not ci:
                    continue
                for j, cj in enumerate(y):
                    if cj:
                        g0.a[i * d + j][h * d + hp] = cxi * ci * cj
    H = regular_module(A)
    return theta_matrix(A, H) * g0 * theta_inv_matrix(A, H)


def module_trace_property_check(A: QuasiHopfAlgebra, g: list, t: list,
                                mu: list) -> bool:
    """The module-trace compatibility over the full spanning family:
    t_{H(x)H}(Gamma') = t_H(ptr_{H, mu(x)H | H}(Phi^-1 o Gamma')) for all
    basis triples (xi, x, y)."""
    d = A.dim
    H = regular_module(A)
    mu_mod = one_dim_module(A, mu, name="mu")
    muH = tensor_module(mu_mod, H)
    trH = FreeModuleTrace(A, t, mu, H)
    trT = FreeModuleTrace(A, t, mu, trivial_module(A))
    phi_inv_mat = Matrix(A.field, d * d, d * d)
    for (x_, y_, z_), c in A.phi_inv.terms():
        cm = c * A.pair(mu, A.e(x_))
        if cm:
            phi_inv_mat = phi_inv_mat + A.lmul_mat(A.e(y_)).kron(
                A.lmul_mat(A.e(z_))).scaled(cm)
    for m in range(d):
        xi = A.e(m)
        for xb in range(d):
            for yb in range(d):
                gp = gamma_prime(A, mu, xi, A.e(xb), A.e(yb))
                lhs = trH.value(gp)
                expected = t[xb] * xi[yb]
                if lhs != expected:
                    return False
                f2 = phi_inv_mat * gp
                r = partial_pivotal_trace(A, g, f2, H, muH, H,
                                          check_linear=False)
                rhs = trT.value(r, check=False)
                if lhs != rhs:
                    return False
    return True


def trace_cyclicity_check(A: QuasiHopfAlgebra, t: list, mu: list,
                          seed: str, count: int = 20) -> bool:
    """t_P(f o g) = t_Q(Sigma(g) o f) for random H-linear pairs on free
    modules of rank <= 2."""
    rng = _random.Random("cyclicity:" + seed)
    one = trivial_module(A)
    two = HModule(A, [Matrix.identity(A.field, 2).scaled(A.eps(A.e(i)))
                      for i in range(A.dim)], check=False, name="k^2")
    mods = [one, two]
    for _ in range(count):
        V = mods[rng.randrange(2)]
        W = mods[rng.randrange(2)]
        gmap = random_free_linear(A, V, W, rng)
        fmap = random_free_linear(A, W, V, rng, mu=mu)
        trV = FreeModuleTrace(A, t, mu, V)
        trW = FreeModuleTrace(A, t, mu, W)
        if trV.value(fmap * gmap) != trW.value(gmap * fmap, check=False):
            return False
    return True


def left_mu_sym_space(A: QuasiHopfAlgebra, g_inv: list,
                      data: IntegralData | None = None) -> list:
    """{(lam_r o S) <- g^-1 : lam_r a right cointegral}."""
    if data is None:
        data = integral_data(A)
    out = []
    for lam in data.right_cointegrals:
        out.append([A.pair(lam, A.vS(A.vmul(g_inv, A.e(j)))) for j in range(A.dim)])
    return row_space_basis(out, A.field, A.dim)


def unibalanced_criteria(A: QuasiHopfAlgebra, piv: PivotalElement,
                         data: IntegralData | None = None):
    """(by the definition, by trace-line intersection): the two independent
    membership tests whose agreement is the acceptance property."""
    if data is None:
        data = integral_data(A)
    g, g_inv = piv.g, piv.g_inv
    lam_r, lam_l = data.lam_r, data.lam
    u = [A.pair(lam_r, A.vmul(g, A.e(j))) for j in range(A.dim)]
    v = [A.pair(lam_l, A.vmul(g_inv, A.e(j))) for j in range(A.dim)]
    by_definition = in_span([v], u, A.field)
    rt = mu_symmetrized_cointegrals(A, g, data)
    lt = left_mu_sym_space(A, g_inv, data)
    by_lines = bool(rt and lt) and any(lt[0]) and in_span(rt, lt[0], A.field)
    return by_definition, by_lines
