"""Finite-dimensional left H-modules: action matrices, tensor products,
the associator, and the two dual modules with their (co)evaluations.

A module is a list of action matrices, one per algebra basis element,
extended linearly.  Tensor products act through the comultiplication; the
associator is the three-fold action of the associator element and is an
honest matrix here, never the identity.
"""

from __future__ import annotations

from .algebra import AlgebraError, QuasiHopfAlgebra
from .linalg import Matrix


class HModule:
    def __init__(self, alg: QuasiHopfAlgebra, mats: list, check: bool = True,
                 name: str = "V"):
        self.alg = alg
        self.mats = list(mats)
        self.n = mats[0].rows
        self.name = name
        if check:
            err = self.check_action()
            if err:
                raise AlgebraError("%s is not an H-module: %s" % (name, err))

    def check_action(self):
        A = self.alg
        n = self.n
        if any(m.rows != n or m.cols != n for m in self.mats):
            return "action matrices are not square of one size"
        if self.act(A.unit) != Matrix.identity(A.field, n):
            return "unit does not act as the identity"
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.mats[i] * self.mats[j]
                rhs = self.act(A.vmul(A.e(i), A.e(j)))
                if lhs != rhs:
                    return "rho(e_%d) rho(e_%d) != rho(e_%d e_%d)" % (i, j, i, j)
        return None

    def act(self, hvec: list) -> Matrix:
        A = self.alg
        out = Matrix(A.field, self.n, self.n)
        for i, c in enumerate(hvec):
            if c:
                out = out + self.mats[i].scaled(c)
        return out

    def act_vec(self, hvec: list, v: list) -> list:
        return self.act(hvec).apply(v)

    def __repr__(self):
        return "HModule(%s, n=%d)" % (self.name, self.n)


def trivial_module(A: QuasiHopfAlgebra) -> HModule:
    return one_dim_module(A, A.counit, name="1")


def one_dim_module(A: QuasiHopfAlgebra, gamma: list, name: str = "k_gamma") -> HModule:
    mats = [Matrix(A.field, 1, 1, [[gamma[i]]]) for i in range(A.dim)]
    return HModule(A, mats, name=name)


def regular_module(A: QuasiHopfAlgebra) -> HModule:
    return HModule(A, [A.lmul_mat(A.e(i)) for i in range(A.dim)], check=False,
                   name="H")


def tensor_module(V: HModule, W: HModule) -> HModule:
    A = V.alg
    mats = []
    for i in range(A.dim):
        m = Matrix(A.field, V.n * W.n, V.n * W.n)
        for (a, b), c in A.d2(i):
            m = m + V.mats[a].kron(W.mats[b]).scaled(c)
        mats.append(m)
    return HModule(A, mats, check=False, name="%s(x)%s" % (V.name, W.name))


def associator(X: HModule, Y: HModule, Z: HModule, inverse: bool = False) -> Matrix:
    """Phi_{X,Y,Z} (or its inverse) as a matrix on X (x) Y (x) Z."""
    A = X.alg
    t = A.phi_inv if inverse else A.phi
    out = Matrix(A.field, X.n * Y.n * Z.n, X.n * Y.n * Z.n)
    for (i, j, k), c in t.terms():
        out = out + X.mats[i].kron(Y.mats[j]).kron(Z.mats[k]).scaled(c)
    return out


def is_module_map(f: Matrix, V: HModule, W: HModule) -> bool:
    """Is f: V -> W H-linear?"""
    A = V.alg
    return all(f * V.mats[i] == W.mats[i] * f for i in range(A.dim))


class DualModule:
    """A dual module with its evaluation and coevaluation.

    side "left": X~ = X* with h.xi = xi <- S(h), ev(xi (x) x) = <xi, alpha x>,
    coev(1) = beta x_i (x) x^i; the zig-zags
        (id_X (x) ev) Phi_{X,X~,X} (coev (x) id_X) = id_X,
        (ev (x) id) Phi^-1_{X~,X,X~} (id (x) coev) = id_X~
    are checked at construction.

    side "right": ~X = X* with h.xi = xi <- Sbar(h), ev'(x (x) xi) =
    <xi, Sbar(alpha) x>, coev'(1) = x^i (x) Sbar(beta) x_i, with the
    mirrored zig-zags.
    """

    def __init__(self, X: HModule, side: str):
        A = X.alg
        n = X.n
        self.base = X
        self.side = side
        if side == "left":
            mats = [X.act(A.Se(i)).transpose() for i in range(A.dim)]
        elif side == "right":
            mats = [X.act(A.Sbare(i)).transpose() for i in range(A.dim)]
        else:
            raise ValueError("side must be 'left' or 'right'")
        self.module = HModule(A, mats, check=False,
                              name=("%s^v" if side == "left" else "^v%s") % X.name)
        alpha_m = X.act(A.alpha) if side == "left" else X.act(A.vSbar(A.alpha))
        beta_m = X.act(A.beta) if side == "left" else X.act(A.vSbar(A.beta))
        if side == "left":
            # ev: X~ (x) X -> 1, (xi, x) |-> <xi, alpha x>
            ev = Matrix(A.field, 1, n * n)
            for i in range(n):
                for j in range(n):
                    ev.a[0][i * n + j] = alpha_m.a[i][j]
            # coev: 1 -> X (x) X~, 1 |-> beta x_i (x) x^i
            coev = Matrix(A.field, n * n, 1)
            for a in range(n):
                for i in range(n):
                    coev.a[a * n + i][0] = beta_m.a[a][i]
        else:
            # ev': X (x) ~X -> 1, (x, xi) |-> <xi, Sbar(alpha) x>
            ev = Matrix(A.field, 1, n * n)
            for j in range(n):
                for i in range(n):
                    ev.a[0][j * n + i] = alpha_m.a[i][j]
            # coev': 1 -> ~X (x) X, 1 |-> x^i (x) Sbar(beta) x_i
            coev = Matrix(A.field, n * n, 1)
            for i in range(n):
                for a in range(n):
                    coev.a[i * n + a][0] = beta_m.a[a][i]
        self.ev = ev
        self.coev = coev
        err = self._check_zigzags()
        if err:
            raise AlgebraError("dual of %s fails duality: %s" % (X.name, err))

    def _check_zigzags(self):
        A = self.base.alg
        X, Xd = self.base, self.module
        idX = Matrix.identity(A.field, X.n)
        idXd = Matrix.identity(A.field, Xd.n)
        if self.side == "left":
            z1 = idX.kron(self.ev) * associator(X, Xd, X) * self.coev.kron(idX)
            z2 = self.ev.kron(idXd) * associator(Xd, X, Xd, inverse=True) * idXd.kron(self.coev)
        else:
            z1 = idXd.kron(self.ev) * associator(Xd, X, Xd) * self.coev.kron(idXd)
            z2 = self.ev.kron(idX) * associator(X, Xd, X, inverse=True) * idX.kron(self.coev)
            z1, z2 = z2, z1  # report in (base, dual) order
        if z1 != idX:
            return "zig-zag on the base object fails"
        if z2 != idXd:
            return "zig-zag on the dual object fails"
        return None


def dual_module(X: HModule, side: str) -> DualModule:
    return DualModule(X, side)
