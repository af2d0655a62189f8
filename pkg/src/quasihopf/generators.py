"""Concrete quasi-Hopf algebras used as fixtures.

* group_algebra(n): k[Z_n] with the trivial quasi-Hopf structure.
* dual_group_cocycle(n, p): the function algebra on Z_n over F_p, with the
  associator twisted by the standard 3-cocycle; needs p = 1 (mod n) so F_p
  contains a primitive n-th root of unity.
* sweedler(): the 4-dimensional Hopf algebra over Q (g^2 = 1, x^2 = 0,
  x g = -g x), the smallest non-unimodular fixture with S^2 != id.
* h2(): the 2-dimensional quasi-Hopf algebra over Q with a genuinely
  non-trivial associator.

Every generator validates its output (structure + all eight axioms) and
raises on failure, so a passing constructor is itself a test.
"""

from __future__ import annotations

from .algebra import AlgebraError, QuasiHopfAlgebra
from .field import FieldSpec
from .linalg import Matrix, solve_linear
from .tensor import TensorElt


def _finish(alg: QuasiHopfAlgebra) -> QuasiHopfAlgebra:
    alg = alg.normalize_alpha_beta()
    bad = [e for e in alg.structure_report() + alg.axiom_report() if not e.ok]
    if bad:
        raise AlgebraError("generator %s fails checks: %s" % (alg.name, bad))
    return alg


def group_algebra(n: int, p: int | None = None) -> QuasiHopfAlgebra:
    """k[Z_n]: basis x^0..x^(n-1), Delta(x^i) = x^i (x) x^i, S(x^i) = x^-i."""
    field = FieldSpec.rationals() if p is None else FieldSpec.prime(p)
    one, zero = field.one, field.zero
    d = n
    mul = [[[one if k == (i + j) % n else zero for k in range(d)]
            for j in range(d)] for i in range(d)]
    unit = [one if i == 0 else zero for i in range(d)]
    comul = []
    for j in range(d):
        row = [zero] * (d * d)
        row[j * d + j] = one
        comul.append(row)
    counit = [one] * d
    phi = TensorElt(field, d, 3)
    phi.acc(one, unit, unit, unit)
    S = Matrix(field, d, d)
    for j in range(d):
        S.a[(n - j) % n][j] = one
    basis = ["x^%d" % i for i in range(n)]
    alg = QuasiHopfAlgebra(field, d, basis, mul, unit, comul, counit,
                           phi, S, unit, unit, name="kZ%d" % n)
    return _finish(alg)


def _primitive_root_of_unity(p: int, n: int):
    """Deterministic primitive n-th root of unity in F_p (p = 1 mod n)."""
    if (p - 1) % n != 0:
        raise AlgebraError("need p = 1 (mod n): p=%d, n=%d" % (p, n))
    exps = [n // q for q in range(2, n + 1) if n % q == 0 and _is_prime_small(q)]
    for t in range(2, p):
        z = pow(t, (p - 1) // n, p)
        if z == 1:
            continue
        if all(pow(z, e, p) != 1 for e in exps):
            return z
    raise AlgebraError("no primitive %d-th root of unity mod %d" % (n, p))


def _is_prime_small(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def dual_group_cocycle(n: int, p: int) -> QuasiHopfAlgebra:
    """Function algebra on Z_n with associator from the standard 3-cocycle
    w(a,b,c) = zeta^(a*floor((b+c)/n)), representatives in [0, n)."""
    field = FieldSpec.prime(p)
    one, zero = field.one, field.zero
    z = _primitive_root_of_unity(p, n)
    d = n
    mul = [[[one if (i == j and k == i) else zero for k in range(d)]
            for j in range(d)] for i in range(d)]
    unit = [one] * d
    comul = []
    for i in range(d):
        row = [zero] * (d * d)
        for a in range(d):
            row[a * d + (i - a) % n] = one
        comul.append(row)
    counit = [one if i == 0 else zero for i in range(d)]
    phi = TensorElt(field, d, 3)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                w = pow(z, a * ((b + c) // n), p)
                phi.coords[phi.flat((a, b, c))] = field.of(w)
    S = Matrix(field, d, d)
    for j in range(d):
        S.a[(n - j) % n][j] = one
    basis = ["d%d" % i for i in range(n)]
    beta = list(unit)
    # alpha is determined by the first zig-zag phi_1 beta S(phi_2) alpha phi_3 = 1,
    # which is linear in alpha; solve, then the axiom checks validate it.
    alg0 = QuasiHopfAlgebra(field, d, basis, mul, unit, comul, counit,
                            phi, S, unit, beta, name="kZ%d*_w(F%d)" % (n, p))
    m = Matrix(field, d, d)
    for (i, j, k), c in phi.terms():
        pre = alg0.vmul(alg0.e(i), beta, alg0.vS(alg0.e(j)))
        block = alg0.lmul_mat(pre) * alg0.rmul_mat(alg0.e(k))
        m = m + block.scaled(c)
    alpha = solve_linear(m, list(unit))
    if alpha is None:
        raise AlgebraError("cocycle data admits no alpha (wrong cocycle?)")
    alg = QuasiHopfAlgebra(field, d, basis, mul, unit, comul, counit,
                           phi, S, alpha, beta, name=alg0.name)
    return _finish(alg)


def sweedler() -> QuasiHopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra over Q, basis {1, g, x, gx}."""
    field = FieldSpec.rationals()
    one, zero = field.one, field.zero
    d = 4
    I, G, X, GX = 0, 1, 2, 3

    def sgl(idx, sign=1):
        v = [zero] * d
        if idx is not None:
            v[idx] = field.of(sign)
        return v

    # g^2 = 1, x^2 = 0, x g = -g x
    table = {
        (I, I): (I, 1), (I, G): (G, 1), (I, X): (X, 1), (I, GX): (GX, 1),
        (G, I): (G, 1), (G, G): (I, 1), (G, X): (GX, 1), (G, GX): (X, 1),
        (X, I): (X, 1), (X, G): (GX, -1), (X, X): (None, 1), (X, GX): (None, 1),
        (GX, I): (GX, 1), (GX, G): (X, -1), (GX, X): (None, 1), (GX, GX): (None, 1),
    }
    mul = [[sgl(*table[(i, j)]) for j in range(d)] for i in range(d)]
    unit = sgl(I)
    comul_rows = {
        I: [(I, I, 1)],
        G: [(G, G, 1)],
        X: [(X, I, 1), (G, X, 1)],
        GX: [(GX, G, 1), (I, GX, 1)],
    }
    comul = []
    for j in range(d):
        row = [zero] * (d * d)
        for a, b, s in comul_rows[j]:
            row[a * d + b] = field.of(s)
        comul.append(row)
    counit = [one, one, zero, zero]
    phi = TensorElt(field, d, 3)
    phi.acc(one, unit, unit, unit)
    S = Matrix(field, d, d)
    S.a[I][I] = one
    S.a[G][G] = one
    S.a[GX][X] = field.of(-1)
    S.a[X][GX] = one
    alg = QuasiHopfAlgebra(field, d, ["1", "g", "x", "gx"], mul, unit, comul,
                           counit, phi, S, unit, unit, name="H4")
    return _finish(alg)


def h2() -> QuasiHopfAlgebra:
    """The 2-dimensional quasi-Hopf algebra over Q: x^2 = 1, Delta(x) = x (x) x,
    S(x) = x, alpha = x, beta = 1, phi = 1 - 2 e_- (x) e_- (x) e_-."""
    field = FieldSpec.rationals()
    one, zero, half = field.one, field.zero, field.of("1/2")
    d = 2
    mul = [[[one, zero], [zero, one]], [[zero, one], [one, zero]]]
    unit = [one, zero]
    comul = [[one, zero, zero, zero], [zero, zero, zero, one]]
    counit = [one, one]
    e_minus = [half, -half]
    phi = TensorElt(field, d, 3)
    phi.acc(one, unit, unit, unit)
    phi.acc(field.of(-2), e_minus, e_minus, e_minus)
    S = Matrix.identity(field, d)
    alpha = [zero, one]
    alg = QuasiHopfAlgebra(field, d, ["1", "x"], mul, unit, comul, counit,
                           phi, S, alpha, unit, name="H(2)")
    return _finish(alg)


FIXTURE_BUILDERS = {
    "kZ2": lambda: group_algebra(2),
    "kZ3": lambda: group_algebra(3),
    "kZ4": lambda: group_algebra(4),
    "sweedler": sweedler,
    "h2": h2,
    "dgc-2-5": lambda: dual_group_cocycle(2, 5),
    "dgc-3-7": lambda: dual_group_cocycle(3, 7),
}


def fixture(name: str) -> QuasiHopfAlgebra:
    try:
        return FIXTURE_BUILDERS[name]()
    except KeyError:
        raise AlgebraError("unknown fixture %r (have %s)"
                           % (name, ", ".join(sorted(FIXTURE_BUILDERS)))) from None
