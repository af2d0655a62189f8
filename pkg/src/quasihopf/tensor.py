"""Elements of H^(x)n as dense coordinate vectors with leg-wise operations.

Conventions (used everywhere in this package):

* legs are numbered 1..n, leg 1 is the slowest-varying index: the basis
  tensor e_{i1} (x) ... (x) e_{in} sits at flat position
  sum_k i_k * d^(n-k);
* arity 0 is a single scalar;
* structure maps are applied to a leg as matrices: a d x d matrix keeps the
  arity, a d^2 x d matrix (comultiplication) raises it by one, a 1 x d row
  (a functional) lowers it by one.

Products in H^(x)n are componentwise; an optional set of "op legs" lets a
leg multiply in the opposite order (needed for the five-leg associator
element, whose last two legs live in the opposite algebra).
"""

from __future__ import annotations

from .field import FieldSpec, same_field
from .linalg import Matrix, solve_linear


class TensorElt:
    __slots__ = ("field", "dim", "arity", "coords")

    def __init__(self, field: FieldSpec, dim: int, arity: int, coords=None):
        self.field = field
        self.dim = dim
        self.arity = arity
        n = dim ** arity
        if coords is None:
            self.coords = [field.zero] * n
        else:
            if len(coords) != n:
                raise ValueError("expected %d coordinates, got %d" % (n, len(coords)))
            self.coords = list(coords)

    # -- constructors -------------------------------------------------

    @classmethod
    def scalar(cls, field, dim, value) -> "TensorElt":
        return cls(field, dim, 0, [value])

    @classmethod
    def from_vector(cls, field, dim, vec) -> "TensorElt":
        return cls(field, dim, 1, vec)

    # -- indexing helpers ---------------------------------------------

    def _strides(self):
        d, n = self.dim, self.arity
        return [d ** (n - k - 1) for k in range(n)]

    def flat(self, idx: tuple) -> int:
        pos = 0
        for i in idx:
            pos = pos * self.dim + i
        return pos

    def unflat(self, pos: int) -> tuple:
        idx = []
        for _ in range(self.arity):
            idx.append(pos % self.dim)
            pos //= self.dim
        return tuple(reversed(idx))

    def terms(self):
        """Yield (multi-index tuple, coeff) over nonzero coordinates."""
        for pos, c in enumerate(self.coords):
            if c:
                yield self.unflat(pos), c

    def nnz(self) -> int:
        return sum(1 for c in self.coords if c)

    def get(self, idx: tuple):
        return self.coords[self.flat(idx)]

    def acc(self, coeff, *vecs):
        """Accumulate coeff * (vec_1 (x) ... (x) vec_n), vectors over H."""
        if len(vecs) != self.arity:
            raise ValueError("arity mismatch in acc")
        if not coeff:
            return self
        idx = [0] * len(vecs)
        d = self.dim

        def rec(k, pos, c):
            if not c:
                return
            if k == len(vecs):
                self.coords[pos] = self.coords[pos] + c
                return
            v = vecs[k]
            for i in range(d):
                if v[i]:
                    rec(k + 1, pos * d + i, c * v[i])

        rec(0, 0, coeff)
        return self

    # -- linear structure ----------------------------------------------

    def copy(self) -> "TensorElt":
        return TensorElt(self.field, self.dim, self.arity, self.coords)

    def __add__(self, other):
        self._check_compatible(other)
        return TensorElt(self.field, self.dim, self.arity,
                         [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check_compatible(other)
        return TensorElt(self.field, self.dim, self.arity,
                         [a - b for a, b in zip(self.coords, other.coords)])

    def scaled(self, c) -> "TensorElt":
        return TensorElt(self.field, self.dim, self.arity, [c * x for x in self.coords])

    def __eq__(self, other):
        return (
            isinstance(other, TensorElt)
            and self.arity == other.arity
            and self.dim == other.dim
            and self.coords == other.coords
        )

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def _check_compatible(self, other):
        same_field(self.field, other.field)
        if self.dim != other.dim or self.arity != other.arity:
            raise ValueError("tensor shape mismatch: (%d,%d) vs (%d,%d)"
                             % (self.dim, self.arity, other.dim, other.arity))

    def __repr__(self):
        return "TensorElt(arity=%d, dim=%d, nnz=%d)" % (self.arity, self.dim, self.nnz())


# -- calculus ----------------------------------------------------------


def kron(a: TensorElt, b: TensorElt) -> TensorElt:
    """Outer product: legs of a first, then legs of b."""
    same_field(a.field, b.field)
    if a.dim != b.dim:
        raise ValueError("dim mismatch in kron")
    out = TensorElt(a.field, a.dim, a.arity + b.arity)
    nb = b.dim ** b.arity
    for pa, ca in enumerate(a.coords):
        if not ca:
            continue
        base = pa * nb
        for pb, cb in enumerate(b.coords):
            if cb:
                out.coords[base + pb] = ca * cb
    return out


def permute_legs(t: TensorElt, perm: tuple) -> TensorElt:
    """Output leg k holds input leg perm[k-1]; perm is a bijection on 1..n."""
    n = t.arity
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("invalid permutation %r for arity %d" % (perm, n))
    out = TensorElt(t.field, t.dim, n)
    for idx, c in t.terms():
        # output index j with j_k = idx[perm[k]-1]
        j = tuple(idx[perm[k] - 1] for k in range(n))
        out.coords[out.flat(j)] = c
    return out


def tensor_mul(a: TensorElt, b: TensorElt, alg, op_legs: frozenset | set = frozenset()) -> TensorElt:
    """Componentwise product in H^(x)n; legs in op_legs multiply reversed."""
    a._check_compatible(b)
    n = a.arity
    d = a.dim
    out = TensorElt(a.field, a.dim, n)
    ta = list(a.terms())
    tb = list(b.terms())
    swap = [(k + 1) in op_legs for k in range(n)]
    coords = out.coords
    table = getattr(alg, "mul_single", None)
    if table is not None:
        # fast path: every basis product is a single scaled basis element
        one = a.field.one
        for ia, ca in ta:
            for ib, cb in tb:
                c = ca * cb
                pos = 0
                for k in range(n):
                    x, y = (ib[k], ia[k]) if swap[k] else (ia[k], ib[k])
                    cell = table[x][y]
                    if cell is None:
                        pos = -1
                        break
                    kk, cf = cell
                    if cf is not one:
                        c = c * cf
                    pos = pos * d + kk
                if pos >= 0:
                    coords[pos] = coords[pos] + c
        return out
    mul = alg.mul_basis
    for ia, ca in ta:
        for ib, cb in tb:
            # product of two basis tensors: expand leg by leg
            partial = [((), ca * cb)]
            for k in range(n):
                x, y = (ib[k], ia[k]) if swap[k] else (ia[k], ib[k])
                row = mul(x, y)
                if not row:
                    partial = []
                    break
                partial = [(idx + (kk,), c * ck) for idx, c in partial for kk, ck in row]
            for idx, c in partial:
                pos = out.flat(idx)
                coords[pos] = coords[pos] + c
    return out


def apply_leg(op: Matrix, t: TensorElt, leg: int) -> TensorElt:
    """Apply a structure map to one leg.

    op is d x d (endomorphism, arity kept), d^2 x d (comultiplication-like,
    arity +1) or 1 x d (functional, arity -1); columns are images of basis
    vectors.
    """
    n, d = t.arity, t.dim
    if not 1 <= leg <= n:
        raise ValueError("leg %d out of range for arity %d" % (leg, n))
    if op.cols != d:
        raise ValueError("operator expects dim %d, got %d" % (op.cols, d))
    if op.rows == d:
        extra = 1
    elif op.rows == d * d:
        extra = 2
    elif op.rows == 1:
        extra = 0
    else:
        raise ValueError("operator rows must be 1, d or d^2")
    out = TensorElt(t.field, d, n - 1 + extra)
    for idx, c in t.terms():
        col = op.column(idx[leg - 1])
        head, tail = idx[: leg - 1], idx[leg:]
        for r, cr in enumerate(col):
            if not cr:
                continue
            if extra == 1:
                j = head + (r,) + tail
            elif extra == 2:
                j = head + (r // d, r % d) + tail
            else:
                j = head + tail
            pos = out.flat(j)
            out.coords[pos] = out.coords[pos] + c * cr
    return out


def contract_functional(xi: list, t: TensorElt, leg: int) -> TensorElt:
    """Pair a functional (length-d row) with one leg, lowering arity."""
    field = t.field
    row = Matrix(field, 1, t.dim, [list(xi)])
    return apply_leg(row, t, leg)


def fuse_legs(t: TensorElt, leg: int, alg, mid: list | None = None) -> TensorElt:
    """Multiply legs (leg, leg+1) together via the algebra product; an
    optional constant vector is inserted between them."""
    n, d = t.arity, t.dim
    if not 1 <= leg <= n - 1:
        raise ValueError("cannot fuse legs %d,%d of arity %d" % (leg, leg + 1, n))
    out = TensorElt(t.field, d, n - 1)
    for idx, c in t.terms():
        i, j = idx[leg - 1], idx[leg]
        if mid is None:
            row = alg.mul_basis(i, j)
        else:
            v = alg.vmul(alg.e(i), mid, alg.e(j))
            row = [(k, ck) for k, ck in enumerate(v) if ck]
        head, tail = idx[: leg - 1], idx[leg + 1:]
        for k, ck in row:
            pos = out.flat(head + (k,) + tail)
            out.coords[pos] = out.coords[pos] + c * ck
    return out


def embed(t: TensorElt, arity: int, legs: tuple, alg) -> TensorElt:
    """Place the legs of t at the given positions of a wider tensor, all
    other legs holding the unit of the algebra."""
    if len(legs) != t.arity:
        raise ValueError("need one target position per leg")
    rest = [k for k in range(1, arity + 1) if k not in legs]
    wide = kron(t, unit_tensor(alg, arity - t.arity))
    # wide leg order: t legs then unit legs; send them to their targets
    src_of = {}
    for pos, target in enumerate(list(legs) + rest, start=1):
        src_of[target] = pos
    perm = tuple(src_of[k] for k in range(1, arity + 1))
    return permute_legs(wide, perm)


def weave_mul(a: TensorElt, legs_a: tuple, b: TensorElt, legs_b: tuple,
              arity: int, alg, op_legs: frozenset | set = frozenset()) -> TensorElt:
    """Product of a placed at legs_a with b placed at legs_b.

    Equivalent to tensor_mul(embed(a, ...), embed(b, ...)) but without ever
    materialising unit legs; every output leg must be covered by at least
    one operand.  On legs covered by both, the product is a_leg * b_leg
    (reversed for legs in op_legs).
    """
    same_field(a.field, b.field)
    if len(legs_a) != a.arity or len(legs_b) != b.arity:
        raise ValueError("leg lists do not match operand arities")
    cover = set(legs_a) | set(legs_b)
    if cover != set(range(1, arity + 1)):
        raise ValueError("output legs %s not fully covered" % sorted(set(range(1, arity + 1)) - cover))
    pos_a = {leg: i for i, leg in enumerate(legs_a)}
    pos_b = {leg: i for i, leg in enumerate(legs_b)}
    d = a.dim
    out = TensorElt(a.field, d, arity)
    coords = out.coords
    ta = list(a.terms())
    tb = list(b.terms())
    plan = []
    for k in range(1, arity + 1):
        ia, ib = pos_a.get(k), pos_b.get(k)
        swap = k in op_legs
        plan.append((ia, ib, swap))
    table = getattr(alg, "mul_single", None)
    mul = alg.mul_basis
    one = a.field.one
    for ia, ca in ta:
        for ib, cb in tb:
            c = ca * cb
            if table is not None:
                pos = 0
                for pa, pb, swap in plan:
                    if pa is None:
                        kk = ib[pb]
                    elif pb is None:
                        kk = ia[pa]
                    else:
                        x, y = (ib[pb], ia[pa]) if swap else (ia[pa], ib[pb])
                        cell = table[x][y]
                        if cell is None:
                            pos = -1
                            break
                        kk, cf = cell
                        if cf is not one:
                            c = c * cf
                    pos = pos * d + kk
                if pos >= 0:
                    coords[pos] = coords[pos] + c
            else:
                partial = [((), c)]
                for pa, pb, swap in plan:
                    if pa is None:
                        partial = [(idx + (ib[pb],), cc) for idx, cc in partial]
                    elif pb is None:
                        partial = [(idx + (ia[pa],), cc) for idx, cc in partial]
                    else:
                        x, y = (ib[pb], ia[pa]) if swap else (ia[pa], ib[pb])
                        row = mul(x, y)
                        if not row:
                            partial = []
                            break
                        partial = [(idx + (kk,), cc * ck) for idx, cc in partial for kk, ck in row]
                for idx, cc in partial:
                    pos = out.flat(idx)
                    coords[pos] = coords[pos] + cc
    return out


def unit_tensor(alg, arity: int) -> TensorElt:
    out = TensorElt(alg.field, alg.dim, arity)
    vecs = [alg.unit] * arity
    out.acc(alg.field.one, *vecs)
    return out


def tensor_invert(t: TensorElt, alg, op_legs: frozenset | set = frozenset()):
    """Two-sided inverse of t in the componentwise algebra H^(x)n, or None.

    Solves x * t = 1 and then checks t * x = 1 as well.
    """
    if t.arity < 1:
        raise ValueError("arity must be >= 1")
    n = t.dim ** t.arity
    one = unit_tensor(alg, t.arity)
    # matrix of right-multiplication by t: x -> x*t, as columns over basis x
    m = Matrix(t.field, n, n)
    basis = TensorElt(t.field, t.dim, t.arity)
    for j in range(n):
        basis.coords = [t.field.zero] * n
        basis.coords[j] = t.field.one
        col = tensor_mul(basis, t, alg, op_legs)
        for i in range(n):
            m.a[i][j] = col.coords[i]
    x = solve_linear(m, one.coords)
    if x is None:
        return None
    cand = TensorElt(t.field, t.dim, t.arity, x)
    if tensor_mul(t, cand, alg, op_legs) != one:
        return None
    return cand
