"""Deterministic constructions of the matrix-tuple fixtures.

Everything here is closed-form exact arithmetic; no numeric search.  The
central device is ``split_product``: factor a given 2x2 upper-triangular
matrix W as X @ Y with X and Y in prescribed diagonalizable conjugacy
classes.  Writing V = X^-1, the class of X fixes trace(V) and det(V), and
the class of Y fixes trace(V @ W); with W upper triangular these are one
linear condition on the entries of V, so a solution with v21 = 1 can be
written down directly.  Determinants match automatically, so Y = V @ W
lands in its class whenever its two prescribed eigenvalues are distinct.

Irreducibility of the assembled tuples is not an accident: their
eigenvalues are chosen generic (validated through the spectra module), and
a tuple with an invariant line would force a product-one relation among
eigenvalues, one per class.  Builders still verify irreducibility, class
membership and closure, and raise ConstructionFailedError on any mismatch.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .. import exact_linalg as xl
from ..exact_linalg import RatMatrix, rat
from ..jnf import Jnf
from ..spectra import (
    ADDITIVE,
    MULTIPLICATIVE,
    FormalScalar,
    SpectrumAssignment,
    is_generic,
)
from ..tuple_lab import (
    MatrixTuple,
    centralizer_dim,
    centralizer_dim_of,
    is_irreducible,
    jnf_of,
    verify_closure,
)


class WorkbenchError(Exception):
    pass


class ConstructionFailedError(WorkbenchError):
    pass


class SolveFailedError(WorkbenchError):
    pass


Pair = tuple[Fraction, Fraction]


def _pair(a, b) -> Pair:
    return (rat(a), rat(b))


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise ConstructionFailedError(message)


def _prime_exponents(k: int) -> dict[str, int]:
    out: dict[str, int] = {}
    p = 2
    while p * p <= k:
        while k % p == 0:
            out[str(p)] = out.get(str(p), 0) + 1
            k //= p
        p += 1
    if k > 1:
        out[str(k)] = out.get(str(k), 0) + 1
    return out


def scalar_from_rational(x: Fraction, mode: str = MULTIPLICATIVE) -> FormalScalar:
    """Encode a nonzero rational exactly: prime factors become symbol
    exponents and the sign becomes phase 1/2, so multiplicative relations
    between rationals are exactly the visible exponent relations."""
    x = rat(x)
    if mode == ADDITIVE:
        return FormalScalar.additive({}, x)
    if x == 0:
        raise ValueError("0 has no multiplicative encoding")
    exponents: dict[str, int] = {}
    for sym, e in _prime_exponents(x.numerator if x > 0 else -x.numerator).items():
        exponents[sym] = exponents.get(sym, 0) + e
    for sym, e in _prime_exponents(x.denominator).items():
        exponents[sym] = exponents.get(sym, 0) - e
    return FormalScalar.multiplicative(exponents, Fraction(1, 2) if x < 0 else 0)


def spectrum_of_rationals(
    eigenvalue_lists: Sequence[Sequence[Fraction]], mode: str = MULTIPLICATIVE
) -> SpectrumAssignment:
    """Exact symbolic spectrum of concrete rational eigenvalue lists."""
    classes = []
    for lst in eigenvalue_lists:
        counts: dict[Fraction, int] = {}
        for v in lst:
            v = rat(v)
            counts[v] = counts.get(v, 0) + 1
        classes.append([(scalar_from_rational(v, mode), c) for v, c in counts.items()])
    return SpectrumAssignment(classes)


def split_product(w: RatMatrix, second: Pair, third: Pair, v21: Fraction = Fraction(1)) -> tuple[RatMatrix, RatMatrix]:
    """Factor the 2x2 matrix w (upper triangular, distinct diagonal) as
    X @ Y with X diagonalizable in the class of ``second`` and Y in the
    class of ``third``.  Requires det(w) = product of all four eigenvalues'
    pairings: det(second) * det(third)."""
    _check(w.rows == 2 and w.cols == 2, "split_product works on 2x2 matrices")
    _check(w[1, 0] == 0, "split_product needs an upper-triangular w")
    _check(w[0, 0] != w[1, 1], "split_product needs distinct diagonal entries in w")
    a2, b2 = second
    a3, b3 = third
    _check(a2 != b2 and a3 != b3, "classes must have distinct eigenvalues")
    _check(w[0, 0] * w[1, 1] == a2 * b2 * a3 * b3, "determinants do not match")
    tr_v = 1 / a2 + 1 / b2
    det_v = 1 / (a2 * b2)
    target = a3 + b3
    v11 = (target - tr_v * w[1, 1] - v21 * w[0, 1]) / (w[0, 0] - w[1, 1])
    v22 = tr_v - v11
    _check(v21 != 0, "v21 must be nonzero")
    v12 = (v11 * v22 - det_v) / v21
    v = RatMatrix.from_rows([[v11, v12], [v21, v22]])
    x = xl.inverse(v)
    y = v @ w
    _check(x.trace() == a2 + b2, "second factor trace mismatch")
    _check(y.trace() == a3 + b3, "third factor trace mismatch")
    return x, y


def _quadruple(
    matrices: Sequence[RatMatrix], eigenvalue_pairs: Sequence[Pair]
) -> MatrixTuple:
    return MatrixTuple(
        MULTIPLICATIVE,
        matrices,
        [[a, b] for a, b in eigenvalue_pairs],
    )


def _validate_small_tuple(t: MatrixTuple, generic: bool, irreducible: bool) -> None:
    _check(verify_closure(t), "tuple does not close")
    for m, eigs in zip(t.matrices, t.eigenvalue_lists):
        jnf_of(m, eigs)  # raises WrongSpectrumError on a bad class
    if generic:
        rep = is_generic(spectrum_of_rationals(t.eigenvalue_lists))
        _check(rep.verdict == "generic", f"eigenvalues are not generic: {rep.verdict}")
    if irreducible:
        _check(is_irreducible(t), "tuple is unexpectedly reducible")


# Frozen eigenvalue data.  The rigid family uses classes (2,3), (5,7),
# (-1/11, -11/210) and the scalar class -1: the determinant condition
# 6 * 35 * (1/210) * 1 = 1 holds, and no choice of one eigenvalue per
# class multiplies to 1 (checked by the genericity validator).
RIGID_CLASSES: tuple[Pair, ...] = (
    _pair(2, 3),
    _pair(5, 7),
    _pair(Fraction(-1, 11), Fraction(-11, 210)),
    _pair(-1, -1),
)


def build_rigid_quadruple() -> MatrixTuple:
    """Three diagonalizable 2x2 matrices with product -I, completed by the
    scalar -I into a closed quadruple.  The triple is irreducible and its
    class tuple is rigid (index 2)."""
    c1, c2, c3, _ = RIGID_CLASSES
    n1 = RatMatrix.diagonal(c1)
    w = xl.inverse(n1).scale(-1)  # N2 @ N3 must equal -N1^-1
    n2, n3 = split_product(w, c2, c3)
    n4 = RatMatrix.identity(2).scale(-1)
    t = _quadruple([n1, n2, n3, n4], RIGID_CLASSES)
    _validate_small_tuple(t, generic=True, irreducible=True)
    _check(xl.product([n1, n2, n3]) == n4, "triple product is not -I")
    return t


def build_jordan_quadruple() -> MatrixTuple:
    """Same first three classes as the rigid quadruple, but the fourth
    matrix is a Jordan block of size 2 at -1 (index of rigidity 0)."""
    c1, c2, c3, _ = RIGID_CLASSES
    p4 = RatMatrix.from_rows([[-1, 1], [0, -1]])
    p1 = RatMatrix.diagonal(c1)
    w = xl.inverse(p1) @ xl.inverse(p4)  # P2 @ P3 must equal P1^-1 P4^-1
    p2, p3 = split_product(w, c2, c3)
    t = _quadruple([p1, p2, p3, p4], RIGID_CLASSES)
    _validate_small_tuple(t, generic=True, irreducible=True)
    _check(jnf_of(p4, [-1, -1]) == Jnf([("-1", [2])]), "fourth matrix is not a Jordan block")
    return t


def _block2(a: RatMatrix, b: RatMatrix, c: RatMatrix, d: RatMatrix) -> RatMatrix:
    """Assemble [[a, b], [c, d]] from 2x2 blocks into a 4x4 matrix."""
    rows = []
    for i in range(2):
        rows.append(list(a.row(i)) + list(b.row(i)))
    for i in range(2):
        rows.append(list(c.row(i)) + list(d.row(i)))
    return RatMatrix.from_rows(rows)


def _doubled_eigenvalues(pairs: Sequence[Pair]) -> list[list[Fraction]]:
    return [[a, a, b, b] for a, b in pairs]


def build_direct_sum_point(rigid: MatrixTuple, jordan: MatrixTuple) -> MatrixTuple:
    """Block-diagonal 4x4 quadruple diag(N_j, P_j): a direct sum of the two
    non-equivalent 2x2 representations sharing classes 1..3."""
    mats = [_block2(n, RatMatrix.zero(2, 2), RatMatrix.zero(2, 2), p)
            for n, p in zip(rigid.matrices, jordan.matrices)]
    t = MatrixTuple(MULTIPLICATIVE, mats, _doubled_eigenvalues(RIGID_CLASSES))
    _check(verify_closure(t), "direct sum point does not close")
    return t


def build_doubled_point(rigid: MatrixTuple) -> MatrixTuple:
    """Block-diagonal 4x4 quadruple diag(N_j, N_j): direct sum of two copies
    of the rigid representation; the fourth matrix is scalar."""
    mats = [_block2(n, RatMatrix.zero(2, 2), RatMatrix.zero(2, 2), n) for n in rigid.matrices]
    t = MatrixTuple(MULTIPLICATIVE, mats, _doubled_eigenvalues(RIGID_CLASSES))
    _check(verify_closure(t), "doubled point does not close")
    return t


DEFAULT_NILPOTENT = RatMatrix.from_rows([[0, 1], [0, 0]])


def build_semidirect_point(rigid: MatrixTuple, r4: RatMatrix | None = None) -> MatrixTuple:
    """Block upper-triangular 4x4 quadruple [[N_j, R_j], [0, N_j]] with
    R_j = [N_j, Z_j] for j = 1..3 and the given rank-1 nilpotent R_4.

    The upper-right block of the product condition is linear in the Z_j;
    it is solvable because the triple N_1, N_2, N_3 is irreducible, so the
    summed commutator map is onto the trace-zero matrices.
    """
    if r4 is None:
        r4 = DEFAULT_NILPOTENT
    _check(r4.trace() == 0 and xl.rank(r4) == 1, "r4 must be nilpotent of rank 1")
    ns = list(rigid.matrices[:3])
    n4 = rigid.matrices[3]
    _check(n4 == RatMatrix.identity(2).scale(-1), "rigid quadruple must end with -I")
    # sum_j prefix_j [N_j, Z_j] suffix_j = -(N1 N2 N3) R4 = R4
    blocks = []
    for j in range(3):
        prefix = xl.product(ns[:j]) if j else RatMatrix.identity(2)
        suffix = xl.product(ns[j + 1 :] + [n4]) if j < 2 else n4
        ad = xl.left_mul_matrix(ns[j]) - xl.right_mul_matrix(ns[j])
        blocks.append(xl.left_mul_matrix(prefix) @ (xl.right_mul_matrix(suffix) @ ad))
    system = xl.hstack(blocks)
    rhs = RatMatrix.column(r4.entries)
    try:
        solution = xl.solve(system, rhs)
    except xl.NoSolutionError as exc:  # impossible for an irreducible triple
        raise SolveFailedError("upper-right block equation is inconsistent") from exc
    zs = [RatMatrix(2, 2, solution.col(0)[4 * j : 4 * j + 4]) for j in range(3)]
    rs = [xl.commutator(n, z) for n, z in zip(ns, zs)] + [r4]
    mats = [_block2(n, r, RatMatrix.zero(2, 2), n) for n, r in zip(ns + [n4], rs)]
    t = MatrixTuple(MULTIPLICATIVE, mats, _doubled_eigenvalues(RIGID_CLASSES))
    _check(verify_closure(t), "semidirect point does not close")
    _check(
        jnf_of(mats[3], [-1, -1, -1, -1]) == Jnf([("-1", [2, 1, 1])]),
        "fourth matrix has the wrong Jordan structure",
    )
    return t


def hom_dim(a: Sequence[RatMatrix], b: Sequence[RatMatrix]) -> int:
    """dim over Q of {Y : A_j Y = Y B_j for all j} (intertwiners b -> a)."""
    stacked = xl.vstack([xl.left_mul_matrix(x) - xl.right_mul_matrix(y) for x, y in zip(a, b)])
    return xl.nullity(stacked)


# Classes of the three-class size-4 example: eigenvalues (a,a,b,c),
# (f,f,g,h), (u,u,v,w), whose 2x2 diagonal blocks carry (a,b),(f,g),(u,v)
# and (a,c),(f,h),(u,w).  The instantiation below keeps the intended
# relation a*b*f*g*u*v = 1 (hence a*c*f*h*u*w = 1) and nothing else.
TQ_A, TQ_B, TQ_C = rat(2), rat(3), rat(5)
TQ_F, TQ_G, TQ_H = rat(7), rat(11), rat(13)
TQ_U = Fraction(1, 23)
TQ_V = 1 / (TQ_A * TQ_B * TQ_F * TQ_G * TQ_U)
TQ_W = 1 / (TQ_A * TQ_C * TQ_F * TQ_H * TQ_U)


def build_triple(classes: Sequence[Pair]) -> MatrixTuple:
    """An irreducible 2x2 triple with product I in the three given
    diagonalizable classes (eigenvalue product over all classes must be 1
    and the eigenvalues generic)."""
    c1, c2, c3 = classes
    _check(c1[0] != c1[1], "first class needs distinct eigenvalues")
    l1 = RatMatrix.diagonal(c1)
    w = xl.inverse(l1)
    l2, l3 = split_product(w, c2, c3)
    t = MatrixTuple(MULTIPLICATIVE, [l1, l2, l3], [[a, b] for a, b in classes])
    _validate_small_tuple(t, generic=True, irreducible=True)
    return t


def build_first_block_triple() -> MatrixTuple:
    return build_triple([_pair(TQ_A, TQ_B), _pair(TQ_F, TQ_G), _pair(TQ_U, TQ_V)])


def build_second_block_triple() -> MatrixTuple:
    return build_triple([_pair(TQ_A, TQ_C), _pair(TQ_F, TQ_H), _pair(TQ_U, TQ_W)])


def _tq_eigenvalues() -> list[list[Fraction]]:
    return [
        [TQ_A, TQ_A, TQ_B, TQ_C],
        [TQ_F, TQ_F, TQ_G, TQ_H],
        [TQ_U, TQ_U, TQ_V, TQ_W],
    ]


def build_block_diagonal_triple(first: MatrixTuple, second: MatrixTuple) -> MatrixTuple:
    mats = [_block2(l, RatMatrix.zero(2, 2), RatMatrix.zero(2, 2), b)
            for l, b in zip(first.matrices, second.matrices)]
    t = MatrixTuple(MULTIPLICATIVE, mats, _tq_eigenvalues())
    _check(verify_closure(t), "block-diagonal triple does not close")
    return t


def triangular_spaces(first: MatrixTuple, second: MatrixTuple) -> dict:
    """The linear spaces attached to block upper-triangular triples
    [[L_j, T_j], [0, B_j]] with product I.

    * full space: triples (T_1, T_2, T_3) with T_j = L_j Y_j - Y_j B_j for
      independent Y_j, subject to the upper-right block of the product
      condition T_1 B_2 B_3 + L_1 T_2 B_3 + L_1 L_2 T_3 = 0;
    * conjugation subspace: the triples with one common Y.

    Returns both dimensions, bases, and a representative of the full space
    outside the conjugation subspace.
    """
    ls = first.matrices
    bs = second.matrices
    maps = [xl.left_mul_matrix(l) - xl.right_mul_matrix(b) for l, b in zip(ls, bs)]
    zero = RatMatrix.zero(4, 4)
    phi = xl.vstack([
        xl.hstack([maps[0], zero, zero]),
        xl.hstack([zero, maps[1], zero]),
        xl.hstack([zero, zero, maps[2]]),
    ])
    constraint = xl.hstack([
        xl.right_mul_matrix(bs[1] @ bs[2]),
        xl.left_mul_matrix(ls[0]) @ xl.right_mul_matrix(bs[2]),
        xl.left_mul_matrix(ls[0] @ ls[1]),
    ])
    # T = image(phi) intersected with ker(constraint); since ker(phi) is
    # inside ker(constraint . phi), dim T = rank(phi) - rank(constraint . phi)
    composed = constraint @ phi
    kernel = xl.nullspace_basis(composed)
    t_vectors: list[RatMatrix] = []
    t_rows: list[list[Fraction]] = []
    for vec in kernel:
        image = phi @ vec
        candidate = t_rows + [list(image.entries)]
        if xl.rank(RatMatrix.from_rows(candidate)) > len(t_rows):
            t_rows = candidate
            t_vectors.append(image)
    psi = xl.vstack(maps)
    q_vectors = [psi @ RatMatrix.column([Fraction(int(i == k)) for i in range(4)]) for k in range(4)]
    q_rows = [list(v.entries) for v in q_vectors]
    dim_q = xl.rank(RatMatrix.from_rows(q_rows))
    representative = None
    for vec in t_vectors:
        if xl.rank(RatMatrix.from_rows(q_rows + [list(vec.entries)])) > dim_q:
            representative = vec
            break
    _check(representative is not None, "no representative outside the conjugation subspace")
    return {
        "dim_full": len(t_vectors),
        "dim_conjugation": dim_q,
        "full_basis": t_vectors,
        "conjugation_basis": q_vectors,
        "representative": representative,
    }


def build_triangular_triple(first: MatrixTuple, second: MatrixTuple) -> MatrixTuple:
    """A block upper-triangular triple with trivial centralizer: the
    upper-right blocks span the full space modulo the conjugation subspace."""
    spaces = triangular_spaces(first, second)
    rep = spaces["representative"]
    ts = [RatMatrix(2, 2, rep.col(0)[4 * j : 4 * j + 4]) for j in range(3)]
    mats = [_block2(l, t_blk, RatMatrix.zero(2, 2), b)
            for l, t_blk, b in zip(first.matrices, ts, second.matrices)]
    t = MatrixTuple(MULTIPLICATIVE, mats, _tq_eigenvalues())
    _check(verify_closure(t), "triangular triple does not close")
    _check(centralizer_dim(t) == 1, "triangular triple centralizer is not trivial")
    return t


# Size-2 classes for the zero-index example: four diagonalizable classes
# with distinct eigenvalue pairs, generic, product of all eigenvalues 1.
ZERO_INDEX_CLASSES: tuple[Pair, ...] = (
    _pair(2, 3),
    _pair(5, 7),
    _pair(11, 13),
    _pair(Fraction(1, 97), Fraction(97, 30030)),
)


def _build_zero_index_quadruple(w_diag: tuple[int, int], omega: Fraction = Fraction(0)) -> MatrixTuple:
    c1, c2, c3, c4 = ZERO_INDEX_CLASSES
    w1, w2 = w_diag
    b1 = RatMatrix.diagonal(c1)
    winv = RatMatrix.from_rows([[w1, omega], [0, w2]])
    b2 = xl.inverse(b1) @ winv
    _check(sorted((b2[0, 0], b2[1, 1])) == sorted(c2), "second matrix class mismatch")
    w = xl.inverse(winv)
    b3, b4 = split_product(w, c3, c4)
    t = _quadruple([b1, b2, b3, b4], ZERO_INDEX_CLASSES)
    _validate_small_tuple(t, generic=True, irreducible=True)
    return t


def build_zero_index_pair() -> tuple[MatrixTuple, MatrixTuple, MatrixTuple]:
    """Two non-equivalent irreducible 2x2 quadruples in the same generic
    zero-index classes, plus their block-diagonal direct sum.  The diagonal
    factorizations (10, 21) and (14, 15) of det(B1 B2) = 210 give different
    values of trace(B1 B2), so the quadruples cannot be conjugate."""
    first = _build_zero_index_quadruple((10, 21))
    second = _build_zero_index_quadruple((14, 15))
    _check(hom_dim(first.matrices, second.matrices) == 0, "quadruples are equivalent")
    _check(hom_dim(second.matrices, first.matrices) == 0, "quadruples are equivalent")
    mats = [_block2(a, RatMatrix.zero(2, 2), RatMatrix.zero(2, 2), b)
            for a, b in zip(first.matrices, second.matrices)]
    pair = MatrixTuple(MULTIPLICATIVE, mats, _doubled_eigenvalues(ZERO_INDEX_CLASSES))
    _check(verify_closure(pair), "direct sum pair does not close")
    _check(centralizer_dim_of(pair.matrices) == 2, "direct sum pair centralizer dimension")
    return first, second, pair


# Classes of the four-class size-3 example: eigenvalues (a,1,1), (b,1,1),
# (c,1,1), (d,1,1) with a*b*c*d = 1.
EX4_A, EX4_B, EX4_C = rat(2), rat(3), rat(5)
EX4_D = 1 / (EX4_A * EX4_B * EX4_C)


def build_trivial_centralizer_quadruple() -> MatrixTuple:
    """A reducible 3x3 quadruple with trivial centralizer: product I holds
    identically in a, d once b, c are matched with the off-diagonal entries."""
    a, b, c, d = EX4_A, EX4_B, EX4_C, EX4_D
    m1 = RatMatrix.from_rows([[a, 0, 0], [0, 1, 0], [0, 0, 1]])
    m2 = RatMatrix.from_rows([[b, 1, 0], [0, 1, 0], [0, 0, 1]])
    m3 = RatMatrix.from_rows([[c, 0, 1], [0, 1, 0], [0, 0, 1]])
    m4 = RatMatrix.from_rows([[d, -1 / (b * c), -1 / c], [0, 1, 0], [0, 0, 1]])
    t = MatrixTuple(MULTIPLICATIVE, [m1, m2, m3, m4], [[v, 1, 1] for v in (a, b, c, d)])
    _check(verify_closure(t), "first quadruple does not close")
    return t


def build_split_sum_quadruple() -> MatrixTuple:
    """A 3x3 quadruple that is the direct sum of an irreducible rank-2
    representation and the trivial one-dimensional representation."""
    a, b, c, d = EX4_A, EX4_B, EX4_C, EX4_D
    m1 = RatMatrix.from_rows([[a, 1, 0], [0, 1, 0], [0, 0, 1]])
    m2 = RatMatrix.from_rows([[b, -1 / a, 0], [0, 1, 0], [0, 0, 1]])
    m3 = RatMatrix.from_rows([[c, 0, 0], [-1 / d, 1, 0], [0, 0, 1]])
    m4 = RatMatrix.from_rows([[d, 0, 0], [1, 1, 0], [0, 0, 1]])
    t = MatrixTuple(MULTIPLICATIVE, [m1, m2, m3, m4], [[v, 1, 1] for v in (a, b, c, d)])
    _check(verify_closure(t), "second quadruple does not close")
    return t
