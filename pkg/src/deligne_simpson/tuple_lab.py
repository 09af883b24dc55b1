"""Analysis of explicit rational matrix tuples.

A ``MatrixTuple`` is a list of n x n rational matrices, either in
multiplicative mode (intended product I) or additive mode (intended sum 0),
each with a caller-supplied list of its n eigenvalues.  Eigenvalues are
validated against rank sequences rather than computed, so everything stays
inside exact rational arithmetic.

The checks provided:

* ``verify_closure`` -- exact product-is-I / sum-is-0 test;
* ``jnf_of`` / ``class_membership`` -- Jordan structure from the rank
  sequence rank((m - lam I)^k);
* ``centralizer_dim`` and ``commut_surjective`` -- kernel and image
  dimensions of the stacked commutator maps on the n^2-dimensional matrix
  space (a tuple has trivial centralizer iff the summed commutator map is
  onto the trace-zero matrices);
* ``is_irreducible`` -- the generated unital algebra has dimension n^2
  (Burnside's criterion);
* ``tangent_dim`` -- dimension of the solution variety's tangent space at
  the tuple, via the kernel of the product/sum differential;
* ``orbit_dim`` -- dimension of the simultaneous conjugation orbit.

All dimensions are reported in the full matrix algebra gl(n) convention;
determinant-one conventions found in the literature are these values
minus 1 when the determinant constraint is transverse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from . import exact_linalg as xl
from .exact_linalg import RatMatrix, rat, rational_from_str, rational_to_str
from .jnf import Jnf, Partition
from .reduction import JnfTuple, expected_dim  # noqa: F401  (re-exported)

MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


class TupleLabError(Exception):
    pass


class WrongSpectrumError(TupleLabError):
    pass


class ClosureViolatedError(TupleLabError):
    pass


class MatrixTuple:
    """Square rational matrices of one size, with claimed eigenvalue lists."""

    __slots__ = ("mode", "matrices", "eigenvalue_lists")

    def __init__(
        self,
        mode: str,
        matrices: Sequence[RatMatrix],
        eigenvalue_lists: Sequence[Sequence[int | str | Fraction]],
    ):
        if mode not in (MULTIPLICATIVE, ADDITIVE):
            raise ValueError(f"unknown mode {mode!r}")
        mats = tuple(matrices)
        if not mats:
            raise ValueError("need at least one matrix")
        n = mats[0].rows
        for m in mats:
            if m.rows != m.cols or m.rows != n:
                raise ValueError("all matrices must be square of one common size")
        eigs = tuple(tuple(rat(x) for x in lst) for lst in eigenvalue_lists)
        if len(eigs) != len(mats):
            raise ValueError("need one eigenvalue list per matrix")
        for lst in eigs:
            if len(lst) != n:
                raise ValueError(f"each eigenvalue list must have length {n}")
            if mode == MULTIPLICATIVE and any(x == 0 for x in lst):
                raise ValueError("multiplicative-mode eigenvalues must be nonzero")
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "eigenvalue_lists", eigs)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixTuple is immutable")

    @property
    def n(self) -> int:
        return self.matrices[0].rows

    def __len__(self) -> int:
        return len(self.matrices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixTuple):
            return NotImplemented
        return (self.mode, self.matrices, self.eigenvalue_lists) == (
            other.mode,
            other.matrices,
            other.eigenvalue_lists,
        )

    def __repr__(self) -> str:
        return f"MatrixTuple({self.mode}, {len(self.matrices)} matrices of size {self.n})"

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "matrices": [m.to_json() for m in self.matrices],
            "eigenvalues": [[rational_to_str(x) for x in lst] for lst in self.eigenvalue_lists],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> MatrixTuple:
        return cls(
            data["mode"],
            [RatMatrix.from_json(m) for m in data["matrices"]],
            data["eigenvalues"],
        )


def verify_closure(t: MatrixTuple) -> bool:
    """Exact check of product = I (multiplicative) or sum = 0 (additive)."""
    if t.mode == MULTIPLICATIVE:
        for m in t.matrices:
            if xl.rank(m) != t.n:
                raise xl.SingularMatrixError("multiplicative-mode matrix is singular")
        return xl.product(t.matrices).is_identity()
    total = t.matrices[0]
    for m in t.matrices[1:]:
        total = total + m
    return total.is_zero()


def jnf_of(m: RatMatrix, eigenvalues: Sequence[int | str | Fraction]) -> Jnf:
    """Jordan normal form of m, given its eigenvalues with multiplicities.

    For each distinct claimed eigenvalue lam the rank sequence
    rho_k = rank((m - lam I)^k) yields the number of blocks of size >= k
    as rho_{k-1} - rho_k; the block partition is the conjugate of that
    count sequence.  Raises WrongSpectrumError when the implied algebraic
    multiplicities disagree with the claim.
    """
    if m.rows != m.cols:
        raise xl.ShapeMismatchError("jnf_of needs a square matrix")
    n = m.rows
    values = [rat(x) for x in eigenvalues]
    if len(values) != n:
        raise ValueError(f"expected {n} eigenvalues, got {len(values)}")
    claimed: dict[Fraction, int] = {}
    for v in values:
        claimed[v] = claimed.get(v, 0) + 1
    entries = []
    for lam in sorted(claimed):
        shifted = m - RatMatrix.identity(n).scale(lam)
        counts = []
        power = shifted
        prev = n
        while True:
            r = xl.rank(power)
            if r == prev:
                break
            counts.append(prev - r)
            prev = r
            if r == 0:
                break
            power = power @ shifted
        if not counts:
            raise WrongSpectrumError(f"{lam} is not an eigenvalue")
        if sum(counts) != claimed[lam]:
            raise WrongSpectrumError(
                f"eigenvalue {lam}: algebraic multiplicity {sum(counts)} != claimed {claimed[lam]}"
            )
        entries.append((rational_to_str(lam), Partition(counts).dual()))
    return Jnf(entries)


def class_membership(m: RatMatrix, j: Jnf) -> bool:
    """True iff m has JNF j, where j's labels are concrete rational values."""
    try:
        values = []
        for label, part in j.blocks_by_eigenvalue:
            values.extend([rational_from_str(label)] * part.total())
    except ValueError as exc:
        raise ValueError("class_membership needs rational eigenvalue labels") from exc
    if len(values) != m.rows:
        raise xl.ShapeMismatchError("JNF size differs from the matrix size")
    try:
        return jnf_of(m, values) == j
    except WrongSpectrumError:
        return False


def jordan_realization(j: Jnf, values: Mapping[str, int | str | Fraction] | None = None) -> RatMatrix:
    """A block-diagonal matrix realizing j; labels parse as the eigenvalues
    unless an explicit label-to-value mapping is supplied."""
    n = j.size
    rows = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for label, part in j.blocks_by_eigenvalue:
        lam = rat(values[label]) if values is not None else rational_from_str(label)
        for b in part.parts:
            for k in range(b):
                rows[pos + k][pos + k] = lam
                if k + 1 < b:
                    rows[pos + k][pos + k + 1] = Fraction(1)
            pos += b
    return RatMatrix.from_rows(rows)


def centralizer_dim_of(matrices: Sequence[RatMatrix]) -> int:
    """dim over Q of {X : [M, X] = 0 for every M}; at least 1 (scalars)."""
    stacked = xl.vstack([xl.vectorize_commutator_map(m) for m in matrices])
    return xl.nullity(stacked)


def centralizer_dim(t: MatrixTuple) -> int:
    return centralizer_dim_of(t.matrices)


def has_trivial_centralizer(t: MatrixTuple) -> bool:
    return centralizer_dim(t) == 1


def commut_surjective(t: MatrixTuple) -> bool:
    """True iff (X_1, ..., X_{p+1}) -> sum_j [M_j, X_j] maps onto the
    trace-zero matrices; equivalent to the centralizer being trivial."""
    stacked = xl.hstack([xl.vectorize_commutator_map(m) for m in t.matrices])
    return xl.rank(stacked) == t.n**2 - 1


def is_irreducible(t: MatrixTuple) -> bool:
    """Burnside criterion: the unital algebra generated by the matrices has
    dimension n^2.  The span is closed by repeatedly multiplying the current
    basis by the generators; starting from I that reaches every word."""
    n = t.n
    target = n * n
    generators = list(t.matrices)
    basis_rows: list[list[Fraction]] = []
    pivots: list[int] = []

    def try_add(vec: list[Fraction]) -> bool:
        for row, piv in zip(basis_rows, pivots):
            if vec[piv] != 0:
                f = vec[piv]
                vec = [x - f * y for x, y in zip(vec, row)]
        lead = next((i for i, x in enumerate(vec) if x != 0), None)
        if lead is None:
            return False
        inv = 1 / vec[lead]
        vec = [x * inv for x in vec]
        basis_rows.append(vec)
        pivots.append(lead)
        return True

    frontier = [RatMatrix.identity(n)] + generators
    for m in frontier:
        try_add(list(m.entries))
    for _ in range(target):
        if len(basis_rows) == target:
            break
        new_frontier = []
        for m in frontier:
            for g in generators:
                prod = m @ g
                if try_add(list(prod.entries)):
                    new_frontier.append(prod)
        if not new_frontier:
            break
        frontier = new_frontier
    return len(basis_rows) == target


def _product_differential(t: MatrixTuple) -> RatMatrix:
    """Matrix of (X_1, ..., X_{p+1}) -> sum_j M_1...M_{j-1} [X_j, M_j]
    M_{j+1}...M_{p+1} (multiplicative) or sum_j [X_j, A_j] (additive)."""
    blocks = []
    mats = t.matrices
    for j, m in enumerate(mats):
        ad = xl.right_mul_matrix(m) - xl.left_mul_matrix(m)  # vec([X, m])
        if t.mode == MULTIPLICATIVE:
            prefix = xl.product(mats[:j]) if j else RatMatrix.identity(t.n)
            suffix = xl.product(mats[j + 1 :]) if j + 1 < len(mats) else RatMatrix.identity(t.n)
            ad = xl.left_mul_matrix(prefix) @ (xl.right_mul_matrix(suffix) @ ad)
        blocks.append(ad)
    return xl.hstack(blocks)


def tangent_dim(t: MatrixTuple) -> int:
    """Dimension of the tangent space at t to the variety of tuples in the
    same conjugacy classes with product I (resp. sum 0): the kernel of the
    product differential minus the per-matrix centralizer dimensions.  At
    points with trivial centralizer this equals ``expected_dim``; elsewhere
    it is only a formal tangent dimension.
    """
    if not verify_closure(t):
        raise ClosureViolatedError("tuple does not close (product I / sum 0)")
    theta = _product_differential(t)
    kernel_dim = theta.cols - xl.rank(theta)
    single = sum(centralizer_dim_of([m]) for m in t.matrices)
    return kernel_dim - single


def orbit_dim(t: MatrixTuple) -> int:
    """Dimension of the simultaneous-conjugation orbit: n^2 minus the
    centralizer dimension of the tuple."""
    return t.n**2 - centralizer_dim(t)


def conjugate(t: MatrixTuple, g: RatMatrix) -> MatrixTuple:
    """The tuple (g M g^-1) with the same claimed eigenvalues."""
    ginv = xl.inverse(g)
    return MatrixTuple(t.mode, [g @ m @ ginv for m in t.matrices], t.eigenvalue_lists)


def jnf_tuple_of(t: MatrixTuple) -> JnfTuple:
    """The tuple of JNFs of the matrices, from their claimed eigenvalues."""
    return JnfTuple(jnf_of(m, eigs) for m, eigs in zip(t.matrices, t.eigenvalue_lists))


def report(t: MatrixTuple) -> dict:
    """Full JSON-able verification report for a tuple."""
    out: dict = {"mode": t.mode, "n": t.n, "count": len(t.matrices)}
    closed = verify_closure(t)
    out["closure"] = closed
    try:
        jnfs = [jnf_of(m, eigs) for m, eigs in zip(t.matrices, t.eigenvalue_lists)]
    except WrongSpectrumError as exc:
        out["jnfs"] = None
        out["wrong_spectrum"] = str(exc)
        jnfs = None
    else:
        out["jnfs"] = [j.to_json() for j in jnfs]
    cdim = centralizer_dim(t)
    out["centralizer_dim"] = cdim
    out["trivial_centralizer"] = cdim == 1
    out["commutator_map_surjective"] = commut_surjective(t)
    out["irreducible"] = is_irreducible(t)
    out["orbit_dim"] = orbit_dim(t)
    if closed:
        out["tangent_dim"] = tangent_dim(t)
        out["tangent_dim_is_formal"] = cdim != 1
    else:
        out["tangent_dim"] = None
        out["tangent_dim_is_formal"] = None
    if jnfs is not None:
        jt = JnfTuple(jnfs)
        from .reduction import kappa as _kappa

        out["expected_dim"] = expected_dim(jt)
        out["kappa"] = _kappa(jt)
    else:
        out["expected_dim"] = None
        out["kappa"] = None
    return out
