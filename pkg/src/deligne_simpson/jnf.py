"""Partition calculus and Jordan normal form invariants.

A Jordan normal form (JNF) of size n is a finite family of eigenvalue
labels, each carrying a partition of Jordan block sizes; the partitions
together sum to n.  This module computes the classical invariants that
depend only on that combinatorial data:

* ``dual`` -- the conjugate partition,
* ``centralizer_dim_of_jnf`` -- dimension of the centralizer of any matrix
  realizing the JNF, inside the full matrix algebra,
* ``class_dim`` -- dimension of the conjugacy class (n^2 minus the
  centralizer dimension; always even),
* ``min_rank`` -- the minimum over eigenvalues lam of rank(Y - lam I),
  i.e. n minus the largest number of blocks attached to one eigenvalue,

together with the correspondence that matches a JNF to a diagonal JNF
(via dual partitions) and to the unique single-eigenvalue JNF with the
same diagonal companion.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class Partition:
    """A non-increasing tuple of positive integers; constructors sort."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        data = tuple(sorted((int(p) for p in parts), reverse=True))
        if not data:
            raise ValueError("partition must be non-empty")
        if data[-1] < 1:
            raise ValueError("partition parts must be positive")
        object.__setattr__(self, "parts", data)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def dual(self) -> Partition:
        """Conjugate partition, e.g. dual of (4,3,3) is (3,3,3,1)."""
        width = self.parts[0]
        return Partition(sum(1 for p in self.parts if p >= k) for k in range(1, width + 1))


def dual(p: Partition) -> Partition:
    return p.dual()


class Jnf:
    """A Jordan normal form: distinct eigenvalue labels with block partitions."""

    __slots__ = ("blocks_by_eigenvalue", "size")

    def __init__(self, blocks_by_eigenvalue: Iterable[tuple[str, Partition | Sequence[int]]]):
        entries = []
        for label, blocks in blocks_by_eigenvalue:
            part = blocks if isinstance(blocks, Partition) else Partition(blocks)
            entries.append((str(label), part))
        if not entries:
            raise ValueError("JNF needs at least one eigenvalue")
        labels = [label for label, _ in entries]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate eigenvalue labels: {labels}")
        object.__setattr__(self, "blocks_by_eigenvalue", tuple(entries))
        object.__setattr__(self, "size", sum(p.total() for _, p in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Jnf is immutable")

    @classmethod
    def diagonal(cls, multiplicities: Sequence[int], labels: Sequence[str] | None = None) -> Jnf:
        """Diagonal JNF from eigenvalue multiplicities; labels default to e1, e2, ..."""
        mults = sorted((int(m) for m in multiplicities), reverse=True)
        if labels is None:
            labels = [f"e{i + 1}" for i in range(len(mults))]
        return cls((lab, Partition([1] * m)) for lab, m in zip(labels, mults))

    @classmethod
    def single(cls, blocks: Sequence[int], label: str = "e1") -> Jnf:
        return cls([(label, Partition(blocks))])

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.blocks_by_eigenvalue)

    def partition_of(self, label: str) -> Partition:
        for lab, part in self.blocks_by_eigenvalue:
            if lab == label:
                return part
        raise KeyError(label)

    def is_diagonal(self) -> bool:
        return all(all(p == 1 for p in part) for _, part in self.blocks_by_eigenvalue)

    def multiplicities(self) -> tuple[int, ...]:
        """Algebraic multiplicities of the eigenvalues, sorted non-increasing."""
        return tuple(sorted((part.total() for _, part in self.blocks_by_eigenvalue), reverse=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Jnf):
            return NotImplemented
        return sorted(self.blocks_by_eigenvalue) == sorted(other.blocks_by_eigenvalue)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.blocks_by_eigenvalue)))

    def __repr__(self) -> str:
        body = ", ".join(f"{lab}:{part.parts}" for lab, part in self.blocks_by_eigenvalue)
        return f"Jnf({body})"

    def to_json(self) -> list[dict] | dict:
        generated = tuple(f"e{i + 1}" for i in range(len(self.blocks_by_eigenvalue)))
        if self.is_diagonal() and self.labels() == generated:
            mults = [part.total() for _, part in self.blocks_by_eigenvalue]
            if mults == sorted(mults, reverse=True):
                return {"multiplicities": mults}
        return [
            {"eigenvalue": lab, "blocks": list(part.parts)}
            for lab, part in self.blocks_by_eigenvalue
        ]

    @classmethod
    def from_json(cls, data: Mapping | Sequence[Mapping]) -> Jnf:
        if isinstance(data, Mapping):
            if "multiplicities" not in data:
                raise ValueError("abbreviated JNF needs a 'multiplicities' key")
            return cls.diagonal(list(data["multiplicities"]))
        return cls((item["eigenvalue"], Partition(item["blocks"])) for item in data)


def centralizer_dim_of_jnf(j: Jnf) -> int:
    """dim of the centralizer in gl(n) of any matrix with this JNF.

    For one eigenvalue with block sizes b_1 >= b_2 >= ... the centralizer
    dimension is sum_i (2i - 1) b_i = sum_{i,k} min(b_i, b_k); eigenvalues
    contribute independently.
    """
    total = 0
    for _, part in j.blocks_by_eigenvalue:
        total += sum((2 * i + 1) * b for i, b in enumerate(part.parts))
    return total


def class_dim(j: Jnf) -> int:
    """Dimension of the conjugacy class: size^2 minus the centralizer dim."""
    return j.size**2 - centralizer_dim_of_jnf(j)


def min_rank(j: Jnf) -> int:
    """min over eigenvalues lam of rank(Y - lam I) = n - max block count."""
    return j.size - max(len(part) for _, part in j.blocks_by_eigenvalue)


def corresponding_diagonal(j: Jnf) -> Jnf:
    """Diagonal JNF whose multiplicities are the disjoint union of the duals
    of j's block partitions, with fresh labels e1, e2, ... in multiplicity order."""
    mults: list[int] = []
    for _, part in j.blocks_by_eigenvalue:
        mults.extend(part.dual().parts)
    return Jnf.diagonal(mults)


def corresponding_single_eigenvalue(j: Jnf) -> Jnf:
    """The unique single-eigenvalue JNF with the same corresponding diagonal:
    its blocks are the dual of the diagonal multiplicity partition."""
    diag = corresponding_diagonal(j)
    blocks = Partition(diag.multiplicities()).dual()
    return Jnf.single(blocks.parts)


def corresponds(a: Jnf, b: Jnf) -> bool:
    """True iff a and b correspond to one and the same diagonal JNF."""
    return corresponding_diagonal(a).multiplicities() == corresponding_diagonal(b).multiplicities()
