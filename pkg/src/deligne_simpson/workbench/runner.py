"""Evaluate fixture expectations and run the whole corpus.

Every operation name used by an expectation dispatches to the library
function of the same meaning; the runner never stores precomputed results,
so a corpus run is a genuine re-derivation of every expected value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import reduction as rd
from .. import spectra as sp
from .. import tuple_lab as tl
from ..exact_linalg import RatMatrix, rank
from ..jnf import Jnf, corresponds
from . import builders
from .fixtures import Expectation, Fixture, builtin_corpus


def _eval_jnf_tuple_op(fixture: Fixture, exp: Expectation):
    t = fixture.jnf_tuple_named(exp.target)
    op = exp.operation
    if op == "kappa":
        return rd.kappa(t)
    if op == "expected_dim":
        return rd.expected_dim(t)
    if op == "alpha":
        return rd.check_alpha(t)
    if op == "beta":
        return rd.check_beta(t)
    if op == "omega":
        return rd.check_omega(t)
    if op == "rigidity":
        return rd.classify_rigidity(t).kind.value
    if op == "solvable":
        return rd.solvable_generic(t).verdict.solvable
    if op == "chain":
        return list(rd.solvable_generic(t).sizes())
    if op == "kappa_invariant_along_trace":
        trace = rd.solvable_generic(t)
        return len({rd.kappa(step.tuple) for step in trace.steps}) == 1
    if op == "choice_independent_verdict":
        traces = rd.explore_all_traces(t)
        return len({trc.verdict.solvable for trc in traces}) == 1
    if op == "classes_correspond":
        other = fixture.aux_jnf_tuples[exp.params["other"]]
        i = exp.params["index"]
        return corresponds(t.jnfs[i], other.jnfs[i])
    raise KeyError(op)


def _eval_spectrum_op(fixture: Fixture, exp: Expectation):
    s = fixture.spectrum_named(exp.target)
    op = exp.operation
    if op == "classify":
        return sp.classify(s).verdict
    if op == "is_generic":
        return sp.is_generic(s).verdict
    if op == "global_condition":
        return sp.global_condition(s)
    if op in ("basic_q", "basic_m", "basic_root_phase", "basic_relation_present"):
        basic = sp.basic_relation(s)
        if op == "basic_q":
            return 1 if basic is None else basic.q
        if basic is None:
            return None
        if op == "basic_m":
            return basic.m
        if op == "basic_root_phase":
            return None if basic.root_phase is None else str(basic.root_phase)
        return basic.relation is not None
    if op == "contains_witness":
        witnesses = [w.to_json() for w in sp.all_relations(s)]
        return exp.params["witness"] in witnesses
    if op == "witness_count":
        return len(sp.all_relations(s))
    raise KeyError(op)


def _eval_tuple_op(fixture: Fixture, exp: Expectation):
    t = fixture.tuple_named(exp.target)
    op = exp.operation
    if op == "closure":
        return tl.verify_closure(t)
    if op == "centralizer_dim":
        return tl.centralizer_dim(t)
    if op == "trivial_centralizer":
        return tl.has_trivial_centralizer(t)
    if op == "commut_surjective":
        return tl.commut_surjective(t)
    if op == "irreducible":
        return tl.is_irreducible(t)
    if op == "tangent_dim":
        return tl.tangent_dim(t)
    if op == "orbit_dim":
        return tl.orbit_dim(t)
    if op == "kappa_of_tuple":
        return rd.kappa(tl.jnf_tuple_of(t))
    if op == "expected_dim_of_tuple":
        return rd.expected_dim(tl.jnf_tuple_of(t))
    if op == "jnf_of_matrix":
        i = exp.params["index"]
        j = tl.jnf_of(t.matrices[i], t.eigenvalue_lists[i])
        out = j.to_json()
        return out if isinstance(out, list) else [out]
    if op == "in_declared_classes":
        for matrix, jnf_json in zip(t.matrices, exp.params["jnfs"]):
            if not tl.class_membership(matrix, Jnf.from_json(jnf_json)):
                return False
        return True
    if op == "hom_dim":
        other = fixture.matrix_tuples[exp.params["other"]]
        return builders.hom_dim(t.matrices, other.matrices)
    if op == "nilpotent_rank1_corner":
        m = t.matrices[-1]
        half = t.n // 2
        corner = RatMatrix.from_rows(
            [[m[i, j] for j in range(half, t.n)] for i in range(half)]
        )
        return (
            corner.trace() == 0
            and rank(corner) == 1
            and (corner @ corner).is_zero()
        )
    raise KeyError(op)


def evaluate_expectation(fixture: Fixture, exp: Expectation):
    """Recompute the value an expectation constrains; returns a JSON-able."""
    if exp.operation == "triangular_space_dim":
        first = fixture.matrix_tuples[exp.params["first"]]
        second = fixture.matrix_tuples[exp.params["second"]]
        spaces = builders.triangular_spaces(first, second)
        key = "dim_full" if exp.params["which"] == "full" else "dim_conjugation"
        return spaces[key]
    if exp.target.startswith("tuple:"):
        return _eval_tuple_op(fixture, exp)
    if exp.target.startswith("spectrum"):
        return _eval_spectrum_op(fixture, exp)
    return _eval_jnf_tuple_op(fixture, exp)


@dataclass(frozen=True)
class ExpectationResult:
    fixture: str
    expectation: Expectation
    actual: object
    passed: bool

    def to_json(self) -> dict:
        out = self.expectation.to_json()
        out["fixture"] = self.fixture
        out["actual"] = self.actual
        out["pass"] = self.passed
        return out


def run_fixture(fixture: Fixture) -> list[ExpectationResult]:
    results = []
    for exp in fixture.expectations:
        actual = evaluate_expectation(fixture, exp)
        results.append(ExpectationResult(fixture.name, exp, actual, actual == exp.expected))
    return results


def run_corpus(names: list[str] | None = None) -> list[ExpectationResult]:
    results = []
    for fixture in builtin_corpus():
        if names and fixture.name not in names:
            continue
        results.extend(run_fixture(fixture))
    return results
