"""Local realizability obstructions.

Everything here evaluates necessary conditions for a finite complex to be
homeomorphic to a real algebraic set:

* ``sullivan_check`` — every point's link must have even Euler
  characteristic (evaluated as parity of the link operator on 1).
* ``b_vector`` — the five mod-2 invariants (chi2, b1..b4) of a compact
  complex of dimension at most 2, computed from alpha = half-link of 1,
  beta and gamma as its polynomial corrections.  A parity failure while
  halving is returned as a first-class expression witness: the failure is
  itself an obstruction.
* ``dim3_check`` — for dimension at most 3, the b-vector of every
  simplex's geometric link must vanish.
* ``dim4_local_search`` (in the search module) — bounded operator-closure
  search at each simplex, re-exported here for convenience.
* ``divisibility_certificate`` / ``bonnard_bounds`` — the sufficiency
  certificate via 2-adic valuation and the closed-form presentation bounds.

A pass is never a realizability proof; reports carry that caveat.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Simplex, SimplicialComplex, geometric_link
from .dyadic import Dyadic
from .functions import (ConstructibleFunction, ParityObstruction,
                        euler_integral, half_link, link_operator)
from .search import (DEFAULT_BUDGET, ExpressionWitness, KIND_NON_INTEGER,
                     ONE_EXPR, SearchBudget, SearchResult, dim4_local_search,
                     expression_depth, expression_size)

NECESSARY_ONLY = ("all checks are necessary conditions for homeomorphism to"
                  " a real algebraic set; passing is not a realizability proof")


@dataclass(frozen=True)
class InvariantVector:
    """Element of (Z/2)^5: (chi2, b1, b2, b3, b4)."""

    chi2: int
    b1: int
    b2: int
    b3: int
    b4: int

    def __post_init__(self):
        for c in self.as_tuple():
            if c not in (0, 1):
                raise ValueError("invariant components are mod-2 bits")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.chi2, self.b1, self.b2, self.b3, self.b4)

    @property
    def is_zero(self) -> bool:
        return not any(self.as_tuple())

    def __add__(self, other: "InvariantVector") -> "InvariantVector":
        return InvariantVector(*[(a + b) % 2 for a, b in
                                 zip(self.as_tuple(), other.as_tuple())])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


ZERO_VECTOR = InvariantVector(0, 0, 0, 0, 0)


def _parity(value: Dyadic) -> int:
    # integrals of integer-valued functions only
    return int(value) % 2


def _obstructed(expr, obstruction: ParityObstruction) -> ExpressionWitness:
    # Halving an odd link value: the witness value is the non-integer half.
    return ExpressionWitness(expr=expr, kind=KIND_NON_INTEGER,
                             location=obstruction.simplex,
                             value=obstruction.value.half(),
                             depth=expression_depth(expr),
                             size=expression_size(expr))


def b_vector(k: SimplicialComplex) -> InvariantVector | ExpressionWitness:
    """The (chi2, b1..b4) invariant vector of a complex of dimension <= 2.

    If a half-link application hits a parity obstruction, that obstruction
    is returned as an ExpressionWitness over the complex instead.
    """
    if k.dim > 2:
        raise ValueError("b-vector requires dimension <= 2")
    from .complexes import euler_characteristic

    one = ConstructibleFunction.one(k)
    chi2 = euler_characteristic(k) % 2

    alpha_expr = ("HALFLINK", ONE_EXPR)
    alpha = half_link(one)
    if isinstance(alpha, ParityObstruction):
        return _obstructed(alpha_expr, alpha)

    asq = alpha * alpha
    asq_expr = ("MUL", alpha_expr, alpha_expr)
    h = half_link(asq)
    if isinstance(h, ParityObstruction):
        return _obstructed(("HALFLINK", asq_expr), h)
    beta = asq - h

    acube = asq * alpha
    acube_expr = ("MUL", asq_expr, alpha_expr)
    h = half_link(acube)
    if isinstance(h, ParityObstruction):
        return _obstructed(("HALFLINK", acube_expr), h)
    gamma = acube - h

    return InvariantVector(
        chi2,
        _parity(euler_integral(alpha * beta)),
        _parity(euler_integral(alpha * gamma)),
        _parity(euler_integral(beta * gamma)),
        _parity(euler_integral(alpha * beta * gamma)),
    )


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class TestRow:
    """One per-simplex verdict inside an obstruction report."""

    test: str  # "sullivan" | "dim3" | "search"
    simplex: Simplex | None
    where: str  # display name of the simplex, e.g. "(a u)"
    verdict: str  # "pass" | "fail"
    value: str
    data: dict | None = None


@dataclass(frozen=True)
class ObstructionReport:
    complex_name: str
    dimension: int
    rows: tuple[TestRow, ...]
    summary: dict
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.verdict == "pass" for r in self.rows)

    def failing(self) -> tuple[TestRow, ...]:
        return tuple(r for r in self.rows if r.verdict != "pass")


def sullivan_check(k: SimplicialComplex) -> ObstructionReport:
    """Per-simplex parity of the link's Euler characteristic."""
    lam = link_operator(ConstructibleFunction.one(k))
    rows = []
    for s, v in zip(k.simplices, lam.values):
        chi = int(v)
        rows.append(TestRow(
            test="sullivan", simplex=s, where=k.simplex_name(s),
            verdict="pass" if chi % 2 == 0 else "fail",
            value=f"link chi = {chi}",
            data={"link_chi": chi}))
    passed = all(r.verdict == "pass" for r in rows)
    notes = [NECESSARY_ONLY]
    if passed and k.dim <= 2:
        notes.append("realizable (dim <= 2 criterion): even link parity is"
                     " sufficient in dimension <= 2")
    return ObstructionReport(
        complex_name=k.name or "complex", dimension=k.dim, rows=tuple(rows),
        summary={"sullivan": "pass" if passed else "fail"}, notes=tuple(notes))


def dim3_check(k: SimplicialComplex) -> ObstructionReport:
    """Vanishing of the b-vector of every simplex's geometric link."""
    if k.dim > 3:
        raise ValueError("dim3 check requires dimension <= 3")
    rows = []
    for tau in k.simplices:
        link = geometric_link(k, tau)
        res = b_vector(link)
        if isinstance(res, InvariantVector):
            ok = res.is_zero
            bad = [name for name, c in zip(("chi2", "b1", "b2", "b3", "b4"),
                                           res.as_tuple()) if c]
            rows.append(TestRow(
                test="dim3", simplex=tau, where=k.simplex_name(tau),
                verdict="pass" if ok else "fail",
                value=f"b = {res}" + (f", nonzero: {' '.join(bad)}" if bad else ""),
                data={"b": list(res.as_tuple())}))
        else:
            rows.append(TestRow(
                test="dim3", simplex=tau, where=k.simplex_name(tau),
                verdict="fail",
                value=f"half-link obstruction: {res.describe(link)}",
                data={"witness": res.as_dict(link)}))
    passed = all(r.verdict == "pass" for r in rows)
    return ObstructionReport(
        complex_name=k.name or "complex", dimension=k.dim, rows=tuple(rows),
        summary={"dim3": "pass" if passed else "fail"},
        notes=(NECESSARY_ONLY,))


def search_check(k: SimplicialComplex,
                 budget: SearchBudget = DEFAULT_BUDGET) -> ObstructionReport:
    """Closure search at every simplex; report assembled in canonical order."""
    rows = []
    budget_noted = False
    notes = [NECESSARY_ONLY]
    for tau in k.simplices:
        res: SearchResult = dim4_local_search(k, tau, budget)
        if res.verdict == "witness":
            w = res.witness
            rows.append(TestRow(
                test="search", simplex=tau, where=k.simplex_name(tau),
                verdict="fail",
                value=w.describe(res.link),
                data={"witness": w.as_dict(res.link),
                      "explored": res.explored, "stop": res.stop}))
        else:
            rows.append(TestRow(
                test="search", simplex=tau, where=k.simplex_name(tau),
                verdict="pass",
                value=f"no witness within budget ({res.explored} functions,"
                      f" stop: {res.stop})",
                data={"explored": res.explored, "stop": res.stop,
                      "guard_hits": res.guard_hits}))
            if not budget_noted:
                notes.extend(res.notes())
                budget_noted = True
    passed = all(r.verdict == "pass" for r in rows)
    return ObstructionReport(
        complex_name=k.name or "complex", dimension=k.dim, rows=tuple(rows),
        summary={"search": "pass" if passed else "fail"}, notes=tuple(notes))


def merge_reports(*reports: ObstructionReport) -> ObstructionReport:
    """Concatenate per-test reports on the same complex into one."""
    first = reports[0]
    for rep in reports[1:]:
        if rep.complex_name != first.complex_name \
                or rep.dimension != first.dimension:
            raise ValueError("cannot merge reports for different complexes:"
                             f" {first.complex_name!r} vs {rep.complex_name!r}")
    rows = tuple(r for rep in reports for r in rep.rows)
    summary: dict = {}
    notes: list[str] = []
    for rep in reports:
        summary.update(rep.summary)
        for n in rep.notes:
            if n not in notes:
                notes.append(n)
    return ObstructionReport(
        complex_name=first.complex_name, dimension=first.dimension, rows=rows,
        summary=summary, notes=tuple(notes))


# -- certificates and bounds ---------------------------------------------------


@dataclass(frozen=True)
class DivisibilityCertificate:
    certified: bool
    dimension: int
    min_valuation: int | None  # None when the function is identically zero

    def __str__(self) -> str:
        verdict = "certified" if self.certified else "not-certified"
        mv = "inf" if self.min_valuation is None else str(self.min_valuation)
        return (f"{verdict} (dimension {self.dimension},"
                f" minimum 2-adic valuation {mv})")


def divisibility_certificate(phi: ConstructibleFunction) -> DivisibilityCertificate:
    """Sufficiency certificate: values divisible by 2^dim are always
    realizable as algebraically constructible.  Inconclusive when it fails.
    """
    if not phi.is_integer_valued:
        raise ValueError("divisibility certificate needs an integer-valued function")
    d = phi.complex.dim
    vals = [v.two_adic_valuation() for v in phi.values if v.num != 0]
    if not vals:
        return DivisibilityCertificate(True, d, None)
    mv = min(vals)
    return DivisibilityCertificate(mv >= d, d, mv)


@dataclass(frozen=True)
class BoundQuery:
    """Range data for the presentation bounds: values lie in [delta-k, delta+k]."""

    d: int
    k: int
    delta: int

    def __post_init__(self):
        if self.d <= 0:
            raise ValueError("dimension must be positive")
        if self.k < 0:
            raise ValueError("range radius must be nonnegative")


@dataclass(frozen=True)
class BonnardBounds:
    n: int  # generic presentation (irreducible domain)
    n_prime: int  # complete presentation
    note: str = ("generic bound N additionally assumes the domain is"
                 " irreducible")


def bonnard_bounds(q: BoundQuery) -> BonnardBounds:
    """Closed-form bounds on the number of polynomial signs needed to
    present a function with values in [delta-k, delta+k] on a set of
    dimension d: N generically, N' completely."""
    half_pow = 1 << (q.d - 1)
    a = abs(q.delta)
    if q.k % 2 == 0:
        n = half_pow * q.k + a
        n_prime = half_pow * 3 * q.k + a
    else:
        n = half_pow * (q.k - 1) + 1 + a
        n_prime = half_pow * 3 * (q.k - 1) + 2 * q.d + a
    return BonnardBounds(n=n, n_prime=n_prime)
