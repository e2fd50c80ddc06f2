"""Constructible functions on a simplicial complex and their calculus.

A constructible function is constant on open simplices, so it is stored as
one dyadic value per simplex, aligned with the complex's canonical simplex
order.  All operators here are exact.

The central operator is the combinatorial link ``lam``:

    (lam phi)(tau) = (1 - (-1)^dim tau) * phi(tau)
                     + sum over sigma > tau of (-1)^(dim sigma + 1) * phi(sigma)

which computes, for every simplex, the Euler integral of phi restricted to
a small sphere around that simplex.  The duality operator, half link, and
the parity test for Euler functions are all built from it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (Simplex, SimplicialComplex, SimplicialMap,
                        geometric_link, Subdivision)
from .dyadic import Dyadic, ZERO, ONE


@dataclass(frozen=True)
class ParityObstruction:
    """A simplex where a value fails the parity needed for halving.

    ``kind`` is "non-integer" when the offending value is not an integer at
    all, "odd-integer" when it is an integer but an odd one.
    """

    simplex: Simplex
    value: Dyadic
    kind: str

    def describe(self, complex: SimplicialComplex) -> str:
        return (f"value {self.value} at {complex.simplex_name(self.simplex)}"
                f" is {self.kind.replace('-', ' ')}")


def _parity_kind(value: Dyadic) -> str | None:
    if not value.is_integer:
        return "non-integer"
    if value.num % 2 != 0:
        return "odd-integer"
    return None


class ConstructibleFunction:
    """A simplexwise-constant dyadic-valued function."""

    __slots__ = ("complex", "values")

    def __init__(self, complex: SimplicialComplex, values):
        vals = tuple(v if isinstance(v, Dyadic) else Dyadic(v) for v in values)
        if len(vals) != len(complex.simplices):
            raise ValueError("one value per simplex required")
        self.complex = complex
        self.values = vals

    # -- constructors ------------------------------------------------

    @classmethod
    def constant(cls, complex: SimplicialComplex, c) -> "ConstructibleFunction":
        c = c if isinstance(c, Dyadic) else Dyadic(c)
        return cls(complex, (c,) * len(complex.simplices))

    @classmethod
    def zero(cls, complex: SimplicialComplex) -> "ConstructibleFunction":
        return cls.constant(complex, ZERO)

    @classmethod
    def one(cls, complex: SimplicialComplex) -> "ConstructibleFunction":
        return cls.constant(complex, ONE)

    @classmethod
    def from_dict(cls, complex: SimplicialComplex, assignments: dict,
                  default=ZERO) -> "ConstructibleFunction":
        table = {Simplex(s): v for s, v in assignments.items()}
        return cls(complex, tuple(table.get(s, default) for s in complex.simplices))

    # -- access -------------------------------------------------------

    def __getitem__(self, s) -> Dyadic:
        s = s if isinstance(s, Simplex) else Simplex(s)
        return self.values[self.complex.index(s)]

    def support(self) -> tuple[Simplex, ...]:
        return tuple(s for s, v in zip(self.complex.simplices, self.values) if v)

    @property
    def is_integer_valued(self) -> bool:
        return all(v.is_integer for v in self.values)

    def as_dict(self) -> dict[Simplex, Dyadic]:
        return {s: v for s, v in zip(self.complex.simplices, self.values) if v}

    # -- pointwise algebra ---------------------------------------------

    def _same_complex(self, other: "ConstructibleFunction") -> None:
        if self.complex is other.complex:
            return
        if self.complex.simplices != other.complex.simplices:
            raise ValueError("functions live on different complexes")

    def __add__(self, other):
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        self._same_complex(other)
        return ConstructibleFunction(
            self.complex, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        self._same_complex(other)
        return ConstructibleFunction(
            self.complex, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ConstructibleFunction):
            self._same_complex(other)
            return ConstructibleFunction(
                self.complex, tuple(a * b for a, b in zip(self.values, other.values)))
        if isinstance(other, (int, Dyadic)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Dyadic)):
            return self.scale(other)
        return NotImplemented

    def __neg__(self):
        return ConstructibleFunction(self.complex, tuple(-v for v in self.values))

    def scale(self, c) -> "ConstructibleFunction":
        c = c if isinstance(c, Dyadic) else Dyadic(c)
        return ConstructibleFunction(self.complex, tuple(c * v for v in self.values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        return (self.complex.simplices == other.complex.simplices
                and self.values == other.values)

    def __hash__(self):
        return hash(self.values)

    def __repr__(self) -> str:
        parts = [f"{self.complex.simplex_name(s)}={v}" for s, v in self.as_dict().items()]
        return "CF{" + ", ".join(parts) + "}"


def indicator(complex: SimplicialComplex, simplices) -> ConstructibleFunction:
    """Indicator of a set of simplices of the ambient complex."""
    chosen = set()
    for s in simplices:
        s = s if isinstance(s, Simplex) else Simplex(s)
        if s not in complex:
            raise ValueError(f"{tuple(s)} is not a simplex of the complex")
        chosen.add(s)
    return ConstructibleFunction(
        complex, tuple(ONE if s in chosen else ZERO for s in complex.simplices))


def indicator_of_subcomplex(complex: SimplicialComplex,
                            sub: SimplicialComplex) -> ConstructibleFunction:
    return indicator(complex, sub.simplices)


# -- integral and link-based operators ----------------------------------------


def euler_integral(phi: ConstructibleFunction) -> Dyadic:
    """Integral against the Euler characteristic of open cells."""
    total = ZERO
    for s, v in zip(phi.complex.simplices, phi.values):
        total = total - v if s.dim % 2 else total + v
    return total


def link_operator(phi: ConstructibleFunction) -> ConstructibleFunction:
    """Apply the combinatorial link operator (see module docstring)."""
    k = phi.complex
    out = []
    for i, tau in enumerate(k.simplices):
        acc = ZERO if tau.dim % 2 == 0 else phi.values[i] + phi.values[i]
        for j in k.cofaces(i):
            if k.simplices[j].dim % 2:
                acc = acc + phi.values[j]
            else:
                acc = acc - phi.values[j]
        out.append(acc)
    return ConstructibleFunction(k, tuple(out))


def dual(phi: ConstructibleFunction) -> ConstructibleFunction:
    """Verdier-style duality: phi minus its link."""
    return phi - link_operator(phi)


def half_link(phi: ConstructibleFunction):
    """Half the link operator.

    Defined exactly when the link takes even integer values everywhere;
    otherwise the first offending simplex is returned as a
    ParityObstruction instead of a function.
    """
    lam = link_operator(phi)
    for s, v in zip(lam.complex.simplices, lam.values):
        kind = _parity_kind(v)
        if kind is not None:
            return ParityObstruction(simplex=s, value=v, kind=kind)
    return ConstructibleFunction(lam.complex, tuple(v.half() for v in lam.values))


def is_euler(phi: ConstructibleFunction) -> tuple[bool, list[ParityObstruction]]:
    """Whether every link value of ``phi`` is an even integer.

    Returns the verdict together with every offending simplex (an empty
    list when the function is Euler).  Only integer-valued functions
    qualify for the question at all.
    """
    if not phi.is_integer_valued:
        raise ValueError("parity test needs an integer-valued function")
    lam = link_operator(phi)
    bad = []
    for s, v in zip(lam.complex.simplices, lam.values):
        kind = _parity_kind(v)
        if kind is not None:
            bad.append(ParityObstruction(simplex=s, value=v, kind=kind))
    return (not bad, bad)


def p_operator(phi: ConstructibleFunction) -> ConstructibleFunction:
    """Pointwise (phi^4 - phi^2) / 2, which is integer on integer inputs."""
    out = []
    for v in phi.values:
        sq = v * v
        out.append((sq * sq - sq).half())
    return ConstructibleFunction(phi.complex, tuple(out))


# -- functoriality -------------------------------------------------------------


def pullback(f: SimplicialMap, phi: ConstructibleFunction) -> ConstructibleFunction:
    """Compose with the map: the result at a simplex is phi at its image."""
    if phi.complex.simplices != f.target.simplices:
        raise ValueError("function must live on the map's target")
    f.check()
    return ConstructibleFunction(
        f.source, tuple(phi[f.image(s)] for s in f.source.simplices))


def pushforward(f: SimplicialMap, phi: ConstructibleFunction) -> ConstructibleFunction:
    """Fiberwise Euler integral.

    Each open source simplex maps onto an open target simplex; its open
    fiber cell over a generic point contributes (-1)^(dim drop) times the
    value, where the drop is the difference of dimensions.
    """
    if phi.complex.simplices != f.source.simplices:
        raise ValueError("function must live on the map's source")
    f.check()
    out = [ZERO] * len(f.target.simplices)
    for i, sigma in enumerate(f.source.simplices):
        img = f.image(sigma)
        j = f.target.index(img)
        if (sigma.dim - img.dim) % 2:
            out[j] = out[j] - phi.values[i]
        else:
            out[j] = out[j] + phi.values[i]
    return ConstructibleFunction(f.target, tuple(out))


# -- restriction to links and subdivision ---------------------------------------


def restrict_to_link(phi: ConstructibleFunction, tau) -> ConstructibleFunction:
    """Restrict ``phi`` to the geometric link around ``tau``.

    A simplex of the geometric link splits into a boundary part (fresh ids)
    and a link part (original ids); near ``tau`` it sits inside the open
    simplex ``tau + link part``, whose value it inherits.
    """
    tau = tau if isinstance(tau, Simplex) else Simplex(tau)
    k = phi.complex
    sphere = geometric_link(k, tau)
    base = k.max_vertex_id()
    out = []
    for rho in sphere.simplices:
        link_part = tuple(v for v in rho if v <= base)
        out.append(phi[Simplex(tuple(tau) + link_part)])
    return ConstructibleFunction(sphere, tuple(out))


def subdivide_function(phi: ConstructibleFunction,
                       sd: Subdivision) -> ConstructibleFunction:
    """Transport to the barycentric subdivision via carriers."""
    if sd.base.simplices != phi.complex.simplices:
        raise ValueError("subdivision does not refine the function's complex")
    return ConstructibleFunction(
        sd.complex, tuple(phi[sd.carrier(c)] for c in sd.complex.simplices))
