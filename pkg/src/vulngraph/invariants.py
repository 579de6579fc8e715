"""Exact vulnerability parameters by exhaustive search over vertex subsets.

Subsets are visited by increasing size and, within a size, by increasing
bitmask.  Only strict improvements replace the incumbent, which makes the
reported certificate the optimal cut of smallest size and then smallest
bitmask.  Each parameter's objective is bounded in terms of the subset size
alone, so the search stops at the first size where no parameter still being
computed can improve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import CapExceededError, CompleteGraphError, InvalidGraphError, NotACutError, NotConnectedError
from .graph import Graph, is_connected, members, omega_tau, popcount

PARAMETERS = ("connectivity", "toughness", "scattering", "integrity", "tenacity", "rupture")
MINIMISED = frozenset({"connectivity", "toughness", "integrity", "tenacity"})
NEEDS_CUT = frozenset(PARAMETERS) - {"integrity"}
UNDEFINED_FOR_COMPLETE = frozenset({"toughness", "scattering", "tenacity", "rupture"})

DEFAULT_MAX_N = 26


@dataclass(frozen=True)
class CutCertificate:
    cut: int
    cut_size: int
    omega: int
    tau: int
    value: Fraction

    @property
    def vertices(self) -> list[int]:
        return members(self.cut)


@dataclass(frozen=True)
class ParameterResult:
    parameter: str
    value: Optional[Fraction]
    certificate: Optional[CutCertificate] = None
    undefined: Optional[str] = None

    @property
    def defined(self) -> bool:
        return self.value is not None


def objective(parameter: str, size: int, omega: int, tau: int) -> Fraction:
    """Value of ``parameter``'s objective at a set with the given statistics."""
    if parameter == "connectivity":
        return Fraction(size)
    if parameter == "toughness":
        return Fraction(size, omega)
    if parameter == "scattering":
        return Fraction(omega - size)
    if parameter == "integrity":
        return Fraction(size + tau)
    if parameter == "tenacity":
        return Fraction(size + tau, omega)
    if parameter == "rupture":
        return Fraction(omega - size - tau)
    raise ValueError(f"unknown parameter {parameter!r}")


def _check_parameter(parameter: str) -> None:
    if parameter not in PARAMETERS:
        raise ValueError(f"unknown parameter {parameter!r}; expected one of {', '.join(PARAMETERS)}")


def evaluate_cut(g: Graph, x: int, parameter: str) -> CutCertificate:
    _check_parameter(parameter)
    if not is_connected(g):
        raise NotConnectedError()
    if x & ~g.full_mask:
        raise InvalidGraphError("vertex set contains vertices outside the graph")
    if x == g.full_mask:
        raise InvalidGraphError("cannot remove every vertex: largest component undefined")
    omega, tau = omega_tau(g.adj, g.full_mask & ~x)
    if parameter in NEEDS_CUT and omega <= 1:
        raise NotACutError()
    size = popcount(x)
    return CutCertificate(x, size, omega, tau, objective(parameter, size, omega, tau))


def subsets_by_size(n: int, size: int) -> Iterator[int]:
    """All ``size``-subsets of ``0..n-1`` as bitmasks in increasing order."""
    if size == 0:
        yield 0
        return
    x = (1 << size) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def _finished(parameter: str, best: Optional[Fraction], n: int, s: int) -> bool:
    """True when no subset of size >= ``s`` can strictly beat ``best``."""
    if best is None:
        return False
    if parameter == "connectivity":
        return True
    if parameter == "toughness":
        return Fraction(s, n - s) >= best
    if parameter == "tenacity":
        return Fraction(s + 1, n - s) >= best
    if parameter == "integrity":
        return s + 1 >= best
    if parameter == "scattering":
        return n - 2 * s <= best
    return n - 2 * s - 1 <= best


def _search(g: Graph, parameters: Iterable[str]) -> dict[str, CutCertificate]:
    n, adj, full = g.n, g.adj, g.full_mask
    active = list(parameters)
    best: dict[str, Optional[Fraction]] = {p: None for p in active}
    found: dict[str, CutCertificate] = {}
    for s in range(n):
        active = [p for p in active if not _finished(p, best[p], n, s)]
        if not active:
            break
        for x in subsets_by_size(n, s):
            omega, tau = omega_tau(adj, full & ~x)
            for p in active:
                if omega <= 1 and p in NEEDS_CUT:
                    continue
                value = objective(p, s, omega, tau)
                incumbent = best[p]
                if incumbent is None or (value < incumbent if p in MINIMISED else value > incumbent):
                    best[p] = value
                    found[p] = CutCertificate(x, s, omega, tau, value)
            if "connectivity" in found and "connectivity" in active and len(active) == 1:
                break
    return found


def _prepare(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise CapExceededError(
            f"exhaustive search refuses n = {g.n} > {max_n}; raise max_n to override"
        )
    if not is_connected(g):
        raise NotConnectedError()


def compute(g: Graph, parameters: Iterable[str] = PARAMETERS, *, max_n: int = DEFAULT_MAX_N) -> list[ParameterResult]:
    """Compute the requested parameters in one shared pass over the subsets.

    Parameters undefined on complete graphs come back with ``value=None`` and
    an ``undefined`` reason instead of raising.
    """
    wanted = list(dict.fromkeys(parameters))
    for p in wanted:
        _check_parameter(p)
    _prepare(g, max_n)
    complete = g.is_complete()
    searched = [p for p in wanted if not (complete and p in NEEDS_CUT)]
    found = _search(g, searched)
    results = []
    for p in wanted:
        if complete and p == "connectivity":
            results.append(ParameterResult(p, Fraction(g.n - 1)))
        elif complete and p in UNDEFINED_FOR_COMPLETE:
            results.append(ParameterResult(p, None, undefined="undefined for complete graphs"))
        else:
            cert = found[p]
            results.append(ParameterResult(p, cert.value, cert))
    return results


def all_parameters(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> list[ParameterResult]:
    return compute(g, PARAMETERS, max_n=max_n)


def _single(g: Graph, parameter: str, max_n: int) -> ParameterResult:
    _prepare(g, max_n)
    if parameter in UNDEFINED_FOR_COMPLETE and g.is_complete():
        raise CompleteGraphError()
    return compute(g, [parameter], max_n=max_n)[0]


def connectivity(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> ParameterResult:
    return _single(g, "connectivity", max_n)


def toughness(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> ParameterResult:
    return _single(g, "toughness", max_n)


def scattering_number(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> ParameterResult:
    return _single(g, "scattering", max_n)


def integrity(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> ParameterResult:
    return _single(g, "integrity", max_n)


def tenacity(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> ParameterResult:
    return _single(g, "tenacity", max_n)


def rupture_degree(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> ParameterResult:
    return _single(g, "rupture", max_n)


def tenacity_value(g: Graph) -> Fraction:
    """Shorthand for the exact tenacity of a connected noncomplete graph."""
    return tenacity(g).value
