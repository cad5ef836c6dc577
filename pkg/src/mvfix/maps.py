"""Multivalued maps from a compact domain into compact subsets of the line.

A map sends each point x of its domain to a compact value set T(x).
Four shapes cover the use cases: an interval with expression endpoints,
a singleton given by one expression, a finite set of expression points,
and an explicit lookup table.  Expression-backed maps are validated on a
dense grid at construction so that sweeps fail early rather than deep
inside an analysis run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DomainError, InvariantError
from .expr import ExprAst, eval_expr, format_expr, parse_expr
from .sets1d import CompactSet, dist_point_set, domain_grid

__all__ = [
    "MultiMap",
    "interval_map",
    "singleton_map",
    "finite_set_map",
    "table_map",
    "apply_map",
    "is_fixed_point",
]

# lo(x) may exceed hi(x) by at most this much before the map is rejected;
# sub-tolerance inversions collapse to a degenerate interval.
ENDPOINT_SLACK = 1e-12

_VALIDATION_GRID_POINTS = 10_001


@dataclass(frozen=True)
class MultiMap:
    """A multivalued map; use the module factory functions to build one."""

    domain: CompactSet
    kind: str  # "interval_endpoints" | "singleton" | "finite_set" | "table"
    lo: ExprAst | None = None
    hi: ExprAst | None = None
    members: tuple[ExprAst, ...] = ()
    table: tuple[tuple[float, CompactSet], ...] = ()

    def describe(self) -> str:
        if self.kind == "interval_endpoints":
            return f"T(x) = [{format_expr(self.lo)}, {format_expr(self.hi)}]"
        if self.kind == "singleton":
            return f"T(x) = {{{format_expr(self.members[0])}}}"
        if self.kind == "finite_set":
            inner = ", ".join(format_expr(e) for e in self.members)
            return f"T(x) = {{{inner}}}"
        return f"table with {len(self.table)} entries"


def _as_ast(e: Union[str, ExprAst]) -> ExprAst:
    return parse_expr(e) if isinstance(e, str) else e


def _value_set(T: MultiMap, x: float) -> CompactSet:
    if T.kind == "interval_endpoints":
        lo = eval_expr(T.lo, x)
        hi = eval_expr(T.hi, x)
        if lo > hi:
            if lo - hi > ENDPOINT_SLACK:
                raise InvariantError(
                    f"map endpoints inverted at x = {x}: lo = {lo}, hi = {hi}"
                )
            mid = 0.5 * (lo + hi)
            return CompactSet.point(mid)
        return CompactSet.interval(lo, hi)
    if T.kind == "singleton":
        return CompactSet.point(eval_expr(T.members[0], x))
    if T.kind == "finite_set":
        return CompactSet.from_points(eval_expr(e, x) for e in T.members)
    for key, value in T.table:
        if key == x:
            return value
    raise DomainError(f"no table entry for x = {x}")


def _validate_on_grid(T: MultiMap) -> MultiMap:
    for x in domain_grid(T.domain, _VALIDATION_GRID_POINTS):
        _value_set(T, x)  # raises on inverted endpoints or bad evaluations
    return T


def interval_map(
    domain: CompactSet,
    lo: Union[str, ExprAst],
    hi: Union[str, ExprAst],
) -> MultiMap:
    """Map x to the interval [lo(x), hi(x)].

    Both endpoint expressions are evaluated on a 10001-point grid over
    the domain; the map is rejected if any evaluation fails or if
    lo(x) > hi(x) beyond a 1e-12 slack.
    """
    T = MultiMap(domain, "interval_endpoints", lo=_as_ast(lo), hi=_as_ast(hi))
    return _validate_on_grid(T)


def singleton_map(domain: CompactSet, f: Union[str, ExprAst]) -> MultiMap:
    """Map x to the one-point set {f(x)}."""
    T = MultiMap(domain, "singleton", members=(_as_ast(f),))
    return _validate_on_grid(T)


def finite_set_map(
    domain: CompactSet, members: Iterable[Union[str, ExprAst]]
) -> MultiMap:
    """Map x to the finite set {e(x) for each member expression e}."""
    asts = tuple(_as_ast(e) for e in members)
    if not asts:
        raise InvariantError("finite-set map needs at least one member expression")
    T = MultiMap(domain, "finite_set", members=asts)
    return _validate_on_grid(T)


def table_map(
    domain: CompactSet,
    entries: Iterable[tuple[float, Union[CompactSet, Sequence[Sequence[float]]]]],
) -> MultiMap:
    """Map tabulated points to explicit value sets.

    Lookups require exact argument hits; there is no interpolation.
    Every key must belong to the domain.
    """
    rows = []
    for key, value in entries:
        key = float(key)
        if not domain.contains(key):
            raise InvariantError(f"table key {key} lies outside the domain")
        if not isinstance(value, CompactSet):
            value = CompactSet(value)
        rows.append((key, value))
    if not rows:
        raise InvariantError("table map needs at least one entry")
    return MultiMap(domain, "table", table=tuple(rows))


def apply_map(T: MultiMap, x: float) -> CompactSet:
    """Value set T(x); ``x`` must belong to the domain of the map."""
    if not T.domain.contains(x):
        raise DomainError(f"argument {x} lies outside the map domain")
    return _value_set(T, x)


def is_fixed_point(T: MultiMap, x: float, tol: float = 0.0) -> bool:
    """True when the distance from x to T(x) is at most ``tol``."""
    if tol < 0.0:
        raise DomainError(f"tolerance must be >= 0, got {tol}")
    return dist_point_set(x, apply_map(T, x)) <= tol
