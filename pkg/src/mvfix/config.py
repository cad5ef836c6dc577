"""Problem configuration: JSON schema, validation, and object builders.

A configuration bundles the domain, the multivalued map, the gauge
function F, the integrand, and all sweep/iteration knobs.  Loading is
strict: unknown keys and out-of-range values raise :class:`ConfigError`
naming the offending key.  Serialization round-trips exactly.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Union

from .analysis import MODES
from .errors import ConfigError, MvfixError
from .ffunctions import F_KINDS, FFunction
from .integrand import (
    ConstantIntegrand,
    ExponentialIntegrand,
    Integrand,
    PowerIntegrand,
    expression_integrand,
)
from .maps import MultiMap, finite_set_map, interval_map, singleton_map, table_map
from .sets1d import CompactSet

__all__ = [
    "MapSpec",
    "FSpec",
    "IntegrandSpec",
    "ProblemConfig",
    "config_from_dict",
    "config_to_dict",
    "load_config",
    "save_config",
    "build_domain",
    "build_map",
    "build_ffunction",
    "build_integrand",
]

MAP_KINDS = ("interval_endpoints", "singleton", "finite_set", "table")
INTEGRAND_KINDS = ("constant", "power", "exponential", "expression")


@dataclass(frozen=True)
class MapSpec:
    kind: str
    lo: str | None = None
    hi: str | None = None
    f: str | None = None
    members: tuple[str, ...] = ()
    entries: tuple[tuple[float, tuple[tuple[float, float], ...]], ...] = ()


@dataclass(frozen=True)
class FSpec:
    kind: str = "log"
    k: float = 0.5


@dataclass(frozen=True)
class IntegrandSpec:
    kind: str = "constant"
    c: float = 1.0
    p: float = 1.0
    rate: float = 1.0
    scale: float = 1.0
    source: str | None = None
    grid_max: float = 100.0


@dataclass(frozen=True)
class ProblemConfig:
    domain: tuple[tuple[float, float], ...]
    map: MapSpec
    f: FSpec = field(default_factory=FSpec)
    integrand: IntegrandSpec = field(default_factory=IntegrandSpec)
    tau: float | None = None
    grid_size: int = 101
    random_pairs: int = 1000
    seed: int = 42
    mode: str = "hausdorff"
    tol: float = 1e-12
    max_iter: int = 10_000
    x0: float | None = None


def _require_keys(data: dict, allowed: set[str], where: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown key '{sorted(unknown)[0]}' in {where}")


def _number(data: dict, key: str, where: str, default=None, required=False):
    if key not in data:
        if required:
            raise ConfigError(f"{where} requires '{key}'")
        return default
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{key} must be a number, got {v!r}")
    return v


def _map_spec_from_dict(data: Any) -> MapSpec:
    if not isinstance(data, dict):
        raise ConfigError("map must be an object")
    kind = data.get("kind")
    if kind not in MAP_KINDS:
        raise ConfigError(f"map.kind must be one of {MAP_KINDS}, got {kind!r}")
    if kind == "interval_endpoints":
        _require_keys(data, {"kind", "lo", "hi"}, "map")
        lo, hi = data.get("lo"), data.get("hi")
        if not isinstance(lo, str) or not isinstance(hi, str):
            raise ConfigError("map.lo and map.hi must be expression strings")
        return MapSpec(kind=kind, lo=lo, hi=hi)
    if kind == "singleton":
        _require_keys(data, {"kind", "f"}, "map")
        f = data.get("f")
        if not isinstance(f, str):
            raise ConfigError("map.f must be an expression string")
        return MapSpec(kind=kind, f=f)
    if kind == "finite_set":
        _require_keys(data, {"kind", "members"}, "map")
        members = data.get("members")
        if not isinstance(members, list) or not members or not all(
            isinstance(m, str) for m in members
        ):
            raise ConfigError("map.members must be a nonempty list of expression strings")
        return MapSpec(kind=kind, members=tuple(members))
    _require_keys(data, {"kind", "entries"}, "map")
    entries = data.get("entries")
    if not isinstance(entries, list) or not entries:
        raise ConfigError("map.entries must be a nonempty list of [x, intervals] rows")
    rows = []
    for row in entries:
        try:
            key, intervals = row
            rows.append(
                (float(key), tuple((float(lo), float(hi)) for lo, hi in intervals))
            )
        except (TypeError, ValueError) as err:
            raise ConfigError(f"bad table entry {row!r}: {err}") from None
    return MapSpec(kind=kind, entries=tuple(rows))


def _f_spec_from_dict(data: Any) -> FSpec:
    if not isinstance(data, dict):
        raise ConfigError("f must be an object")
    _require_keys(data, {"kind", "k"}, "f")
    kind = data.get("kind", "log")
    if kind not in F_KINDS:
        raise ConfigError(f"f.kind must be one of {F_KINDS}, got {kind!r}")
    k = _number(data, "k", "f", default=0.5)
    if not 0.0 < k < 1.0:
        raise ConfigError(f"f.k must lie in (0, 1), got {k}")
    return FSpec(kind=kind, k=float(k))


def _integrand_spec_from_dict(data: Any) -> IntegrandSpec:
    if not isinstance(data, dict):
        raise ConfigError("integrand must be an object")
    kind = data.get("kind", "constant")
    if kind not in INTEGRAND_KINDS:
        raise ConfigError(
            f"integrand.kind must be one of {INTEGRAND_KINDS}, got {kind!r}"
        )
    if kind == "constant":
        _require_keys(data, {"kind", "c"}, "integrand")
        c = _number(data, "c", "integrand", default=1.0)
        if not c > 0.0:
            raise ConfigError(f"integrand.c must be positive, got {c}")
        return IntegrandSpec(kind=kind, c=float(c))
    if kind == "power":
        _require_keys(data, {"kind", "p", "scale"}, "integrand")
        p = _number(data, "p", "integrand", required=True)
        scale = _number(data, "scale", "integrand", default=1.0)
        if not p > -1.0:
            raise ConfigError(f"integrand.p must be > -1, got {p}")
        if not scale > 0.0:
            raise ConfigError(f"integrand.scale must be positive, got {scale}")
        return IntegrandSpec(kind=kind, p=float(p), scale=float(scale))
    if kind == "exponential":
        _require_keys(data, {"kind", "rate", "scale"}, "integrand")
        rate = _number(data, "rate", "integrand", required=True)
        scale = _number(data, "scale", "integrand", default=1.0)
        if not scale > 0.0:
            raise ConfigError(f"integrand.scale must be positive, got {scale}")
        return IntegrandSpec(kind=kind, rate=float(rate), scale=float(scale))
    _require_keys(data, {"kind", "source", "grid_max"}, "integrand")
    source = data.get("source")
    if not isinstance(source, str):
        raise ConfigError("integrand.source must be an expression string")
    grid_max = _number(data, "grid_max", "integrand", default=100.0)
    if not grid_max > 0.0:
        raise ConfigError(f"integrand.grid_max must be positive, got {grid_max}")
    return IntegrandSpec(kind=kind, source=source, grid_max=float(grid_max))


_TOP_KEYS = {
    "domain",
    "map",
    "f",
    "integrand",
    "tau",
    "grid_size",
    "random_pairs",
    "seed",
    "mode",
    "tol",
    "max_iter",
    "x0",
}


def config_from_dict(data: Any) -> ProblemConfig:
    """Validate a parsed JSON object and produce a :class:`ProblemConfig`."""
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    _require_keys(data, _TOP_KEYS, "configuration")

    domain_raw = data.get("domain")
    if not isinstance(domain_raw, list) or not domain_raw:
        raise ConfigError("domain must be a nonempty list of [lo, hi] pairs")
    try:
        domain = tuple((float(lo), float(hi)) for lo, hi in domain_raw)
        CompactSet(domain)  # surfaces reversed/non-finite endpoints now
    except MvfixError as err:
        raise ConfigError(f"bad domain: {err}") from None
    except (TypeError, ValueError) as err:
        raise ConfigError(f"bad domain: {err}") from None

    if "map" not in data:
        raise ConfigError("configuration requires 'map'")
    map_spec = _map_spec_from_dict(data["map"])
    f_spec = _f_spec_from_dict(data.get("f", {}))
    integrand_spec = _integrand_spec_from_dict(data.get("integrand", {}))

    tau = _number(data, "tau", "configuration")
    if tau is not None and not tau > 0.0:
        raise ConfigError(f"tau must be positive, got {tau}")
    grid_size = _number(data, "grid_size", "configuration", default=101)
    if int(grid_size) != grid_size or grid_size < 2:
        raise ConfigError(f"grid_size must be an integer >= 2, got {grid_size}")
    random_pairs = _number(data, "random_pairs", "configuration", default=1000)
    if int(random_pairs) != random_pairs or random_pairs < 0:
        raise ConfigError(f"random_pairs must be an integer >= 0, got {random_pairs}")
    seed = _number(data, "seed", "configuration", default=42)
    if int(seed) != seed:
        raise ConfigError(f"seed must be an integer, got {seed}")
    mode = data.get("mode", "hausdorff")
    if mode not in MODES:
        raise ConfigError(f"mode must be one of {MODES}, got {mode!r}")
    tol = _number(data, "tol", "configuration", default=1e-12)
    if tol < 0.0:
        raise ConfigError(f"tol must be >= 0, got {tol}")
    max_iter = _number(data, "max_iter", "configuration", default=10_000)
    if int(max_iter) != max_iter or max_iter < 1:
        raise ConfigError(f"max_iter must be an integer >= 1, got {max_iter}")
    x0 = _number(data, "x0", "configuration")

    return ProblemConfig(
        domain=domain,
        map=map_spec,
        f=f_spec,
        integrand=integrand_spec,
        tau=None if tau is None else float(tau),
        grid_size=int(grid_size),
        random_pairs=int(random_pairs),
        seed=int(seed),
        mode=mode,
        tol=float(tol),
        max_iter=int(max_iter),
        x0=None if x0 is None else float(x0),
    )


def config_to_dict(cfg: ProblemConfig) -> dict:
    """Plain JSON-ready dict; feeding it back reproduces an equal config."""
    raw = asdict(cfg)
    raw["domain"] = [list(pair) for pair in cfg.domain]
    map_raw: dict[str, Any] = {"kind": cfg.map.kind}
    if cfg.map.kind == "interval_endpoints":
        map_raw.update(lo=cfg.map.lo, hi=cfg.map.hi)
    elif cfg.map.kind == "singleton":
        map_raw["f"] = cfg.map.f
    elif cfg.map.kind == "finite_set":
        map_raw["members"] = list(cfg.map.members)
    else:
        map_raw["entries"] = [
            [key, [list(iv) for iv in intervals]] for key, intervals in cfg.map.entries
        ]
    raw["map"] = map_raw
    raw["f"] = {"kind": cfg.f.kind, "k": cfg.f.k}
    integrand_raw: dict[str, Any] = {"kind": cfg.integrand.kind}
    if cfg.integrand.kind == "constant":
        integrand_raw["c"] = cfg.integrand.c
    elif cfg.integrand.kind == "power":
        integrand_raw.update(p=cfg.integrand.p, scale=cfg.integrand.scale)
    elif cfg.integrand.kind == "exponential":
        integrand_raw.update(rate=cfg.integrand.rate, scale=cfg.integrand.scale)
    else:
        integrand_raw.update(source=cfg.integrand.source, grid_max=cfg.integrand.grid_max)
    raw["integrand"] = integrand_raw
    if cfg.tau is None:
        raw.pop("tau")
    if cfg.x0 is None:
        raw.pop("x0")
    return raw


def load_config(path: Union[str, Path]) -> ProblemConfig:
    """Read and validate a JSON configuration file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise ConfigError(f"cannot read configuration: {err}") from None
    except json.JSONDecodeError as err:
        raise ConfigError(f"configuration is not valid JSON: {err}") from None
    return config_from_dict(data)


def save_config(cfg: ProblemConfig, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(config_to_dict(cfg), fh, indent=2)
        fh.write("\n")


def build_domain(cfg: ProblemConfig) -> CompactSet:
    return CompactSet(cfg.domain)


def build_map(cfg: ProblemConfig) -> MultiMap:
    """Construct the configured map, running its grid validation."""
    domain = build_domain(cfg)
    spec = cfg.map
    if spec.kind == "interval_endpoints":
        return interval_map(domain, spec.lo, spec.hi)
    if spec.kind == "singleton":
        return singleton_map(domain, spec.f)
    if spec.kind == "finite_set":
        return finite_set_map(domain, spec.members)
    return table_map(domain, [(key, list(intervals)) for key, intervals in spec.entries])


def build_ffunction(cfg: ProblemConfig) -> FFunction:
    return FFunction(kind=cfg.f.kind, k_witness=cfg.f.k)


def build_integrand(cfg: ProblemConfig) -> Integrand:
    spec = cfg.integrand
    if spec.kind == "constant":
        return ConstantIntegrand(spec.c)
    if spec.kind == "power":
        return PowerIntegrand(p=spec.p, scale=spec.scale)
    if spec.kind == "exponential":
        return ExponentialIntegrand(rate=spec.rate, scale=spec.scale)
    return expression_integrand(spec.source, grid_max=spec.grid_max)
