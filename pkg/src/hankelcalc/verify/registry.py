"""Check registry, specs and machine-readable reports."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..errors import ComputationError, ParameterError
from ..series import format_coeff, to_rational

STATUSES = ("pass", "fail", "conjectural")


class CheckFailed(Exception):
    """Raised inside a check when an asserted pattern breaks at ``index``."""

    def __init__(self, index: int, detail: str, **extra):
        super().__init__(detail)
        self.index = index
        self.detail = detail
        self.extra = extra


def expect(cond: bool, index: int, detail: str, **extra) -> None:
    if not cond:
        raise CheckFailed(index, detail, **extra)


def expect_seq(got, want, what: str, offset: int = 0) -> None:
    """Elementwise equality, failing at the first differing index."""
    for i, (a, b) in enumerate(zip(got, want)):
        if a != b:
            raise CheckFailed(i + offset, f"{what}: index {i + offset} is {a}, expected {b}")
    expect(len(got) == len(want), min(len(got), len(want)) + offset, f"{what}: length mismatch")


@dataclass(frozen=True)
class ParamSet:
    """A rational sample point for the parameterized families of the chopping method."""

    s: Fraction = Fraction(0)
    y: Fraction | None = None
    z: Fraction = Fraction(0)
    t: Fraction | None = None

    def __post_init__(self):
        for name in ("s", "y", "z", "t"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        if self.t is not None:
            if self.t in (0, 1, -1):
                raise ParameterError(f"t must avoid 0 and +-1, got {self.t}")
            object.__setattr__(self, "y", self.t + 1 / self.t)
        if self.y is None:
            raise ParameterError("a ParamSet needs y or t")

    def as_tuple(self) -> tuple:
        if self.t is not None:
            return (self.t, self.z, self.s)
        return (self.y, self.z, self.s)


@dataclass
class CheckSpec:
    id: str
    params: dict = field(default_factory=dict)
    order: int | None = None


@dataclass
class CheckReport:
    id: str
    params: dict
    order: int
    status: str
    witness: dict
    elapsed_ms: float | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and "index" not in self.witness:
            raise ValueError("a failing report must carry a witness index")

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "id": self.id,
            "params": jsonable(self.params),
            "order": self.order,
            "status": self.status,
            "witness": jsonable(self.witness),
            "elapsed_ms": round(self.elapsed_ms, 1) if timing and self.elapsed_ms is not None else None,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            d["id"],
            unjson(d["params"]),
            d["order"],
            d["status"],
            unjson(d["witness"]),
            d.get("elapsed_ms"),
        )

    @classmethod
    def from_json(cls, text: str) -> "CheckReport":
        return cls.from_dict(json.loads(text))


def jsonable(v):
    """Exact rationals become ``"p/q"`` strings; tuples become lists."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str, float)):
        return v
    if isinstance(v, Fraction):
        return format_coeff(v)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return str(v)


def unjson(v):
    """Inverse of :func:`jsonable` for rationals written as ``"p/q"``."""
    if isinstance(v, str) and "/" in v:
        try:
            return to_rational(v)
        except (ValueError, ZeroDivisionError):
            return v
    if isinstance(v, dict):
        return {k: unjson(x) for k, x in v.items()}
    if isinstance(v, list):
        return [unjson(x) for x in v]
    return v


@dataclass(frozen=True)
class CheckEntry:
    id: str
    anchor: str
    default_order: int
    default_params: dict
    fn: Callable
    description: str


_REGISTRY: dict[str, CheckEntry] = {}


def register(id: str, anchor: str, default_order: int, **default_params):
    def deco(fn):
        _REGISTRY[id] = CheckEntry(id, anchor, default_order, default_params, fn, (fn.__doc__ or "").strip())
        return fn

    return deco


def reorder(ids) -> None:
    """Fix the catalog order; ``ids`` must name every registered check exactly once."""
    if sorted(ids) != sorted(_REGISTRY):
        raise ValueError("catalog order must list every registered check")
    entries = {i: _REGISTRY.pop(i) for i in ids}
    _REGISTRY.update(entries)


def _env_order() -> int | None:
    raw = os.environ.get("HF_DEFAULT_ORDER")
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise ParameterError(f"HF_DEFAULT_ORDER must be an integer, got {raw!r}") from None
    if n < 1:
        raise ParameterError("HF_DEFAULT_ORDER must be positive")
    return n


def list_checks() -> list[CheckSpec]:
    """The full catalog in catalog order, with default orders and parameters."""
    env = _env_order()
    return [
        CheckSpec(e.id, dict(e.default_params), env if env is not None else e.default_order)
        for e in _REGISTRY.values()
    ]


def catalog() -> list[CheckEntry]:
    return list(_REGISTRY.values())


def run_check(spec: CheckSpec | str, order: int | None = None, **params) -> CheckReport:
    """Run one catalog check; assertion failures and breakdowns become ``fail`` reports."""
    if isinstance(spec, str):
        spec = CheckSpec(spec, params, order)
    if spec.id not in _REGISTRY:
        raise ParameterError(f"unknown check id {spec.id!r}")
    entry = _REGISTRY[spec.id]
    env = _env_order()
    n = spec.order if spec.order is not None else (env if env is not None else entry.default_order)
    if n < 1:
        raise ParameterError("check order must be positive")
    merged = dict(entry.default_params)
    unknown = set(spec.params) - set(merged)
    if unknown:
        raise ParameterError(f"{spec.id} has no parameter(s) {sorted(unknown)}")
    merged.update(spec.params)
    t0 = time.perf_counter()
    try:
        status, witness = entry.fn(n, **merged)
    except CheckFailed as exc:
        status, witness = "fail", {"index": exc.index, "detail": exc.detail, **exc.extra}
    except ComputationError as exc:
        idx = getattr(exc, "index", None)
        if idx is None:
            idx = getattr(exc, "n", -1)
        status, witness = "fail", {"index": idx, "detail": f"{type(exc).__name__}: {exc}"}
    elapsed = (time.perf_counter() - t0) * 1000
    return CheckReport(spec.id, merged, n, status, witness, elapsed)
