import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, TypeVar

from hzoo.core.config import config
from hzoo.core.polyring import GaussRational, Poly
from hzoo.core.printing import pretty

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map `fn` over `items` with up to `config.workers()` threads.

    Results come back in input order whatever the completion order.
    """
    items = list(items)
    workers = min(config.workers(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def canonical(obj: Any) -> Any:
    """JSON-ready canonical form of a check input, used for digests."""
    if isinstance(obj, Poly):
        return {"arity": obj.arity, "field": obj.field.value, "poly": pretty(obj)}
    if isinstance(obj, GaussRational):
        return {"re": str(obj.re), "im": str(obj.im)}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, (str, int, bool)) or obj is None:
        return obj
    if is_dataclass(obj):
        return {f.name: canonical(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [canonical(item) for item in obj]
    return repr(obj)


def inputs_digest(*parts: Any) -> str:
    """sha256 over the canonical JSON of all inputs."""
    payload = json.dumps(canonical(list(parts)), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()
