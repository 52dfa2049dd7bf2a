"""Flat key-value run configuration.

Grammar: one `key = value` pair per line; blank lines and lines starting
with `#` are ignored; keys are snake_case identifiers; values are numbers,
`true`/`false`, comma-separated number lists, or plain strings depending on
the key.  Unknown and duplicate keys are rejected, as is any nesting.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, fields
from typing import Optional

from .errors import ConfigSyntaxError, ConfigurationError

__all__ = ["RunConfig", "parse_config"]

_KEY_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")

MODELS = ("lmg", "hubbard", "thermo-dos", "fidelity")


@dataclass(frozen=True)
class RunConfig:
    model: str
    output_dir: str = "."
    # lmg
    S: Optional[int] = None
    gamma: Optional[float] = None
    lambda_c: float = 1.0
    h_min: Optional[float] = None
    h_max: Optional[float] = None
    dh: Optional[float] = None
    # hubbard
    L: Optional[int] = None
    N: Optional[int] = None
    M: Optional[int] = None
    U_start: Optional[float] = None
    U_end: Optional[float] = None
    dU: Optional[float] = None
    B: int = 512
    include_eq6: bool = False
    newton_tol: float = 1e-10
    max_iter: int = 60
    # thermo-dos
    U_values: Optional[tuple] = None
    k_min: float = -math.pi
    k_max: float = math.pi
    k_count: int = 201
    quad_tol: float = 1e-8
    # fidelity
    a_csv: Optional[str] = None
    b_csv: Optional[str] = None
    delta: Optional[float] = None
    at_a: Optional[float] = None
    at_b: Optional[float] = None


def _to_int(raw: str) -> int:
    value = float(raw)
    if value != int(value):
        raise ValueError(f"{raw!r} is not an integer")
    return int(value)


def _to_bool(raw: str) -> bool:
    low = raw.lower()
    if low not in ("true", "false"):
        raise ValueError(f"{raw!r} is not true/false")
    return low == "true"


def _to_float_list(raw: str) -> tuple:
    parts = [p.strip() for p in raw.split(",")]
    if any(not p for p in parts):
        raise ValueError("empty entry in list")
    return tuple(float(p) for p in parts)


_CONVERTERS = {"int": _to_int, "float": float, "bool": _to_bool, "str": str, "floats": _to_float_list}

# key -> value type, per model
_MODEL_KEYS = {
    "lmg": {
        "S": "int",
        "gamma": "float",
        "lambda_c": "float",
        "h_min": "float",
        "h_max": "float",
        "dh": "float",
        "output_dir": "str",
    },
    "hubbard": {
        "L": "int",
        "N": "int",
        "M": "int",
        "U_start": "float",
        "U_end": "float",
        "dU": "float",
        "B": "int",
        "include_eq6": "bool",
        "newton_tol": "float",
        "max_iter": "int",
        "output_dir": "str",
    },
    "thermo-dos": {
        "U_values": "floats",
        "k_min": "float",
        "k_max": "float",
        "k_count": "int",
        "quad_tol": "float",
        "output_dir": "str",
    },
    "fidelity": {
        "a_csv": "str",
        "b_csv": "str",
        "delta": "float",
        "at_a": "float",
        "at_b": "float",
        "output_dir": "str",
    },
}

_REQUIRED = {
    "lmg": ("S", "gamma", "h_min", "h_max", "dh"),
    "hubbard": ("L", "N", "M", "U_start", "U_end", "dU"),
    "thermo-dos": ("U_values",),
    "fidelity": ("a_csv", "b_csv", "delta"),
}


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigurationError(msg)


def _validate(config: RunConfig) -> None:
    m = config.model
    require = _require
    if m == "lmg":
        require(config.S >= 1, "S must be at least 1")
        require(config.lambda_c > 0, "lambda_c must be positive")
        require(config.dh > 0, "dh must be positive")
        require(config.h_min < config.h_max, "h_min must be below h_max")
    elif m == "hubbard":
        require(config.L >= 1 and config.N >= 1 and config.M >= 1, "L, N, M must be positive")
        require(config.N <= config.L, "N must not exceed L")
        require(2 * config.M <= config.N, "M must not exceed N/2")
        require(config.U_end > 0, "U_end must be positive")
        require(config.U_start > config.U_end, "U_start must exceed U_end")
        require(config.dU > 0, "dU must be positive")
        require(config.B >= 16, "B must be at least 16")
        require(0 < config.newton_tol <= 1e-10, "newton_tol must be in (0, 1e-10]")
        require(config.max_iter >= 1, "max_iter must be at least 1")
    elif m == "thermo-dos":
        require(len(config.U_values) > 0, "U_values must be non-empty")
        require(all(u > 0 for u in config.U_values), "every U must be positive")
        require(config.quad_tol > 0, "quad_tol must be positive")
        require(config.k_count >= 1, "k_count must be at least 1")
        require(config.k_min < config.k_max, "k_min must be below k_max")
        require(
            config.k_min >= -math.pi - 1e-12 and config.k_max <= math.pi + 1e-12,
            "k grid must lie inside [-pi, pi]",
        )
    elif m == "fidelity":
        require(config.delta > 0, "delta must be positive")


def parse_config(text: str) -> RunConfig:
    """Parses and validates a config document; rejects anything undocumented."""
    seen: dict[str, object] = {}
    lines_by_key: dict[str, int] = {}
    model: Optional[str] = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigSyntaxError("expected `key = value`", lineno)
        key, _, raw_value = line.partition("=")
        key = key.strip()
        value = raw_value.strip()
        if not _KEY_RE.match(key):
            raise ConfigSyntaxError(f"malformed key {key!r}", lineno)
        if not value:
            raise ConfigSyntaxError(f"missing value for {key!r}", lineno)
        if key in seen:
            raise ConfigSyntaxError(f"duplicate key {key!r} (first on line {lines_by_key[key]})", lineno)
        if key == "model":
            if value not in MODELS:
                raise ConfigurationError(f"line {lineno}: unknown model {value!r} (one of {', '.join(MODELS)})")
            model = value
            seen[key] = value
            lines_by_key[key] = lineno
            continue
        seen[key] = value
        lines_by_key[key] = lineno
    if model is None:
        raise ConfigurationError("missing required key `model`")
    allowed = _MODEL_KEYS[model]
    values: dict[str, object] = {"model": model}
    for key, raw in seen.items():
        if key == "model":
            continue
        if key not in allowed:
            raise ConfigurationError(
                f"line {lines_by_key[key]}: unknown key {key!r} for model {model!r}"
            )
        try:
            values[key] = _CONVERTERS[allowed[key]](raw)
        except ValueError as exc:
            raise ConfigSyntaxError(f"bad value for {key!r}: {exc}", lines_by_key[key]) from exc
    missing = [k for k in _REQUIRED[model] if k not in values]
    if missing:
        raise ConfigurationError(f"model {model!r} is missing required key(s): {', '.join(missing)}")
    config = RunConfig(**values)
    _validate(config)
    return config
