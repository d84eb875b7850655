"""Harness configuration: a single JSON document, overridable from the CLI."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from ..calculus import SliceDomain
from ..errors import InvalidConfig, UnknownSuite

SUITES = (
    "ring-laws",
    "product-equivalence",
    "reciprocal",
    "characterization",
    "hyperholomorphic",
    "fueter",
)
BACKENDS = ("analytic", "fd", "both")
FORMATS = ("json", "text")

# Tolerance per check and backend.  Residual kinds are fixed per check in the
# suites; see the README for which checks are scaled.
DEFAULT_TOLERANCES = {
    "analytic": {
        "star-associativity": 1e-12,
        "star-distributivity": 1e-12,
        "star-neutral": 1e-12,
        "star-constants": 1e-12,
        "star-powers": 1e-12,
        "star-mixed-degree": 1e-12,
        "star-noncommutative": 1e-12,
        "conj-monomials": 1e-12,
        "conj-involution": 1e-12,
        "conj-additive": 1e-12,
        "conj-antihomomorphism": 1e-12,
        "real-factor-collapse": 1e-12,
        "closed-formula-vs-convolution": 1e-8,
        "forms-vs-convolution": 1e-9,
        "forms-vs-closed-formula": 1e-8,
        "forms-constants": 1e-9,
        "forms-real-factor-collapse": 1e-9,
        "reciprocal-right": 1e-10,
        "reciprocal-left": 1e-10,
        "symmetrization-real": 1e-12,
        "symm-pointwise-vs-series": 1e-9,
        "inner-product-identity": 1e-12,
        "recip-pointwise-vs-inverse": 1e-9,
        "recip-of-p": 1e-9,
        "cullen-residual": 1e-9,
        "cr-residual-proper": 1e-9,
        "compatibility-residual": 1e-9,
        "nonproper-witness": 1e-9,
        "fundamental-property": 1e-9,
        "proper-form-series": 1e-9,
        "modified-cr-product": 1e-9,
        "product-rule-identity": 1e-8,
        "product-properness": 1e-8,
        "conjugate-modified-cr": 1e-9,
        "conjugate-compatibility": 1e-9,
        "pointwise-associativity": 1e-8,
        "hyperholomorphic-certificate": 1e-8,
        "dl-of-p": 1e-10,
        "dl-of-p2": 1e-10,
        "fueter-slice-identity": 1e-8,
        "fueter-laplacian": 1e-7,
        "laplacian-cross-check": 1e-9,
        "laplacian-examples": 1e-9,
        "angular-factorization": 1e-9,
    },
    "fd": {
        "forms-vs-convolution": 1e-4,
        "forms-vs-closed-formula": 1e-4,
        "forms-constants": 1e-4,
        "forms-real-factor-collapse": 1e-4,
        "symm-pointwise-vs-series": 1e-4,
        "recip-pointwise-vs-inverse": 1e-4,
        "recip-of-p": 1e-4,
        "cullen-residual": 1e-4,
        "cr-residual-proper": 1e-4,
        "compatibility-residual": 1e-4,
        "fundamental-property": 1e-4,
        "proper-form-series": 1e-4,
        "modified-cr-product": 1e-4,
        "product-rule-identity": 1e-4,
        "product-properness": 1e-4,
        "conjugate-modified-cr": 1e-4,
        "conjugate-compatibility": 1e-4,
        "pointwise-associativity": 1e-4,
        "hyperholomorphic-certificate": 1e-3,
        "dl-of-p": 1e-4,
        "dl-of-p2": 1e-4,
        "fueter-slice-identity": 1e-4,
        "fueter-laplacian": 1e-2,
        "laplacian-cross-check": 1e-2,
        "laplacian-examples": 1e-4,
        "angular-factorization": 1e-4,
    },
}

# Sample sizes per suite.
DEFAULT_COUNTS = {
    "ring-laws": 200,
    "product-equivalence": 50,
    "points": 100,
    "reciprocal": 100,
    "characterization": 20,
    "smooth-fields": 5,
    "hyperholomorphic": 4,
    "fueter": 8,
    "fd-series": 3,
}

_KEYS = {"suites", "seed", "order", "backend", "grid", "tolerances", "counts",
         "fd_step", "report", "format", "jobs", "timings"}


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple = SUITES
    seed: int = 0
    order: int = 8
    backend: str = "both"
    domain: SliceDomain = field(default_factory=SliceDomain)
    tolerances: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    fd_step: float = 1e-3
    report: str | None = None
    format: str = "json"
    jobs: int = 1
    timings: bool = False

    def __post_init__(self):
        validate(self)

    def tolerance(self, name: str, backend: str) -> float:
        override = self.tolerances.get(backend, {}).get(name, self.tolerances.get(name))
        if override is not None:
            return float(override)
        table = DEFAULT_TOLERANCES[backend]
        if name not in table:
            return DEFAULT_TOLERANCES["analytic"][name]
        return table[name]

    def count(self, key: str) -> int:
        return int(self.counts.get(key, DEFAULT_COUNTS[key]))

    def backends(self) -> tuple:
        return ("analytic", "fd") if self.backend == "both" else (self.backend,)

    def with_overrides(self, **kwargs) -> "SuiteConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def echo(self) -> dict:
        """The settings that determine results, for embedding in reports."""
        d = self.domain
        return {
            "suites": [name for name in SUITES if name in self.suites],
            "seed": self.seed,
            "order": self.order,
            "backend": self.backend,
            "fd_step": self.fd_step,
            "grid": {
                "t_range": list(d.t_range),
                "r_range": list(d.r_range),
                "alpha_range": list(d.alpha_range),
                "beta_range": list(d.beta_range),
                "counts": list(d.counts),
            },
            "counts": {k: self.count(k) for k in sorted(DEFAULT_COUNTS)},
        }


def _positive(value, what):
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not (
            math.isfinite(value) and value > 0):
        raise InvalidConfig(f"{what} must be a positive number, got {value!r}")


def validate(cfg: SuiteConfig) -> None:
    for name in cfg.suites:
        if name not in SUITES:
            raise UnknownSuite(f"unknown suite {name!r}; registered: {', '.join(SUITES)}")
    if not isinstance(cfg.seed, int) or isinstance(cfg.seed, bool) or cfg.seed < 0:
        raise InvalidConfig(f"seed must be a non-negative integer, got {cfg.seed!r}")
    if not isinstance(cfg.order, int) or isinstance(cfg.order, bool) or not 1 <= cfg.order <= 64:
        raise InvalidConfig(f"order must be an integer in [1, 64], got {cfg.order!r}")
    if cfg.backend not in BACKENDS:
        raise InvalidConfig(f"backend must be one of {BACKENDS}, got {cfg.backend!r}")
    if cfg.format not in FORMATS:
        raise InvalidConfig(f"format must be one of {FORMATS}, got {cfg.format!r}")
    if not isinstance(cfg.jobs, int) or cfg.jobs < 1:
        raise InvalidConfig(f"jobs must be a positive integer, got {cfg.jobs!r}")
    _positive(cfg.fd_step, "fd_step")
    for key, value in cfg.tolerances.items():
        if isinstance(value, dict):
            if key not in ("analytic", "fd"):
                raise InvalidConfig(f"tolerance group must be 'analytic' or 'fd', got {key!r}")
            for name, tol in value.items():
                _positive(tol, f"tolerance {key}.{name}")
        else:
            _positive(value, f"tolerance {key}")
    for key, value in cfg.counts.items():
        if key not in DEFAULT_COUNTS:
            raise InvalidConfig(f"unknown count {key!r}")
        if not isinstance(value, int) or value < 1:
            raise InvalidConfig(f"count {key} must be a positive integer")


def _domain_from(doc) -> SliceDomain:
    if not isinstance(doc, dict):
        raise InvalidConfig("grid must be an object")
    unknown = set(doc) - {"t_range", "r_range", "alpha_range", "beta_range", "counts"}
    if unknown:
        raise InvalidConfig(f"unknown grid keys: {sorted(unknown)}")
    try:
        return SliceDomain(**{k: tuple(v) for k, v in doc.items()})
    except (TypeError, ValueError) as exc:
        raise InvalidConfig(f"invalid grid: {exc}") from None


def config_from_dict(doc) -> SuiteConfig:
    if not isinstance(doc, dict):
        raise InvalidConfig("config must be a JSON object")
    unknown = set(doc) - _KEYS
    if unknown:
        raise InvalidConfig(f"unknown config keys: {sorted(unknown)}")
    kwargs = {k: v for k, v in doc.items() if k != "grid"}
    if "suites" in kwargs:
        if not isinstance(kwargs["suites"], list):
            raise InvalidConfig("suites must be a list")
        kwargs["suites"] = tuple(kwargs["suites"])
    for key in ("tolerances", "counts"):
        if key in kwargs and not isinstance(kwargs[key], dict):
            raise InvalidConfig(f"{key} must be an object")
    if "grid" in doc:
        kwargs["domain"] = _domain_from(doc["grid"])
    return SuiteConfig(**kwargs)


def load_config(path) -> SuiteConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidConfig(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidConfig(f"config {path} is not valid JSON: {exc}") from None
    return config_from_dict(doc)
