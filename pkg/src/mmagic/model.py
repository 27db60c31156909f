"""Labeled anti-fuzzy paths and the reports produced about them.

Vertices are v_1..v_n and edges v_i v_{i+1} are numbered 1..n-1; every
public index in this module is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Sequence

from .numerics import Kind, ScaledValue, ScaleMismatchError


class LabelRangeError(ValueError):
    """A label falls outside its membership interval."""


class CaseTag(str, Enum):
    CASE1_M_EVEN = "case1-m-even"
    CASE1_M_ODD = "case1-m-odd"
    CASE2_M_ODD = "case2-m-odd"
    NOT_APPLICABLE = "not-applicable"


def _as_values(seq: Sequence[ScaledValue | int], p: int, name: str) -> tuple[ScaledValue, ...]:
    out = []
    for x in seq:
        if isinstance(x, ScaledValue):
            if x.scale_exp != p:
                raise ScaleMismatchError(f"{name}: label at 10^-{x.scale_exp}, expected 10^-{p}")
            out.append(x)
        else:
            out.append(ScaledValue(x, p))
    return tuple(out)


def _check_lengths(n: int, vertex_seqs: dict, edge_seqs: dict) -> None:
    if n < 2:
        raise ValueError(f"a path needs n >= 2 vertices, got {n}")
    for name, seq in vertex_seqs.items():
        if len(seq) != n:
            raise ValueError(f"{name} has {len(seq)} entries, expected {n}")
    for name, seq in edge_seqs.items():
        if len(seq) != n - 1:
            raise ValueError(f"{name} has {len(seq)} entries, expected {n - 1}")


def _check_range(seq: tuple[ScaledValue, ...], name: str, positive: bool) -> None:
    for idx, v in enumerate(seq, start=1):
        ok = v.is_positive_degree() if positive else v.is_negative_degree()
        if not ok:
            interval = "(0, 1]" if positive else "[-1, 0)"
            raise LabelRangeError(f"{name}[{idx}] = {v} lies outside {interval}")


@dataclass(frozen=True)
class PathLabeling:
    """Vertex and edge membership degrees of an anti-fuzzy path P_n.

    Integers passed for ``sigma``/``mu`` are taken as units at ``scale_exp``.
    With ``check_range=False`` out-of-interval labels are kept so a checker
    can report on them; the structural invariants always hold.
    """

    n: int
    scale_exp: int
    sigma: tuple[ScaledValue, ...]
    mu: tuple[ScaledValue, ...]
    check_range: bool = field(default=True, compare=False, repr=False)

    kind = Kind.ANTI_FUZZY

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", _as_values(self.sigma, self.scale_exp, "sigma"))
        object.__setattr__(self, "mu", _as_values(self.mu, self.scale_exp, "mu"))
        _check_lengths(self.n, {"sigma": self.sigma}, {"mu": self.mu})
        if self.check_range:
            _check_range(self.sigma, "sigma", positive=True)
            _check_range(self.mu, "mu", positive=True)

    @classmethod
    def from_units(cls, sigma: Sequence[int], mu: Sequence[int], p: int, check_range: bool = True) -> PathLabeling:
        return cls(len(sigma), p, tuple(sigma), tuple(mu), check_range)

    @property
    def num_edges(self) -> int:
        return self.n - 1

    def sigma_units(self) -> tuple[int, ...]:
        return tuple(v.units for v in self.sigma)

    def mu_units(self) -> tuple[int, ...]:
        return tuple(v.units for v in self.mu)

    def with_mu(self, i: int, value: ScaledValue) -> PathLabeling:
        """Copy with edge ``i`` relabeled; range checking is not applied."""
        mu = list(self.mu)
        mu[i - 1] = value
        return PathLabeling(self.n, self.scale_exp, self.sigma, tuple(mu), check_range=False)


@dataclass(frozen=True)
class BipolarPathLabeling:
    """Positive and negative channels of a bipolar anti-fuzzy path."""

    n: int
    scale_exp: int
    sigmaP: tuple[ScaledValue, ...]
    sigmaN: tuple[ScaledValue, ...]
    muP: tuple[ScaledValue, ...]
    muN: tuple[ScaledValue, ...]
    check_range: bool = field(default=True, compare=False, repr=False)

    kind = Kind.BIPOLAR

    def __post_init__(self) -> None:
        for name in ("sigmaP", "sigmaN", "muP", "muN"):
            object.__setattr__(self, name, _as_values(getattr(self, name), self.scale_exp, name))
        _check_lengths(
            self.n,
            {"sigmaP": self.sigmaP, "sigmaN": self.sigmaN},
            {"muP": self.muP, "muN": self.muN},
        )
        if self.check_range:
            _check_range(self.sigmaP, "sigmaP", positive=True)
            _check_range(self.muP, "muP", positive=True)
            _check_range(self.sigmaN, "sigmaN", positive=False)
            _check_range(self.muN, "muN", positive=False)

    @classmethod
    def mirror(cls, sigmaP: Sequence[int], muP: Sequence[int], p: int, check_range: bool = True) -> BipolarPathLabeling:
        """Build a labeling whose negative channel is the negation of the positive one."""
        return cls(
            len(sigmaP), p,
            tuple(sigmaP), tuple(-u for u in sigmaP),
            tuple(muP), tuple(-u for u in muP),
            check_range,
        )

    @property
    def num_edges(self) -> int:
        return self.n - 1

    def positive(self) -> PathLabeling:
        return PathLabeling(self.n, self.scale_exp, self.sigmaP, self.muP, check_range=False)

    def with_mu(self, i: int, positive: ScaledValue | None = None, negative: ScaledValue | None = None) -> BipolarPathLabeling:
        muP, muN = list(self.muP), list(self.muN)
        if positive is not None:
            muP[i - 1] = positive
        if negative is not None:
            muN[i - 1] = negative
        return BipolarPathLabeling(
            self.n, self.scale_exp, self.sigmaP, self.sigmaN, tuple(muP), tuple(muN), check_range=False
        )


Labeling = PathLabeling | BipolarPathLabeling


@dataclass(frozen=True)
class MagicSpectrum:
    """Distinct edge-sum constants k_1 < ... < k_m and which edge hits which.

    ``assignment[i-1]`` is the 1-based index of the constant attained by
    edge i.  For bipolar labelings ``negative_constants[k-1]`` is the
    negative-channel constant paired with ``constants[k-1]``.
    """

    constants: tuple[ScaledValue, ...]
    assignment: tuple[int, ...]
    block_sizes: tuple[int, ...]
    negative_constants: tuple[ScaledValue, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.constants)


@dataclass(frozen=True)
class AdmissibilityReport:
    kind: Kind
    n: int
    m: int
    admissible: bool
    case_tag: CaseTag
    a: int | None
    reason: str
    extension: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.kind.value,
            "n": self.n,
            "m": self.m,
            "admissible": self.admissible,
            "case_tag": self.case_tag.value,
            "a": self.a,
            "extension": self.extension,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class Violation:
    """One failed condition.

    ``index`` is the 1-based edge or vertex index, or None for
    whole-labeling conditions (spectrum shape, constant count).
    """

    index: int | None
    condition: str
    observed: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "condition": self.condition,
            "observed": {k: _jsonable(v) for k, v in self.observed.items()},
        }


def _jsonable(v: Any) -> Any:
    if isinstance(v, ScaledValue):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass(frozen=True)
class CheckReport:
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def __add__(self, other: CheckReport) -> CheckReport:
        return CheckReport(self.violations + other.violations)

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "violations": [v.to_dict() for v in self.violations]}


def _edge_index(L: Labeling, i: int) -> None:
    if not 1 <= i <= L.n - 1:
        raise IndexError(f"edge index {i} outside 1..{L.n - 1}")


def edge_sum(L: PathLabeling, i: int) -> ScaledValue:
    """sigma(v_i) + mu(v_i v_{i+1}) + sigma(v_{i+1})."""
    _edge_index(L, i)
    return L.sigma[i - 1] + L.mu[i - 1] + L.sigma[i]


def bipolar_edge_sums(L: BipolarPathLabeling, i: int) -> tuple[ScaledValue, ScaledValue]:
    _edge_index(L, i)
    pos = L.sigmaP[i - 1] + L.muP[i - 1] + L.sigmaP[i]
    neg = L.sigmaN[i - 1] + L.muN[i - 1] + L.sigmaN[i]
    return pos, neg
