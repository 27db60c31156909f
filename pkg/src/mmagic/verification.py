"""Checkers for the anti-fuzzy edge conditions and magic spectra."""

from __future__ import annotations

from enum import Enum

from .constructions import Scheme, block_of_edge, expected_constants
from .model import (
    BipolarPathLabeling,
    CheckReport,
    Labeling,
    MagicSpectrum,
    PathLabeling,
    Violation,
    bipolar_edge_sums,
    edge_sum,
)
from .numerics import Kind, ScaledValue


class SpectrumError(ValueError):
    """Edge sums do not form a valid spectrum in the requested mode."""

    def __init__(self, condition: str, message: str, observed: dict | None = None):
        super().__init__(message)
        self.condition = condition
        self.observed = observed or {}


class Mode(str, Enum):
    STRICT = "strict"  # each constant is one run of (n-1)/m consecutive edges
    LAX = "lax"  # any m distinct sums


class NegativeRule(str, Enum):
    """How the negative edge degree must relate to its endpoints.

    MIN_BOUND is the default: muN <= min(sigmaN).  MAX_BOUND reads it as
    muN >= max(sigmaN); WEAK only asks muN <= max(sigmaN).
    """

    MIN_BOUND = "min-bound"
    MAX_BOUND = "max-bound"
    WEAK = "weak"


def _range_violations(name: str, seq: tuple[ScaledValue, ...], positive: bool) -> list[Violation]:
    out = []
    for idx, v in enumerate(seq, start=1):
        ok = v.is_positive_degree() if positive else v.is_negative_degree()
        if not ok:
            cond = f"{name} in (0,1]" if positive else f"{name} in [-1,0)"
            out.append(Violation(idx, cond, {name: v}))
    return out


def check_anti_fuzzy(L: PathLabeling) -> CheckReport:
    """mu(v_i v_{i+1}) >= max(sigma(v_i), sigma(v_{i+1})) on every edge, all labels in (0, 1]."""
    violations = _range_violations("sigma", L.sigma, True) + _range_violations("mu", L.mu, True)
    for i in range(1, L.n):
        mu = L.mu[i - 1]
        bound = max(L.sigma[i - 1], L.sigma[i])
        if mu < bound:
            violations.append(Violation(i, "mu >= max(sigma)", {"mu": mu, "max_sigma": bound}))
    return CheckReport(tuple(violations))


def check_bipolar_anti_fuzzy(
    L: BipolarPathLabeling, negative_rule: NegativeRule | str = NegativeRule.MIN_BOUND
) -> CheckReport:
    negative_rule = NegativeRule(negative_rule)
    violations = (
        _range_violations("sigmaP", L.sigmaP, True)
        + _range_violations("muP", L.muP, True)
        + _range_violations("sigmaN", L.sigmaN, False)
        + _range_violations("muN", L.muN, False)
    )
    for i in range(1, L.n):
        muP = L.muP[i - 1]
        upper = max(L.sigmaP[i - 1], L.sigmaP[i])
        if muP < upper:
            violations.append(Violation(i, "muP >= max(sigmaP)", {"muP": muP, "max_sigmaP": upper}))
        muN = L.muN[i - 1]
        ends = (L.sigmaN[i - 1], L.sigmaN[i])
        if negative_rule is NegativeRule.MIN_BOUND:
            bound, ok, cond = min(ends), muN <= min(ends), "muN <= min(sigmaN)"
        elif negative_rule is NegativeRule.MAX_BOUND:
            bound, ok, cond = max(ends), muN >= max(ends), "muN >= max(sigmaN)"
        else:
            bound, ok, cond = max(ends), muN <= max(ends), "muN <= max(sigmaN)"
        if not ok:
            violations.append(Violation(i, cond, {"muN": muN, "bound": bound}))
    return CheckReport(tuple(violations))


def check_labeling(L: Labeling, negative_rule: NegativeRule | str = NegativeRule.MIN_BOUND) -> CheckReport:
    if isinstance(L, BipolarPathLabeling):
        return check_bipolar_anti_fuzzy(L, negative_rule)
    return check_anti_fuzzy(L)


def _runs(assignment: tuple[int, ...]) -> list[tuple[int, int]]:
    """Collapse an assignment into (constant index, run length) pairs."""
    runs: list[tuple[int, int]] = []
    for k in assignment:
        if runs and runs[-1][0] == k:
            runs[-1] = (k, runs[-1][1] + 1)
        else:
            runs.append((k, 1))
    return runs


def _spectrum_of(sums: list[ScaledValue], mode: Mode) -> MagicSpectrum:
    constants = tuple(sorted(set(sums)))
    index = {c: k for k, c in enumerate(constants, start=1)}
    assignment = tuple(index[s] for s in sums)
    block_sizes = tuple(assignment.count(k) for k in range(1, len(constants) + 1))
    if mode is Mode.STRICT:
        runs = _runs(assignment)
        if len(runs) != len(constants):
            split = sorted({k for k, _ in runs if [r for r, _ in runs].count(k) > 1})
            raise SpectrumError(
                "consecutive blocks",
                f"constants {[str(constants[k - 1]) for k in split]} are split into several runs",
                {"constants": [constants[k - 1] for k in split]},
            )
        if len(set(block_sizes)) != 1:
            raise SpectrumError(
                "equal blocks",
                f"block sizes {block_sizes} are not all equal",
                {"block_sizes": list(block_sizes)},
            )
    return MagicSpectrum(constants, assignment, block_sizes)


def extract_spectrum(L: Labeling, mode: Mode | str = Mode.STRICT) -> MagicSpectrum:
    """Distinct edge-sum constants of a labeling.

    Raises SpectrumError when strict mode finds constants that are not
    equal-length consecutive runs, or when a bipolar negative channel is not
    the negation of the positive one edge by edge.
    """
    mode = Mode(mode)
    if isinstance(L, BipolarPathLabeling):
        pairs = [bipolar_edge_sums(L, i) for i in range(1, L.n)]
        for i, (pos, neg) in enumerate(pairs, start=1):
            if neg != -pos:
                raise SpectrumError(
                    "negative channel mirrors positive",
                    f"edge {i}: negative sum {neg} is not -({pos})",
                    {"edge": i, "positive": pos, "negative": neg},
                )
        spectrum = _spectrum_of([pos for pos, _ in pairs], mode)
        return MagicSpectrum(
            spectrum.constants,
            spectrum.assignment,
            spectrum.block_sizes,
            tuple(-c for c in spectrum.constants),
        )
    return _spectrum_of([edge_sum(L, i) for i in range(1, L.n)], mode)


def verify_m_magic(
    L: Labeling,
    m: int,
    mode: Mode | str = Mode.STRICT,
    negative_rule: NegativeRule | str = NegativeRule.MIN_BOUND,
) -> CheckReport:
    """Is L an m-magic (bipolar) anti-fuzzy labeling of its path?"""
    report = check_labeling(L, negative_rule)
    try:
        spectrum = extract_spectrum(L, mode)
    except SpectrumError as exc:
        return report + CheckReport((Violation(None, exc.condition, exc.observed),))
    if spectrum.m != m:
        report += CheckReport(
            (Violation(None, "constant count", {"expected": m, "found": spectrum.m, "constants": list(spectrum.constants)}),)
        )
    return report


def conformance(L: Labeling, n: int, m: int, family: Scheme | Kind | str) -> CheckReport:
    """Do the extracted constants equal the closed forms of the scheme?

    ``family`` may be a scheme name or a kind; a kind stands for its
    m-magic scheme.
    """
    if family in (Kind.ANTI_FUZZY, Kind.BIPOLAR, "anti-fuzzy", "bipolar"):
        scheme = Scheme.BIPOLAR_M_MAGIC if Kind(family) is Kind.BIPOLAR else Scheme.M_MAGIC
    else:
        scheme = Scheme(family)
    if scheme.fixed_m is not None:
        m = scheme.fixed_m
    expected = tuple(ScaledValue(u, L.scale_exp) for u in expected_constants(n, m, scheme))
    if L.n != n:
        return CheckReport((Violation(None, "vertex count", {"expected": n, "found": L.n}),))
    try:
        spectrum = extract_spectrum(L, Mode.LAX)
    except SpectrumError as exc:
        return CheckReport((Violation(None, exc.condition, exc.observed),))
    if spectrum.constants != expected:
        return CheckReport(
            (Violation(None, "closed-form constants", {"expected": list(expected), "found": list(spectrum.constants)}),)
        )
    # block k of the equal partition must carry constant k
    violations = []
    for i, k in enumerate(spectrum.assignment, start=1):
        want = block_of_edge(i, n, m)
        if k != want:
            violations.append(
                Violation(i, "edge sum matches its block", {"expected": expected[want - 1], "found": expected[k - 1]})
            )
    return CheckReport(tuple(violations))
