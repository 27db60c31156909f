"""Exhaustive search for m-magic labelings of short paths on a finite grid.

Labels range over {1, ..., G} units.  Witnesses come out in lexicographic
order of (sigma_1..sigma_n, mu_1..mu_{n-1}), so runs are reproducible and
the first-vertex partitions can be searched in parallel and concatenated.

The search keeps its own integer bookkeeping and never calls the checkers
in :mod:`mmagic.verification`, so the two can be compared against each
other.  Bipolar searches run on the positive channel and mirror the result;
non-mirror bipolar witnesses are not explored.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import IO, Iterator, Sequence

from .constructions import Scheme, generate
from .model import BipolarPathLabeling, CheckReport, Labeling, PathLabeling, Violation
from .numerics import Kind, scale_band
from .serialization import labeling_to_dict
from .verification import Mode

DEFAULT_MAX_N = 7
DEFAULT_MAX_GRID = 40
CELLS_ENV = "MMAGIC_MAX_ORACLE_CELLS"


class OracleBoundsError(ValueError):
    """The requested search is larger than the configured bounds."""


@dataclass(frozen=True)
class OracleConfig:
    n: int
    m: int
    grid: int
    p: int = 2
    mode: Mode = Mode.LAX
    kind: Kind = Kind.ANTI_FUZZY
    sigma_prefix: tuple[int, ...] = ()
    override: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "sigma_prefix", tuple(self.sigma_prefix))

    @property
    def cells(self) -> int:
        """Size of the unpruned space G^(free vertices) * G^(edges)."""
        return self.grid ** (self.n - len(self.sigma_prefix) + self.n - 1)

    def validate(self) -> None:
        if self.n < 2 or self.m < 1:
            raise ValueError(f"need n >= 2 and m >= 1, got n={self.n}, m={self.m}")
        if self.grid < 1:
            raise ValueError("grid must be >= 1")
        if self.grid > 10**self.p:
            raise OracleBoundsError(f"grid {self.grid} exceeds 1 = {10**self.p} units at p={self.p}")
        if len(self.sigma_prefix) > self.n or any(not 1 <= u <= self.grid for u in self.sigma_prefix):
            raise ValueError(f"sigma prefix {self.sigma_prefix} does not fit n={self.n}, grid={self.grid}")
        if not self.override and (self.n > DEFAULT_MAX_N or self.grid > DEFAULT_MAX_GRID):
            raise OracleBoundsError(
                f"n={self.n}, G={self.grid} exceeds the default bounds n <= {DEFAULT_MAX_N}, "
                f"G <= {DEFAULT_MAX_GRID}; pass override=True to search anyway"
            )
        cap = os.environ.get(CELLS_ENV)
        if cap is not None and self.cells > int(cap):
            raise OracleBoundsError(f"search space {self.cells} cells exceeds {CELLS_ENV}={cap}")


@dataclass
class OracleResult:
    verdict: str  # "found" or "exhausted-none"
    witnesses: list[Labeling] = field(default_factory=list)
    complete: bool = True  # False when the limit cut the search short

    @property
    def found(self) -> bool:
        return self.verdict == "found"


def _sigma_strict(cfg: OracleConfig, b: int) -> Iterator[tuple[tuple[int, ...], list[tuple[int, int]]]]:
    """Vertex labelings for which every block still has a feasible constant.

    Yields sigma together with the [lo, hi] interval of admissible block
    constants.
    """
    n, G, prefix = cfg.n, cfg.grid, cfg.sigma_prefix
    sigma = [0] * n
    bounds: list[list[int]] = [[1, 3 * G] for _ in range(cfg.m)]

    def rec(pos: int) -> Iterator[tuple[tuple[int, ...], list[tuple[int, int]]]]:
        if pos == n:
            yield tuple(sigma), [tuple(x) for x in bounds]
            return
        choices = (prefix[pos],) if pos < len(prefix) else range(1, G + 1)
        for s in choices:
            sigma[pos] = s
            if pos == 0:
                yield from rec(1)
                continue
            k = (pos - 1) // b  # block of edge (pos, pos+1), 0-based
            lo, hi = bounds[k]
            pair = sigma[pos - 1] + s
            new_lo = max(lo, pair + max(sigma[pos - 1], s))
            new_hi = min(hi, pair + G)
            if new_lo > new_hi:
                continue
            bounds[k] = [new_lo, new_hi]
            yield from rec(pos + 1)
            bounds[k] = [lo, hi]

    yield from rec(0)


def _iter_strict(cfg: OracleConfig) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    n, m = cfg.n, cfg.m
    if (n - 1) % m:
        return
    b = (n - 1) // m
    for sigma, bounds in _sigma_strict(cfg, b):
        chosen: list[int] = []

        def pick(k: int) -> Iterator[tuple[int, ...]]:
            if k == m:
                yield tuple(chosen)
                return
            lo, hi = bounds[k]
            for K in range(lo, hi + 1):
                if K in chosen:
                    continue
                chosen.append(K)
                yield from pick(k + 1)
                chosen.pop()

        for constants in pick(0):
            mu = tuple(constants[(i - 1) // b] - sigma[i - 1] - sigma[i] for i in range(1, n))
            yield sigma, mu


def _iter_lax(cfg: OracleConfig) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    n, m, G, prefix = cfg.n, cfg.m, cfg.grid, cfg.sigma_prefix
    edges = n - 1
    if m > edges:
        return
    free = [range(1, G + 1)] * (n - len(prefix))
    mu = [0] * edges

    def rec_mu(sigma: tuple[int, ...], i: int, sums: dict[int, int]) -> Iterator[tuple[int, ...]]:
        if i == edges:
            if len(sums) == m:
                yield tuple(mu)
            return
        a, c = sigma[i], sigma[i + 1]
        for u in range(max(a, c), G + 1):
            s = a + u + c
            new = s not in sums
            distinct = len(sums) + new
            if distinct > m or distinct + (edges - i - 1) < m:
                continue
            mu[i] = u
            sums[s] = sums.get(s, 0) + 1
            yield from rec_mu(sigma, i + 1, sums)
            sums[s] -= 1
            if not sums[s]:
                del sums[s]

    for rest in product(*free):
        sigma = prefix + rest
        for mus in rec_mu(sigma, 0, {}):
            yield sigma, mus


def iter_witness_units(cfg: OracleConfig) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Lazily enumerate (sigma, mu) unit tuples; positive channel only for bipolar."""
    cfg.validate()
    if cfg.mode is Mode.STRICT:
        return _iter_strict(cfg)
    return _iter_lax(cfg)


def _to_labeling(cfg: OracleConfig, sigma: Sequence[int], mu: Sequence[int]) -> Labeling:
    if cfg.kind is Kind.BIPOLAR:
        return BipolarPathLabeling.mirror(sigma, mu, cfg.p)
    return PathLabeling.from_units(sigma, mu, cfg.p)


def _collect(cfg: OracleConfig, limit: int) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], bool]:
    out = []
    for w in iter_witness_units(cfg):
        if len(out) == limit:
            return out, False
        out.append(w)
    return out, True


def brute_force_search(
    n: int,
    m: int,
    grid: int,
    p: int = 2,
    mode: Mode | str = Mode.LAX,
    limit: int = 10,
    kind: Kind | str = Kind.ANTI_FUZZY,
    sigma_prefix: Sequence[int] = (),
    override: bool = False,
    workers: int = 1,
) -> OracleResult:
    """Search for labelings with exactly m distinct edge sums.

    With ``workers > 1`` the first-vertex partitions run in separate
    processes; their witness lists are concatenated in partition order, which
    is the same list a serial run returns.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    cfg = OracleConfig(n, m, grid, p, Mode(mode), Kind(kind), tuple(sigma_prefix), override)
    cfg.validate()
    if workers > 1 and not cfg.sigma_prefix:
        parts = [OracleConfig(n, m, grid, p, cfg.mode, cfg.kind, (s,), override) for s in range(1, grid + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_collect, parts, [limit] * len(parts)))
        units: list = []
        complete = True
        for found, done in results:
            units.extend(found)
            complete = complete and done
        if len(units) > limit:
            units, complete = units[:limit], False
    else:
        units, complete = _collect(cfg, limit)
    witnesses = [_to_labeling(cfg, s, u) for s, u in units]
    return OracleResult("found" if witnesses else "exhausted-none", witnesses, complete)


def write_jsonl(result: OracleResult, out: IO[str]) -> None:
    """One witness per line, then a summary line."""
    for w in result.witnesses:
        out.write(json.dumps(labeling_to_dict(w), sort_keys=True) + "\n")
    out.write(json.dumps({"verdict": result.verdict, "witnesses": len(result.witnesses), "complete": result.complete}) + "\n")


def _scheme_for(m: int, kind: Kind) -> Scheme:
    if kind is Kind.BIPOLAR:
        return Scheme.BIPOLAR_MAGIC if m == 1 else Scheme.BIPOLAR_M_MAGIC
    return {1: Scheme.MAGIC, 2: Scheme.BIMAGIC}.get(m, Scheme.M_MAGIC)


def cross_check_generator(
    n: int, m: int, kind: Kind | str = Kind.ANTI_FUZZY, grid: int | None = None, p: int | None = None
) -> CheckReport:
    """Is the closed-form labeling for (n, m) a point of the oracle's feasible set?

    The generator's vertex labels are pinned as the search prefix and every
    edge labeling on the grid is enumerated in strict mode; the check passes
    when the generator's edge labels show up among the witnesses.  ``grid``
    defaults to the largest generated unit.
    """
    kind = Kind(kind)
    scheme = _scheme_for(m, kind)
    if p is None:
        p = scale_band(n, kind)
    L = generate(scheme, n, m, p)
    if isinstance(L, BipolarPathLabeling):
        sigma, mu = [v.units for v in L.sigmaP], tuple(v.units for v in L.muP)
    else:
        sigma, mu = list(L.sigma_units()), L.mu_units()
    largest = max(max(sigma), max(mu))
    if grid is None:
        grid = largest
    if grid < largest:
        return CheckReport((Violation(None, "generator fits grid", {"grid": grid, "largest_unit": largest}),))
    cfg = OracleConfig(n, m, grid, p, Mode.STRICT, kind, tuple(sigma), override=True)
    for _, w in iter_witness_units(cfg):
        if w == mu:
            return CheckReport()
    return CheckReport((Violation(None, "generator among oracle witnesses", {"scheme": scheme.value, "grid": grid}),))
