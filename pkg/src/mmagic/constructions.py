"""Closed-form magic, bi-magic and m-magic labelings of paths.

All generators work in integer units of d = 10**-p and only wrap the result
in ScaledValues at the end.  Labels that leave (0, 1] (or [-1, 0) on the
negative channel) raise LabelRangeError: that means p is too small for n,
and rescaling behind the caller's back would hide it.
"""

from __future__ import annotations

from enum import Enum

from .model import (
    AdmissibilityReport,
    BipolarPathLabeling,
    CaseTag,
    CheckReport,
    LabelRangeError,
    PathLabeling,
)
from .numerics import InadmissibleError, Kind


class Scheme(str, Enum):
    """The five labeling constructions, named as on the command line."""

    MAGIC = "magic"
    BIMAGIC = "bimagic"
    M_MAGIC = "m-magic"
    BIPOLAR_MAGIC = "bipolar-magic"
    BIPOLAR_M_MAGIC = "bipolar-m-magic"

    @property
    def kind(self) -> Kind:
        return Kind.BIPOLAR if self.value.startswith("bipolar") else Kind.ANTI_FUZZY

    @property
    def fixed_m(self) -> int | None:
        """Constant count baked into the scheme, or None when m is a parameter."""
        return {"magic": 1, "bimagic": 2, "bipolar-magic": 1}.get(self.value)


def offset_c(k: int, m: int) -> int:
    """Edge-label offset c_k for block k: 1, 4, 8, 10, 12, ..., 2m + 2."""
    if not 1 <= k <= m:
        raise ValueError(f"block index {k} outside 1..{m}")
    if k == 1:
        return 1
    if k == 2:
        return 4
    return 2 * k + 2


def offset_table(m: int) -> tuple[int, ...]:
    return tuple(offset_c(k, m) for k in range(1, m + 1))


def admissible(n: int, m: int, kind: Kind | str = Kind.ANTI_FUZZY) -> AdmissibilityReport:
    kind = Kind(kind)
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    extension = m < 3
    if (n - 1) % m:
        return AdmissibilityReport(
            kind, n, m, False, CaseTag.NOT_APPLICABLE, None,
            f"inadmissible: n ≢ 1 (mod m) ({n} mod {m} = {n % m})", extension,
        )
    if n < 2 * m + 1:
        return AdmissibilityReport(
            kind, n, m, False, CaseTag.NOT_APPLICABLE, None,
            f"inadmissible: n < 2m+1 ({n} < {2 * m + 1})", extension,
        )
    a = (n - 2 * m - 1) // m
    tag = CaseTag.NOT_APPLICABLE
    if kind is Kind.BIPOLAR:
        if m % 2 == 0:
            tag = CaseTag.CASE1_M_EVEN
        elif n % (2 * m) == 1:
            tag = CaseTag.CASE1_M_ODD
        else:
            # m odd and n = 1 (mod m) leaves n = m + 1 (mod 2m); n >= 2m + 1 rules out n = m + 1
            tag = CaseTag.CASE2_M_ODD
    reason = f"admissible: n = 2m+1+ma with a = {a}"
    if extension:
        reason += " (m < 3 is an extension of the m-magic scheme)"
    return AdmissibilityReport(kind, n, m, True, tag, a, reason, extension)


def block_size(n: int, m: int) -> int:
    if (n - 1) % m:
        raise InadmissibleError(f"{n - 1} edges do not split into {m} equal blocks")
    return (n - 1) // m


def block_of_edge(i: int, n: int, m: int) -> int:
    """Block k containing edge i; block k covers edges (k-1)b+1 .. kb, b = (n-1)/m."""
    b = block_size(n, m)
    if not 1 <= i <= n - 1:
        raise IndexError(f"edge index {i} outside 1..{n - 1}")
    return (i - 1) // b + 1


def _require_admissible(n: int, m: int, kind: Kind) -> AdmissibilityReport:
    report = admissible(n, m, kind)
    if not report.admissible:
        raise InadmissibleError(report.reason)
    return report


def _check_units(units, p: int, name: str) -> None:
    one = 10**p
    for idx, u in enumerate(units, start=1):
        if not 0 < u <= one:
            raise LabelRangeError(
                f"{name}[{idx}] = {u} units exceeds the range at d = 10^-{p}; "
                f"choose a larger scale exponent"
            )


def _anti_fuzzy(sigma: list[int], mu: list[int], p: int) -> PathLabeling:
    _check_units(sigma, p, "sigma")
    _check_units(mu, p, "mu")
    return PathLabeling.from_units(sigma, mu, p)


def m_magic_units(n: int, m: int) -> tuple[list[int], list[int]]:
    """Unit labels of the m-magic anti-fuzzy scheme (no range check)."""
    sigma = list(range(1, n + 1))
    mu = [3 * n - 2 * i + offset_c(block_of_edge(i, n, m), m) for i in range(1, n)]
    return sigma, mu


def generate_m_magic(n: int, m: int, p: int) -> PathLabeling:
    """sigma(v_i) = i d; mu on block k is (3n - 2i + c_k) d, so block k sums to (3n + c_k + 1) d."""
    _require_admissible(n, m, Kind.ANTI_FUZZY)
    return _anti_fuzzy(*m_magic_units(n, m), p)


def generate_magic(n: int, p: int) -> PathLabeling:
    """One constant 3n d: sigma(v_i) = i d, mu(v_i v_{i+1}) = (3n - 2i - 1) d."""
    if n < 3:
        raise InadmissibleError(f"a magic constant needs n >= 3, got {n}")
    sigma = list(range(1, n + 1))
    mu = [3 * n - 2 * i - 1 for i in range(1, n)]
    return _anti_fuzzy(sigma, mu, p)


def generate_bimagic(n: int, p: int) -> tuple[PathLabeling, CheckReport]:
    """Two constants (2n + 2) d on the first half of the edges and (2n + 7) d on the rest.

    The labels are produced even when they break the anti-fuzzy edge
    condition (every n >= 9); the returned report says where.
    """
    from .verification import check_anti_fuzzy

    if n < 5 or n % 2 == 0:
        raise InadmissibleError(f"bi-magic scheme needs odd n >= 5, got {n}")
    half = (n - 1) // 2
    sigma = list(range(1, n + 1))
    mu = [(2 * n + 1 - 2 * i) if i <= half else (2 * n + 6 - 2 * i) for i in range(1, n)]
    labeling = _anti_fuzzy(sigma, mu, p)
    return labeling, check_anti_fuzzy(labeling)


def bipolar_vertex_units(n: int) -> list[int]:
    """Positive vertex labels: (2i - 1) for odd i, 2i for even i (i is the global index)."""
    return [2 * i - 1 if i % 2 else 2 * i for i in range(1, n + 1)]


def _bipolar(sigmaP: list[int], muP: list[int], p: int) -> BipolarPathLabeling:
    _check_units(sigmaP, p, "sigmaP")
    _check_units(muP, p, "muP")
    return BipolarPathLabeling.mirror(sigmaP, muP, p)


def generate_bipolar_magic(n: int, p: int) -> BipolarPathLabeling:
    """Single constant pair (6n d, -6n d); muP = (6n - 4i - 1) d."""
    if n < 2:
        raise InadmissibleError(f"a path needs n >= 2, got {n}")
    muP = [6 * n - 4 * i - 1 for i in range(1, n)]
    return _bipolar(bipolar_vertex_units(n), muP, p)


def bipolar_m_magic_units(n: int, m: int) -> tuple[list[int], list[int]]:
    muP = []
    for i in range(1, n):
        k = block_of_edge(i, n, m)
        muP.append((k + 5) * n - 4 * i - k)
    return bipolar_vertex_units(n), muP


def generate_bipolar_m_magic(n: int, m: int, p: int) -> BipolarPathLabeling:
    """Block k gets muP = ((k + 5) n - 4i - k) d, summing to ((k + 5) n - (k - 1)) d.

    Both parity cases of the construction share these formulas; they differ
    only in the case tag reported by :func:`admissible`.
    """
    _require_admissible(n, m, Kind.BIPOLAR)
    return _bipolar(*bipolar_m_magic_units(n, m), p)


def expected_constants(n: int, m: int, scheme: Scheme | str) -> tuple[int, ...]:
    """Closed-form positive constants in units, indexed by block."""
    scheme = Scheme(scheme)
    if scheme is Scheme.MAGIC:
        return (3 * n,)
    if scheme is Scheme.BIMAGIC:
        return (2 * n + 2, 2 * n + 7)
    if scheme is Scheme.BIPOLAR_MAGIC:
        return (6 * n,)
    if scheme is Scheme.M_MAGIC:
        return tuple(3 * n + offset_c(k, m) + 1 for k in range(1, m + 1))
    return tuple((k + 5) * n - (k - 1) for k in range(1, m + 1))


def generate(scheme: Scheme | str, n: int, m: int, p: int) -> PathLabeling | BipolarPathLabeling:
    """Dispatch to the generator for ``scheme``; ``m`` is ignored by fixed-m schemes."""
    scheme = Scheme(scheme)
    if scheme is Scheme.MAGIC:
        return generate_magic(n, p)
    if scheme is Scheme.BIMAGIC:
        return generate_bimagic(n, p)[0]
    if scheme is Scheme.BIPOLAR_MAGIC:
        return generate_bipolar_magic(n, p)
    if scheme is Scheme.M_MAGIC:
        return generate_m_magic(n, m, p)
    return generate_bipolar_m_magic(n, m, p)
