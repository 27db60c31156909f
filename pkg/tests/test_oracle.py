import io
import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmagic import BipolarPathLabeling, verify_m_magic
from mmagic.oracle import (
    CELLS_ENV,
    OracleBoundsError,
    OracleConfig,
    brute_force_search,
    cross_check_generator,
    iter_witness_units,
    write_jsonl,
)


def naive_witnesses(n, m, G, mode):
    """Unpruned enumeration of the whole grid, for comparison on tiny cases."""
    out = []
    for sigma in itertools.product(range(1, G + 1), repeat=n):
        for mu in itertools.product(range(1, G + 1), repeat=n - 1):
            if any(mu[i] < max(sigma[i], sigma[i + 1]) for i in range(n - 1)):
                continue
            sums = [sigma[i] + mu[i] + sigma[i + 1] for i in range(n - 1)]
            if len(set(sums)) != m:
                continue
            if mode == "strict":
                if (n - 1) % m:
                    continue
                b = (n - 1) // m
                blocks = [sums[j:j + b] for j in range(0, n - 1, b)]
                if any(len(set(blk)) != 1 for blk in blocks):
                    continue
            out.append((sigma, mu))
    return out


def test_n3_m1_found_with_constant_witness():
    r = brute_force_search(3, 1, 10, 2, "lax", limit=5)
    assert r.found
    first = r.witnesses[0]
    assert first.sigma_units() == (1, 1, 1) and first.mu_units() == (1, 1)


def test_theorem1_labeling_rediscovered():
    cfg = OracleConfig(5, 1, 15, 2, "lax")
    assert ((1, 2, 3, 4, 5), (12, 10, 8, 6)) in set(itertools.islice(iter_witness_units(cfg), 5000))


def test_n3_bimagic_strict_verdict_pinned():
    # Pinned from the first exhaustive run: two single-edge blocks are always satisfiable.
    r = brute_force_search(3, 2, 10, 2, "strict", limit=1)
    assert r.verdict == "found"
    assert (r.witnesses[0].sigma_units(), r.witnesses[0].mu_units()) == ((1, 1, 1), (1, 2))


def test_n3_bimagic_lax_admits_hand_witness():
    cfg = OracleConfig(3, 2, 10, 2, "lax")
    assert ((1, 2, 3), (5, 6)) in set(iter_witness_units(cfg))


def test_n4_bimagic_strict_exhausted():
    # three edges cannot split into two equal blocks
    r = brute_force_search(4, 2, 10, 2, "strict", limit=1)
    assert r.verdict == "exhausted-none" and r.complete
    assert brute_force_search(4, 2, 10, 2, "lax", limit=1).found


@pytest.mark.parametrize("n, m, G, mode", [
    (3, 1, 4, "lax"), (3, 2, 4, "lax"), (3, 2, 4, "strict"), (4, 1, 3, "strict"),
    (4, 3, 3, "strict"), (4, 2, 3, "lax"), (3, 1, 5, "strict"),
])
def test_matches_naive_enumeration(n, m, G, mode):
    got = list(iter_witness_units(OracleConfig(n, m, G, 2, mode)))
    assert got == naive_witnesses(n, m, G, mode)


@pytest.mark.parametrize("n, m, G, mode", [(4, 1, 8, "lax"), (5, 2, 6, "strict"), (4, 3, 7, "strict"), (3, 2, 9, "lax")])
def test_witnesses_pass_verifier(n, m, G, mode):
    r = brute_force_search(n, m, G, 2, mode, limit=400)
    assert r.witnesses
    for w in r.witnesses:
        assert verify_m_magic(w, m, mode).passed


def test_bipolar_witnesses_are_mirrored():
    r = brute_force_search(5, 2, 8, 2, "strict", limit=50, kind="bipolar")
    for w in r.witnesses:
        assert isinstance(w, BipolarPathLabeling)
        assert w.sigmaN == tuple(-v for v in w.sigmaP)
        assert verify_m_magic(w, 2, "strict").passed


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 4), st.integers(1, 3), st.integers(1, 6), st.sampled_from(["lax", "strict"]))
def test_monotone_in_grid(n, m, G, mode):
    if brute_force_search(n, m, G, 2, mode, limit=1).found:
        assert brute_force_search(n, m, G + 1, 2, mode, limit=1).found


def test_deterministic():
    a = brute_force_search(4, 2, 6, 2, "lax", limit=100)
    b = brute_force_search(4, 2, 6, 2, "lax", limit=100)
    assert a.witnesses == b.witnesses


def test_parallel_partitions_match_serial():
    serial = brute_force_search(4, 2, 5, 2, "lax", limit=10_000)
    parallel = brute_force_search(4, 2, 5, 2, "lax", limit=10_000, workers=2)
    assert serial.witnesses == parallel.witnesses
    assert serial.complete and parallel.complete


def test_limit_truncates():
    r = brute_force_search(3, 1, 10, 2, "lax", limit=3)
    assert len(r.witnesses) == 3 and not r.complete


def test_bounds():
    with pytest.raises(ValueError):
        brute_force_search(3, 1, 5, limit=0)
    with pytest.raises(OracleBoundsError):
        brute_force_search(8, 1, 5)
    with pytest.raises(OracleBoundsError):
        brute_force_search(3, 1, 41)
    with pytest.raises(OracleBoundsError):
        brute_force_search(3, 1, 41, p=1, override=True)  # grid beyond 1 at p = 1
    assert brute_force_search(8, 1, 2, override=True, limit=1).found


def test_cells_env_cap(monkeypatch):
    monkeypatch.setenv(CELLS_ENV, "100")
    with pytest.raises(OracleBoundsError):
        brute_force_search(3, 1, 5)
    monkeypatch.setenv(CELLS_ENV, str(5**5))
    assert brute_force_search(3, 1, 5).found


def test_jsonl_stream():
    r = brute_force_search(3, 1, 5, 2, "lax", limit=2)
    buf = io.StringIO()
    write_jsonl(r, buf)
    lines = [json.loads(x) for x in buf.getvalue().splitlines()]
    assert len(lines) == 3
    assert lines[0]["kind"] == "anti-fuzzy-path" and lines[0]["sigma"] == [1, 1, 1]
    assert lines[-1] == {"verdict": "found", "witnesses": 2, "complete": False}


@pytest.mark.parametrize("n, m, grid", [(5, 1, 14), (7, 3, 20), (9, 4, 26)])
def test_cross_check_generator(n, m, grid):
    assert cross_check_generator(n, m, "anti-fuzzy", grid=grid).passed


def test_cross_check_bimagic_and_bipolar():
    assert cross_check_generator(5, 2).passed
    assert cross_check_generator(7, 3, "bipolar").passed


def test_cross_check_grid_too_small():
    report = cross_check_generator(9, 4, grid=25)
    assert not report.passed
    assert report.violations[0].condition == "generator fits grid"
