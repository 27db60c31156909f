"""JSON, DOT and plain-table forms of labelings.

JSON documents carry integer ``units`` arrays (authoritative) plus a
``decimals`` block for reading.  Decimals always have exactly
``scale_exp`` fraction digits.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .model import BipolarPathLabeling, Labeling, MagicSpectrum, PathLabeling
from .numerics import ScaledValue, to_decimal_string

ANTI_FUZZY_KIND = "anti-fuzzy-path"
BIPOLAR_KIND = "bipolar-anti-fuzzy-path"

_BIPOLAR_FIELDS = ("sigmaP", "sigmaN", "muP", "muN")


class LabelingFormatError(ValueError):
    """A labeling document is malformed."""


def _dec(seq) -> list[str]:
    return [to_decimal_string(v) for v in seq]


def labeling_to_dict(L: Labeling) -> dict[str, Any]:
    if isinstance(L, BipolarPathLabeling):
        doc: dict[str, Any] = {"kind": BIPOLAR_KIND, "n": L.n, "scale_exp": L.scale_exp}
        for name in _BIPOLAR_FIELDS:
            doc[name] = [v.units for v in getattr(L, name)]
        doc["decimals"] = {name: _dec(getattr(L, name)) for name in _BIPOLAR_FIELDS}
        return doc
    return {
        "kind": ANTI_FUZZY_KIND,
        "n": L.n,
        "scale_exp": L.scale_exp,
        "sigma": list(L.sigma_units()),
        "mu": list(L.mu_units()),
        "decimals": {"sigma": _dec(L.sigma), "mu": _dec(L.mu)},
    }


def _units(doc: dict, name: str) -> list[int]:
    seq = doc.get(name)
    if not isinstance(seq, list) or not all(isinstance(u, int) and not isinstance(u, bool) for u in seq):
        raise LabelingFormatError(f"field {name!r} must be a list of integer units")
    return seq


def labeling_from_dict(doc: dict[str, Any]) -> Labeling:
    """Parse a labeling document; a wrapper with a ``labeling`` key is unwrapped.

    Range violations are kept so checkers can report them.  A ``decimals``
    block that disagrees with the units (for instance a different number of
    fraction digits) is rejected.
    """
    if not isinstance(doc, dict):
        raise LabelingFormatError("labeling document must be a JSON object")
    if "labeling" in doc:
        doc = doc["labeling"]
    kind = doc.get("kind")
    p = doc.get("scale_exp")
    n = doc.get("n")
    if not isinstance(p, int) or p < 1:
        raise LabelingFormatError("scale_exp must be a positive integer")
    try:
        if kind == ANTI_FUZZY_KIND:
            L: Labeling = PathLabeling(n, p, tuple(_units(doc, "sigma")), tuple(_units(doc, "mu")), check_range=False)
        elif kind == BIPOLAR_KIND:
            L = BipolarPathLabeling(n, p, *(tuple(_units(doc, f)) for f in _BIPOLAR_FIELDS), check_range=False)
        else:
            raise LabelingFormatError(f"unknown kind {kind!r}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, LabelingFormatError):
            raise
        raise LabelingFormatError(str(exc)) from exc
    decimals = doc.get("decimals")
    if decimals is not None:
        expected = labeling_to_dict(L)["decimals"]
        for name, values in decimals.items():
            if expected.get(name) != values:
                raise LabelingFormatError(f"decimals.{name} disagrees with the units at scale 10^-{p}")
    return L


def load_labeling(path: str | Path) -> Labeling:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise LabelingFormatError(f"{path}: {exc}") from exc
    return labeling_from_dict(doc)


def dump_labeling(L: Labeling, path: str | Path) -> None:
    Path(path).write_text(json.dumps(labeling_to_dict(L), indent=2) + "\n")


def spectrum_to_dict(s: MagicSpectrum) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "constants": _dec(s.constants),
        "assignment": list(s.assignment),
        "block_sizes": list(s.block_sizes),
    }
    if s.negative_constants is not None:
        doc["negative_constants"] = _dec(s.negative_constants)
    return doc


def to_dot(L: Labeling, name: str = "P") -> str:
    """Horizontal DOT drawing of the labeled path."""
    lines = [f"graph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    bipolar = isinstance(L, BipolarPathLabeling)
    for i in range(1, L.n + 1):
        if bipolar:
            label = f"v{i} σP/σN={L.sigmaP[i - 1]}/{L.sigmaN[i - 1]}"
        else:
            label = f"v{i} σ={L.sigma[i - 1]}"
        lines.append(f'  v{i} [label="{label}"];')
    for i in range(1, L.n):
        if bipolar:
            label = f"μP/μN={L.muP[i - 1]}/{L.muN[i - 1]}"
        else:
            label = f"μ={L.mu[i - 1]}"
        lines.append(f'  v{i} -- v{i + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(L: Labeling, constants: tuple[ScaledValue, ...] | None = None,
             negative_constants: tuple[ScaledValue, ...] | None = None) -> str:
    """Tab-separated vertex and edge rows, optionally followed by the constants."""
    vhead = "\t".join(["", *(f"v{i}" for i in range(1, L.n + 1))])
    ehead = "\t".join(["", *(f"v{i}v{i + 1}" for i in range(1, L.n))])
    if isinstance(L, BipolarPathLabeling):
        vrows = [("σP", L.sigmaP), ("σN", L.sigmaN)]
        erows = [("μP", L.muP), ("μN", L.muN)]
    else:
        vrows = [("σ", L.sigma)]
        erows = [("μ", L.mu)]
    out = [vhead, *("\t".join([name, *_dec(seq)]) for name, seq in vrows), "", ehead]
    out += ["\t".join([name, *_dec(seq)]) for name, seq in erows]
    if constants is not None:
        out += ["", "constants " + " ".join(_dec(constants))]
    if negative_constants is not None:
        out.append("negative constants " + " ".join(_dec(negative_constants)))
    return "\n".join(out) + "\n"
