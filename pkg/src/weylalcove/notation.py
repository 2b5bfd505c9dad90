"""Rendering and parsing of weights."""
from __future__ import annotations

from typing import Sequence


def format_weight(w: Sequence[int]) -> str:
    """Fundamental-weight notation, e.g. ``(2, 0, 1) -> '2λ1+λ3'``; the zero weight is ``'0'``."""
    terms = []
    for i, c in enumerate(w, start=1):
        if c == 0:
            continue
        coeff = "" if c == 1 else "-" if c == -1 else str(c)
        terms.append(f"{coeff}λ{i}")
    return "+".join(terms).replace("+-", "-") or "0"


def format_labels(w: Sequence[int]) -> str:
    return ",".join(str(int(x)) for x in w)


def parse_labels(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Parse comma-separated Dynkin labels such as ``'1,0,0'``."""
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}: expected comma-separated integers") from None
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {text!r} has {len(w)} labels, expected {rank}")
    return w


def format_vector(vec: dict) -> str:
    return " ⊕ ".join(format_weight(w) if m == 1 else f"{m}·{format_weight(w)}" for w, m in vec.items())
