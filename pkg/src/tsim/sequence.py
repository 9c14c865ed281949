"""Per-item agreement (phi), count difference (delta) and pairwise sequence vectors."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import Dataset, get_vector


class Phi(Enum):
    """Three-valued item agreement between two transactions."""

    MATCH = "1"
    MISMATCH = "0"
    BOTH_ABSENT = "U"

    def __str__(self):
        return self.value


def phi(e_i: bool, e_j: bool) -> Phi:
    if e_i and e_j:
        return Phi.MATCH
    if e_i or e_j:
        return Phi.MISMATCH
    return Phi.BOTH_ABSENT


def delta(c_i: int, c_j: int) -> int:
    # Signed; downstream only uses the square, so the sign never matters.
    return c_i - c_j


@dataclass(frozen=True)
class SequenceVector:
    pair: tuple[str, str]
    entries: tuple[tuple[int, Phi], ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        body = ",".join(f"({d},{p})" for d, p in self.entries)
        return f"⟨{body}⟩"


def entry(c_i: int, c_j: int) -> tuple[int, Phi]:
    """One (delta, phi) element.

    An item held by only one transaction records that transaction's count
    (so binary mismatches are always 1); an item held by both records the
    signed difference.
    """
    p = phi(c_i >= 1, c_j >= 1)
    d = delta(c_i, c_j)
    return (abs(d) if p is Phi.MISMATCH else d), p


def sequence_vector(ds: Dataset, tid_i: str, tid_j: str) -> SequenceVector:
    """Build the (delta, phi) entries for a transaction pair in catalog order."""
    vi = get_vector(ds, tid_i)
    vj = get_vector(ds, tid_j)
    entries = tuple(entry(ci, cj) for ci, cj in zip(vi.counts, vj.counts))
    return SequenceVector((tid_i, tid_j), entries)


def parse_sequence_vector(text: str) -> list[tuple[int, Phi]]:
    """Read the ``⟨(d,φ),...⟩`` notation back into entries."""
    body = text.strip().strip("⟨⟩<>").strip()
    entries = []
    for chunk in body.split(")"):
        chunk = chunk.strip().lstrip(",").strip()
        if not chunk:
            continue
        d, p = (part.strip() for part in chunk.lstrip("(").split(","))
        entries.append((int(d), Phi(p)))
    return entries
