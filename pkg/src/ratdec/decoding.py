"""Shared result types for the two decoders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Candidate:
    """One decoded codeword with its error pattern.

    found_by records which stage produced the candidate first: "unique"
    for the minimum-distance/Patterson stage, "list" for the rational
    interpolation stage.
    """

    word: tuple[int, ...]
    error_positions: tuple[int, ...]
    error_values: tuple[int, ...]
    found_by: str


@dataclass(frozen=True)
class DecodeOutput:
    """All codewords within the decoding radius, verified for membership
    and distance before construction.  path is "unique" when the output
    was decided without running the interpolation stage."""

    candidates: tuple[Candidate, ...]
    tau: int
    ell: int | None
    s: int | None
    path: str

    @property
    def words(self) -> list[tuple[int, ...]]:
        return [c.word for c in self.candidates]

    @property
    def is_fail(self) -> bool:
        return not self.candidates

    def unique_candidate(self) -> tuple[int, ...] | None:
        """The word produced by the unique-decoding stage, if any."""
        for c in self.candidates:
            if c.found_by == "unique":
                return c.word
        return None


@dataclass(frozen=True)
class ChosenParams:
    """Outcome of the (s, ell) search for a given radius.  The individual
    degree caps w1, w2 depend on the received word (they move with the
    key-equation output), only their sum is a code/radius constant."""

    s: int
    ell: int
    w_total: Fraction
