"""Two-row symbols, the special symbols attached to cuspidal unipotent data,
wave-front partitions, and the cuspidal multiplicity 2-power.

Conventions, frozen against the explicit low-rank expansions in the tests:

* A symbol is a pair of strictly increasing rows of non-negative integers
  with a spread tag.  Spread-0 symbols carry their rank as the plain entry
  sum; spread-2 symbols (whose distinguished representatives have rows
  0, 2, 4, ...) subtract twice the usual floor correction.

* The class symbol of a cuspidal datum (e, f, delta), e <= f, is built by
  converting the smaller special symbol to spread-2 form (adding the
  staircase 0, 2, 4, ... to each row), padding with (f - e) spread-2 shifts
  (prepend 0, add 2), and then adding the larger special symbol entrywise.

* Extraction to a Jordan-type partition doubles one row and doubles-plus-one
  the other (the odd row is the longer top row for defect 1, the bottom row
  for defect 0), merges, subtracts the interleaved minimal staircase
  0, 1, 4, 5, 8, 9, ... and reverses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .partitions import EpsPartition, Partition


@dataclass(frozen=True)
class Symbol:
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    spread: int = 0

    def __post_init__(self) -> None:
        for row in (self.top, self.bottom):
            if any(x < 0 for x in row):
                raise InputError("symbol entries must be non-negative")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise InputError("symbol rows must be strictly increasing")
        if self.spread not in (0, 2):
            raise InputError("spread must be 0 or 2")

    @property
    def defect(self) -> int:
        return len(self.top) - len(self.bottom)

    @property
    def rank(self) -> int:
        total = sum(self.top) + sum(self.bottom)
        m = len(self.top) + len(self.bottom) - 1
        return total - self.spread * (m * m // 4)


def special_symbol(e: int, delta: int) -> Symbol:
    """The defect-delta special symbol of rank e*(e+delta).

    delta = 1: rows (0, 1, ..., e) over (1, 2, ..., e), any e >= 0;
    delta = 0: rows (1, 2, ..., e) over (0, 1, ..., e-1), e >= 1.
    """
    if delta == 1:
        if e < 0:
            raise InputError("e must be >= 0")
        return Symbol(tuple(range(e + 1)), tuple(range(1, e + 1)))
    if delta == 0:
        if e < 1:
            raise InputError("e must be >= 1 for defect 0")
        return Symbol(tuple(range(1, e + 1)), tuple(range(e)))
    raise InputError("delta must be 0 or 1")


def _special_rows(e: int, delta: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Lenient variant also allowing the empty defect-0 symbol at e = 0,
    # needed internally when one side of a cuspidal datum vanishes.
    if delta == 0 and e == 0:
        return (), ()
    s = special_symbol(e, delta)
    return s.top, s.bottom


def _staircase2(e: int, delta: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Minimal spread-2 rows at the shape of the defect-delta special symbol.
    return tuple(2 * i for i in range(e + delta)), tuple(2 * i for i in range(e))


def _add_rows(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    if len(x) != len(y):
        raise InputError("row length mismatch")
    return tuple(a + b for a, b in zip(x, y))


def _shift2(rows: tuple[tuple[int, ...], tuple[int, ...]]):
    return tuple(
        (0,) + tuple(x + 2 for x in row) for row in rows
    )


def _admissible(e: int, f: int, delta: int) -> tuple[int, int]:
    """Normalise to e <= f and reject the empty datum.

    Data with f + delta >= 2 are the ones carrying actual cuspidal
    characters; the smaller ones are kept because every combinatorial
    identity below still holds for them and the formulas are exercised
    there too.
    """
    if delta not in (0, 1):
        raise InputError("delta must be 0 or 1")
    if e < 0 or f < 0:
        raise InputError("e, f must be >= 0")
    e, f = min(e, f), max(e, f)
    if f + delta < 1:
        raise InputError("the empty datum (0, 0, 0) is excluded")
    return e, f


def class_symbol(e: int, f: int, delta: int) -> Symbol:
    """The spread-2 symbol of the wave-front class of the cuspidal datum."""
    e, f = _admissible(e, f, delta)
    rows = _special_rows(e, delta)
    rows = (
        _add_rows(rows[0], _staircase2(e, delta)[0]),
        _add_rows(rows[1], _staircase2(e, delta)[1]),
    )
    for _ in range(f - e):
        rows = _shift2(rows)
    big = _special_rows(f, delta)
    return Symbol(_add_rows(rows[0], big[0]), _add_rows(rows[1], big[1]), spread=2)


def _extract_partition(sym: Symbol, delta: int) -> tuple[int, ...]:
    """Jordan-type partition of a spread-2 symbol: double-and-interleave,
    then subtract the interleaved minimal staircase."""
    if delta == 1:
        odd_row, even_row = sym.top, sym.bottom
    else:
        odd_row, even_row = sym.bottom, sym.top
    merged = sorted([2 * a for a in even_row] + [2 * b + 1 for b in odd_row])
    m = len(sym.bottom)
    stair = sorted([4 * t for t in range(m)] + [4 * t + 1 for t in range(m)]
                   + ([4 * m] if delta == 1 else []))
    if len(stair) != len(merged):
        raise InputError("symbol shape does not match its defect pattern")
    lam = [c - s for c, s in zip(merged, stair)]
    if any(x <= 0 for x in lam) or any(lam[i] > lam[i + 1] for i in range(len(lam) - 1)):
        raise ArithmeticError("degenerate symbol extraction")  # unreachable for valid data
    return tuple(reversed(lam))


def wavefront_partition(e: int, f: int, delta: int) -> EpsPartition:
    """Jordan type of the wave-front class of the cuspidal datum (e, f, delta).

    The result is an orthogonal-type partition of 2*(e*(e+delta) + f*(f+delta))
    + delta, with every part odd.
    """
    e, f = _admissible(e, f, delta)
    lam = _extract_partition(class_symbol(e, f, delta), delta)
    dim = 2 * (e * (e + delta) + f * (f + delta)) + delta
    if sum(lam) != dim:
        raise ArithmeticError("wave-front partition has wrong size")  # unreachable
    return EpsPartition(Partition(lam), 0)


def cuspidal_multiplicity(e: int, f: int, delta: int) -> int:
    """Multiplicity 2-power of a cuspidal character in its generalised
    Gelfand-Graev character: 2^(e + f - D(delta,e) - D(delta,f)) with
    D(delta, m) = 1 exactly when delta = 0 and m != 0."""
    e, f = _admissible(e, f, delta)
    def dcorr(m: int) -> int:
        return 1 if delta == 0 and m != 0 else 0
    return 2 ** (e + f - dcorr(e) - dcorr(f))
