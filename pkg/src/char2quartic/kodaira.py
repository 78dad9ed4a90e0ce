"""Kodaira fiber types and their numerical data in characteristic 2.

Types are strings: "I0", "I5", "II", "III", "IV", "I0*", "I3*", "IV*",
"III*", "II*".  For each type the table gives the number of components m,
the smallest wild ramification index that can occur, the Euler number e and
the largest number N of pairwise disjoint (-2)-components.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from .errors import Char2Error


class FiberTypeError(Char2Error):
    pass


_ADDITIVE = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}
_RE = re.compile(r"^I(\d+)(\*?)$")


@dataclass(frozen=True)
class FiberData:
    m: int
    delta_min: int
    e: int
    N: int
    delta_exact: bool = False

    def as_tuple(self):
        return (self.m, self.delta_min, self.e, self.N)


def parse(kind: str) -> tuple[str, int | None]:
    """('In', n), ('In*', n) or (kind, None) for the remaining additive types."""
    if not isinstance(kind, str):
        raise FiberTypeError(f"fiber type must be a string, got {kind!r}")
    k = kind.strip()
    if k in _ADDITIVE:
        return k, None
    m = _RE.match(k)
    if not m:
        raise FiberTypeError(f"unknown Kodaira type {kind!r}")
    return ("In*" if m.group(2) else "In"), int(m.group(1))


def name(family: str, n: int | None = None) -> str:
    if family == "In":
        return f"I{n}"
    if family == "In*":
        return f"I{n}*"
    return family


def fiber_table(kind: str) -> FiberData:
    fam, n = parse(kind)
    if fam == "In":
        if n == 0:
            return FiberData(1, 0, 0, 0, True)
        return FiberData(n, 0, n, n // 2, True)
    if fam == "In*":
        if n == 1:
            return FiberData(6, 1, 7, 4)
        return FiberData(n + 5, 2, n + 6, 4 + n // 2)
    return {
        "II": FiberData(1, 2, 2, 0),
        "III": FiberData(2, 1, 3, 1),
        "IV": FiberData(3, 0, 4, 1),
        "IV*": FiberData(7, 0, 8, 4),
        "III*": FiberData(8, 1, 9, 5),
        "II*": FiberData(9, 1, 10, 5),
    }[fam]


def dynkin(kind: str) -> str | None:
    """Root lattice spanned by the components missing the zero section."""
    fam, n = parse(kind)
    if fam == "In":
        return f"A{n - 1}" if n >= 2 else None
    if fam == "In*":
        return f"D{n + 4}"
    return {"II": None, "III": "A1", "IV": "A2", "IV*": "E6", "III*": "E7", "II*": "E8"}[fam]


def is_multiplicative(kind: str) -> bool:
    fam, n = parse(kind)
    return fam == "In" and n >= 1


def is_additive(kind: str) -> bool:
    fam, n = parse(kind)
    return not (fam == "In")


def allows_twelve_curves(kind: str) -> bool:
    """Types allowed when the fibers hold 12 disjoint (-2)-curves."""
    fam, n = parse(kind)
    if fam == "In":
        return n > 0 and n % 2 == 0
    if fam == "In*":
        return n % 2 == 0 or n == 1
    return fam in ("IV*", "III*")


def quasi_elliptic_types() -> list[str]:
    return ["II", "III", "I2n*", "III*", "II*"]


def is_quasi_elliptic_type(kind: str) -> bool:
    fam, n = parse(kind)
    if fam == "In*":
        return n % 2 == 0
    return fam in ("II", "III", "III*", "II*")


def reduced(kind: str) -> bool:
    """Whether a fiber of this quasi-elliptic type is reduced."""
    if kind == "I2n*":
        return False
    if not is_quasi_elliptic_type(kind):
        raise FiberTypeError(f"{kind} does not occur on quasi-elliptic fibrations")
    return kind in ("II", "III")
