"""Phase-tracked Pauli words and graph-state stabilizer generators.

Phases are tracked as exponents of i modulo 4 because single-site products
genuinely produce imaginary factors (XZ = -iY, YZ = iX, ...); only full
generator products are guaranteed real.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph

PAULI_LETTERS = "IXYZ"

# Single-site products left*right -> (letter, i exponent). XY = iZ, YZ = iX,
# ZX = iY; the reversed orders pick up -i (exponent 3).
_PRODUCT: dict[tuple[str, str], tuple[str, int]] = {
    ("I", "I"): ("I", 0), ("I", "X"): ("X", 0), ("I", "Y"): ("Y", 0), ("I", "Z"): ("Z", 0),
    ("X", "I"): ("X", 0), ("X", "X"): ("I", 0), ("X", "Y"): ("Z", 1), ("X", "Z"): ("Y", 3),
    ("Y", "I"): ("Y", 0), ("Y", "X"): ("Z", 3), ("Y", "Y"): ("I", 0), ("Y", "Z"): ("X", 1),
    ("Z", "I"): ("Z", 0), ("Z", "X"): ("Y", 1), ("Z", "Y"): ("X", 3), ("Z", "Z"): ("I", 0),
}

_PHASE_LABEL = {0: "+", 1: "+i", 2: "-", 3: "-i"}

# Integer-coded copies of the table for hot loops: I=0, X=1, Y=2, Z=3.
_CODE = {letter: k for k, letter in enumerate(PAULI_LETTERS)}
_CODE_MUL = tuple(
    tuple(
        (_CODE[_PRODUCT[(a, b)][0]], _PRODUCT[(a, b)][1])
        for b in PAULI_LETTERS
    )
    for a in PAULI_LETTERS
)


def _check_letters(letters: str) -> None:
    bad = set(letters) - set(PAULI_LETTERS)
    if bad:
        raise ValueError(f"invalid Pauli letters {sorted(bad)}; expected only I, X, Y, Z")


@dataclass(frozen=True)
class PhasedPauli:
    """An n-site Pauli word together with a phase i**phase."""

    letters: str
    phase: int = 0

    def __post_init__(self) -> None:
        _check_letters(self.letters)
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> "PhasedPauli":
        return cls("I" * n)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "PhasedPauli") -> "PhasedPauli":
        return multiply(self, other)

    def __str__(self) -> str:
        return _PHASE_LABEL[self.phase] + self.letters

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, ch in enumerate(self.letters, start=1) if ch != "I")

    @property
    def sign(self) -> int:
        """+1 or -1 for a real word; raises on an imaginary phase."""
        if self.phase == 0:
            return 1
        if self.phase == 2:
            return -1
        raise ValueError(f"word has imaginary phase i**{self.phase}")


def multiply(p: PhasedPauli, q: PhasedPauli) -> PhasedPauli:
    """Sitewise Pauli product with the accumulated i exponent."""
    if len(p.letters) != len(q.letters):
        raise ValueError(f"length mismatch: {len(p.letters)} vs {len(q.letters)}")
    phase = p.phase + q.phase
    out = []
    for a, b in zip(p.letters, q.letters):
        letter, ph = _PRODUCT[(a, b)]
        out.append(letter)
        phase += ph
    return PhasedPauli("".join(out), phase % 4)


@dataclass(frozen=True)
class Measurement:
    """What the parties measure: one letter per site, no phase.

    Site 1 is the leftmost character of ``letters``.
    """

    letters: str

    def __post_init__(self) -> None:
        _check_letters(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def letter(self, j: int) -> str:
        if not (1 <= j <= len(self.letters)):
            raise ValueError(f"site {j} outside 1..{len(self.letters)}")
        return self.letters[j - 1]

    def support(self) -> tuple[int, ...]:
        return tuple(j for j, ch in enumerate(self.letters, start=1) if ch != "I")

    def restricted_to(self, sites: Iterable[int]) -> "Measurement":
        """Submeasurement keeping the given sites and writing I elsewhere."""
        keep = set(sites)
        return Measurement(
            "".join(ch if j in keep else "I" for j, ch in enumerate(self.letters, start=1))
        )

    def as_phased(self) -> PhasedPauli:
        return PhasedPauli(self.letters, 0)

    def bits(self) -> tuple[int, int]:
        """(x-component mask, z-component mask): X/Y set x bits, Y/Z set z bits."""
        x = z = 0
        for j, ch in enumerate(self.letters):
            if ch in "XY":
                x |= 1 << j
            if ch in "YZ":
                z |= 1 << j
        return x, z


def letters_from_bits(n: int, xbits: int, zbits: int) -> str:
    out = []
    for j in range(n):
        x = (xbits >> j) & 1
        z = (zbits >> j) & 1
        out.append("IXZY"[x + 2 * z])
    return "".join(out)


def is_submeasurement(sub: Measurement, glob: Measurement) -> bool:
    """True when every non-identity letter of sub matches glob at that site."""
    if len(sub) != len(glob):
        raise ValueError(f"length mismatch: {len(sub)} vs {len(glob)}")
    return all(s == "I" or s == g for s, g in zip(sub.letters, glob.letters))


def generator(g: Graph, j: int) -> PhasedPauli:
    """Stabilizer generator of the graph state: X at j, Z on the neighborhood."""
    g.check_node(j)
    letters = ["I"] * g.n
    letters[j - 1] = "X"
    for k in g.neighborhood(j):
        letters[k - 1] = "Z"
    return PhasedPauli("".join(letters), 0)


def _product_over_sites(g: Graph, sites: Iterable[int]) -> tuple[list[int], int]:
    """Letter codes and i exponent of the ordered product of generators."""
    cur = [0] * g.n
    phase = 0
    nbrs = g.neighbors
    for j in sites:
        c, p = _CODE_MUL[cur[j - 1]][1]  # X at site j
        cur[j - 1] = c
        phase += p
        for k in nbrs[j - 1]:
            c, p = _CODE_MUL[cur[k - 1]][3]  # Z at each neighbor
            cur[k - 1] = c
            phase += p
    return cur, phase % 4


def generator_product(g: Graph, a: Sequence[int]) -> PhasedPauli:
    """Ordered product of the generators selected by the bit-vector a.

    The result of a generator product is always real; an imaginary phase
    would indicate a bug and is asserted against.
    """
    if len(a) != g.n:
        raise ValueError(f"bit-vector length {len(a)} does not match n={g.n}")
    if any(bit not in (0, 1) for bit in a):
        raise ValueError("a must contain only bits 0 and 1")
    sites = [j for j, bit in enumerate(a, start=1) if bit]
    codes, phase = _product_over_sites(g, sites)
    assert phase in (0, 2), f"generator product produced imaginary phase i**{phase}"
    return PhasedPauli("".join(PAULI_LETTERS[c] for c in codes), phase)


def generator_product_sign(g: Graph, sites: Iterable[int]) -> int:
    """Sign of the product of the generators at the given sites."""
    _, phase = _product_over_sites(g, sorted(set(sites)))
    assert phase in (0, 2)
    return 1 if phase == 0 else -1
