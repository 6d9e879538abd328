"""Circular Dyck paths, Mobius paths, diagonal-avoiding paths, Dyck paths.

Conventions used throughout:

* Binary words are Python strings of '0'/'1', written left to right in the
  order the steps are taken; '0' is an east step, '1' is a north step.
* A circular Dyck path of height n and width w is given by its area
  sequence (a_1, ..., a_n) with 0 <= a_i <= w-1 and a_{i+1} <= a_i + 1,
  indices cyclic.  CDP(n, w) denotes the set of these.
* The same object can be encoded as a lattice word: a start abscissa
  x0 = w - a_n together with a 2n-step balanced word (n east, n north
  steps, the last step north).  The walk starts at (x0, 0), places the
  i-th north step at x = w + i - a_i, and stays strictly between the
  diagonals y = x and y = x - (w + 2).  Note the word has 2n bits for
  every width w; the width enters through x0, the diagonal positions and
  the bound a_i <= w - 1.
* Classical Dyck paths are balanced 2n-step words whose every prefix has
  at least as many east steps as north steps ("east-first" storage).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "AreaSequence",
    "LatticeWord",
    "DyckPath",
    "MobiusWord",
    "validate_area_sequence",
    "enumerate_cdp",
    "area_to_path",
    "path_to_area",
    "maj",
    "inv_zero_one",
    "zeros_run_vector",
    "word_from_zeros_runs",
    "first_peak_height",
    "last_peak_height",
    "enumerate_dyck",
    "dyck_pair",
    "dyck_pair_inverse",
    "dyck_tuple",
    "dyck_tuple_inverse",
    "enumerate_cmp",
    "enumerate_avl",
    "enumerate_balanced",
    "valley_count",
    "transpose_word",
]


# ---------------------------------------------------------------------------
# Word statistics
# ---------------------------------------------------------------------------

def maj(bits: str) -> int:
    """Major index: sum of positions i (1-based) with bits[i] > bits[i+1]."""
    return sum(i for i in range(1, len(bits)) if bits[i - 1] > bits[i])


def inv_zero_one(bits: str) -> int:
    """Number of pairs i < j with bits[i] = '0' and bits[j] = '1'."""
    zeros = 0
    total = 0
    for b in bits:
        if b == "0":
            zeros += 1
        else:
            total += zeros
    return total


def zeros_run_vector(bits: str) -> tuple[int, ...]:
    """For each '1' in the word, the number of '0's since the previous '1'."""
    out = []
    run = 0
    for b in bits:
        if b == "0":
            run += 1
        else:
            out.append(run)
            run = 0
    return tuple(out)


def word_from_zeros_runs(z: tuple[int, ...], trailing_zeros: int = 0) -> str:
    return "".join("0" * zi + "1" for zi in z) + "0" * trailing_zeros


def transpose_word(bits: str) -> str:
    """Reflect the path across the main diagonal: swap east and north steps."""
    return bits.translate(str.maketrans("01", "10"))


def _count(bits: str) -> tuple[int, int]:
    ones = bits.count("1")
    return len(bits) - ones, ones  # (easts, norths)


# ---------------------------------------------------------------------------
# Area sequences
# ---------------------------------------------------------------------------

def validate_area_sequence(values, w: int) -> bool:
    """True iff values is the area sequence of a circular Dyck path of width w."""
    vals = tuple(values)
    n = len(vals)
    if n < 1 or w < 1:
        return False
    if any(not 0 <= a <= w - 1 for a in vals):
        return False
    return all(vals[(i + 1) % n] <= vals[i] + 1 for i in range(n))


@dataclass(frozen=True, order=True)
class AreaSequence:
    """A circular Dyck path of height len(values) and width `width`."""

    values: tuple[int, ...]
    width: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not validate_area_sequence(self.values, self.width):
            raise ValueError(f"not a valid area sequence of width {self.width}: {self.values}")

    @property
    def height(self) -> int:
        return len(self.values)

    def to_json(self) -> list[int]:
        return list(self.values)


def enumerate_cdp(n: int, w: int) -> Iterator[AreaSequence]:
    """All of CDP(n, w) in lexicographic order of area values.

    Depth-first: fix a_1, extend with a_{i+1} <= min(w-1, a_i + 1), and
    check the wrap-around a_1 <= a_n + 1 at the leaves.  Width 0 yields
    nothing (a_i <= -1 is unsatisfiable).
    """
    if n < 1 or w < 1:
        return

    prefix = [0] * n

    def rec(i: int) -> Iterator[AreaSequence]:
        if i == n:
            if prefix[0] <= prefix[n - 1] + 1:
                yield AreaSequence(tuple(prefix), w)
            return
        hi = w - 1 if i == 0 else min(w - 1, prefix[i - 1] + 1)
        for a in range(0, hi + 1):
            prefix[i] = a
            yield from rec(i + 1)

    yield from rec(0)


def valley_count(a: AreaSequence) -> int:
    """Number of cyclic positions i with a_{i+1} <= a_i."""
    n = a.height
    return sum(1 for i in range(n) if a.values[(i + 1) % n] <= a.values[i])


# ---------------------------------------------------------------------------
# Lattice word encoding
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class LatticeWord:
    """Start abscissa plus step word for a circular Dyck path of width `width`.

    The walk starts at (start, 0); it must end with a north step, use as
    many east as north steps, and keep 1 <= x - y <= width + 1 at every
    lattice point, which is exactly "strictly between the diagonals
    y = x and y = x - (width + 2)".
    """

    start: int
    bits: str
    width: int

    def __post_init__(self):
        easts, norths = _count(self.bits)
        if norths == 0 or easts != norths:
            raise ValueError("word must be balanced and non-empty")
        if not self.bits.endswith("1"):
            raise ValueError("last step must be north")
        if not 1 <= self.start <= self.width:
            raise ValueError(f"start abscissa {self.start} outside [1, {self.width}]")
        d = self.start
        for b in self.bits:
            d += 1 if b == "0" else -1
            if not 1 <= d <= self.width + 1:
                raise ValueError("path touches a forbidden diagonal")

    @property
    def height(self) -> int:
        return len(self.bits) // 2

    def north_positions(self) -> list[int]:
        """Absolute x-coordinate of each north step, bottom row first."""
        x = self.start
        out = []
        for b in self.bits:
            if b == "0":
                x += 1
            else:
                out.append(x)
        return out

    def to_json(self) -> dict:
        return {"start": self.start, "bits": self.bits, "width": self.width}


def area_to_path(a: AreaSequence) -> LatticeWord:
    """Encode an area sequence as (start, word): north step i at x = w + i - a_i."""
    w = a.width
    n = a.height
    x0 = w - a.values[n - 1]
    xs = [w + i + 1 - a.values[i] for i in range(n)]
    parts = []
    prev = x0
    for x in xs:
        parts.append("0" * (x - prev))
        parts.append("1")
        prev = x
    return LatticeWord(x0, "".join(parts), w)


def path_to_area(p: LatticeWord) -> AreaSequence:
    """Inverse of area_to_path; LatticeWord validation has already rejected bad words."""
    w = p.width
    xs = p.north_positions()
    values = tuple(w + i + 1 - x for i, x in enumerate(xs))
    return AreaSequence(values, w)


# ---------------------------------------------------------------------------
# Classical Dyck paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class DyckPath:
    """Balanced word whose every prefix has at least as many '0's as '1's."""

    bits: str

    def __post_init__(self):
        easts, norths = _count(self.bits)
        if easts != norths:
            raise ValueError("word must be balanced")
        depth = 0
        for b in self.bits:
            depth += 1 if b == "0" else -1
            if depth < 0:
                raise ValueError("prefix with more north than east steps")

    @property
    def size(self) -> int:
        return len(self.bits) // 2


def first_peak_height(p: DyckPath) -> int:
    """Number of east steps before the first north step."""
    return len(p.bits) - len(p.bits.lstrip("0"))


def last_peak_height(p: DyckPath) -> int:
    """Number of north steps at the end of the path."""
    return len(p.bits) - len(p.bits.rstrip("1"))


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of size n, lexicographically by word."""
    def rec(word: list[str], easts: int, norths: int) -> Iterator[DyckPath]:
        if easts == n and norths == n:
            yield DyckPath("".join(word))
            return
        if easts < n:
            word.append("0")
            yield from rec(word, easts + 1, norths)
            word.pop()
        if norths < easts:
            word.append("1")
            yield from rec(word, easts, norths + 1)
            word.pop()

    yield from rec([], 0, 0)


# ---------------------------------------------------------------------------
# Bijection with tuples of Dyck paths
# ---------------------------------------------------------------------------
#
# An element of CDP(k*m, m) walks from (x0, 0) to (x0 + k*m, k*m) inside
# the strip 1 <= x - y <= m + 1.  The strip is tiled by 2k right triangles
# with legs m, alternately resting on the two bounding diagonals; the
# cut lines are the verticals x = i*m + 1 (entered by an east step) and
# the horizontals y = i*m (entered by a north step).  Each arc between
# consecutive cut lines is completed to a Dyck path of size m by padding
# along the two legs of its triangle; odd arcs pad with leading east and
# trailing north runs, even arcs (transposed for storage) with leading
# north and trailing east runs.  The pads meet the cut lines exactly, so
# the peak conditions h_l(P_j) + h_f(P_{j+1}) >= m, taken cyclically, are
# precisely the condition that a tuple can be stripped and reglued.

def _cut_steps(word: LatticeWord, m: int, k: int) -> list[int]:
    """Step indices after which the walk first reaches each cut line."""
    cuts = []
    x, y = word.start, 0
    want_x = m + 1  # next vertical cut line
    want_y = m      # next horizontal cut line
    vertical_next = True
    for t, b in enumerate(word.bits, start=1):
        if b == "0":
            x += 1
        else:
            y += 1
        while len(cuts) < 2 * k - 1:
            if vertical_next and x == want_x:
                cuts.append(t)
                want_x += m
                vertical_next = False
            elif not vertical_next and y == want_y:
                cuts.append(t)
                want_y += m
                vertical_next = True
            else:
                break
    return cuts


def dyck_tuple(a: AreaSequence) -> tuple[DyckPath, ...]:
    """Map CDP(k*m, m) to the 2k-tuple of constrained Dyck paths of size m."""
    m = a.width
    n = a.height
    if n % m != 0:
        raise ValueError("height must be a multiple of the width")
    k = n // m
    word = area_to_path(a)
    cuts = [0] + _cut_steps(word, m, k) + [2 * n]
    if len(cuts) != 2 * k + 1:
        raise AssertionError("walk missed a cut line")

    # Entry coordinates of each arc.
    paths = []
    x, y = word.start, 0
    pos = [(x, y)]
    for b in word.bits:
        x, y = (x + 1, y) if b == "0" else (x, y + 1)
        pos.append((x, y))

    for j in range(1, 2 * k + 1):
        arc = word.bits[cuts[j - 1]:cuts[j]]
        ex, ey = pos[cuts[j - 1]]
        fx, fy = pos[cuts[j]]
        i = (j + 1) // 2
        if j % 2 == 1:
            lead = ex - ((i - 1) * m + 1)      # east run along the bottom leg
            trail = i * m - fy                 # north run along the right leg
            paths.append(DyckPath("0" * lead + arc + "1" * trail))
        else:
            lead = ey - (i - 1) * m            # north run along the left leg
            trail = (i * m + m + 1) - fx       # east run along the top leg
            paths.append(DyckPath(transpose_word("1" * lead + arc + "0" * trail)))
    return tuple(paths)


def dyck_tuple_inverse(paths: tuple[DyckPath, ...], width: int) -> AreaSequence:
    """Inverse of dyck_tuple; raises ValueError if a peak inequality fails."""
    m = width
    if len(paths) % 2 != 0 or not paths:
        raise ValueError("need a non-empty tuple of even length")
    if any(p.size != m for p in paths):
        raise ValueError(f"all paths must have size {m}")
    twok = len(paths)
    k = twok // 2

    oriented = [
        p.bits if j % 2 == 0 else transpose_word(p.bits)
        for j, p in enumerate(paths)
    ]
    lead_char = ["0" if j % 2 == 0 else "1" for j in range(twok)]
    trail_char = ["1" if j % 2 == 0 else "0" for j in range(twok)]

    trail_run = [
        len(w) - len(w.rstrip(trail_char[j])) for j, w in enumerate(oriented)
    ]
    lead_need = [m - trail_run[j - 1] for j in range(twok)]  # j-1 wraps to last

    arcs = []
    for j, w in enumerate(oriented):
        lead_run = len(w) - len(w.lstrip(lead_char[j]))
        if lead_need[j] > lead_run:
            jj = (j - 1) % twok
            raise ValueError(
                f"peak inequality h_l(P_{jj + 1}) + h_f(P_{j + 1}) >= {m} fails"
            )
        arcs.append(w[lead_need[j]:len(w) - trail_run[j]])

    x0 = lead_need[0] + 1
    return path_to_area(LatticeWord(x0, "".join(arcs), m))


def dyck_pair(a: AreaSequence) -> tuple[DyckPath, DyckPath]:
    """Map CDP(n) = CDP(n, n) to its constrained pair of Dyck paths."""
    if a.height != a.width:
        raise ValueError("dyck_pair needs height equal to width")
    p, q = dyck_tuple(a)
    return p, q


def dyck_pair_inverse(p: DyckPath, q: DyckPath) -> AreaSequence:
    if p.size != q.size:
        raise ValueError("paths must have equal size")
    return dyck_tuple_inverse((p, q), p.size)


# ---------------------------------------------------------------------------
# Circular Mobius paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class MobiusWord:
    """Half-word b_1 ... b_n with b_n = '0'; the full word appends the complement.

    The full 2n-step word satisfies b_{n+i} = 1 - b_i, so it ends with a
    north step, and its start abscissa is pinned by the fact that step n
    is an east step ending on the vertical line x = n + 1.
    """

    half: str

    def __post_init__(self):
        if not self.half or any(c not in "01" for c in self.half):
            raise ValueError("half-word must be a non-empty binary string")
        if not self.half.endswith("0"):
            raise ValueError("half-word must end with '0'")

    @property
    def size(self) -> int:
        return len(self.half)

    def full_bits(self) -> str:
        return self.half + transpose_word(self.half)

    def start(self) -> int:
        return self.size + 1 - self.half.count("0")

    def to_lattice_word(self) -> LatticeWord:
        return LatticeWord(self.start(), self.full_bits(), self.size)

    def to_json(self) -> dict:
        return {"half": self.half}


def enumerate_cmp(n: int) -> Iterator[MobiusWord]:
    """All circular Mobius paths of size n: 2^(n-1) half-words ending in '0'.

    Every half-word with b_n = 0 expands to a valid element of CDP(n);
    to_lattice_word would raise otherwise.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for v in range(2 ** (n - 1)):
        half = format(v, f"0{n - 1}b") + "0" if n > 1 else "0"
        word = MobiusWord(half)
        word.to_lattice_word()  # validity check: CMP(n) is a subset of CDP(n)
        yield word


# ---------------------------------------------------------------------------
# Diagonal-avoiding lattice paths
# ---------------------------------------------------------------------------

def enumerate_balanced(n: int) -> Iterator[str]:
    """All balanced words of length 2n (n east, n north steps)."""
    def rec(word: list[str], easts: int, norths: int) -> Iterator[str]:
        if easts == n and norths == n:
            yield "".join(word)
            return
        if easts < n:
            word.append("0")
            yield from rec(word, easts + 1, norths)
            word.pop()
        if norths < n:
            word.append("1")
            yield from rec(word, easts, norths + 1)
            word.pop()

    yield from rec([], 0, 0)


def avoids_diagonals(bits: str, w: int) -> bool:
    """True iff the walk from (0, 0) never touches the diagonals x - y = +-w."""
    d = 0
    for b in bits:
        d += 1 if b == "0" else -1
        if abs(d) == w:
            return False
    return True


def enumerate_avl(n: int, w: int) -> Iterator[str]:
    """Balanced 2n-step words from (0,0) to (n,n) avoiding x - y = +-w."""
    if n < 1 or w < 1:
        raise ValueError("n and w must be positive")
    for bits in enumerate_balanced(n):
        if avoids_diagonals(bits, w):
            yield bits
