"""Integer partitions and their p-modular bookkeeping.

A partition is a weakly decreasing tuple of positive integers. Nodes of the
Young diagram are 1-based (row, col) pairs; the residue of a node is
(col - row) mod p. All operations here are exact integer combinatorics.
"""

from __future__ import annotations

import re
from math import factorial
from typing import Iterable, Iterator

from .errors import (
    EmptyPartition,
    MalformedPartition,
    NonPositivePart,
    NotWeaklyDecreasing,
    OddPrimeRequired,
)

Node = tuple[int, int]

_PLAIN_TOKEN = re.compile(r"^\d+$")
_EXP_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def validate_prime(p: int) -> int:
    """Check that p is an odd prime (>= 3) and return it.

    p = 2 is rejected up front: none of the machinery in this package is
    defined for even characteristic.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise OddPrimeRequired(f"p must be an integer, got {p!r}")
    if p < 3 or p % 2 == 0:
        raise OddPrimeRequired(f"p must be an odd prime >= 3, got {p}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise OddPrimeRequired(f"p must be prime, got {p} = {d} * {p // d}")
        d += 2
    return p


class Partition:
    """Immutable weakly decreasing sequence of positive parts.

    Comparison is lexicographic on the part tuples, which is also the
    enumeration order used throughout (descending lex).
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise MalformedPartition(f"parts must be integers, got {x!r}")
            if x <= 0:
                raise NonPositivePart(f"parts must be positive, got {x}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise NotWeaklyDecreasing(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        """Number of nodes, |lambda|."""
        return sum(self.parts)

    @property
    def height(self) -> int:
        """Number of parts, h(lambda)."""
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __hash__(self) -> int:
        return hash(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __gt__(self, other: "Partition") -> bool:
        return self.parts > other.parts

    def __ge__(self, other: "Partition") -> bool:
        return self.parts >= other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return format_partition(self)

    def row(self, i: int) -> int:
        """Length of row i (1-based), 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, node: Node) -> bool:
        r, c = node
        return 1 <= r <= len(self.parts) and 1 <= c <= self.parts[r - 1]

    def remove(self, node: Node) -> "Partition":
        """Partition with one removable node deleted."""
        r, c = node
        if self.row(r) != c or self.row(r + 1) >= c:
            raise ValueError(f"{node} is not a removable node of {self}")
        parts = list(self.parts)
        parts[r - 1] -= 1
        if parts[r - 1] == 0:
            parts.pop()
        return Partition(parts)

    def add(self, node: Node) -> "Partition":
        """Partition with one addable node appended."""
        r, c = node
        if not (self.row(r) + 1 == c and (r == 1 or self.row(r - 1) >= c)):
            raise ValueError(f"{node} is not an addable node of {self}")
        parts = list(self.parts)
        if r == len(parts) + 1:
            parts.append(1)
        else:
            parts[r - 1] += 1
        return Partition(parts)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse "8,2", exponent form "4^3,1^2", or "[]" for the empty partition."""
    s = text.strip()
    if s == "[]":
        return EMPTY
    if not s:
        raise MalformedPartition('empty input (use "[]" for the empty partition)')
    parts: list[int] = []
    for token in s.split(","):
        token = token.strip()
        m = _EXP_TOKEN.match(token)
        if m:
            base, exp = int(m.group(1)), int(m.group(2))
            if exp == 0:
                raise MalformedPartition(f"exponent must be >= 1 in {token!r}")
            parts.extend([base] * exp)
        elif _PLAIN_TOKEN.match(token):
            parts.append(int(token))
        else:
            raise MalformedPartition(f"bad partition token {token!r}")
    return Partition(parts)


def format_partition(lam: Partition, exponents: bool = False) -> str:
    """Render a partition as text; inverse of parse_partition.

    Plain comma form by default ("8,2"); exponent form on request
    ("4^3,1^2", multiplicity-1 parts stay plain). Empty renders as "[]".
    """
    if not lam:
        return "[]"
    if not exponents:
        return ",".join(str(x) for x in lam.parts)
    out = []
    for part, mult in exponent_form(lam):
        out.append(f"{part}^{mult}" if mult > 1 else str(part))
    return ",".join(out)


def exponent_form(lam: Partition) -> tuple[tuple[int, int], ...]:
    """Multiplicity encoding ((a_1, b_1), ..., (a_h, b_h)), a_1 > a_2 > ... ."""
    runs: list[tuple[int, int]] = []
    for x in lam.parts:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    return tuple(runs)


def is_p_regular(lam: Partition, p: int) -> bool:
    """True when no part repeats p or more times."""
    validate_prime(p)
    return all(mult < p for _, mult in exponent_form(lam))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return EMPTY
    return Partition(
        sum(1 for x in lam.parts if x >= c) for c in range(1, lam.parts[0] + 1)
    )


def residue(node: Node, p: int) -> int:
    """Residue (col - row) mod p of a 1-based node."""
    validate_prime(p)
    r, c = node
    return (c - r) % p


def residue_content(lam: Partition, p: int) -> tuple[int, ...]:
    """How many nodes of each residue the diagram has (tuple of length p)."""
    validate_prime(p)
    counts = [0] * p
    for r, length in enumerate(lam.parts, start=1):
        for c in range(1, length + 1):
            counts[(c - r) % p] += 1
    return tuple(counts)


def enumerate_partitions(
    n: int, p: int, regular_only: bool = False
) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order.

    With regular_only, only the p-regular ones are yielded. Streaming
    generator; n = 0 yields exactly the empty partition.
    """
    validate_prime(p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield EMPTY
        return
    for parts in _descending_lex(n):
        if not regular_only or _regular(parts, p):
            yield Partition(parts)


def _regular(parts: tuple[int, ...], p: int) -> bool:
    run = 1
    for i in range(1, len(parts)):
        run = run + 1 if parts[i] == parts[i - 1] else 1
        if run >= p:
            return False
    return True


def _descending_lex(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n >= 1, largest-first order ((n), ..., (1^n))."""
    parts = [n]
    while True:
        yield tuple(parts)
        # Find the rightmost part > 1; everything after it is a tail of 1s.
        k = len(parts) - 1
        ones = 0
        while k >= 0 and parts[k] == 1:
            ones += 1
            k -= 1
        if k < 0:
            return
        parts[k] -= 1
        rem = ones + 1
        del parts[k + 1 :]
        # Redistribute the remainder greedily under the new cap parts[k].
        cap = parts[k]
        while rem > 0:
            take = min(cap, rem)
            parts.append(take)
            rem -= take


def specht_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of this shape (hook length formula)."""
    if not lam:
        raise EmptyPartition("specht_dimension needs a nonempty partition")
    conj = conjugate(lam).parts
    prod = 1
    for r, length in enumerate(lam.parts, start=1):
        for c in range(1, length + 1):
            prod *= (length - c) + (conj[c - 1] - r) + 1
    num = factorial(lam.size)
    assert num % prod == 0
    return num // prod
