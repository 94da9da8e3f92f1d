"""Exact building blocks: lotteries, weak orders, SSB matrices and profiles.

Every number handled here is a :class:`fractions.Fraction`; floats are
rejected at the boundary so that no rounding can creep into a comparison.
Alternatives are identified by their 0-based index in the profile's label
tuple, and that order doubles as the global tie-break order.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from .errors import (
    DimensionMismatch,
    DuplicateAlternative,
    EmptyProfile,
    InvalidFactor,
    InvalidLottery,
    NotSkewSymmetric,
    ParseError,
    UnknownAlternative,
)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value):
    """Convert ``value`` to a Fraction without ever going through a float.

    Accepts ints, Fractions (or any :class:`numbers.Rational`) and strings
    such as ``"3"``, ``"-1/2"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value):
    """Render as ``num/den`` (or just ``num`` for integers)."""
    return str(Fraction(value))


# --------------------------------------------------------------------------
# Lotteries
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Lottery:
    """Probability vector over the alternatives, entries exact and summing to 1."""

    probs: tuple

    def __post_init__(self):
        probs = tuple(as_rational(p) for p in self.probs)
        if not probs:
            raise InvalidLottery("a lottery needs at least one alternative")
        if any(p < 0 for p in probs):
            raise InvalidLottery(f"negative probability in {probs}")
        if sum(probs) != 1:
            raise InvalidLottery(f"probabilities sum to {sum(probs)}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def degenerate(cls, size, index):
        if not 0 <= index < size:
            raise DimensionMismatch(f"alternative {index} outside 0..{size - 1}")
        return cls(tuple(ONE if i == index else ZERO for i in range(size)))

    @classmethod
    def uniform(cls, size):
        return cls((Fraction(1, size),) * size)

    @classmethod
    def on_set(cls, size, indices):
        """Uniform lottery over ``indices``."""
        indices = set(indices)
        share = Fraction(1, len(indices))
        return cls(tuple(share if i in indices else ZERO for i in range(size)))

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, index):
        return self.probs[index]

    def __iter__(self):
        return iter(self.probs)

    @property
    def is_degenerate(self):
        return any(p == 1 for p in self.probs)

    @property
    def support(self):
        return tuple(i for i, p in enumerate(self.probs) if p != 0)

    def mix(self, other, weight):
        """Return ``weight * self + (1 - weight) * other``."""
        weight = as_rational(weight)
        if not 0 <= weight <= 1:
            raise InvalidLottery(f"mixing weight {weight} outside [0, 1]")
        _check_same_size(len(self), len(other))
        return Lottery(tuple(weight * p + (1 - weight) * q for p, q in zip(self, other)))

    def format(self, labels=None, skip_zero=False):
        labels = labels or [str(i) for i in range(len(self))]
        parts = [
            f"{label}: {format_rational(p)}"
            for label, p in zip(labels, self.probs)
            if not (skip_zero and p == 0)
        ]
        return ", ".join(parts)

    def __str__(self):
        return "(" + ", ".join(format_rational(p) for p in self.probs) + ")"


def _check_same_size(*sizes):
    if len(set(sizes)) > 1:
        raise DimensionMismatch(f"dimension mismatch: {sizes}")


# --------------------------------------------------------------------------
# Weak orders
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class WeakOrder:
    """Complete, transitive preference as an ordered partition of alternatives.

    ``classes[0]`` holds the most preferred alternatives. Classes are stored
    as sorted tuples of alternative indices so that equal relations compare
    and hash equal.
    """

    classes: tuple
    _rank: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        classes = tuple(tuple(sorted(int(x) for x in c)) for c in self.classes)
        if any(not c for c in classes):
            raise ValueError("indifference classes must be non-empty")
        members = [x for c in classes for x in c]
        size = len(members)
        if sorted(members) != list(range(size)):
            raise ValueError(f"classes {classes} do not partition 0..{size - 1}")
        rank = [0] * size
        for level, c in enumerate(classes):
            for x in c:
                rank[x] = level
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def linear(cls, ranking):
        """Strict order from a best-to-worst sequence of indices."""
        return cls(tuple((x,) for x in ranking))

    @classmethod
    def indifferent(cls, size):
        return cls((tuple(range(size)),))

    @classmethod
    def parse(cls, text, labels, line=None):
        """Parse ``"a > b = c"`` against the label tuple ``labels``."""
        index = {label: i for i, label in enumerate(labels)}
        classes, seen = [], set()
        for group in text.split(">"):
            members = []
            for token in group.split("="):
                name = token.strip()
                if not name:
                    raise ParseError(f"empty alternative name in ranking {text.strip()!r}", line)
                if name not in index:
                    raise UnknownAlternative(f"unknown alternative {name!r}", line)
                if name in seen:
                    raise DuplicateAlternative(f"alternative {name!r} ranked twice", line)
                seen.add(name)
                members.append(index[name])
            classes.append(members)
        missing = [label for label in labels if label not in seen]
        if missing:
            raise ParseError(f"ranking omits {', '.join(missing)}", line)
        return cls(tuple(classes))

    @classmethod
    def from_ssb(cls, matrix):
        """Recover the weak order whose canonical matrix is ``matrix``."""
        size = matrix.size
        # Score = number of strictly worse alternatives; classes are the level sets.
        wins = [sum(1 for y in range(size) if matrix[x][y] > 0) for x in range(size)]
        levels = sorted(set(wins), reverse=True)
        order = cls(tuple(tuple(x for x in range(size) if wins[x] == w) for w in levels))
        if canonical_ssb(order) != matrix:
            raise ValueError("matrix is not the canonical representation of a weak order")
        return order

    @property
    def size(self):
        return len(self._rank)

    @property
    def top(self):
        return self.classes[0]

    @property
    def is_strict(self):
        return all(len(c) == 1 for c in self.classes)

    def rank(self, x):
        return self._rank[x]

    def prefers(self, x, y):
        """Strict preference of ``x`` over ``y``."""
        return self._rank[x] < self._rank[y]

    def weakly_prefers(self, x, y):
        return self._rank[x] <= self._rank[y]

    def reversed(self):
        return _reversed(self)

    def upper_contour_sets(self):
        """Unions of the first k classes, for k = 1 .. number of classes."""
        acc = []
        for c in self.classes:
            acc = acc + list(c)
            yield tuple(acc)

    def format(self, labels):
        return " > ".join(" = ".join(labels[x] for x in c) for c in self.classes)


# --------------------------------------------------------------------------
# SSB matrices
# --------------------------------------------------------------------------


def _exact_entry(value):
    if type(value) is int:
        return value
    value = as_rational(value)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class SSBMatrix:
    """Skew-symmetric rational matrix; entry ``[x][y]`` is phi(x, y).

    Integral entries are stored as ``int`` and the rest as ``Fraction``;
    both compare and hash consistently, and ints keep margin arithmetic
    cheap. ``canonical`` marks matrices produced by :func:`canonical_ssb`
    and does not take part in equality.
    """

    entries: tuple
    canonical: bool = field(default=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(_exact_entry(v) for v in row) for row in self.entries)
        size = len(rows)
        if size == 0 or any(len(row) != size for row in rows):
            raise DimensionMismatch("an SSB matrix must be square and non-empty")
        for x in range(size):
            for y in range(x, size):
                if rows[x][y] != -rows[y][x]:
                    raise NotSkewSymmetric(
                        f"entries ({x},{y})={rows[x][y]} and ({y},{x})={rows[y][x]} "
                        "are not negatives of each other"
                    )
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_hash", hash(rows))

    def __hash__(self):
        return self._hash

    @classmethod
    def zero(cls, size):
        return cls(((0,) * size,) * size)

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, x):
        return self.entries[x]

    def __neg__(self):
        return SSBMatrix(
            tuple(tuple(-v for v in row) for row in self.entries), canonical=self.canonical
        )

    def __add__(self, other):
        _check_same_size(self.size, other.size)
        return SSBMatrix(
            tuple(
                tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        factor = as_rational(factor)
        return SSBMatrix(tuple(tuple(factor * v for v in row) for row in self.entries))

    __rmul__ = __mul__

    def is_zero(self):
        return all(v == 0 for row in self.entries for v in row)

    def rows(self):
        return [list(row) for row in self.entries]


@lru_cache(maxsize=4096)
def _reversed(order):
    return WeakOrder(order.classes[::-1])


@lru_cache(maxsize=4096)
def canonical_ssb(order):
    """The +1/0/-1 matrix of a weak order: +1 where the row beats the column."""
    size = order.size
    entries = tuple(
        tuple(
            1 if order.prefers(x, y) else (-1 if order.prefers(y, x) else 0)
            for y in range(size)
        )
        for x in range(size)
    )
    return SSBMatrix(entries, canonical=True)


def negate(phi):
    return -phi


def voter_matrix(voter_type):
    """SSB matrix of a single voter type (weak orders go through the embedding)."""
    if isinstance(voter_type, WeakOrder):
        return canonical_ssb(voter_type)
    return voter_type


def ssb_value(phi, p, q):
    """Bilinear form sum_x sum_y p(x) q(y) phi(x, y)."""
    _check_same_size(phi.size, len(p), len(q))
    total = ZERO
    for x, px in enumerate(p.probs):
        if px == 0:
            continue
        row = phi.entries[x]
        inner = ZERO
        for y, qy in enumerate(q.probs):
            if qy != 0 and row[y] != 0:
                inner += qy * row[y]
        total += px * inner
    return total


# --------------------------------------------------------------------------
# Profiles
# --------------------------------------------------------------------------


def _type_key(voter_type):
    if isinstance(voter_type, WeakOrder):
        return (0, voter_type.classes)
    return (1, voter_type.entries)


def _type_size(voter_type):
    return voter_type.size


class Profile:
    """Anonymous multiset of voter types with positive multiplicities.

    Voter types are :class:`WeakOrder` or :class:`SSBMatrix` instances over
    ``alternatives``. Types are kept in a canonical sorted order, so two
    profiles with the same multiset are equal regardless of how they were
    built.
    """

    __slots__ = ("alternatives", "items", "n", "_hash")

    def __init__(self, alternatives, types):
        alternatives = tuple(str(a) for a in alternatives)
        if not alternatives:
            raise DimensionMismatch("at least one alternative is required")
        if len(set(alternatives)) != len(alternatives):
            dup = next(a for a in alternatives if alternatives.count(a) > 1)
            raise DuplicateAlternative(f"alternative {dup!r} listed twice")
        counts = Counter()
        pairs = types.items() if hasattr(types, "items") else types
        for voter_type, count in pairs:
            if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {count!r}")
            if not isinstance(voter_type, (WeakOrder, SSBMatrix)):
                raise TypeError(f"unsupported voter type {type(voter_type).__name__}")
            if _type_size(voter_type) != len(alternatives):
                raise DimensionMismatch(
                    f"voter type over {_type_size(voter_type)} alternatives, "
                    f"profile has {len(alternatives)}"
                )
            counts[voter_type] += count
        if not counts:
            raise EmptyProfile("a profile needs at least one voter")
        self.alternatives = alternatives
        self.items = tuple(sorted(counts.items(), key=lambda kv: _type_key(kv[0])))
        self.n = sum(counts.values())
        self._hash = hash((alternatives, self.items))

    @classmethod
    def _trusted(cls, alternatives, items):
        """Skip validation; ``items`` must already be canonical and positive."""
        self = object.__new__(cls)
        self.alternatives = alternatives
        self.items = items
        self.n = sum(c for _, c in items)
        self._hash = hash((alternatives, items))
        return self

    @classmethod
    def from_rankings(cls, alternatives, rankings):
        """Build from ranking strings, each optionally paired with a count.

        >>> Profile.from_rankings("abc", ["a > b > c", (2, "b > a = c")]).n
        3
        """
        alternatives = tuple(alternatives)
        pairs = []
        for entry in rankings:
            count, text = (1, entry) if isinstance(entry, str) else entry
            pairs.append((WeakOrder.parse(text, alternatives), count))
        return cls(alternatives, pairs)

    @property
    def size(self):
        return len(self.alternatives)

    @property
    def types(self):
        return tuple(t for t, _ in self.items)

    @property
    def counts(self):
        return tuple(c for _, c in self.items)

    @property
    def is_ordinal(self):
        return all(isinstance(t, WeakOrder) for t, _ in self.items)

    def multiplicity(self, voter_type):
        for t, c in self.items:
            if t == voter_type:
                return c
        return 0

    def voters(self):
        """Each voter type repeated by its multiplicity, in canonical order."""
        for t, c in self.items:
            for _ in range(c):
                yield t

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return self.alternatives == other.alternatives and self.items == other.items

    def __hash__(self):
        return self._hash

    def __len__(self):
        return self.n

    def __add__(self, other):
        """Multiset union."""
        if self.alternatives != other.alternatives:
            raise DimensionMismatch("profiles over different alternatives")
        counts = Counter(dict(self.items))
        for t, c in other.items:
            counts[t] += c
        items = tuple(sorted(counts.items(), key=lambda kv: _type_key(kv[0])))
        return Profile._trusted(self.alternatives, items)

    def __sub__(self, other):
        """Multiset difference; ``other`` must be a strict sub-multiset."""
        if self.alternatives != other.alternatives:
            raise DimensionMismatch("profiles over different alternatives")
        counts = Counter(dict(self.items))
        for t, c in other.items:
            if counts[t] < c:
                raise ValueError("can only remove a sub-multiset of the profile")
            counts[t] -= c
        return Profile(self.alternatives, [(t, c) for t, c in counts.items() if c > 0])

    def with_counts(self, counts):
        """Profile with the same types and new multiplicities (zeros dropped)."""
        if any(c < 0 for c in counts) or not any(counts):
            raise ValueError(f"invalid multiplicities {counts}")
        items = tuple((t, c) for (t, _), c in zip(self.items, counts) if c > 0)
        return Profile._trusted(self.alternatives, items)

    def __repr__(self):
        if self.is_ordinal:
            body = "; ".join(f"{c}: {t.format(self.alternatives)}" for t, c in self.items)
        else:
            body = f"{len(self.items)} types"
        return f"Profile({','.join(self.alternatives)} | {body})"


@lru_cache(maxsize=65536)
def aggregate(profile):
    """Multiplicity-weighted sum of the voters' SSB matrices."""
    if profile.n == 0:
        raise EmptyProfile("cannot aggregate an empty profile")
    size = profile.size
    acc = [[0] * size for _ in range(size)]
    for voter_type, count in profile.items:
        rows = voter_matrix(voter_type).entries
        for x in range(size):
            row, out = rows[x], acc[x]
            for y in range(size):
                if row[y]:
                    out[y] += count * row[y]
    return SSBMatrix(tuple(map(tuple, acc)))


def replicate(profile, k):
    """Every multiplicity multiplied by ``k``."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidFactor(f"replication factor must be a positive integer, got {k!r}")
    return Profile._trusted(profile.alternatives, tuple((t, c * k) for t, c in profile.items))


# --------------------------------------------------------------------------
# Enumeration of voter types
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def all_strict_orders(size):
    """All linear orders on ``size`` alternatives, in lexicographic ranking order."""
    from itertools import permutations

    return tuple(WeakOrder.linear(p) for p in permutations(range(size)))


@lru_cache(maxsize=None)
def all_weak_orders(size):
    """All weak orders on ``size`` alternatives (ordered set partitions), sorted."""

    def partitions(remaining):
        if not remaining:
            yield ()
            return
        items = sorted(remaining)
        for mask in range(1, 1 << len(items)):
            head = tuple(x for i, x in enumerate(items) if mask >> i & 1)
            for tail in partitions(remaining - set(head)):
                yield (head,) + tail

    return tuple(sorted(WeakOrder(c) for c in partitions(frozenset(range(size)))))
