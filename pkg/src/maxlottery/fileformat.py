"""Plain-text profile files.

Grammar::

    # comment
    alternatives: a, b, c
    2: a > b = c            # two voters ranking a first, indifferent between b and c
    matrix 1:               # one voter with a raw SSB matrix, |A| rows follow
    0 1/2 -1
    -1/2 0 0
    1 0 0

The order of the header defines the tie-break order used by ``lex_maximal``
and Copeland.
"""

import re

from .algebra import Profile, SSBMatrix, WeakOrder, format_rational
from .errors import DuplicateAlternative, EmptyProfile, NotSkewSymmetric, ParseError

_HEADER = re.compile(r"^\s*alternatives\s*:(.*)$")
_MATRIX = re.compile(r"^\s*matrix\s+(\S+)\s*:\s*$")
_RANKING = re.compile(r"^\s*([^:]+?)\s*:(.*)$")
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _strip_comment(line):
    return line.split("#", 1)[0].rstrip()


def _parse_count(token, lineno, column):
    if not re.fullmatch(r"\d+", token) or int(token) < 1:
        raise ParseError(f"count must be a positive integer, got {token!r}", lineno, column)
    return int(token)


def parse_profile(text):
    """Parse profile text into a :class:`Profile`."""
    lines = [(i + 1, _strip_comment(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(n, line) for n, line in lines if line.strip()]
    if not lines:
        raise ParseError("missing 'alternatives:' header", 1, 1)
    lineno, first = lines[0]
    header = _HEADER.match(first)
    if not header:
        raise ParseError("first line must be 'alternatives: <labels>'", lineno, 1)
    labels = [label.strip() for label in header.group(1).split(",")]
    column = first.index(":") + 2
    if not labels or any(not label for label in labels):
        raise ParseError("empty alternative label in header", lineno, column)
    for i, label in enumerate(labels):
        if label in labels[:i]:
            raise DuplicateAlternative(f"alternative {label!r} listed twice", lineno, column)
        if re.search(r"[\s>=:,#]", label):
            raise ParseError(f"illegal character in label {label!r}", lineno, column)
    size = len(labels)

    pairs = []
    pos = 1
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        matrix = _MATRIX.match(line)
        if matrix:
            count = _parse_count(matrix.group(1), lineno, line.index(matrix.group(1)) + 1)
            if pos + size > len(lines):
                raise ParseError(f"matrix block needs {size} rows", lineno, 1)
            rows = []
            for row_lineno, row_text in lines[pos:pos + size]:
                cells = row_text.split()
                if len(cells) != size:
                    raise ParseError(
                        f"matrix row has {len(cells)} entries, expected {size}", row_lineno, 1
                    )
                for cell in cells:
                    if not _RATIONAL.match(cell):
                        raise ParseError(
                            f"not an exact rational: {cell!r}",
                            row_lineno,
                            row_text.index(cell) + 1,
                        )
                rows.append(cells)
            pos += size
            try:
                pairs.append((SSBMatrix(rows), count))
            except NotSkewSymmetric as exc:
                raise NotSkewSymmetric(f"line {lineno}: {exc}") from None
            continue
        ranking = _RANKING.match(line)
        if not ranking:
            raise ParseError("expected '<count>: <ranking>' or 'matrix <count>:'", lineno, 1)
        count = _parse_count(ranking.group(1).strip(), lineno, 1)
        pairs.append((WeakOrder.parse(ranking.group(2), labels, line=lineno), count))
    if not pairs:
        raise EmptyProfile("profile file lists no voters")
    return Profile(labels, pairs)


def serialize_profile(profile):
    """Inverse of :func:`parse_profile` (canonical type order, no comments)."""
    out = ["alternatives: " + ", ".join(profile.alternatives)]
    for voter_type, count in profile.items:
        if isinstance(voter_type, WeakOrder):
            out.append(f"{count}: {voter_type.format(profile.alternatives)}")
        else:
            out.append(f"matrix {count}:")
            for row in voter_type.entries:
                out.append(" ".join(format_rational(v) for v in row))
    return "\n".join(out) + "\n"
