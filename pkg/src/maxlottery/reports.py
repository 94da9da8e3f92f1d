"""Structured report records and their text / JSON renderings.

All numbers are rendered as exact ``num/den`` strings and profiles in the
profile-file syntax, so a record contains no floating point and is
byte-stable for fixed inputs.
"""

import dataclasses
import json
from fractions import Fraction

from . import __version__ as TOOL_VERSION
from .algebra import Lottery, Profile
from .fileformat import serialize_profile


def to_plain(value):
    """Convert violation records and algebra objects into JSON-ready values."""
    if isinstance(value, Profile):
        return serialize_profile(value)
    if isinstance(value, Lottery):
        return [str(p) for p in value.probs]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if dataclasses.is_dataclass(value):
        out = {"kind": type(value).__name__}
        for f in dataclasses.fields(value):
            out[f.name] = to_plain(getattr(value, f.name))
        return out
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclasses.dataclass
class ReportRecord:
    """One invocation's result; ``witness`` and ``scope`` hold plain values only."""

    command: str
    mechanism: str = None
    property: str = None
    campaign: str = None
    scope: dict = dataclasses.field(default_factory=dict)
    outcome: str = None
    witness: object = None
    details: list = dataclasses.field(default_factory=list)
    version: str = TOOL_VERSION
    seed: int = None

    def to_json(self):
        return json.dumps(dataclasses.asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))

    def to_text(self):
        lines = [f"command: {self.command}"]
        for name in ("campaign", "mechanism", "property"):
            value = getattr(self, name)
            if value is not None:
                lines.append(f"{name}: {value}")
        if self.scope:
            lines.append(
                "scope: " + " ".join(f"{k}={self.scope[k]}" for k in sorted(self.scope))
            )
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.append(f"outcome: {self.outcome}")
        for detail in self.details:
            lines.append(f"detail: {detail}")
        if self.witness is not None:
            lines.append("witness:")
            lines.extend("  " + line for line in _render(self.witness).splitlines())
        lines.append(f"version: {self.version}")
        return "\n".join(lines) + "\n"


def _render(value, indent=""):
    if isinstance(value, dict):
        parts = []
        for key, item in value.items():
            if isinstance(item, str) and "\n" in item:
                parts.append(f"{indent}{key}: |")
                parts.extend(f"{indent}  {line}" for line in item.rstrip("\n").splitlines())
            elif isinstance(item, dict):
                parts.append(f"{indent}{key}:")
                parts.append(_render(item, indent + "  "))
            elif isinstance(item, list):
                parts.append(f"{indent}{key}: ({', '.join(str(v) for v in item)})")
            else:
                parts.append(f"{indent}{key}: {item}")
        return "\n".join(parts)
    return f"{indent}{value}"
