"""Reading and writing set systems as text or JSON documents.

Text layout: the first significant line is the ground size, then one
member per line as comma-separated elements, with "-" standing for the
empty set.  Blank lines and "#" comments are skipped.  JSON layout:
an object with "ground" and "sets" keys.  Documents keep members in
(size, then lexicographic) order, which reads better than raw mask
order in files meant for people.
"""

import json
from dataclasses import dataclass

from .core import SetSystem

JSON_SCHEMA_VERSION = 1


def _normalize(sets) -> tuple:
    return tuple(sorted((tuple(s) for s in sets), key=lambda t: (len(t), t)))


@dataclass(frozen=True)
class SystemDocument:
    """A validated, order-normalized description of one set system."""

    ground: int
    sets: tuple

    def __post_init__(self):
        if not isinstance(self.ground, int) or isinstance(self.ground, bool):
            raise ValueError(f"ground size must be an integer, got {self.ground!r}")
        if self.ground < 1:
            raise ValueError(f"ground size must be positive, got {self.ground}")
        seen = set()
        for entry in self.sets:
            previous = 0
            for e in entry:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise ValueError(f"set {list(entry)!r} holds a non-integer element")
                if e <= previous:
                    raise ValueError(
                        f"set {list(entry)!r} is not strictly increasing"
                    )
                if e > self.ground:
                    raise ValueError(
                        f"set {list(entry)!r} exceeds the ground size {self.ground}"
                    )
                previous = e
            if entry in seen:
                raise ValueError(f"duplicate set {list(entry)!r}")
            seen.add(entry)
        object.__setattr__(self, "sets", _normalize(self.sets))

    @classmethod
    def from_system(cls, system: SetSystem) -> "SystemDocument":
        return cls(system.ground.size, tuple(system.sets()))

    def to_system(self) -> SetSystem:
        return SetSystem.from_sets(self.ground, self.sets)


# ---------------------------------------------------------------------------
# text layout


def parse_text(text: str) -> SystemDocument:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty document: expected a ground size line")
    try:
        ground = int(lines[0])
    except ValueError:
        raise ValueError(f"bad ground size line {lines[0]!r}") from None
    sets = []
    for line in lines[1:]:
        if line == "-":
            sets.append(())
            continue
        parts = [p.strip() for p in line.split(",")]
        try:
            sets.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"bad set line {line!r}") from None
    return SystemDocument(ground, tuple(sets))


def format_text(doc: SystemDocument) -> str:
    lines = [str(doc.ground)]
    for entry in doc.sets:
        lines.append(",".join(str(e) for e in entry) if entry else "-")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON layout


def parse_json(text: str) -> SystemDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(f"bad JSON document: {err}") from None
    if not isinstance(data, dict):
        raise ValueError("JSON document must be an object with ground and sets")
    for key in ("ground", "sets"):
        if key not in data:
            raise ValueError(f"JSON document is missing {key!r}")
    sets = data["sets"]
    if not isinstance(sets, list) or any(not isinstance(s, list) for s in sets):
        raise ValueError("sets must be a list of lists")
    return SystemDocument(data["ground"], tuple(tuple(s) for s in sets))


def format_json(doc: SystemDocument) -> str:
    data = {"ground": doc.ground, "sets": [list(s) for s in doc.sets]}
    return json.dumps(data, indent=2) + "\n"


# ---------------------------------------------------------------------------
# paths


def _is_json_path(path: str) -> bool:
    return str(path).lower().endswith(".json")


def load_path(path) -> SystemDocument:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    return parse_json(text) if _is_json_path(path) else parse_text(text)


def save_path(path, doc: SystemDocument):
    text = format_json(doc) if _is_json_path(path) else format_text(doc)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def system_from_path(path) -> SetSystem:
    return load_path(path).to_system()
