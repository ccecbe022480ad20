"""Built-in matrix groups stored as JSON files, validated on load.

Each file records 5x5 generators in the E(n)^k text encoding together
with a contract: the group order, the traces on conjugacy class
representatives, and optionally a cubic form every generator must fix.
load() regenerates the group and re-checks the whole contract every
time, so a corrupted fixture fails loudly instead of feeding silently
wrong numbers into reports.

The environment variable CUBICMODULI_CATALOG may name a directory of
extra entry files; entries there shadow built-in ones with the same
name.
"""

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path

from .cyclo import parse_cyclo
from .errors import ContractViolationError, ParseError
from .groups import MatrixGroup
from .invariants import CubicForm, act
from .linalg import Matrix

ENV_VAR = "CUBICMODULI_CATALOG"
_BUILTIN = Path(__file__).parent / "data" / "catalog"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    conductor: int
    generators: tuple
    notes: tuple
    order: int
    character: tuple
    fixed_form: CubicForm | None
    path: str


def _search_dirs():
    dirs = []
    override = os.environ.get(ENV_VAR)
    if override:
        dirs.append(Path(override))
    dirs.append(_BUILTIN)
    return dirs


def entry_ids() -> list:
    """Names of all available entries, override directory included."""
    seen = set()
    for d in _search_dirs():
        if d.is_dir():
            seen.update(p.stem for p in d.glob("*.json"))
    return sorted(seen)


def _resolve(name: str) -> Path:
    p = Path(name)
    if p.is_file():
        return p
    for d in _search_dirs():
        q = d / f"{name}.json"
        if q.is_file():
            return q
    raise FileNotFoundError(
        f"no catalog entry or file named {name!r}; "
        f"available: {', '.join(entry_ids())}"
    )


def load_entry(name: str) -> CatalogEntry:
    """Parse one entry file; no group generation happens here."""
    path = _resolve(name)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON: {e}") from None
    try:
        gens = []
        for rows in raw["generators"]:
            if len(rows) != 5 or any(len(r) != 5 for r in rows):
                raise ValueError("generators must be 5x5")
            gens.append(Matrix([[parse_cyclo(v) for v in r] for r in rows]))
        notes = tuple(raw["notes"])
        if len(notes) != len(gens):
            raise ValueError("one note per generator required")
        contract = raw["contract"]
        fixed = contract.get("fixed_form")
        entry = CatalogEntry(
            id=str(raw["id"]),
            description=str(raw["description"]),
            conductor=int(raw["conductor"]),
            generators=tuple(gens),
            notes=notes,
            order=int(contract["order"]),
            character=tuple(str(v) for v in contract["character"]),
            fixed_form=CubicForm.parse(fixed) if fixed else None,
            path=str(path),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"{path}: malformed entry: {e}") from None
    return entry


def validate(entry: CatalogEntry) -> MatrixGroup:
    """Generate the group and check every stored expectation."""
    n = 1
    for g in entry.generators:
        for v in g.data:
            n = math.lcm(n, v.conductor)
    if n != entry.conductor:
        raise ContractViolationError(
            f"{entry.id}: stored conductor {entry.conductor}, entries "
            f"need {n}"
        )
    group = MatrixGroup.generate(list(entry.generators))
    if group.order != entry.order:
        raise ContractViolationError(
            f"{entry.id}: generated order {group.order}, contract says "
            f"{entry.order}"
        )
    got = tuple(str(group.elements[cl.rep_index].trace())
                for cl in group.classes)
    if got != entry.character:
        raise ContractViolationError(
            f"{entry.id}: class traces {got} do not match the contract "
            f"{entry.character}"
        )
    if entry.fixed_form is not None:
        for i, g in enumerate(entry.generators):
            if act(g, entry.fixed_form) != entry.fixed_form:
                raise ContractViolationError(
                    f"{entry.id}: generator {i} moves the fixed form"
                )
    return group


def load(name: str) -> MatrixGroup:
    """Load an entry by name or file path and return the validated group."""
    return validate(load_entry(name))
