"""Relational structures with three accessibility relations and a valuation.

A structure packages a finite non-empty set of worlds, binary relations
R (intuitionistic accessibility), Rb (box) and Rd (diamond) over those
worlds, and a valuation assigning to each proposition letter the set of
worlds where it holds.  No frame conditions are imposed here; classes of
structures cut out by first-order axioms are handled in the classes
module.

World identifiers are strings or ints.  The JSON interchange format::

    {"worlds": ["w0", "w1"],
     "R":  [["w0", "w1"]],
     "Rb": [],
     "Rd": [["w1", "w1"]],
     "val": {"p1": ["w0"]}}

Missing relation keys and a missing "val" default to empty; unknown keys,
duplicate entries, and references to undeclared worlds are rejected.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Union

World = Union[str, int]

_REL_KEYS = ("R", "Rb", "Rd")


def _check_world(w: object) -> World:
    if isinstance(w, bool) or not isinstance(w, (str, int)):
        raise ValueError(f"world identifiers must be str or int, got {w!r}")
    return w


def _world_key(w: World) -> tuple:
    # ints and strs are not mutually comparable; sort by type name first.
    return (w.__class__.__name__, w)


def world_sort_key(w: World) -> tuple:
    """Deterministic ordering key for mixed str/int world identifiers."""
    return _world_key(w)


class KripkeStructure:
    """Immutable three-relation Kripke structure over a finite world set."""

    __slots__ = (
        "worlds",
        "relR",
        "relBox",
        "relDia",
        "valuation",
        "_succ",
        "_sorted",
        "_hash",
    )

    def __init__(
        self,
        worlds: Iterable,
        relR: Iterable = (),
        relBox: Iterable = (),
        relDia: Iterable = (),
        valuation: Optional[dict] = None,
    ):
        ws = frozenset(_check_world(w) for w in worlds)
        if not ws:
            raise ValueError("a structure needs at least one world")
        rels = {}
        for name, edges in (("R", relR), ("Rb", relBox), ("Rd", relDia)):
            pairs = set()
            for e in edges:
                a, b = e
                if a not in ws or b not in ws:
                    raise ValueError(f"{name} edge {(a, b)!r} mentions an undeclared world")
                pairs.add((a, b))
            rels[name] = frozenset(pairs)
        val = {}
        for p, holds in (valuation or {}).items():
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"valuation keys must be positive ints, got {p!r}")
            members = frozenset(holds)
            for w in members:
                if w not in ws:
                    raise ValueError(f"valuation of p{p} mentions undeclared world {w!r}")
            if members:
                # empty entries are dropped so equal structures compare equal
                val[p] = members
        self.worlds = ws
        self.relR = rels["R"]
        self.relBox = rels["Rb"]
        self.relDia = rels["Rd"]
        self.valuation = val
        succ: dict = {name: {w: [] for w in ws} for name in _REL_KEYS}
        for name, pairs in (("R", self.relR), ("Rb", self.relBox), ("Rd", self.relDia)):
            for a, b in sorted(pairs, key=lambda e: (_world_key(e[0]), _world_key(e[1]))):
                succ[name][a].append(b)
        self._succ = succ
        self._sorted = tuple(sorted(ws, key=_world_key))
        self._hash = hash(
            (
                self.worlds,
                self.relR,
                self.relBox,
                self.relDia,
                frozenset((p, m) for p, m in val.items()),
            )
        )

    # -- queries -----------------------------------------------------------

    def succ(self, rel: str, w: World) -> tuple:
        """Successors of w under rel ("R", "Rb" or "Rd"), deterministic order."""
        if rel not in _REL_KEYS:
            raise ValueError(f"unknown relation {rel!r}")
        return tuple(self._succ[rel][w])

    def pairs(self, rel: str) -> frozenset:
        if rel == "R":
            return self.relR
        if rel == "Rb":
            return self.relBox
        if rel == "Rd":
            return self.relDia
        raise ValueError(f"unknown relation {rel!r}")

    def prop_true(self, index: int, w: World) -> bool:
        return w in self.valuation.get(index, ())

    def letters(self) -> frozenset:
        """Proposition letters with a non-empty extension."""
        return frozenset(self.valuation)

    def sorted_worlds(self) -> tuple:
        return self._sorted

    # -- equality ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KripkeStructure):
            return NotImplemented
        return (
            self.worlds == other.worlds
            and self.relR == other.relR
            and self.relBox == other.relBox
            and self.relDia == other.relDia
            and self.valuation == other.valuation
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"<KripkeStructure |W|={len(self.worlds)} |R|={len(self.relR)} "
            f"|Rb|={len(self.relBox)} |Rd|={len(self.relDia)} "
            f"letters={sorted(self.valuation)}>"
        )


@dataclass(frozen=True)
class PointedModel:
    """A structure together with a distinguished world."""

    structure: KripkeStructure
    point: World

    def __post_init__(self):
        if self.point not in self.structure.worlds:
            raise ValueError(f"point {self.point!r} is not a world of the structure")


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def model_from_dict(data: dict) -> KripkeStructure:
    if not isinstance(data, dict):
        raise ValueError("model document must be a JSON object")
    unknown = set(data) - {"worlds", "R", "Rb", "Rd", "val"}
    if unknown:
        raise ValueError(f"unknown keys in model document: {sorted(unknown)}")
    if "worlds" not in data:
        raise ValueError("model document is missing the \"worlds\" key")
    worlds = data["worlds"]
    if not isinstance(worlds, list):
        raise ValueError("\"worlds\" must be an array")
    if len(set(map(_freeze_world, worlds))) != len(worlds):
        raise ValueError("duplicate world identifiers")
    rels = {}
    for key in _REL_KEYS:
        edges = data.get(key, [])
        if not isinstance(edges, list):
            raise ValueError(f"\"{key}\" must be an array of pairs")
        seen = set()
        out = []
        for e in edges:
            if not isinstance(e, list) or len(e) != 2:
                raise ValueError(f"\"{key}\" entries must be two-element arrays, got {e!r}")
            t = (_freeze_world(e[0]), _freeze_world(e[1]))
            if t in seen:
                raise ValueError(f"duplicate {key} edge {list(t)!r}")
            seen.add(t)
            out.append(t)
        rels[key] = out
    val_doc = data.get("val", {})
    if not isinstance(val_doc, dict):
        raise ValueError("\"val\" must be an object")
    valuation = {}
    for name, holds in val_doc.items():
        if not isinstance(name, str) or not name.startswith("p") or not name[1:].isdigit():
            raise ValueError(f"valuation keys look like \"p1\", got {name!r}")
        index = int(name[1:])
        if index < 1:
            raise ValueError(f"proposition letters start at p1, got {name!r}")
        if index in valuation:
            raise ValueError(f"duplicate valuation key for p{index}")
        if not isinstance(holds, list):
            raise ValueError(f"valuation of {name} must be an array of worlds")
        members = [_freeze_world(w) for w in holds]
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate worlds in valuation of {name}")
        valuation[index] = members
    return KripkeStructure(
        [_freeze_world(w) for w in worlds],
        relR=rels["R"],
        relBox=rels["Rb"],
        relDia=rels["Rd"],
        valuation=valuation,
    )


def _freeze_world(w: object) -> World:
    if isinstance(w, bool) or not isinstance(w, (str, int)):
        raise ValueError(f"world identifiers must be strings or integers, got {w!r}")
    return w


def model_to_dict(m: KripkeStructure) -> dict:
    def edge_list(pairs):
        return [
            [a, b]
            for a, b in sorted(pairs, key=lambda e: (_world_key(e[0]), _world_key(e[1])))
        ]

    return {
        "worlds": list(m.sorted_worlds()),
        "R": edge_list(m.relR),
        "Rb": edge_list(m.relBox),
        "Rd": edge_list(m.relDia),
        "val": {
            f"p{p}": sorted(m.valuation[p], key=_world_key) for p in sorted(m.valuation)
        },
    }


def load_model(path: str) -> KripkeStructure:
    """Read a structure from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    try:
        return model_from_dict(data)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def dump_model(m: KripkeStructure, path: str) -> None:
    """Write a structure to a JSON file in canonical key and world order."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(m), fh, indent=2, sort_keys=False)
        fh.write("\n")


def loads_model(text: str) -> KripkeStructure:
    return model_from_dict(json.loads(text))


def dumps_model(m: KripkeStructure) -> str:
    return json.dumps(model_to_dict(m), indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# Random structures
# ---------------------------------------------------------------------------


def random_model(
    n_worlds: int,
    edge_density: Union[float, tuple] = 0.3,
    n_props: int = 2,
    seed: Optional[int] = None,
) -> KripkeStructure:
    """Sample a structure with worlds "w0" .. "w{n-1}".

    Every potential edge of each relation is included independently with
    the given probability, and each (letter, world) membership likewise.
    edge_density is either one float used everywhere or a 4-tuple giving
    separate densities for (R, Rb, Rd, valuation).  The draw order is
    fixed, so equal seeds give equal structures.
    """
    if n_worlds < 1:
        raise ValueError("n_worlds must be at least 1")
    if n_props < 0:
        raise ValueError("n_props must be non-negative")
    if isinstance(edge_density, tuple):
        if len(edge_density) != 4:
            raise ValueError("edge_density tuple must have 4 entries (R, Rb, Rd, val)")
        d_r, d_rb, d_rd, d_val = (float(d) for d in edge_density)
    else:
        d_r = d_rb = d_rd = d_val = float(edge_density)
    for d in (d_r, d_rb, d_rd, d_val):
        if not 0.0 <= d <= 1.0:
            raise ValueError(f"densities must lie in [0, 1], got {d}")
    rng = random.Random(seed)
    worlds = [f"w{i}" for i in range(n_worlds)]
    rels = {}
    for name, d in (("R", d_r), ("Rb", d_rb), ("Rd", d_rd)):
        edges = []
        for a in worlds:
            for b in worlds:
                if rng.random() < d:
                    edges.append((a, b))
        rels[name] = edges
    valuation = {}
    for p in range(1, n_props + 1):
        members = [w for w in worlds if rng.random() < d_val]
        if members:
            valuation[p] = members
    return KripkeStructure(
        worlds, relR=rels["R"], relBox=rels["Rb"], relDia=rels["Rd"], valuation=valuation
    )
