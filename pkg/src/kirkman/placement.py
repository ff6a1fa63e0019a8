"""Map a verified Kirkman design onto storage: one server per block, one
location per parallel class.

Chunks are ranked by popularity (most popular gets label 0) and a server
holds the chunks whose labels form its block, so the design's min-sum
guarantees no server collects only hot data, and every location's servers
jointly hold every chunk exactly once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .core import ResolvableDesign, min_sum
from .errors import CatalogError, FormatError, PreconditionFailed
from .verify import verify_design


@dataclass(frozen=True)
class ChunkCatalog:
    """Chunk ids with non-negative popularity scores; higher = more popular."""

    entries: tuple[tuple[str, float], ...]

    def validate(self) -> None:
        ids = [cid for cid, _ in self.entries]
        if len(set(ids)) != len(ids):
            dup = sorted({c for c in ids if ids.count(c) > 1})
            raise CatalogError(f"duplicate chunk ids: {dup}")
        bad = [(cid, s) for cid, s in self.entries if s < 0]
        if bad:
            raise CatalogError(f"negative popularity scores: {bad}")


@dataclass(frozen=True)
class ServerAssignment:
    name: str
    chunks: tuple[str, ...]
    block: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class Location:
    name: str
    servers: tuple[str, ...]


@dataclass(frozen=True)
class PlacementPlan:
    order: int
    block_size: int
    design_min_sum: int
    servers: tuple[ServerAssignment, ...]
    locations: tuple[Location, ...]


def server_name(index: int) -> str:
    """A, B, ..., Z, AA, AB, ... (spreadsheet-style)."""
    name = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        name = chr(ord("A") + rem) + name
    return name


_ROMAN = (
    (1000, "M"), (900, "CM"), (500, "D"), (400, "CD"), (100, "C"), (90, "XC"),
    (50, "L"), (40, "XL"), (10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I"),
)


def roman(number: int) -> str:
    out = []
    for value, symbol in _ROMAN:
        while number >= value:
            out.append(symbol)
            number -= value
    return "".join(out)


def rank_chunks(catalog: ChunkCatalog) -> dict[str, int]:
    """Labels by descending popularity, ties broken by ascending id; the most
    popular chunk gets label 0."""
    catalog.validate()
    ordered = sorted(catalog.entries, key=lambda e: (-e[1], e[0]))
    return {cid: label for label, (cid, _) in enumerate(ordered)}


def plan_from_design(d: ResolvableDesign, catalog: ChunkCatalog) -> PlacementPlan:
    """Assign chunks to servers (blocks) and servers to locations (classes).

    Servers are named in lexicographic block order so naming depends only on
    the design's block set, not on construction order.
    """
    report = verify_design(d)
    if not report.passed:
        raise PreconditionFailed("design failed verification", report)
    if len(catalog.entries) != d.n:
        raise CatalogError(
            f"catalog has {len(catalog.entries)} chunks, design order is {d.n}"
        )
    labels = rank_chunks(catalog)
    by_label = {label: cid for cid, label in labels.items()}

    ordered_blocks = sorted(d.all_blocks())
    names = {block: server_name(i) for i, block in enumerate(ordered_blocks)}

    servers = tuple(
        ServerAssignment(
            name=names[block],
            chunks=tuple(by_label[x] for x in block),
            block=block,
            total=sum(block),
        )
        for block in ordered_blocks
    )
    locations = tuple(
        Location(
            name=roman(i + 1),
            servers=tuple(sorted(names[b] for b in cls)),
        )
        for i, cls in enumerate(d.classes)
    )
    plan = PlacementPlan(
        order=d.n,
        block_size=d.k,
        design_min_sum=min_sum(d),
        servers=servers,
        locations=locations,
    )
    _check_plan(plan)
    return plan


def _check_plan(plan: PlacementPlan) -> None:
    """Re-derive the plan invariants from the plan itself."""
    n, k = plan.order, plan.block_size
    expected_r = (n - 1) // 2 if k == 3 else (n - 1) * (n - 2) // 6
    replication: dict[str, int] = {}
    for server in plan.servers:
        for cid in server.chunks:
            replication[cid] = replication.get(cid, 0) + 1
        if server.total < plan.design_min_sum:
            raise PreconditionFailed(
                f"server {server.name} sum {server.total} below min-sum"
            )
    bad = {cid: r for cid, r in replication.items() if r != expected_r}
    if bad or len(replication) != n:
        raise PreconditionFailed(f"replication mismatch: {bad}")

    co_residence: dict[frozenset, int] = {}
    for server in plan.servers:
        for pair in combinations(sorted(server.chunks), 2):
            key = frozenset(pair)
            co_residence[key] = co_residence.get(key, 0) + 1
    # Pairs share a server exactly once for triples, (n-2)/2 times for quads
    # (every triple then co-resides exactly once instead).
    expected_pair = 1 if k == 3 else (n - 2) // 2
    if any(c != expected_pair for c in co_residence.values()):
        raise PreconditionFailed("pair co-residence mismatch")
    if k == 4:
        triples: dict[frozenset, int] = {}
        for server in plan.servers:
            for trip in combinations(sorted(server.chunks), 3):
                key = frozenset(trip)
                triples[key] = triples.get(key, 0) + 1
        if any(c != 1 for c in triples.values()):
            raise PreconditionFailed("triple co-residence mismatch")

    by_name = {s.name: s for s in plan.servers}
    all_chunks = set(replication)
    for loc in plan.locations:
        held = [cid for sname in loc.servers for cid in by_name[sname].chunks]
        if len(held) != n or set(held) != all_chunks:
            raise PreconditionFailed(f"location {loc.name} does not cover all chunks")


def export_plan(plan: PlacementPlan, format: str) -> str:
    """Render a plan as 'table', 'csv' or 'structured' (JSON)."""
    if format == "table":
        return _export_table(plan)
    if format == "csv":
        return _export_csv(plan)
    if format == "structured":
        return _export_structured(plan)
    raise FormatError(f"unknown plan format {format!r}")


def _export_table(plan: PlacementPlan) -> str:
    lines = ["Server | Chunks of Data | Sum of Popularity"]
    for s in plan.servers:
        lines.append(f"{s.name} | {', '.join(s.chunks)} | {s.total}")
    lines.append("")
    lines.append("Location | Servers")
    for loc in plan.locations:
        lines.append(f"{loc.name} | {', '.join(loc.servers)}")
    return "\n".join(lines) + "\n"


def _export_csv(plan: PlacementPlan) -> str:
    lines = ["server,chunks,sum"]
    for s in plan.servers:
        lines.append(f"{s.name},{';'.join(s.chunks)},{s.total}")
    lines.append("location,servers")
    for loc in plan.locations:
        lines.append(f"{loc.name},{';'.join(loc.servers)}")
    return "\n".join(lines) + "\n"


def _export_structured(plan: PlacementPlan) -> str:
    doc = {
        "order": plan.order,
        "block_size": plan.block_size,
        "design_min_sum": plan.design_min_sum,
        "servers": [
            {
                "name": s.name,
                "chunks": list(s.chunks),
                "block": list(s.block),
                "sum": s.total,
            }
            for s in plan.servers
        ],
        "locations": [
            {"name": loc.name, "servers": list(loc.servers)} for loc in plan.locations
        ],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def parse_plan_csv(text: str) -> PlacementPlan:
    """Inverse of the csv export; used for round-trip checks."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "server,chunks,sum":
        raise FormatError("missing server,chunks,sum header")
    servers = []
    locations = []
    section = "servers"
    for line in lines[1:]:
        if line == "location,servers":
            section = "locations"
            continue
        parts = line.split(",")
        if section == "servers":
            if len(parts) != 3:
                raise FormatError(f"bad server row: {line!r}")
            name, chunks, total = parts
            servers.append((name, tuple(chunks.split(";")), int(total)))
        else:
            if len(parts) != 2:
                raise FormatError(f"bad location row: {line!r}")
            name, members = parts
            locations.append(Location(name, tuple(members.split(";"))))

    # Labels are recoverable from block sums only via the original design, so
    # the round-trip carries chunk ids and sums; blocks are re-ranked by the
    # position of each chunk id among all servers' chunk popularity order.
    chunk_ids = sorted({cid for _, chunks, _ in servers for cid in chunks})
    plan_servers = []
    for name, chunks, total in servers:
        plan_servers.append(
            ServerAssignment(name=name, chunks=chunks, block=(), total=total)
        )
    n = len(chunk_ids)
    k = len(servers[0][1]) if servers else 0
    total_min = min(s.total for s in plan_servers) if plan_servers else 0
    return PlacementPlan(
        order=n,
        block_size=k,
        design_min_sum=total_min,
        servers=tuple(plan_servers),
        locations=tuple(locations),
    )
