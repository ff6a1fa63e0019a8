import pytest

from kirkman.core import make_design
from kirkman.errors import CatalogError, FormatError, PreconditionFailed
from kirkman.kts import build_kts
from kirkman.kqs import build_kqs
from kirkman.placement import (
    ChunkCatalog,
    export_plan,
    parse_plan_csv,
    plan_from_design,
    rank_chunks,
    roman,
    server_name,
)

from fixtures import INTRO_LOCATION_GROUPS, INTRO_SERVER_TABLE, KTS9_CLASSES


def identity_catalog(n):
    """Chunk id str(i) gets score n-i, so label i lands on chunk str(i)."""
    return ChunkCatalog(tuple((str(i), float(n - i)) for i in range(n)))


def test_server_names():
    assert [server_name(i) for i in (0, 1, 25, 26, 27, 51, 52)] == [
        "A", "B", "Z", "AA", "AB", "AZ", "BA"
    ]


def test_roman_numerals():
    assert [roman(i) for i in (1, 2, 3, 4, 9, 14, 40)] == [
        "I", "II", "III", "IV", "IX", "XIV", "XL"
    ]


def test_rank_chunks_descending_scores():
    catalog = ChunkCatalog(tuple((chr(ord("a") + i), 90.0 - 10 * i) for i in range(9)))
    labels = rank_chunks(catalog)
    assert [labels[chr(ord("a") + i)] for i in range(9)] == list(range(9))


def test_rank_chunks_tie_break():
    labels = rank_chunks(ChunkCatalog((("b", 5.0), ("a", 5.0), ("c", 1.0))))
    assert labels == {"a": 0, "b": 1, "c": 2}


def test_rank_chunks_duplicate_ids():
    with pytest.raises(CatalogError):
        rank_chunks(ChunkCatalog((("a", 1.0), ("a", 2.0))))


def test_rank_chunks_negative_score():
    with pytest.raises(CatalogError):
        rank_chunks(ChunkCatalog((("a", -1.0),)))


def test_plan_wrong_catalog_size():
    with pytest.raises(CatalogError):
        plan_from_design(build_kts(2), identity_catalog(8))


def test_plan_rejects_unverified_design():
    bogus = make_design(9, 3, 2, [[(0, 1, 2), (3, 4, 5), (6, 7, 8)]] * 4)
    with pytest.raises(PreconditionFailed):
        plan_from_design(bogus, identity_catalog(9))


def test_plan_reproduces_intro_tables():
    plan = plan_from_design(build_kts(2), identity_catalog(9))
    assert len(plan.servers) == 12
    table = {s.name: (s.block, s.total) for s in plan.servers}
    assert table == INTRO_SERVER_TABLE
    groups = [set(loc.servers) for loc in plan.locations]
    assert sorted(map(sorted, groups)) == sorted(map(sorted, INTRO_LOCATION_GROUPS))
    assert min(s.total for s in plan.servers) == 9


def test_plan_locations_cover_all_chunks():
    plan = plan_from_design(build_kts(2), identity_catalog(9))
    by_name = {s.name: s for s in plan.servers}
    for loc in plan.locations:
        held = [c for sname in loc.servers for c in by_name[sname].chunks]
        assert sorted(held) == sorted(str(i) for i in range(9))


def test_plan_chunks_follow_popularity_rank():
    n = 9
    scores = {"w": 50.0, "x": 40.0, "y": 30.0, "z": 20.0, "a": 19.0,
              "b": 18.0, "c": 17.0, "d": 16.0, "e": 15.0}
    catalog = ChunkCatalog(tuple(scores.items()))
    plan = plan_from_design(build_kts(2), catalog)
    labels = rank_chunks(catalog)
    for server in plan.servers:
        assert tuple(labels[c] for c in server.chunks) == server.block


def test_plan_kqs_design():
    plan = plan_from_design(build_kqs(1), identity_catalog(8))
    assert len(plan.servers) == 14
    assert len(plan.locations) == 7


def test_export_table_shape():
    plan = plan_from_design(build_kts(2), identity_catalog(9))
    lines = export_plan(plan, "table").splitlines()
    server_rows = [l for l in lines if l and l[0].isalpha() and " | " in l
                   and not l.startswith(("Server", "Location"))]
    assert len(server_rows) == 12 + 4


def test_export_unknown_format():
    plan = plan_from_design(build_kts(2), identity_catalog(9))
    with pytest.raises(FormatError):
        export_plan(plan, "xml")


def test_export_deterministic():
    a = export_plan(plan_from_design(build_kts(2), identity_catalog(9)), "csv")
    b = export_plan(plan_from_design(build_kts(2), identity_catalog(9)), "csv")
    assert a == b


def test_csv_round_trip():
    plan = plan_from_design(build_kts(2), identity_catalog(9))
    parsed = parse_plan_csv(export_plan(plan, "csv"))
    assert [(s.name, s.chunks, s.total) for s in parsed.servers] == [
        (s.name, s.chunks, s.total) for s in plan.servers
    ]
    assert parsed.locations == plan.locations


def test_structured_export_fields():
    import json

    plan = plan_from_design(build_kts(2), identity_catalog(9))
    doc = json.loads(export_plan(plan, "structured"))
    assert doc["order"] == 9
    assert doc["design_min_sum"] == 9
    assert len(doc["servers"]) == 12
    assert len(doc["locations"]) == 4
