import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from builders import rec
from pubgraph import (
    InvalidName,
    ParseError,
    PublicationRecord,
    Roster,
    TimeWindow,
    UsageError,
    VenueKind,
    filter_records,
    normalize_name,
    parse_records,
)
from pubgraph.ingest import apply_aliases, dump_records, parse_alias_map, parse_roster


@pytest.mark.parametrize(
    "raw, expected",
    [("  Jae\u00a0 Kim ", "jae kim"), ("Kim", "kim"), ("Mu\u0308ller", "m\u00fcller"),
     ("Frank\tM\u00dcLLER", "frank m\u00fcller")],
)
def test_normalize_name(raw, expected):
    assert normalize_name(raw) == expected


@pytest.mark.parametrize("raw", ["", "   ", " \t\n"])
def test_normalize_name_rejects_empty(raw):
    with pytest.raises(InvalidName):
        normalize_name(raw)


@given(st.text())
def test_normalize_name_idempotent(raw):
    try:
        once = normalize_name(raw)
    except InvalidName:
        return
    assert normalize_name(once) == once


def test_canonical_single_record():
    line = json.dumps({"title": "X", "authors": ["a1"], "venue": "j1",
                       "venue_kind": "journal", "year": 2008})
    records, warnings = parse_records(line.encode())
    assert warnings == []
    assert records == [PublicationRecord("X", ("a1",), "j1", VenueKind.JOURNAL, 2008)]


def test_canonical_dedupes_authors_and_ignores_unknown_fields():
    line = json.dumps({"title": "X", "authors": ["Kim", " kim ", "Lee"], "venue": "j1",
                       "venue_kind": "proceedings", "year": 2008, "pages": "1-10"})
    (record,), _ = parse_records(line)
    assert record.authors == ("kim", "lee")


def test_dblp_article():
    xml = (b"<article><author>A B</author><journal>IEICE</journal>"
           b"<year>2007</year><title>T</title></article>")
    (record,), warnings = parse_records(xml, "dblp_xml")
    assert warnings == []
    assert (record.venue, record.venue_kind, record.year) == ("IEICE", VenueKind.JOURNAL, 2007)
    assert record.authors == ("a b",)
    assert record.title == "T"


def test_dblp_inproceedings_uses_booktitle():
    xml = (b"<dblp><inproceedings><author>X</author><author>Y</author>"
           b"<booktitle>CCS</booktitle><year>2008</year></inproceedings></dblp>")
    (record,), _ = parse_records(xml, "dblp_xml")
    assert record.venue == "CCS"
    assert record.venue_kind is VenueKind.PROCEEDINGS
    assert record.authors == ("x", "y")


def test_dblp_missing_year_is_a_warning():
    xml = b"<dblp><article><author>A</author><journal>J</journal></article></dblp>"
    records, warnings = parse_records(xml, "dblp_xml")
    assert records == []
    assert len(warnings) == 1
    assert "year" in warnings[0].message


def test_dblp_skips_other_elements_silently():
    xml = (b"<dblp><www><author>A</author><title>Home</title></www>"
           b"<book><author>A</author><year>2000</year></book></dblp>")
    assert parse_records(xml, "dblp_xml") == ([], [])


def test_dblp_html_entities_with_doctype():
    xml = (b'<?xml version="1.0"?><!DOCTYPE dblp SYSTEM "dblp.dtd"><dblp><article>'
           b"<author>Frank M&uuml;ller</author><journal>J</journal><year>2006</year>"
           b"</article></dblp>")
    (record,), _ = parse_records(xml, "dblp_xml")
    assert record.authors == ("frank müller",)


def test_unclosed_root_is_parse_error():
    with pytest.raises(ParseError) as info:
        parse_records(b"<dblp><article><author>A</author>", "dblp_xml")
    assert info.value.position.startswith("line 1")


def test_invalid_utf8_is_parse_error():
    with pytest.raises(ParseError) as info:
        parse_records(b'{"title": "\xff"}\n')
    assert info.value.position == "byte 11"


def test_unknown_format():
    with pytest.raises(UsageError):
        parse_records(b"", "bibtex")


def test_corrupted_canonical_fixture(data_dir):
    records, warnings = parse_records((data_dir / "corrupted.jsonl").read_bytes())
    assert [r.title for r in records] == ["Good 1", "Good 2", "Good 3", "Good 4", "Good 5"]
    assert [w.location for w in warnings] == [
        "line 2", "line 4", "line 7", "line 8", "line 9", "line 11"]
    assert records[3].venue == "IEICE Transactions"


def test_corrupted_dblp_fixture(data_dir):
    records, warnings = parse_records((data_dir / "corrupted_dblp.xml").read_bytes(), "dblp_xml")
    assert [r.title for r in records] == ["Fine", "Fine too"]
    assert len(warnings) == 3
    assert "key='a/2'" in warnings[0].location


@given(st.binary(max_size=200))
def test_canonical_parse_is_total(data):
    # Any byte stream either parses (records + warnings) or raises ParseError.
    try:
        records, warnings = parse_records(data)
    except ParseError:
        return
    lines = [ln for ln in data.decode("utf-8").splitlines() if ln.strip()]
    assert len(records) + len(warnings) == len(lines)


@given(st.binary(max_size=200))
def test_dblp_parse_is_total(data):
    try:
        parse_records(data, "dblp_xml")
    except ParseError:
        pass


def test_dump_round_trip(data_dir):
    records, _ = parse_records((data_dir / "canonical_50.jsonl").read_bytes())
    again, warnings = parse_records(dump_records(records))
    assert warnings == []
    assert again == records


def test_filter_records_window_and_roster():
    roster = Roster("g", frozenset({"kim"}))
    window = TimeWindow(2006, 2008)
    kept = rec(["kim", "outsider"], "j", 2008)
    late = rec(["kim"], "j", 2009)
    stranger = rec(["outsider"], "j", 2007)
    assert filter_records([kept, late, stranger], roster, window) == [kept]
    assert kept.authors == ("kim", "outsider")


@given(st.lists(st.tuples(st.sampled_from("abcd"), st.integers(2000, 2010)), max_size=20),
       st.integers(2000, 2010), st.integers(0, 5))
def test_filter_is_order_preserving_subset(specs, start, length):
    records = [rec([a], "j", y, title=str(i)) for i, (a, y) in enumerate(specs)]
    out = filter_records(records, Roster("g", frozenset({"a", "b"})),
                         TimeWindow(start, start + length))
    positions = [records.index(r) for r in out]
    assert positions == sorted(positions)
    assert all(r in records for r in out)


def test_time_window_parse():
    assert TimeWindow.parse("2006:2008") == TimeWindow(2006, 2008)
    assert TimeWindow.parse("2007") == TimeWindow(2007, 2007)
    with pytest.raises(UsageError):
        TimeWindow.parse("2008:2006")
    with pytest.raises(UsageError):
        TimeWindow.parse("soon")


def test_roster_file(data_dir):
    roster = parse_roster((data_dir / "group_b.txt").read_bytes(), "b")
    assert "frank müller" in roster.members
    assert len(roster.members) == 6


def test_roster_must_be_non_empty():
    with pytest.raises(UsageError):
        parse_roster(b"# nobody\n\n", "empty")


def test_alias_map(data_dir):
    aliases = parse_alias_map((data_dir / "aliases.tsv").read_bytes())
    assert aliases == {"IEICE Transactions": "IEICE(J)", "ETRI Journal": "ETRI(J)"}
    out = apply_aliases([rec(["a"], "IEICE Transactions"), rec(["a"], "CCS")], aliases)
    assert [r.venue for r in out] == ["IEICE(J)", "CCS"]


def test_alias_map_bad_line():
    with pytest.raises(ParseError):
        parse_alias_map(b"no tab here\n")


def test_record_invariants():
    with pytest.raises(UsageError):
        PublicationRecord("t", (), "j", "journal", 2000)
    with pytest.raises(UsageError):
        PublicationRecord("t", ("a", "a"), "j", "journal", 2000)
    with pytest.raises(UsageError):
        PublicationRecord("t", ("a",), "j", "journal", 0)
