"""Reading publication records, rosters and venue alias maps.

Two record formats are understood:

* ``canonical``: UTF-8, one JSON object per line with the fields ``title``,
  ``authors`` (array), ``venue``, ``venue_kind`` (``journal`` or
  ``proceedings``) and ``year``. Unknown fields are ignored.
* ``dblp_xml``: the ``article`` / ``inproceedings`` subset of the DBLP dump
  format. Every other element is skipped.

A malformed record never aborts a parse; it is dropped and reported as a
:class:`ParseWarning`. Only stream-level problems (bad encoding, broken XML
structure) raise :class:`~pubgraph.errors.ParseError`.
"""

from __future__ import annotations

import enum
import html.entities
import io
import json
import re
import unicodedata
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Mapping

from .errors import InvalidName, ParseError, UsageError

__all__ = [
    "VenueKind",
    "PublicationRecord",
    "Roster",
    "TimeWindow",
    "ParseWarning",
    "normalize_name",
    "normalize_venue",
    "parse_records",
    "dump_records",
    "filter_records",
    "parse_roster",
    "parse_alias_map",
    "apply_aliases",
]

_WHITESPACE = re.compile(r"\s+")


class VenueKind(str, enum.Enum):
    JOURNAL = "journal"
    PROCEEDINGS = "proceedings"


@dataclass(frozen=True)
class PublicationRecord:
    """One paper. ``authors`` holds normalized names in byline order."""

    title: str
    authors: tuple[str, ...]
    venue: str
    venue_kind: VenueKind
    year: int

    def __post_init__(self):
        if not self.authors:
            raise UsageError("a publication record needs at least one author")
        if len(set(self.authors)) != len(self.authors):
            raise UsageError(f"duplicate authors in record {self.title!r}")
        if not self.venue:
            raise UsageError("venue must be non-empty")
        if self.year <= 0:
            raise UsageError(f"year must be positive, got {self.year}")
        object.__setattr__(self, "venue_kind", VenueKind(self.venue_kind))

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "authors": list(self.authors),
            "venue": self.venue,
            "venue_kind": self.venue_kind.value,
            "year": self.year,
        }


@dataclass(frozen=True)
class Roster:
    group_name: str
    members: frozenset[str]

    def __post_init__(self):
        if not self.members:
            raise UsageError(f"roster {self.group_name!r} has no members")
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def from_names(cls, group_name: str, names: Iterable[str]) -> "Roster":
        return cls(group_name, frozenset(normalize_name(n) for n in names))


@dataclass(frozen=True)
class TimeWindow:
    """Inclusive range of calendar years."""

    start_year: int
    end_year: int

    def __post_init__(self):
        if self.start_year > self.end_year:
            raise UsageError(
                f"window start {self.start_year} is after end {self.end_year}"
            )

    def __contains__(self, year: int) -> bool:
        return self.start_year <= year <= self.end_year

    def __str__(self) -> str:
        if self.start_year == self.end_year:
            return str(self.start_year)
        return f"{self.start_year}-{self.end_year}"

    @classmethod
    def parse(cls, text: str) -> "TimeWindow":
        """Parse ``START:END`` or a single year ``YYYY``."""
        start, sep, end = text.partition(":")
        try:
            if not sep:
                return cls(int(start), int(start))
            return cls(int(start), int(end))
        except ValueError:
            raise UsageError(f"invalid window {text!r}, expected START:END") from None


@dataclass(frozen=True)
class ParseWarning:
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


def _collapse(raw: str) -> str:
    return _WHITESPACE.sub(" ", unicodedata.normalize("NFC", raw)).strip()


def normalize_name(raw: str) -> str:
    """Return the comparison key for a person's name.

    NFC composition, whitespace runs (including no-break spaces) collapsed
    to one space, outer whitespace stripped, then case-folded.

    >>> normalize_name("  Jae\\u00a0 Kim ")
    'jae kim'
    """
    name = unicodedata.normalize("NFC", _collapse(raw).casefold())
    if not name:
        raise InvalidName(f"name {raw!r} is empty after normalization")
    return name


def normalize_venue(raw: str) -> str:
    """Venue keys keep their case (acronyms such as ``IEICE`` stay readable)."""
    venue = _collapse(raw)
    if not venue:
        raise InvalidName(f"venue {raw!r} is empty after normalization")
    return venue


def _normalize_authors(raw_names: Iterable[str]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for raw in raw_names:
        try:
            seen.setdefault(normalize_name(raw), None)
        except InvalidName:
            continue
    return tuple(seen)


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("input is not valid UTF-8", f"byte {exc.start}") from None


def _read_all(stream: BinaryIO | bytes | str) -> bytes:
    if isinstance(stream, bytes):
        return stream
    if isinstance(stream, str):
        return stream.encode("utf-8")
    return stream.read()


def parse_records(
    stream: BinaryIO | bytes | str, format: str = "canonical"
) -> tuple[list[PublicationRecord], list[ParseWarning]]:
    """Parse a byte stream of bibliographic records.

    Returns the records that passed validation plus one warning for every
    record that was skipped.
    """
    data = _read_all(stream)
    if format == "canonical":
        return _parse_canonical(_decode(data))
    if format == "dblp_xml":
        _decode(data)
        return _parse_dblp(data)
    raise UsageError(f"unknown record format {format!r}")


def _record_from_mapping(obj: object) -> PublicationRecord:
    # Raises ValueError/TypeError (mapped to warnings by the caller).
    if not isinstance(obj, dict):
        raise ValueError("record is not an object")
    missing = [f for f in ("title", "authors", "venue", "venue_kind", "year") if f not in obj]
    if missing:
        raise ValueError(f"missing field(s): {', '.join(missing)}")
    title, authors, venue = obj["title"], obj["authors"], obj["venue"]
    year = obj["year"]
    if not isinstance(title, str):
        raise ValueError("title must be a string")
    if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
        raise ValueError("authors must be an array of strings")
    if not isinstance(venue, str):
        raise ValueError("venue must be a string")
    if isinstance(year, bool) or not isinstance(year, int):
        raise ValueError("year must be an integer")
    return _make_record(title, authors, venue, obj["venue_kind"], year)


def _make_record(title, raw_authors, raw_venue, kind, year) -> PublicationRecord:
    try:
        kind = VenueKind(kind)
    except ValueError:
        raise ValueError(f"unknown venue_kind {kind!r}") from None
    authors = _normalize_authors(raw_authors)
    if not authors:
        raise ValueError("no valid author names")
    try:
        venue = normalize_venue(raw_venue)
    except InvalidName:
        raise ValueError("empty venue") from None
    if year <= 0:
        raise ValueError(f"year must be positive, got {year}")
    return PublicationRecord(_collapse(title), authors, venue, kind, year)


def _parse_canonical(text: str):
    records, warnings = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        location = f"line {lineno}"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            warnings.append(ParseWarning(location, f"invalid JSON: {exc.msg}"))
            continue
        try:
            records.append(_record_from_mapping(obj))
        except (ValueError, TypeError) as exc:
            warnings.append(ParseWarning(location, str(exc)))
    return records, warnings


_DBLP_VENUE_CHILD = {
    "article": ("journal", VenueKind.JOURNAL),
    "inproceedings": ("booktitle", VenueKind.PROCEEDINGS),
}


def _text(elem: ET.Element) -> str:
    return "".join(elem.itertext())


def _record_from_element(elem: ET.Element) -> PublicationRecord:
    venue_tag, kind = _DBLP_VENUE_CHILD[elem.tag]
    venue = elem.find(venue_tag)
    if venue is None:
        raise ValueError(f"missing <{venue_tag}>")
    year = elem.find("year")
    if year is None:
        raise ValueError("missing <year>")
    try:
        year_value = int(_text(year).strip())
    except ValueError:
        raise ValueError(f"invalid year {_text(year)!r}") from None
    title = elem.find("title")
    authors = [_text(a) for a in elem.findall("author")]
    if not authors:
        raise ValueError("no <author> elements")
    return _make_record(
        _text(title) if title is not None else "", authors, _text(venue), kind, year_value
    )


def _parse_dblp(data: bytes):
    parser = ET.XMLParser()
    # DBLP dumps reference dblp.dtd for HTML character entities.
    for name, codepoint in html.entities.name2codepoint.items():
        parser.entity[name] = chr(codepoint)
    records, warnings = [], []
    index = 0
    try:
        for _, elem in ET.iterparse(io.BytesIO(data), events=("end",), parser=parser):
            if elem.tag not in _DBLP_VENUE_CHILD:
                continue
            index += 1
            key = elem.get("key")
            location = f"element {index} <{elem.tag}" + (f" key={key!r}>" if key else ">")
            try:
                records.append(_record_from_element(elem))
            except ValueError as exc:
                warnings.append(ParseWarning(location, str(exc)))
            elem.clear()
    except ET.ParseError as exc:
        line, column = exc.position
        message = str(exc).rsplit(": line", 1)[0]
        raise ParseError(f"malformed XML: {message}", f"line {line}, column {column}") from None
    return records, warnings


def dump_records(records: Iterable[PublicationRecord]) -> str:
    """Serialize records in the canonical line format."""
    return "".join(
        json.dumps(r.to_dict(), ensure_ascii=False, sort_keys=True) + "\n" for r in records
    )


def filter_records(
    records: Iterable[PublicationRecord], roster: Roster, window: TimeWindow | None = None
) -> list[PublicationRecord]:
    """Keep records inside ``window`` with at least one roster author.

    Non-roster co-authors stay in the kept records; they are ignored later
    when the bipartite graph is built. ``window=None`` keeps every year.
    """
    members = roster.members
    return [
        r
        for r in records
        if (window is None or r.year in window) and any(a in members for a in r.authors)
    ]


def _lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, line


def parse_roster(stream: BinaryIO | bytes | str, group_name: str) -> Roster:
    """One researcher per line; blank lines and ``#`` comments are ignored."""
    text = _decode(_read_all(stream))
    return Roster.from_names(group_name, (line for _, line in _lines(text)))


def parse_alias_map(stream: BinaryIO | bytes | str) -> dict[str, str]:
    """Read ``raw<TAB>canonical`` venue aliases."""
    text = _decode(_read_all(stream))
    aliases = {}
    for lineno, line in _lines(text):
        raw, sep, canonical = line.partition("\t")
        if not sep:
            raise ParseError("alias line has no tab separator", f"line {lineno}")
        try:
            aliases[normalize_venue(raw)] = normalize_venue(canonical)
        except InvalidName:
            raise ParseError("alias line has an empty field", f"line {lineno}") from None
    return aliases


def apply_aliases(
    records: Iterable[PublicationRecord], aliases: Mapping[str, str]
) -> list[PublicationRecord]:
    out = []
    for r in records:
        canonical = aliases.get(r.venue)
        if canonical is not None and canonical != r.venue:
            r = PublicationRecord(r.title, r.authors, canonical, r.venue_kind, r.year)
        out.append(r)
    return out
