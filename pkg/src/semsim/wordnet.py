"""Parsers for the WordNet 3.0 noun database files and toy edge lists.

Only ``data.noun`` and ``index.noun`` are read.  Synset ids are formed as
``<offset>-n`` so other parts of speech could be added without id
collisions.  Plain (``@``) and instance (``@i``) hypernym pointers are
merged into one parent relation; hyponym pointers (``~``/``~i``) are used
only to cross-check pointer symmetry.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from .errors import DanglingPointer, MalformedLine, MissingFile
from .taxonomy import RawGraph, SynsetId

log = logging.getLogger(__name__)

HYPERNYM_SYMBOLS = ("@", "@i")
HYPONYM_SYMBOLS = ("~", "~i")

WORDNET_DIR_ENV = "SEMSIM_WORDNET_DIR"


@dataclass(frozen=True)
class RawSynsetRecord:
    """One parsed line of ``data.noun``."""

    offset: str
    lemmas: tuple[str, ...]
    pointers: tuple[tuple[str, str, str], ...]  # (symbol, target_offset, target_pos)


@dataclass(frozen=True)
class WordIndexEntry:
    """One parsed line of ``index.noun``: a lemma and its senses in order."""

    lemma: str
    sense_offsets: tuple[str, ...]


def synset_id(offset: str) -> SynsetId:
    return offset + "-n"


def parse_wordnet(dir_path) -> tuple[RawGraph, dict[str, tuple[SynsetId, ...]]]:
    """Parse ``data.noun`` and ``index.noun`` into a raw graph and word index.

    The license header (lines starting with two spaces) is skipped.  Every
    synset line must start at the byte offset its own offset field claims,
    which guards against truncated or re-encoded copies of the database.
    """
    data_path = os.path.join(dir_path, "data.noun")
    index_path = os.path.join(dir_path, "index.noun")
    for p in (data_path, index_path):
        if not os.path.isfile(p):
            raise MissingFile(f"required WordNet file not found: {p}")

    records = _parse_data_noun(data_path)
    known = set(records)

    parents: dict[SynsetId, list[SynsetId]] = {}
    instance_ids: set[SynsetId] = set()
    lemmas: dict[SynsetId, tuple[str, ...]] = {}
    asymmetries = 0
    for offset, rec in records.items():
        sid = synset_id(offset)
        ps: list[SynsetId] = []
        plain_parent = False
        instance_parent = False
        for symbol, target, pos in rec.pointers:
            if pos != "n":
                continue
            if symbol in HYPERNYM_SYMBOLS or symbol in HYPONYM_SYMBOLS:
                if target not in known:
                    raise DanglingPointer(sid, symbol, target)
            if symbol == "@":
                ps.append(synset_id(target))
                plain_parent = True
            elif symbol == "@i":
                ps.append(synset_id(target))
                instance_parent = True
            elif symbol in HYPONYM_SYMBOLS:
                reverse = "@" if symbol == "~" else "@i"
                back = records[target].pointers
                if (reverse, offset, "n") not in back:
                    asymmetries += 1
                    log.warning("hyponym pointer %s %s -> %s lacks a reverse %s",
                                symbol, offset, target, reverse)
        parents[sid] = ps
        lemmas[sid] = rec.lemmas
        if instance_parent and not plain_parent:
            instance_ids.add(sid)
    if asymmetries:
        log.warning("%d asymmetric hyponym pointers in %s", asymmetries, data_path)

    word_index: dict[str, tuple[SynsetId, ...]] = {}
    for entry in _parse_index_noun(index_path, known):
        word_index[entry.lemma] = tuple(synset_id(o) for o in entry.sense_offsets)

    raw = RawGraph(parents=parents, lemmas=lemmas, instance_ids=frozenset(instance_ids))
    return raw, word_index


def _parse_data_noun(path) -> dict[str, RawSynsetRecord]:
    records: dict[str, RawSynsetRecord] = {}
    byte_pos = 0
    with open(path, "rb") as fh:
        for line_no, raw_line in enumerate(fh, start=1):
            line_start = byte_pos
            byte_pos += len(raw_line)
            if raw_line.startswith(b"  "):  # license header
                continue
            line = raw_line.decode("utf-8").rstrip("\n")
            if not line:
                continue
            fields = line.split(" ")
            try:
                offset = fields[0]
                if len(offset) != 8 or not offset.isdigit():
                    raise ValueError(f"bad offset field {offset!r}")
                if int(offset) != line_start:
                    raise ValueError(
                        f"offset {offset} does not match line byte position {line_start}")
                w_cnt = int(fields[3], 16)
                pos = 4
                lemmas = []
                for _ in range(w_cnt):
                    lemmas.append(fields[pos])
                    pos += 2  # skip lex_id
                p_cnt = int(fields[pos])
                pos += 1
                pointers = []
                for _ in range(p_cnt):
                    symbol, target, target_pos, _src_tgt = fields[pos:pos + 4]
                    pointers.append((symbol, target, target_pos))
                    pos += 4
            except (IndexError, ValueError) as exc:
                raise MalformedLine(path, line_no, str(exc), byte_offset=line_start) from None
            records[offset] = RawSynsetRecord(offset, tuple(lemmas), tuple(pointers))
    if not records:
        raise MalformedLine(path, 0, "no synset lines found")
    return records


def _parse_index_noun(path, known_offsets) -> list[WordIndexEntry]:
    entries: list[WordIndexEntry] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if line.startswith("  "):
                continue
            fields = line.split()
            if not fields:
                continue
            try:
                lemma = fields[0]
                synset_cnt = int(fields[2])
                p_cnt = int(fields[3])
                offsets = fields[6 + p_cnt:]
                if len(offsets) != synset_cnt:
                    raise ValueError(
                        f"expected {synset_cnt} sense offsets, found {len(offsets)}")
            except (IndexError, ValueError) as exc:
                raise MalformedLine(path, line_no, str(exc)) from None
            for o in offsets:
                if o not in known_offsets:
                    raise DanglingPointer(lemma, "index", o)
            entries.append(WordIndexEntry(lemma, tuple(offsets)))
    return entries


def parse_edgelist(path) -> RawGraph:
    """Parse a toy ontology in ``child<TAB>parent`` edge-list form.

    Lines starting with ``#`` are comments; an optional ``!root <label>``
    line pins the root node.  Duplicate edges are dropped with a warning.
    """
    if not os.path.isfile(path):
        raise MissingFile(f"edge list not found: {path}")
    parents: dict[SynsetId, list[SynsetId]] = {}
    pinned_root = None
    seen_edges: set[tuple[str, str]] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            if line.startswith("!root"):
                fields = line.split()
                if len(fields) != 2:
                    raise MalformedLine(path, line_no, "expected '!root <label>'")
                pinned_root = fields[1]
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0].strip() or not fields[1].strip():
                raise MalformedLine(path, line_no,
                                    "expected 'child<TAB>parent', got " + repr(line))
            child, parent = fields[0].strip(), fields[1].strip()
            if (child, parent) in seen_edges:
                log.warning("%s:%d: duplicate edge %s -> %s dropped",
                            path, line_no, child, parent)
                continue
            seen_edges.add((child, parent))
            parents.setdefault(parent, [])
            parents.setdefault(child, []).append(parent)
    return RawGraph(parents=parents, pinned_root=pinned_root)


def serialize_edgelist(raw: RawGraph) -> str:
    """Render a raw graph back into the edge-list format (round-trip aid)."""
    lines = []
    if raw.pinned_root is not None:
        lines.append(f"!root {raw.pinned_root}")
    for child in sorted(raw.parents):
        for parent in sorted(raw.parents[child]):
            lines.append(f"{child}\t{parent}")
    return "\n".join(lines) + "\n"


def senses(index: dict[str, tuple[SynsetId, ...]], word: str) -> list[SynsetId]:
    """All noun senses of a word, in index order; [] when the word is absent.

    Matching is case-insensitive and maps spaces to underscores, so
    "cell phone" finds the senses of the lemma "cell_phone".
    """
    return list(index.get(word.lower().replace(" ", "_"), ()))


def default_wordnet_dir() -> str | None:
    """Directory from the SEMSIM_WORDNET_DIR environment variable, if set."""
    value = os.environ.get(WORDNET_DIR_ENV, "").strip()
    return value or None
