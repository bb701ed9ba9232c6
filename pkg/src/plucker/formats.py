"""Reading and writing the JSON and text file formats."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .hypersimplex import HSCollection
from .sets import Collection, PluckerError, mask_of


class ParseError(PluckerError):
    def __init__(self, message: str):
        super().__init__("parse-error", message)


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc)) from None


def read_json(path: str) -> dict:
    try:
        data = json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object")
    return data


def _strictly_increasing(s) -> bool:
    return all(isinstance(e, int) for e in s) and all(a < b for a, b in zip(s, s[1:]))


def collection_from_json(data: dict) -> Collection:
    try:
        n = int(data["n"])
        sets = data["sets"]
    except (KeyError, TypeError, ValueError):
        raise ParseError("collection JSON needs 'n' and 'sets'") from None
    for s in sets:
        if not isinstance(s, list) or not _strictly_increasing(s):
            raise ParseError(f"set {s!r} must be a strictly increasing list of integers")
    c = Collection.from_sets(n, sets)
    if "m" in data:
        return HSCollection(n, int(data["m"]), c.members)
    return c


def collection_from_text(text: str, n: int | None = None) -> Collection:
    sets = []
    for line in text.splitlines():
        tok = line.strip()
        if not tok or tok.startswith("#"):
            continue
        if tok == "-":
            sets.append([])
        elif tok.isdigit():
            sets.append([int(c) for c in tok])
        else:
            raise ParseError(f"bad set line {tok!r}")
    if n is None:
        n = max((max(s) for s in sets if s), default=0)
    if n > 9:
        raise ParseError("the digit shorthand only covers n <= 9")
    return Collection.from_sets(n, sets)


def load_collection(path: str, n: int | None = None) -> tuple[Collection, dict]:
    text = read_text(path)
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from None
        return collection_from_json(data), data
    return collection_from_text(text, n), {}


def set_arg(text: str) -> int:
    """A set on the command line: digit string, comma list, or '-' for the empty set."""
    if text in ("-", ""):
        return 0
    parts = text.split(",") if "," in text else list(text)
    try:
        return mask_of(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad set {text!r}") from None


def dump(obj) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": "))
