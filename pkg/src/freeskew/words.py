"""Text and JSON forms for words, bracketing functions, maps and morphisms.

The word grammar is

    word := "I" | "X" | "(" word " " word ")"

with arbitrary whitespace between tokens; pairs are strictly binary.
"""

from __future__ import annotations

import json
from typing import Any

from .ordmaps import InputError, MonotoneMap
from .tamari import BracketTree, Lbf, Leaf, Node
from .fsk import FskMorphism, FskObject, object_from_word, object_to_word


class WordSyntaxError(InputError):
    """A word failed to parse; offset is the byte position of the error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse(text: str, pos: int) -> tuple[BracketTree, int]:
    pos = _skip_ws(text, pos)
    if pos >= len(text):
        raise WordSyntaxError("unexpected end of input", pos)
    char = text[pos]
    if char in ("I", "X"):
        return Leaf(char), pos + 1
    if char == "(":
        left, pos = _parse(text, pos + 1)
        right, pos = _parse(text, pos)
        pos = _skip_ws(text, pos)
        if pos >= len(text):
            raise WordSyntaxError("unbalanced parenthesis", pos)
        if text[pos] != ")":
            raise WordSyntaxError(f"expected ')', found {text[pos]!r}", pos)
        return Node(left, right), pos + 1
    raise WordSyntaxError(f"expected 'I', 'X' or '(', found {char!r}", pos)


def parse_word(text: str) -> BracketTree:
    """Parse a bracketed word; raises WordSyntaxError with a byte offset."""
    tree, pos = _parse(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise WordSyntaxError(f"trailing input {text[pos]!r}", pos)
    return tree


def format_word(tree: BracketTree) -> str:
    """Canonical minimal-whitespace form; parse_word(format_word(t)) == t."""
    if isinstance(tree, Leaf):
        return tree.label
    return f"({format_word(tree.left)} {format_word(tree.right)})"


def parse_object(text: str) -> FskObject:
    return object_from_word(parse_word(text))


def format_object(obj: FskObject) -> str:
    return format_word(object_to_word(obj))


def parse_values(text: str) -> tuple[int, ...]:
    """A comma-separated list of naturals, e.g. "0,1,0,3"."""
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected comma-separated naturals, got {text!r}") from exc
    return values


def parse_lbf(text: str) -> Lbf:
    return Lbf(parse_values(text))


def format_values(values) -> str:
    return ",".join(str(v) for v in values)


def parse_map(text: str, cod: int) -> MonotoneMap:
    """A map from its comma-separated images; dom is inferred, cod given."""
    images = parse_values(text)
    return MonotoneMap(len(images), cod, images)


def format_morphism(f: FskMorphism) -> str:
    """Text form: src-word "->" dst-word ";" images."""
    return (f"{format_object(f.src)} -> {format_object(f.dst)} ; "
            f"{format_values(f.map.images)}")


def parse_morphism(text: str) -> FskMorphism:
    head, sep, images = text.rpartition(";")
    if not sep:
        raise InputError(f"expected 'src -> dst ; images', got {text!r}")
    src_text, sep, dst_text = head.partition("->")
    if not sep:
        raise InputError(f"expected 'src -> dst ; images', got {text!r}")
    src = parse_object(src_text.strip())
    dst = parse_object(dst_text.strip())
    return FskMorphism(src, dst, parse_map(images.strip(), dst.m))


def object_to_json(obj: FskObject) -> dict[str, Any]:
    return {"m": obj.m, "u": list(obj.u), "s": list(obj.s.values)}


def object_from_json(data: dict[str, Any]) -> FskObject:
    return FskObject(data["m"], tuple(data["u"]), Lbf(tuple(data["s"])))


def morphism_to_json(f: FskMorphism) -> dict[str, Any]:
    return {"src": object_to_json(f.src),
            "dst": object_to_json(f.dst),
            "map": list(f.map.images)}


def morphism_from_json(data: dict[str, Any]) -> FskMorphism:
    src = object_from_json(data["src"])
    dst = object_from_json(data["dst"])
    return FskMorphism(src, dst,
                       MonotoneMap(src.m, dst.m, tuple(data["map"])))


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))
