"""Graded operad structure over the bracketed-word category.

The two-point operad of left-unital multiplications has, in each
positive arity, just the elements l <= t ("l" carries a phantom unit on
the left, "t" does not); arity zero has only l.  Grading bracketed words
by their number of generators gives strict operad maps down to this
operad and on to the terminal one, and the grading map has a left
adjoint H computed here explicitly, together with its counit and the
comparison maps making H colax.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .ordmaps import InputError
from .tamari import Leaf, Node, tamari_bottom, tamari_top
from .fsk import (
    FskMorphism,
    FskObject,
    GENERATOR,
    hom,
    is_fsk_injection,
    object_from_word,
    object_to_word,
)


_ELEMENT_RE = re.compile(r"([lt])(\d+)\Z")


@dataclass(frozen=True)
class LElement:
    """An element l_n or t_n of the left-unital-multiplication operad."""

    arity: int
    kind: str

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise InputError("arity must be a natural number")
        if self.kind not in ("l", "t"):
            raise InputError(f"kind must be 'l' or 't', got {self.kind!r}")
        if self.arity == 0 and self.kind == "t":
            raise InputError("arity 0 admits only the kind 'l'")

    @classmethod
    def from_text(cls, text: str) -> "LElement":
        match = _ELEMENT_RE.match(text.strip())
        if match is None:
            raise InputError(f"expected something like 't3' or 'l0', got {text!r}")
        return cls(int(match.group(2)), match.group(1))

    def to_text(self) -> str:
        return f"{self.kind}{self.arity}"

    def __repr__(self) -> str:
        return f"LElement({self.to_text()})"


L_UNIT = LElement(1, "t")


@lru_cache(maxsize=None)
def _element(arity: int, kind: str) -> LElement:
    return LElement(arity, kind)


def l_leq(x: LElement, y: LElement) -> bool:
    """The order: l <= t within each arity, nothing across arities."""
    return x.arity == y.arity and (x.kind == y.kind or x.kind == "l")


@lru_cache(maxsize=None)
def _substitute(x: LElement, xs: tuple[LElement, ...]) -> LElement:
    arity = sum(y.arity for y in xs)
    kind = "t" if (x.kind == "t" and xs[0].kind == "t") else "l"
    return _element(arity, kind)


def l_substitute(x: LElement, xs: Sequence[LElement]) -> LElement:
    """Operadic substitution: arities add, and the result keeps the bare
    kind t exactly when both x and the leftmost argument do."""
    if len(xs) != x.arity:
        raise InputError(f"{x!r} needs {x.arity} arguments, got {len(xs)}")
    if x.arity == 0:
        return x
    return _substitute(x, tuple(xs))


def l_circ(x: LElement, i: int, y: LElement) -> LElement:
    """Substitution in a single slot (1-based), identities elsewhere."""
    if not 1 <= i <= x.arity:
        raise InputError(f"position {i} out of range for {x!r}")
    args = [L_UNIT] * x.arity
    args[i - 1] = y
    return l_substitute(x, args)


def q_of(obj: FskObject) -> LElement:
    """Collapse a word to its kind: t if the bottom position holds a
    generator, l otherwise; arity is the grade."""
    return LElement(obj.grade, "t" if 0 in obj.u else "l")


def p_of(obj: FskObject) -> int:
    """The grading of a word: its number of generators."""
    return obj.grade


def r_of(x: LElement) -> int:
    """The grading of an operad element: its arity."""
    return x.arity


def s_substitute_objects(g: FskObject, fs: Sequence[FskObject]) -> FskObject:
    """Substitute words for the generators of g, left to right."""
    if len(fs) != g.grade:
        raise InputError(f"{g!r} has grade {g.grade}, got {len(fs)} arguments")
    replacements = iter([object_to_word(f) for f in fs])

    def graft(tree):
        if isinstance(tree, Leaf):
            return next(replacements) if tree.label == "X" else tree
        return Node(graft(tree.left), graft(tree.right))

    return object_from_word(graft(object_to_word(g)))


def s_circ(g: FskObject, i: int, f: FskObject) -> FskObject:
    """Substitute into a single generator slot (1-based)."""
    if not 1 <= i <= g.grade:
        raise InputError(f"position {i} out of range for {g!r}")
    args: list[FskObject] = [GENERATOR] * g.grade
    args[i - 1] = f
    return s_substitute_objects(g, args)


def initial_in_grade(m: int) -> FskObject:
    """The initial object among words of grade m: I X ... X bracketed left."""
    if m < 0:
        raise InputError("grade must be a natural number")
    return FskObject(m + 1, tuple(range(1, m + 1)), tamari_bottom(m + 1))


def terminal_in_grade(m: int) -> FskObject:
    """The terminal object among words of grade m: X ... X I bracketed right."""
    if m < 0:
        raise InputError("grade must be a natural number")
    return FskObject(m + 1, tuple(range(m)), tamari_top(m + 1))


def h_of(x: LElement) -> FskObject:
    """The left adjoint of the grading-with-kind map, on objects.

    t_m goes to the left-bracketed all-generator word; l_m goes to the
    initial object of grade m, which prepends a unit.
    """
    if x.kind == "l":
        return initial_in_grade(x.arity)
    return FskObject(x.arity, tuple(range(x.arity)), tamari_bottom(x.arity))


def counit_at(a: FskObject) -> FskMorphism:
    """The unique morphism from the freely rebuilt word h_of(q_of(a)) to a."""
    morphisms = hom(h_of(q_of(a)), a)
    assert len(morphisms) == 1, f"counit hom-set at {a!r} has {len(morphisms)} elements"
    component = morphisms[0]
    assert is_fsk_injection(component.src, component.dst, component.map)
    return component


def h_of_lambda(n: int) -> FskMorphism:
    """The image under H of the comparison l_n <= t_n."""
    if n < 1:
        raise InputError("the comparison exists in arity >= 1 only")
    morphisms = hom(h_of(LElement(n, "l")), h_of(LElement(n, "t")))
    assert len(morphisms) == 1
    return morphisms[0]


def h_colax(x: LElement, i: int, y: LElement) -> FskMorphism:
    """The colax comparison H(x o_i y) -> H(x) o_i H(y).

    Since the adjunction defining H has identity unit, the comparison is
    the counit at the substituted object; it is unique, so this is also
    the only candidate.
    """
    if not 1 <= i <= x.arity:
        raise InputError(f"position {i} out of range for {x!r}")
    target = s_circ(h_of(x), i, h_of(y))
    composite = l_circ(x, i, y)
    assert q_of(target) == composite
    component = counit_at(target)
    assert component.src == h_of(composite)
    return component
