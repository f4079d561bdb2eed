"""Finite non-empty ordinals and the order-preserving maps between them.

The ordinal of size m stands for {0, ..., m-1}; a map is stored as the
dense tuple of its images.  Everything here is immutable and pure, so
values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class NoAdjointError(InputError):
    """The map has no right adjoint (or no second right adjoint)."""


@dataclass(frozen=True)
class MonotoneMap:
    """An order-preserving function between finite non-empty ordinals."""

    dom: int
    cod: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if self.dom < 1 or self.cod < 1:
            raise InputError("ordinals must be non-empty")
        if len(self.images) != self.dom:
            raise InputError(
                f"expected {self.dom} images, got {len(self.images)}")
        prev = 0
        for i, value in enumerate(self.images):
            if not 0 <= value < self.cod:
                raise InputError(f"image {value} outside ord {self.cod}")
            if value < prev:
                raise InputError(f"images not weakly increasing at index {i}")
            prev = value
        object.__setattr__(self, "_hash", hash((self.cod, self.images)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def identity(cls, n: int) -> "MonotoneMap":
        return cls(n, n, tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    @property
    def is_identity(self) -> bool:
        return self.dom == self.cod and self.images == tuple(range(self.dom))

    @property
    def is_surjective(self) -> bool:
        # weakly increasing, so surjectivity is: hits 0, hits cod-1, no gaps
        return len(set(self.images)) == self.cod

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.dom

    @property
    def preserves_bottom(self) -> bool:
        return self.images[0] == 0

    def __repr__(self) -> str:
        imgs = ",".join(str(v) for v in self.images)
        return f"MonotoneMap({self.dom}->{self.cod}; {imgs})"


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """The composite g after f."""
    if f.cod != g.dom:
        raise InputError(f"cannot compose: cod {f.cod} != dom {g.dom}")
    return MonotoneMap(f.dom, g.cod, tuple(g.images[v] for v in f.images))


@lru_cache(maxsize=None)
def _radj(images: tuple[int, ...], cod: int) -> tuple[int, ...]:
    out = []
    i = len(images) - 1
    for j in range(cod - 1, -1, -1):
        while images[i] > j:
            i -= 1
        out.append(i)
    out.reverse()
    return tuple(out)


def right_adjoint(phi: MonotoneMap) -> MonotoneMap:
    """The right adjoint j -> max{i : phi(i) <= j}; needs phi(0) = 0."""
    if not phi.preserves_bottom:
        raise NoAdjointError(f"{phi!r} does not preserve bottom")
    return MonotoneMap(phi.cod, phi.dom, _radj(phi.images, phi.cod))


def second_right_adjoint(phi: MonotoneMap) -> MonotoneMap:
    """The right adjoint of right_adjoint(phi).

    Computed by cases on whether phi separates i from i+1, reading the
    virtual top value phi(dom) := cod.  Exists iff phi(0) = 0 and phi
    sends no positive element to 0.
    """
    if not phi.preserves_bottom:
        raise NoAdjointError(f"{phi!r} does not preserve bottom")
    if phi.dom >= 2 and phi.images[1] == 0:
        raise NoAdjointError(f"right adjoint of {phi!r} is not bottom-preserving")
    extended = phi.images + (phi.cod,)
    values = tuple(
        extended[i + 1] - 1 if extended[i] < extended[i + 1] else extended[i] - 1
        for i in range(phi.dom))
    return MonotoneMap(phi.dom, phi.cod, values)


def epi_mono_factorize(phi: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Split phi into a surjection onto its image followed by an injection."""
    distinct = sorted(set(phi.images))
    rank = {value: k for k, value in enumerate(distinct)}
    surj = MonotoneMap(phi.dom, len(distinct),
                       tuple(rank[v] for v in phi.images))
    inj = MonotoneMap(len(distinct), phi.cod, tuple(distinct))
    return surj, inj


def ordinal_sum(phi: MonotoneMap, psi: MonotoneMap) -> MonotoneMap:
    """Block sum: phi on the first block, psi shifted by phi.cod on the second."""
    images = phi.images + tuple(v + phi.cod for v in psi.images)
    return MonotoneMap(phi.dom + psi.dom, phi.cod + psi.cod, images)
