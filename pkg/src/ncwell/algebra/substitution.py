"""Affine substitutions of generators, applied to normal-ordered elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..errors import AlgebraMismatchError, StructuralError
from .weyl import GENERATORS, AlgebraSpec, WeylElement, commutator


@dataclass(frozen=True)
class Substitution:
    """Replace each generator of ``source`` by an element of ``target``.

    Images may contain a constant part, so momentum shifts are covered
    too.  A stored monomial ``x**a y**b px**c py**d`` is sent to the
    ordered product of image powers, multiplied in ``target``.
    """

    source: AlgebraSpec
    target: AlgebraSpec
    images: tuple  # four WeylElements in generator order

    @classmethod
    def from_mapping(cls, source, target, images: Mapping) -> "Substitution":
        ordered = []
        for g in GENERATORS:
            img = images.get(g, target.gen(g))
            if img.algebra != target:
                raise AlgebraMismatchError(f"image of {g} is not in the target algebra")
            ordered.append(img)
        return cls(source, target, tuple(ordered))

    def image(self, g: str) -> WeylElement:
        return self.images[GENERATORS.index(g)]

    def accepts(self, algebra: AlgebraSpec) -> bool:
        return algebra == self.source

    def __call__(self, e: WeylElement, *, check: bool = True) -> WeylElement:
        if check and not self.accepts(e.algebra):
            raise AlgebraMismatchError(
                f"element algebra {e.algebra.name or '?'} is not the source of this map",
                "apply_map",
            )
        powers: dict[tuple[int, int], WeylElement] = {}

        def power(i, n):
            key = (i, n)
            if key not in powers:
                powers[key] = self.target.one() if n == 0 else power(i, n - 1) * self.images[i]
            return powers[key]

        out = self.target.zero()
        for mono, c in e.terms.items():
            prod = self.target.scalar(c)
            for i, n in enumerate(mono):
                if n:
                    prod = prod * power(i, n)
            out = out + prod
        return out

    def then(self, other: "Substitution") -> "Substitution":
        """Composite map: first ``self``, then ``other``."""
        if self.target != other.source:
            raise AlgebraMismatchError("cannot compose: target/source algebras differ")
        return Substitution(
            self.source,
            other.target,
            tuple(other(img) for img in self.images),
        )

    def image_brackets(self) -> dict[tuple[str, str], WeylElement]:
        """Commutators of the images, for every ordered generator pair i < j."""
        out = {}
        for i in range(4):
            for j in range(i + 1, 4):
                out[(GENERATORS[i], GENERATORS[j])] = commutator(self.images[i], self.images[j])
        return out

    def induced_algebra(self, name: str = "") -> AlgebraSpec:
        """Algebra in which this substitution is an exact homomorphism.

        Its brackets are the commutators of the images, which must be
        scalars.
        """
        brackets = {}
        for pair, value in self.image_brackets().items():
            if not value.is_scalar():
                raise StructuralError(f"image bracket {pair} is not central: {value}")
            brackets[pair] = value.scalar_part()
        return AlgebraSpec.from_brackets(
            brackets, name=name or f"induced({self.source.name})", kind=self.source.kind,
            labels=self.source.labels,
        )
