"""Randomized structural checks of the Weyl algebra.

Used by the test-suite and by ``ncwell verify``; deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .scalar import ScalarCoefficient, sym
from .weyl import AUX, NC, AlgebraSpec, WeylElement, commutator, formal_adjoint, normal_order

_SYMBOLS = ("hbar", "theta", "eta", "m", "k")


def random_coefficient(rng: random.Random) -> ScalarCoefficient:
    re = ScalarCoefficient.number(rng.randint(-4, 4))
    im = ScalarCoefficient.number(rng.randint(-3, 3))
    c = re + ScalarCoefficient.number(0, 1) * im
    if rng.random() < 0.4:
        c = c * sym(rng.choice(_SYMBOLS))
    if rng.random() < 0.2:
        c = c / (rng.randint(1, 5))
    return c if c else ScalarCoefficient.number(1)


def random_word(rng: random.Random, max_degree: int = 3) -> tuple[int, ...]:
    return tuple(rng.randrange(4) for _ in range(rng.randint(0, max_degree)))


def random_element(
    algebra: AlgebraSpec, rng: random.Random, max_degree: int = 3, max_terms: int = 3
) -> WeylElement:
    """Normal-ordered sum of up to ``max_terms`` random words (unordered on input)."""
    words = [(random_word(rng, max_degree), random_coefficient(rng)) for _ in range(rng.randint(1, max_terms))]
    return normal_order(algebra, words)


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.instances > 0 and self.failures == 0

    def record(self, ok: bool, detail: str) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 3:
                self.examples.append(detail)


def _product(algebra: AlgebraSpec, word) -> WeylElement:
    e = algebra.one()
    for g in word:
        e = e * algebra.gen(g)
    return e


def run_property_suite(n: int = 200, seed: int = 0, algebras=(NC, AUX)) -> dict:
    """Check Jacobi, associativity, adjoint involution and normal-order idempotence.

    ``n`` instances per property, split over ``algebras``.
    """
    rng = random.Random(seed)
    checks = {
        name: PropertyResult(name)
        for name in ("jacobi", "associativity", "adjoint_involution", "normal_order_idempotence",
                     "word_consistency", "antisymmetry")
    }
    for i in range(n):
        alg = algebras[i % len(algebras)]
        a, b, c = (random_element(alg, rng) for _ in range(3))
        jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
        checks["jacobi"].record(jac.is_zero(), f"{a} | {b} | {c}")
        checks["associativity"].record((a * b) * c == a * (b * c), f"{a} | {b} | {c}")
        checks["adjoint_involution"].record(formal_adjoint(formal_adjoint(a)) == a, str(a))
        checks["normal_order_idempotence"].record(normal_order(alg, a.words()) == a, str(a))
        w = random_word(rng, 4)
        checks["word_consistency"].record(normal_order(alg, [(w, 1)]) == _product(alg, w), str(w))
        checks["antisymmetry"].record(commutator(a, b) == -commutator(b, a), f"{a} | {b}")
    return {
        "seed": seed,
        "instances_per_property": n,
        "all_passed": all(r.passed for r in checks.values()),
        "properties": {
            name: {"instances": r.instances, "failures": r.failures, "passed": r.passed, "examples": r.examples}
            for name, r in checks.items()
        },
    }
