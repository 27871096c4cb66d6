"""Seeded randomized sweep over the core identities."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg
from .cubic_elements import CubicElement, factor_check, multiply, norm, to_matrix, trace
from .cubic_forms import BinaryCubicForm, syzygy_check
from .diophantine import PellCubeInstance, surface_eval


@dataclass
class SelfCheckConfig:
    trials: int = 200
    seed: int = 0
    coeff_range: int = 20
    coord_range: int = 50


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, witness) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 3:
                self.examples.append(witness)


def random_form(rng: random.Random, bound: int) -> BinaryCubicForm:
    return BinaryCubicForm(*(rng.randint(-bound, bound) for _ in range(4)))


def random_element(rng: random.Random, form: BinaryCubicForm, bound: int) -> CubicElement:
    return CubicElement(form, *(rng.randint(-bound, bound) for _ in range(3)))


def run_selfcheck(config: SelfCheckConfig) -> list[SuiteResult]:
    rng = random.Random(config.seed)
    suites = {name: SuiteResult(name) for name in
              ("syzygy", "commutativity", "det_multiplicativity", "trace_norm_surface", "factor_check")}
    for _ in range(config.trials):
        form = random_form(rng, config.coeff_range)
        e1 = random_element(rng, form, config.coord_range)
        e2 = random_element(rng, form, config.coord_range)
        witness = (form.coeffs, e1.coords, e2.coords)
        suites["syzygy"].record(syzygy_check(form), form.coeffs)
        p12, p21 = multiply(e1, e2), multiply(e2, e1)
        suites["commutativity"].record(
            p12 == p21 and to_matrix(p12) == linalg.matmul(to_matrix(e1), to_matrix(e2)), witness
        )
        suites["det_multiplicativity"].record(norm(p12) == norm(e1) * norm(e2), witness)
        inst = PellCubeInstance(form, trace(e1), norm(e1))
        suites["trace_norm_surface"].record(surface_eval(inst, e1.x, e1.y) == 0, witness)
        suites["factor_check"].record(factor_check(e1, e2), witness)
    return list(suites.values())


def report(results: list[SuiteResult], config: SelfCheckConfig) -> dict:
    return {
        "seed": config.seed,
        "trials": config.trials,
        "ok": all(r.failures == 0 for r in results),
        "suites": {
            r.name: {"trials": r.trials, "failures": r.failures, "examples": [str(w) for w in r.examples]}
            for r in results
        },
    }
