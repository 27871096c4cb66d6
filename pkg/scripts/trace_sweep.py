"""For the powers of a unit, reduce each fixed-trace curve and report its j-invariant.

Each power ``e^k`` has norm 1 and some trace ``t``; its coordinates give a
rational point on the curve of trace ``t`` and norm 1, which seeds the reduction.
"""

import argparse
from dataclasses import dataclass

from cubicfield.cubic_elements import CubicElement, power, trace
from cubicfield.cubic_forms import BinaryCubicForm
from cubicfield.rational import fmt_q
from cubicfield.weierstrass import ProjectivePoint, ReductionError, build_gamma, is_singular_curve, to_weierstrass


@dataclass
class SweepConfig:
    form: tuple[int, int, int, int] = (1, 1, 2, 1)
    unit: tuple[int, int, int] = (1, -1, 1)
    powers: int = 6


def run(config: SweepConfig) -> None:
    C = BinaryCubicForm(*config.form)
    seed = CubicElement(C, *config.unit)
    for k in range(1, config.powers + 1):
        e = power(seed, k)
        t = trace(e)
        gamma = build_gamma(C, t, 1)
        if is_singular_curve(gamma):
            print(f"k={k}  t={fmt_q(t)}  singular")
            continue
        try:
            red = to_weierstrass(gamma, ProjectivePoint.affine(e.x, e.y))
        except ReductionError as exc:
            print(f"k={k}  t={fmt_q(t)}  no reduction: {exc}")
            continue
        print(f"k={k}  t={fmt_q(t)}  case {red.case}  j={fmt_q(red.curve.j)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--form", type=int, nargs=4, default=list(SweepConfig.form))
    parser.add_argument("--unit", type=int, nargs=3, default=list(SweepConfig.unit))
    parser.add_argument("--powers", type=int, default=SweepConfig.powers)
    args = parser.parse_args()
    run(SweepConfig(tuple(args.form), tuple(args.unit), args.powers))


if __name__ == "__main__":
    main()
