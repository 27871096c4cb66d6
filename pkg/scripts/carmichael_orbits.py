"""Norm-one orbits for the forms (1, 0, 0, -n): how fast the coordinates grow."""

import argparse
from dataclasses import dataclass

from cubicfield.cubic_elements import CubicElement, norm
from cubicfield.diophantine import all_distinct, carmichael_eval, carmichael_form, orbit


@dataclass
class OrbitConfig:
    n_values: tuple[int, ...] = (2, 3, 5, 6, 7, 10)
    count: int = 10
    search: int = 6  # seeds come from a brute-force search in [-search, search]^3


def first_unit(n: int, bound: int) -> tuple[int, int, int] | None:
    best = None
    for u in range(-bound, bound + 1):
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                if (u, x, y) != (1, 0, 0) and carmichael_eval(n, u, x, y) == 1:
                    key = (abs(u) + abs(x) + abs(y), u, x, y)
                    if best is None or key < best:
                        best = key
    return None if best is None else best[1:]


def run(config: OrbitConfig) -> None:
    for n in config.n_values:
        seed = first_unit(n, config.search)
        if seed is None:
            print(f"n={n:3d}  no unit found in the search box")
            continue
        members = orbit(CubicElement(carmichael_form(n), *seed), config.count)
        assert all(norm(e) == 1 for e in members)
        digits = max(len(str(abs(c.numerator))) for c in members[-1].coords)
        print(f"n={n:3d}  seed={seed}  distinct={all_distinct(members)}  digits at power {config.count}: {digits}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=OrbitConfig.count)
    parser.add_argument("--search", type=int, default=OrbitConfig.search)
    parser.add_argument("--n", type=int, nargs="*", default=list(OrbitConfig.n_values))
    args = parser.parse_args()
    run(OrbitConfig(tuple(args.n), args.count, args.search))


if __name__ == "__main__":
    main()
