"""Walk the discriminant -23 example end to end and print every intermediate value."""

import argparse

from cubicfield.cubic_forms import BinaryCubicForm, discriminant, hessian, jacobian
from cubicfield.rational import fmt_q
from cubicfield.weierstrass import ProjectivePoint, build_gamma, is_singular_curve, to_weierstrass


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--form", type=int, nargs=4, default=[1, 1, 2, 1])
    parser.add_argument("--t", default="0")
    parser.add_argument("--n", default="1")
    parser.add_argument("--point", nargs=3, default=["-1", "1", "1"])
    args = parser.parse_args()

    C = BinaryCubicForm(*args.form)
    print(f"form       {C.coeffs}")
    print(f"disc       {discriminant(C)}")
    print(f"hessian    {hessian(C).coeffs}")
    print(f"jacobian   {jacobian(C).coeffs}")
    gamma = build_gamma(C, args.t, args.n)
    print(f"singular   {is_singular_curve(gamma)}")
    red = to_weierstrass(gamma, ProjectivePoint(*(int(v) for v in args.point)))
    print(f"case       {red.case}")
    print(f"P Q R      {red.P.coords} {red.Q.coords} {red.R.coords if red.R else None}")
    for L in red.tangents:
        print(f"tangent    {L.coeffs}")
    print("M")
    for row in red.M:
        print("  " + " ".join(f"{fmt_q(v):>7}" for v in row))
    W = red.curve
    print(f"a-invariants {[fmt_q(a) for a in W.coeffs]}")
    print(f"c4 {fmt_q(W.c4)}  c6 {fmt_q(W.c6)}  disc {fmt_q(W.discriminant)}  j {fmt_q(W.j)}")


if __name__ == "__main__":
    main()
