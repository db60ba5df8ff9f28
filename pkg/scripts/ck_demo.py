#!/usr/bin/env python3
"""Cauchy-Kovalevskaya extension demo.

Extends coordinates and quadratic monomials from R^m to R^(m+1),
certifies monogenicity with the extended Dirac operator, and exhibits the
failure of multiplicativity: the extension of x_i^2 differs from the
square of the extension of x_i by (1 - q) x0 x_i conj(e0) e_i, which
vanishes only at q = 1.
"""

from qclifford import ck_extend, extended_dirac, parse_poly, restrict_x0


def show(text, m):
    f = parse_poly(text, m)
    F = ck_extend(f)
    print(f"f  = {f}")
    print(f"f* = {F}")
    print(f"   extended Dirac annihilates f*: {extended_dirac(F).is_zero()}")
    print(f"   restricts back to f at x0 = 0: {restrict_x0(F) == f}")
    print()


def main():
    show("x1", 2)
    show("x1*x2", 3)
    show("x1^2", 2)

    f1 = ck_extend(parse_poly("x1", 2))
    f11 = ck_extend(parse_poly("x1^2", 2))
    diff = f11 - f1 * f1
    print("extension of a product is not the product of extensions:")
    print(f"  (x1^2)* - ((x1)*)^2 = {diff}")
    values = [c for mv in diff.terms.values() for c in mv.terms.values()]
    print(f"  vanishes at q = 1: {all(c.evaluate(1) == 0 for c in values)}")
    print(f"  nonzero at q = 2:  {any(c.evaluate(2) != 0 for c in values)}")


if __name__ == "__main__":
    main()
