#!/usr/bin/env python3
"""Eigenvalues of the q-Euler operator on degree-3 monomials in three
variables, grouped by the partition of the degree.

Homogeneous monomials are eigenfunctions with eigenvalue
[a1]_q + ... + [am]_q, so different partitions of the same degree give
different q-eigenvalues even though all collapse to 3 at q = 1.
"""

from itertools import combinations_with_replacement

from qclifford import CliffordPoly, q_euler, q_bracket


def main():
    m, k = 3, 3
    print(f"{'monomial':<12} {'partition':<12} eigenvalue")
    print("-" * 48)
    for combo in combinations_with_replacement(range(1, m + 1), k):
        alpha = [0] * (m + 1)
        for i in combo:
            alpha[i] += 1
        mono = CliffordPoly.monomial(m, tuple(alpha), 1)
        parts = sorted((a for a in alpha if a), reverse=True)
        eigenvalue = sum((q_bracket(a) for a in alpha), q_bracket(0))
        assert q_euler(mono) == eigenvalue * mono
        at_one = eigenvalue.evaluate(1)
        partition = " + ".join(str(p) for p in parts)
        print(f"{str(mono):<12} {partition:<12} {eigenvalue}   (q=1: {at_one})")


if __name__ == "__main__":
    main()
