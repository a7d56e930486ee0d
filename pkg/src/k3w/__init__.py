"""Exact, machine-checked combinatorics of the 112 rational curves on the
supersingular K3 surface with Artin invariant 1 in characteristic 3.

Three independent models of the same 112-vertex configuration: roots of the
Leech-type lattice II_{1,25}, lines on the Fermat quartic over GF(9), and
rational curves on the Kummer surface of a product of supersingular elliptic
curves.
"""

__version__ = "0.1.0"
