"""stablelab: exact-arithmetic certificates for the stable model of X0(125).

The package recomputes, in exact rational / p-adic-valuation arithmetic,
every explicit computation behind the stable model of X0(125) over C_5, and
the companion empirical suites: class-polynomial placement of CM j-invariants
(p = 5, 7, 13), conjugation orbits in the finite algebra F_p[i, eps_j, eps_k],
and genus bookkeeping for X0(p^3).
"""

__version__ = "0.1.0"
