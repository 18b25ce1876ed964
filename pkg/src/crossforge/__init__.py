"""crossforge: a verification lab for cylindrical drawings and crossing-number
bounds of the Kronecker products K_m x P_n and K_m x C_n.

Everything is exact: counts are integers, bounds are fractions, geometry lives
on an integer lattice.  Closed forms are never trusted; each one is checked
against an independent counting oracle and disagreements become data.
"""

__version__ = "0.1.0"
