"""cslie: exact-arithmetic toolkit for complex symplectic Lie algebras.

Everything is computed over Q with arbitrary-precision rationals; there is
no floating point anywhere in the core (decimal strings appear only in
display fields).
"""

__version__ = "0.1.0"
