"""
Two-body anyons in one dimension
--------------------------------
Exchange statistics, zero-range scattering, bound states, density matrices and
momentum-distribution tails for bosonic and fermionic anyons, in free space and
in a harmonic trap, with an independent numerical pipeline for every closed form.
"""

__version__ = "0.1.0"
