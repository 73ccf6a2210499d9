"""symplocal: exact verification toolkit for symplectic local models.

Modules
-------
weylc       extended affine Weyl group of type C (signed permutations,
            translations, length, reduced words, Bruhat order)
alcove      lattice-chain alcoves: permissible, admissible and extreme sets
polyring    polynomials over F_p, Buchberger, Hilbert data, mod-p ranks
localmodel  chart ideals of the local models and their fibre analyses
tableau     de Concini's doubly symplectic standard tableaux
cli         command-line verification jobs
"""

__version__ = "0.1.0"
