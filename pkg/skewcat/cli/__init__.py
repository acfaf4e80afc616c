"""
Command-line interface for skewcat.

Subcommands, one module each under cli/commands:
- check     : category, skew-moncat, skew-bicat, monad and profunctor checkers
- mw        : mw-monad check, to-monad, kleisli, enumerate, algebra
- warping   : skew warping check, kleisli, trace, redundancy
- algebra   : warping algebra check and redundancy
- prof      : profunctor composition, hom fragments, u and monoids
- normalize : normalization of a skew monoidal category
- theorem2  : comparison of K(B, B) with the normalization of K(A, B)
- harness   : seeded perturbation, redundancy and Kleisli runs
- report    : tag inventory and stored report rendering
- fixtures  : the embedded fixture library
"""
