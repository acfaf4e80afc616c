"""
Structure modules.

- skewstruct : skew monoidal categories and skew bicategories
- mwmonads   : monads and their no-iteration extension form
- warpings   : skew warpings, their algebras and Kleisli bicategories
- profhom    : finite profunctors and hom skew monoidal categories
- normalize  : the normalization of a skew monoidal category
- harness    : seeded perturbation, redundancy and Kleisli runs
- fixtures   : named structures for tests and the command line
"""
