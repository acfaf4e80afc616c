"""Hypothesis strategies and base categories shared by the test modules."""

from itertools import product

from hypothesis import strategies as st

from skewcat.core.fincat import (chain_category, cyclic_group_category, monoid_category,
                                 preorder_category, terminal_category)

BASE_CATEGORIES = {
    "1": terminal_category,
    "Ch2": lambda: chain_category(2),
    "Ch3": lambda: chain_category(3),
    "Z2": lambda: cyclic_group_category(2),
    "Z3": lambda: cyclic_group_category(3),
}


def transitive_closure(pairs, objects):
    closed = set(pairs) | {(x, x) for x in objects}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(closed), repeat=2):
            if b == c and (a, d) not in closed:
                closed.add((a, d))
                changed = True
    return closed


@st.composite
def preorders(draw, max_objects=4):
    """Random finite preorders as categories."""
    n = draw(st.integers(1, max_objects))
    objects = [f"p{i}" for i in range(n)]
    pairs = draw(st.sets(st.tuples(st.sampled_from(objects), st.sampled_from(objects))))
    leq = transitive_closure(pairs, objects)
    return preorder_category(objects, lambda x, y: (x, y) in leq, name="R")


@st.composite
def magma_tables(draw, max_elements=3):
    """One-object categories from random operation tables; often not categories."""
    n = draw(st.integers(1, max_elements))
    elements = [f"m{i}" for i in range(n)]
    table = {(g, f): draw(st.sampled_from(elements)) for g in elements for f in elements}
    return monoid_category(elements, lambda g, f: table[(g, f)], elements[0], name="Mag")
