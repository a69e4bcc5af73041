"""Shared hypothesis strategies and seeded generators."""

from fractions import Fraction

from hypothesis import strategies as st

from symalg import GroupAlgebraElement, all_permutations


@st.composite
def elements(draw, n, max_terms=None):
    """Random elements of Q[S_n] with small rational coefficients."""
    perms = all_permutations(n)
    terms = draw(
        st.lists(
            st.tuples(
                st.sampled_from(perms),
                st.fractions(min_value=-5, max_value=5, max_denominator=6),
            ),
            max_size=max_terms or len(perms),
        )
    )
    return GroupAlgebraElement(n, terms)


def random_element(rng, n, density=1.0):
    """Seeded random element: integer numerators in [-9, 9] over denominators 1..4."""
    terms = []
    for p in all_permutations(n):
        if rng.random() <= density:
            terms.append((p, Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))))
    return GroupAlgebraElement(n, terms)
