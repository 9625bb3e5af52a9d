"""Shared randomized-input generators for the test suite.

All randomized suites use SEED so failures reproduce exactly.
"""

import random

from qrwp import AlgebraElement, LaurentPoly, NormalMonomial

SEED = 31415926


def make_rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)


def random_laurent(rng: random.Random, max_exp: int = 8, max_coeff: int = 9,
                   max_terms: int = 3) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(-max_exp, max_exp)] = rng.randint(-max_coeff, max_coeff)
    return LaurentPoly(terms)


def random_nonzero_laurent(rng: random.Random, **kw) -> LaurentPoly:
    while True:
        p = random_laurent(rng, **kw)
        if not p.is_zero():
            return p


def random_monomial(rng: random.Random, m_max: int = 3, p_max: int = 3,
                    r_max: int = 3) -> NormalMonomial:
    return NormalMonomial(rng.randint(-m_max, m_max), rng.randint(0, p_max),
                          rng.randint(-r_max, r_max))


def random_basis_element(rng: random.Random, **kw) -> AlgebraElement:
    mono = random_monomial(rng, **kw)
    return AlgebraElement.monomial(mono.m, mono.p, mono.r)


def random_element(rng: random.Random, max_terms: int = 4) -> AlgebraElement:
    out = AlgebraElement.zero()
    for _ in range(rng.randint(1, max_terms)):
        mono = random_monomial(rng)
        out = out + AlgebraElement({mono: random_nonzero_laurent(rng, max_exp=4)})
    return out
