import numpy as np
import pytest

from ramq.identities import even_kernel, odd_kernel
from ramq.polyrat import Polynomial, RationalFunction


@pytest.fixture
def quartic_kernel():
    """1/(x^4+1): two simple poles in the upper half-plane."""
    return RationalFunction(Polynomial((1,)), Polynomial((1, 0, 0, 0, 1)))


@pytest.fixture
def pole_corpus(quartic_kernel):
    """The four functions exercised against the contour oracle."""
    return [even_kernel(0), odd_kernel(0), quartic_kernel, even_kernel(2)]


@pytest.fixture
def rng():
    return np.random.default_rng(20151014)
