import pytest

from rankertl import Monomial, oracle


@pytest.fixture(scope="session")
def corpus_ab():
    return oracle.standard_corpus("ab")


@pytest.fixture(scope="session")
def corpus_abc():
    return oracle.standard_corpus("abc")


@pytest.fixture(scope="session")
def chain_monomial_abc():
    # first a before first b before first c, as the unambiguous block chain
    return Monomial(
        ((frozenset(), "a"), (frozenset("a"), "b"), (frozenset("ab"), "c")),
        frozenset("abc"),
    )
