import pytest

from polybrx.builders import build_context
from polybrx.extension import BrxContext
from polybrx.monoid import FiniteMonoid, check_monoid, theta_one
from polybrx.parsing import ElementParser
from polybrx.words import Alphabet

# {1, a, z} with aa = z and z absorbing: not regular, idempotents 1 and z commute
NILPOTENT_TABLE = [[0, 1, 2], [1, 2, 2], [2, 2, 2]]


def make_ctx(monoid: str, theta: str, k: int):
    return build_context({"monoid": monoid, "theta": theta, "k": k})


@pytest.fixture
def c2_id():
    return make_ctx("C2", "id", 2)


@pytest.fixture
def c2_one():
    return make_ctx("C2", "one", 2)


@pytest.fixture
def c2_id_k1():
    return make_ctx("C2", "id", 1)


@pytest.fixture
def trivial_k2():
    return make_ctx("trivial", "one", 2)


@pytest.fixture
def chain_one():
    return make_ctx("chain2", "one", 2)


@pytest.fixture
def lz2_one():
    return make_ctx("lz2", "one", 2)


@pytest.fixture
def i2_one():
    return make_ctx("I2", "one", 2)


@pytest.fixture
def n3_one():
    monoid = FiniteMonoid(NILPOTENT_TABLE, 0, name="N3", names=["1", "a", "z"])
    check_monoid(monoid)
    return BrxContext(monoid, theta_one(monoid), Alphabet(2))


@pytest.fixture
def parse():
    """ parse(ctx, text) -> element """

    def _parse(ctx, text):
        return ElementParser(ctx).parse_elem(text)

    return _parse
