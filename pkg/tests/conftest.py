import pytest

from surgerygate.knotfile import bundled_knots, knot_by_name
from surgerygate.knots import AlexanderPoly, KnotData, ReducedSummand, VHProfile


@pytest.fixture(scope="session")
def table():
    return bundled_knots()


@pytest.fixture(scope="session")
def unknot(table):
    return knot_by_name(table, "unknot")


@pytest.fixture(scope="session")
def trefoil(table):
    return knot_by_name(table, "trefoil")


@pytest.fixture(scope="session")
def figure8(table):
    return knot_by_name(table, "figure8")


@pytest.fixture(scope="session")
def nine44(table):
    return knot_by_name(table, "9_44")


# Synthetic profiles exercising shapes the bundled knots do not cover:
# a genus-2 positive-clasp tower profile (the (2,5) torus-knot shape), a
# thin V_0 = 0 knot with reduced summands of mixed parity out at |k| = 1,
# and a genus-3 staircase profile (the (2,7) torus-knot shape).


@pytest.fixture(scope="session")
def syn_a():
    return KnotData(
        name="syn_a",
        alexander=AlexanderPoly((1, -1, 1)),
        tau=2,
        vh=VHProfile(genus=2, v_pos=(1, 1, 0)),
    )


@pytest.fixture(scope="session")
def syn_b():
    return KnotData(
        name="syn_b",
        alexander=AlexanderPoly((1,)),
        tau=0,
        vh=VHProfile(genus=1, v_pos=(0, 0)),
        reduced=(
            ReducedSummand(k=0, rank=2, local_gradings=(0, -1)),
            ReducedSummand(k=1, rank=1, local_gradings=(0,)),
            ReducedSummand(k=-1, rank=1, local_gradings=(-1,)),
        ),
    )


@pytest.fixture(scope="session")
def syn_c():
    return KnotData(
        name="syn_c",
        alexander=AlexanderPoly((-1, 1, -1, 1)),
        tau=3,
        vh=VHProfile(genus=3, v_pos=(2, 1, 1, 0)),
    )
