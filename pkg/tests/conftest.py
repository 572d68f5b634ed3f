"""Shared fixtures: a handful of small instances reused across the suite."""

import pytest

import hornkeys as hk


@pytest.fixture(scope="session")
def intro_cnf():
    # a->b, b->a, ac->d, ac->e over {a..e}; minimal keys are {a,c} and {b,c}.
    return hk.horn_cnf(
        5,
        [({0}, 1), ({1}, 0), ({0, 2}, 3), ({0, 2}, 4)],
        labels=("a", "b", "c", "d", "e"),
    )


@pytest.fixture(scope="session")
def chain_family():
    # B = {ab, bc, cd}: Sperner but not a unique key family.
    return hk.sperner(4, [{0, 1}, {1, 2}, {2, 3}], labels=("a", "b", "c", "d"))


@pytest.fixture(scope="session")
def star_family():
    # B = {12, 13, 14, 234}: unique key family.
    return hk.sperner(4, [{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}])


@pytest.fixture(scope="session")
def sat_cnf():
    # Satisfiable 3-CNF on 4 variables; the all-false assignment works.
    return hk.GeneralCNF(4, ((1, 2, -3), (-1, -2, 4), (-2, -3, -4)))


@pytest.fixture(scope="session")
def wheel_tss():
    # 5-vertex threshold graph; e needs two active neighbours, everyone else one.
    return hk.threshold_graph(
        5,
        [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4), (3, 4)],
        [1, 1, 1, 1, 2],
        labels=("a", "b", "c", "d", "e"),
    )
