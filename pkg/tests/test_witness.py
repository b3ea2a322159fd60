import pytest

from coxeter_excess.conjugacy import class_of, class_representatives, orbit
from coxeter_excess.errors import InternalProofViolation
from coxeter_excess.excess import excess, excess_table
from coxeter_excess.involution import enumerate_involutions
from coxeter_excess.parabolic import longest_element_J, phi_J
from coxeter_excess.typea import cycles, from_cycles
from coxeter_excess.types import group_of_type
from coxeter_excess.witness import (
    WitnessCertificate,
    _descend_conjugate,
    _shortest_conjugate,
    certificate_problems,
    zero_excess_witness,
)

from conftest import SMALL_TYPES


def test_involution_is_its_own_witness(A3):
    for x in [A3.identity] + enumerate_involutions(A3):
        cert = zero_excess_witness(A3, x)
        assert cert.w_star == x and cert.sigma == x and cert.tau == A3.identity
        assert cert.J == cert.K == frozenset()


def test_four_cycle(A3):
    w = A3.element("1 2 3")
    cert = zero_excess_witness(A3, w)
    assert cycles(A3, cert.w_star).startswith("(1") and len(cycles(A3, cert.w_star)) == 6
    assert cert.w_star.length == 3 == cert.sigma.length + cert.tau.length
    assert excess(A3, cert.w_star) == 0
    assert not certificate_problems(A3, cert)
    # the other zero-excess 4-cycle, (1324) = (12)(13)(24), also satisfies the certificate shape
    alt = from_cycles(A3, "(1324)")
    assert alt.length == 5 and excess(A3, alt) == 0


def test_three_cycle():
    A2 = group_of_type("A2")
    w = from_cycles(A2, "(123)")
    cert = zero_excess_witness(A2, w)
    assert cert.w_star.length == cert.sigma.length + cert.tau.length == 2


@pytest.mark.parametrize("mode", ["global", "greedy"])
@pytest.mark.parametrize("symbol", SMALL_TYPES + ["A5", "B4"])
def test_every_element(symbol, mode):
    g = group_of_type(symbol)
    table = excess_table(g)
    for cls in class_representatives(g):
        for w in cls.members:
            cert = zero_excess_witness(g, w, mode=mode)
            assert not certificate_problems(g, cert)
            assert table[cert.w_star] == 0
            assert cert.w_star in cls


@pytest.mark.parametrize("symbol", SMALL_TYPES + ["F4"])
def test_structural_invariants(symbol):
    g = group_of_type(symbol)
    for cls in class_representatives(g):
        cert = zero_excess_witness(g, cls.representative)
        w_K = longest_element_J(g, cert.K)
        assert cert.sigma * w_K == w_K * cert.sigma
        assert cert.tau * w_K == w_K * cert.tau
        phi = phi_J(g, cert.J)
        assert not cert.sigma.inversions() & phi
        assert cert.tau.inversions() <= phi
        assert cert.w_star in orbit(g, cls.representative)


@pytest.mark.parametrize("symbol", ["A4", "B3", "D4", "H3"])
def test_minimal_z_property(symbol):
    # a shortest W_J-conjugate z is fixed by every r in J that shortens it
    g = group_of_type(symbol)
    for x in enumerate_involutions(g):
        for J in [frozenset(range(1, g.rank + 1)), frozenset({1}), frozenset(range(2, g.rank + 1))]:
            for search in (_shortest_conjugate, _descend_conjugate):
                z, u = search(g, x, J)
                assert u.inverse() * x * u == z
                for r in J:
                    s = g.generators[r - 1]
                    if (z * s).length < z.length:
                        assert s * z * s == z
                        assert z.images[r - 1] == ~(r - 1)


def test_global_search_is_global():
    g = group_of_type("B3")
    J = frozenset({1, 2, 3})
    for x in enumerate_involutions(g):
        z, _ = _shortest_conjugate(g, x, J)
        assert z.length == min(w.length for w in class_of(g, x).members)


def test_bad_certificate_is_reported(A3):
    w = A3.element("1 2 3")
    cert = zero_excess_witness(A3, w)
    broken = WitnessCertificate(
        input=w, conjugator=A3.identity, w_star=w, sigma=cert.sigma, tau=cert.tau, J=cert.J, K=frozenset({2, 9})
    )
    problems = certificate_problems(A3, broken)
    assert "w_star != sigma tau" in problems
    assert "K is not a subset of J" in problems
    assert issubclass(InternalProofViolation, AssertionError)


def test_unknown_mode(A3):
    with pytest.raises(ValueError):
        zero_excess_witness(A3, A3.identity, mode="fast")


def test_certificate_json(A3):
    cert = zero_excess_witness(A3, A3.element("1 2 3"))
    data = cert.to_json(A3)
    assert list(data) == ["w", "w_star", "sigma", "tau", "conjugator", "J", "K", "lengths"]
    assert A3.element(data["w_star"]) == cert.w_star
    assert data["lengths"]["w_star"] == data["lengths"]["sigma"] + data["lengths"]["tau"]
