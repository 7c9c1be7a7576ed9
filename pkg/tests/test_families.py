import pytest

from hamlab.canonical import is_isomorphic
from hamlab.contraction import petersen, wagner
from hamlab.families import (DecorationConfig, blowup, is_in_P_prime,
                             is_in_W_prime, k113, k123, p_prime_member,
                             w_prime_member)
from hamlab.multigraph import MultiGraph, attach_pendant


def all_pendants():
    return DecorationConfig(pendants={v: 1 for v in range(10)})


def test_p_prime_member_round_trip():
    h = p_prime_member(all_pendants())
    assert h.n == 20 and h.m == 25
    ok, reason = is_in_P_prime(h)
    assert ok, reason


def test_p_prime_with_subdivisions():
    cfg = DecorationConfig(pendants={v: 1 for v in range(10) if v not in (0, 1)},
                           subdivide={0})  # edge 0 covers vertices 0 and 1
    h = p_prime_member(cfg)
    ok, reason = is_in_P_prime(h)
    assert ok, reason


def test_p_prime_rejects_uncovered_vertex():
    cfg = DecorationConfig(pendants={v: 1 for v in range(9)})  # vertex 9 untouched
    with pytest.raises(ValueError):
        p_prime_member(cfg)
    h = petersen()
    for v in range(9):
        h, _ = attach_pendant(h, v)
    ok, reason = is_in_P_prime(h)
    assert not ok and "unmodified" in reason


def test_p_prime_rejects_doubles():
    cfg = DecorationConfig(pendants={v: 1 for v in range(9)}, double_pendants={9: 1})
    with pytest.raises(ValueError):
        p_prime_member(cfg)


def test_p_prime_rejects_wrong_base():
    h = wagner()
    for v in range(8):
        h, _ = attach_pendant(h, v)
    ok, reason = is_in_P_prime(h)
    assert not ok


def test_w_prime_member_with_doubles():
    cfg = DecorationConfig(pendants={v: 1 for v in range(6)},
                           double_pendants={6: 1, 7: 1})
    h = w_prime_member(cfg)
    ok, reason = is_in_W_prime(h)
    assert ok, reason


def test_w_prime_doubled_subdivision():
    cfg = DecorationConfig(pendants={v: 1 for v in range(8) if v not in (0, 1)},
                           subdivide={0}, double_to_subdivision={0: 0})
    h = w_prime_member(cfg)
    ok, reason = is_in_W_prime(h)
    assert ok, reason


def test_plain_petersen_not_in_family():
    ok, reason = is_in_P_prime(petersen())
    assert not ok


def test_tripartite_witnesses():
    g = k123()
    assert g.n == 6 and g.m == 11
    h = k113()
    assert h.n == 5 and h.m == 7


def test_blowup_identity_and_growth():
    assert is_isomorphic(blowup("k123", 1), k123())
    g2 = blowup("k123", 2)
    assert g2.n == 7
    g3 = blowup("k113", 3)
    assert g3.n == 7
    with pytest.raises(ValueError):
        blowup("k999", 2)
    with pytest.raises(ValueError):
        blowup("k123", 0)
