import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutfock.charcount import (
    GroupSpec,
    Parity,
    QuadratureError,
    character_defining,
    count_representation,
    count_table,
    cumulative_basis_count,
    haar_weight,
    sym_character,
    sym_character_partitions,
    write_count_csv,
)
from cutfock.fockbasis import Sector


def test_group_spec():
    assert GroupSpec(9).M == 4 and GroupSpec(9).parity is Parity.ODD
    assert GroupSpec(8).M == 4 and GroupSpec(8).parity is Parity.EVEN
    with pytest.raises(ValueError):
        GroupSpec(1)


def test_haar_weight_shapes():
    a = np.linspace(0.1, 3.0, 7)[:, None]
    np.testing.assert_allclose(haar_weight(a, GroupSpec(3)), np.sin(a[:, 0] / 2) ** 2)
    np.testing.assert_allclose(haar_weight(a, GroupSpec(2)), 1.0)
    b = np.array([[0.3, 1.1], [2.0, 0.4]])
    np.testing.assert_allclose(haar_weight(b, GroupSpec(4)), (np.cos(b[:, 1]) - np.cos(b[:, 0])) ** 2)
    assert np.all(haar_weight(np.random.default_rng(0).uniform(0, 6.3, (50, 3)), GroupSpec(7)) >= 0)


@pytest.mark.parametrize("d", range(2, 10))
def test_character_at_identity(d):
    g = GroupSpec(d)
    assert character_defining(np.zeros(g.M), g) == d


def test_so3_character():
    assert character_defining(np.array([math.pi]), GroupSpec(3)) == pytest.approx(-1.0)


def test_sym_character_low_orders():
    g = GroupSpec(5)
    a = np.array([0.7, 2.1])
    chi = character_defining(a, g)
    assert sym_character(0, a, g) == 1.0
    assert sym_character(1, a, g) == pytest.approx(chi)
    assert sym_character(2, a, g) == pytest.approx((chi**2 + character_defining(2 * a, g)) / 2)
    # dimension of Sym^N of R^d at the identity
    for n in range(6):
        assert sym_character(n, np.zeros(2), g) == pytest.approx(math.comb(n + 4, n))


@given(
    d=st.integers(2, 7),
    n=st.integers(0, 8),
    seed=st.integers(0, 2**31),
)
@settings(max_examples=60, deadline=None)
def test_newton_matches_partition_sum(d, n, seed):
    g = GroupSpec(d)
    a = np.random.default_rng(seed).uniform(0, 2 * math.pi, (4, g.M))
    fast = sym_character(n, a, g)
    slow = sym_character_partitions(n, a, g)
    np.testing.assert_allclose(fast, slow, atol=1e-10 * max(1.0, np.abs(slow).max()))


def test_count_examples():
    for d in range(2, 10):
        assert count_representation(0, GroupSpec(d)).multiplicity == 1
    for n in range(0, 12):
        assert count_representation(n, GroupSpec(3)).multiplicity == (1 if n % 2 == 0 else 0)
    for d in range(3, 10):
        assert count_representation(1, GroupSpec(d), Sector.VECTOR).multiplicity == 1
    # SO(2) acts reducibly on R^2: the defining character is e^{ia} + e^{-ia}
    assert count_representation(1, GroupSpec(2), Sector.VECTOR).multiplicity == 2


def test_cumulative_examples():
    assert cumulative_basis_count(7, GroupSpec(3)) == 4
    for d in range(2, 10):
        assert cumulative_basis_count(0, GroupSpec(d)) == 1
    assert cumulative_basis_count(4, GroupSpec(5), Sector.VECTOR) == 2


@pytest.mark.parametrize("d", range(3, 8))
def test_vector_counts(d):
    mult = [r.multiplicity for r in count_table(12, GroupSpec(d), Sector.VECTOR)]
    assert mult == [n % 2 for n in range(13)]


@pytest.mark.parametrize("d", range(2, 8))
def test_exactness_plateau(d):
    g = GroupSpec(d)
    base = count_table(14, g)
    k_min = 14 + 2 * g.M + 3
    for k in (k_min + 1, k_min + 5):
        more = count_table(14, g, nodes=k)
        assert [r.multiplicity for r in more] == [r.multiplicity for r in base]
        assert max(r.residual for r in more) < 1e-9


def test_too_few_nodes():
    with pytest.raises(ValueError):
        count_table(10, GroupSpec(5), nodes=10)


def test_underresolved_rule_raises(monkeypatch):
    import cutfock.charcount as cc

    monkeypatch.setattr(cc, "_nodes", lambda nmax, g, nodes: 2 * np.pi * np.arange(5) / 5 + 0.1)
    with pytest.raises(QuadratureError):
        cc.count_table(12, GroupSpec(5))


def test_mass_stable_under_doubling():
    # the normalization divisor is the quadrature of the bare Haar weight
    for d in (4, 7):
        g = GroupSpec(d)
        masses = []
        for k in (20, 40):
            theta = 2 * np.pi * np.arange(k) / k
            mesh = np.stack(np.meshgrid(*([theta] * g.M), indexing="ij"), axis=-1)
            masses.append(haar_weight(mesh, g).mean())
        assert masses[0] > 0
        assert masses[1] == pytest.approx(masses[0], rel=1e-12)


def test_write_csv(tmp_path):
    path = tmp_path / "c.csv"
    write_count_csv(path, count_table(4, GroupSpec(3)))
    assert path.read_text().splitlines() == ["N_B,multiplicity", "0,1", "1,0", "2,1", "3,0", "4,1"]
