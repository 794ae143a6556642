from fractions import Fraction

import pytest

from oracles import V_TET
from tilingvol import DomainError, catalog_entry, euler_characteristic, spherical_catalog, spherical_link_volume
from tilingvol.tables import FIG11_PRINTED


def test_fifteen_solids():
    names = [e.name for e in spherical_catalog()]
    assert len(names) == 15 == len(set(names))
    assert names == list(FIG11_PRINTED)


def test_cube():
    e = catalog_entry("cube")
    assert str(e.config) == "4.4.4" and e.faces == {4: 6}


def test_truncated_cube():
    e = catalog_entry("Truncated Cube")
    assert str(e.config) == "3.8.8" and e.faces == {3: 8, 8: 6}


def test_icosidodecahedron():
    e = catalog_entry("icosidodecahedron")
    assert str(e.config) == "3.5.3.5" and e.faces == {3: 20, 5: 12}


@pytest.mark.parametrize("entry", spherical_catalog(), ids=lambda e: e.name)
def test_euler(entry):
    chi = euler_characteristic(entry.config, entry.faces)
    assert isinstance(chi, Fraction) and chi == 2


@pytest.mark.parametrize("entry", spherical_catalog(), ids=lambda e: e.name)
def test_face_incidences_match_config(entry):
    # each face size appears in the vertex config in proportion to its corner count
    corners = sum(n * k for n, k in entry.faces.items())
    vertices = corners // entry.config.valence
    for n, k in entry.faces.items():
        assert entry.config.sizes.count(n) * vertices == n * k


def test_unknown():
    with pytest.raises(DomainError):
        catalog_entry("great stellated dodecahedron")


def test_tetrahedron_volume():
    r = spherical_link_volume("tetrahedron")
    assert r.vol_over_2 == pytest.approx(V_TET, abs=1e-9)
    assert r.vol_L == pytest.approx(2 * r.vol_over_2)


def test_truncated_cube_volume():
    r = spherical_link_volume("truncated cube")
    assert r.vol_over_2 == pytest.approx(20.8916, abs=5e-4)
    assert [round(r.angles[n], 2) for n in r.config.sizes] == [1.10, 2.59, 2.59]


def test_truncated_icosidodecahedron_volume():
    assert spherical_link_volume("truncated icosidodecahedron").vol_over_2 == pytest.approx(155.4566, abs=5e-4)


def test_from_config_and_faces():
    r = spherical_link_volume("3.8.8", faces={3: 8, 8: 6})
    assert r.vol_over_2 == pytest.approx(spherical_link_volume("truncated cube").vol_over_2, abs=1e-12)


def test_bad_face_multiset_rejected():
    with pytest.raises(DomainError):
        spherical_link_volume("6.6.6", faces={6: 1})
