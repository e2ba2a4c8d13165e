import pytest

from dpcolor.catalog import entries, entry_names, load, load_all, no46_names
from dpcolor.errors import GenerationExhaustedError
from dpcolor.generate import generate_plane_no46
from dpcolor.graphs import has_forbidden_cycles, is_connected


def test_every_entry_loads_and_flag_is_verified():
    for entry in entries():
        pg = load(entry.name)
        assert (not has_forbidden_cycles(pg.graph)) == entry.no46
        assert is_connected(pg.graph)
        if pg.graph.n >= 1:
            assert pg.graph.n - pg.graph.m + len(pg.faces) == 2


def test_load_all_matches_names():
    loaded = load_all()
    assert set(loaded) == set(entry_names())


def test_expected_members_present():
    names = set(entry_names())
    assert {"k2", "k3", "k4", "bowtie", "cube", "dodecahedron"} <= names
    assert {"path4", "star5", "spider"} <= names  # trees


def test_no46_split():
    assert set(no46_names()) == set(entry_names()) - {"k4", "c4", "cube"}


def test_unknown_name_raises():
    with pytest.raises(KeyError):
        load("nonesuch")


def test_dodecahedron_shape():
    pg = load("dodecahedron")
    assert pg.graph.n == 20 and pg.graph.m == 30
    assert sorted(f.degree for f in pg.faces) == [5] * 12


def test_generator_determinism():
    assert generate_plane_no46(13, 3).rotation == generate_plane_no46(13, 3).rotation


def test_generator_single_vertex():
    pg = generate_plane_no46(1, 0)
    assert pg.graph.n == 1 and len(pg.faces) == 1


def test_generator_valid_over_seeds():
    for seed in range(25):
        n = 2 + seed % 19
        pg = generate_plane_no46(n, seed)
        assert pg.graph.n == n
        assert is_connected(pg.graph)
        assert not has_forbidden_cycles(pg.graph)


def test_generator_attempt_budget():
    with pytest.raises(GenerationExhaustedError):
        generate_plane_no46(30, 0, attempts=0)
    with pytest.raises(GenerationExhaustedError):
        generate_plane_no46(0, 0)
