import pytest

from matchcover import bridge_pair, k4, petersen, prism, serialize


@pytest.fixture(scope="session")
def clean_corpus_dir(tmp_path_factory):
    """Directory of edge-list files that are all cubic r-graphs."""
    d = tmp_path_factory.mktemp("corpus_clean")
    for name, g in [("k4", k4()), ("petersen", petersen()), ("prism5", prism(5))]:
        (d / f"{name}.txt").write_text(serialize(g))
    return d


@pytest.fixture(scope="session")
def mixed_corpus_dir(tmp_path_factory):
    """Clean graphs plus one that fails the odd-cut test."""
    d = tmp_path_factory.mktemp("corpus_mixed")
    for name, g in [("k4", k4()), ("petersen", petersen()), ("zbridge", bridge_pair())]:
        (d / f"{name}.txt").write_text(serialize(g))
    return d


@pytest.fixture(scope="session")
def broken_corpus_dir(tmp_path_factory):
    """Contains a file that does not parse at all."""
    d = tmp_path_factory.mktemp("corpus_broken")
    (d / "k4.txt").write_text(serialize(k4()))
    (d / "mangled.txt").write_text("3 1\n0 0\n")
    return d
