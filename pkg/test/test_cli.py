import json
import os
import shutil
import tempfile

from nose.tools import eq_, ok_, assert_raises, with_setup

from tkkbench.chevalley import chevalley_algebra, root_vector
from tkkbench.cli import chevalley_labels, main
from tkkbench.exchange import read_exchange, write_exchange
from tkkbench.liealg import generated_subalgebra
from tkkbench.ternary import standard_symplectic_gram, trivial_fts

DIRECTORY = []


def setup_directory():
    DIRECTORY.append(tempfile.mkdtemp())


def teardown_directory():
    shutil.rmtree(DIRECTORY.pop())


def _path(name):
    return os.path.join(DIRECTORY[-1], name)


def test_chevalley_labels():
    algebra, frame = chevalley_algebra("A", 2)
    labels = chevalley_labels(algebra, frame)
    eq_(sorted(labels),
        ["e01", "e10", "e11", "f01", "f10", "f11", "h1", "h2"])
    eq_(labels[3:5], ["h1", "h2"])


@with_setup(setup_directory, teardown_directory)
def test_build_extract_tkk_identify():
    eq_(main(["build", "--type", "A1", "--out", _path("a1.json")]), 0)
    eq_(read_exchange(_path("a1.json")).labels, ["e1", "h1", "f1"])

    eq_(main(["--verbose", "extract", "--type", "C2",
              "--out", _path("c2.json")]), 0)
    fts = read_exchange(_path("c2.json"))
    eq_(fts.kind, "fts")
    eq_(fts.value.dim, 2)
    eq_(main(["axioms", "--in", _path("c2.json")]), 0)

    eq_(main(["tkk", "--in", _path("c2.json"), "--out", _path("l.json")]), 0)
    eq_(read_exchange(_path("l.json")).value.dim, 10)
    eq_(main(["identify", "--in", _path("l.json")]), 0)

    eq_(main(["build", "--type", "G2", "--out", _path("g2.json")]), 0)
    eq_(main(["extract", "--in", _path("g2.json"),
              "--out", _path("g2fts.json")]), 0)
    eq_(read_exchange(_path("g2fts.json")).value.dim, 4)


@with_setup(setup_directory, teardown_directory)
def test_failing_axioms():
    bad = trivial_fts(standard_symplectic_gram(2), (1, 1, -1))
    write_exchange(bad, _path("bad.json"))
    eq_(main(["axioms", "--in", _path("bad.json")]), 1)


@with_setup(setup_directory, teardown_directory)
def test_index():
    algebra, frame = chevalley_algebra("C", 2)
    theta = frame.root_system.highest_coefficients
    sub = generated_subalgebra(algebra, [
        root_vector(frame, theta),
        root_vector(frame, tuple(-c for c in theta))])
    images = [sub.embed({i: 1}) for i in range(sub.dim)]
    write_exchange(sub.induced, _path("sl2.json"), embedding=images)
    write_exchange(algebra, _path("c2.json"))
    eq_(main(["index", "--source", _path("sl2.json"),
              "--target", _path("c2.json")]), 0)

    # no embedding in the source file
    eq_(main(["index", "--source", _path("c2.json"),
              "--target", _path("c2.json")]), 2)

    # images that do not preserve brackets
    wrong = [images[0], images[0], images[2]]
    write_exchange(sub.induced, _path("wrong.json"), embedding=wrong)
    eq_(main(["index", "--source", _path("wrong.json"),
              "--target", _path("c2.json")]), 2)


@with_setup(setup_directory, teardown_directory)
def test_claims_command():
    out = _path("report.json")
    eq_(main(["claims", "--tier", "0", "--id", "C1", "--out", out]), 0)
    with open(out) as handle:
        document = json.load(handle)
    eq_([c["id"] for c in document["claims"]], ["C1"])
    eq_(document["claims"][0]["status"], "pass")
    ok_("runtime" not in document["claims"][0])

    eq_(main(["claims", "--tier", "0", "--id", "C7", "--format", "text",
              "--out", _path("report.txt")]), 0)
    with open(_path("report.txt")) as handle:
        ok_("skipped" in handle.read())
    eq_(main(["claims", "--id", "C42"]), 2)


@with_setup(setup_directory, teardown_directory)
def test_errors():
    eq_(main(["tkk", "--in", _path("missing.json")]), 2)
    write_exchange(trivial_fts(standard_symplectic_gram(2)),
                   _path("fts.json"))
    eq_(main(["identify", "--in", _path("fts.json")]), 2)
    eq_(main(["build", "--type", "Q3"]), 2)
    eq_(main(["extract"]), 2)
    assert_raises(SystemExit, main, [])
