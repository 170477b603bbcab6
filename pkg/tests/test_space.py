import pytest

from measdecomp import FiniteSpace, SetFamily, SizeLimitError, SpaceMismatchError
from measdecomp.oracle import brute_sigma_close
from measdecomp.space import MAX_GENERATORS, AtomSet, family_join, family_meet, sigma_close

S = FiniteSpace.of_size(3)


def fam(*label_lists, closed=False):
    return SetFamily(S, tuple(S.set(*ls) for ls in label_lists), sigma_closed=closed)


def test_space_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        FiniteSpace(("a", "a"))
    with pytest.raises(ValueError):
        FiniteSpace(())


def test_atomset_operations():
    a, b = S.set("a1", "a2"), S.set("a2", "a3")
    assert (a | b) == S.full()
    assert (a & b).labels == ("a2",)
    assert (a - b).labels == ("a1",)
    assert a.complement().labels == ("a3",)
    assert a.bitvector == (1, 1, 0)
    assert repr(a) == "{a1,a2}"
    assert sorted(s.bits for s in a.subsets()) == [0, 1, 2, 3]


def test_atomset_space_mismatch():
    other = FiniteSpace.of_size(3, prefix="b")
    with pytest.raises(SpaceMismatchError):
        S.set("a1") | other.set("b1")


def test_members_deduplicated_and_canonical():
    f = fam(["a1", "a2"], ["a2"], ["a1"], ["a2"])
    assert [m.labels for m in f] == [("a2",), ("a1",), ("a1", "a2")]


def test_closed_flag_validated():
    with pytest.raises(ValueError):
        fam(["a1"], ["a2"], closed=True)


def test_sigma_close_examples():
    closed = sigma_close(fam(["a1"], ["a2"]))
    assert closed.sigma_closed
    assert {m.labels for m in closed} == {("a1",), ("a2",), ("a1", "a2")}
    assert closed.masks == brute_sigma_close(fam(["a1"], ["a2"])).masks
    assert len(sigma_close(SetFamily(S, ()))) == 0
    single = sigma_close(fam(["a1", "a2"]))
    assert [m.labels for m in single] == [("a1", "a2")]
    assert sigma_close(closed).masks == closed.masks


def test_sigma_close_cap():
    big = FiniteSpace.of_size(MAX_GENERATORS + 2)
    gens = tuple(big.from_indices([i]) for i in range(MAX_GENERATORS + 1))
    with pytest.raises(SizeLimitError):
        sigma_close(SetFamily(big, gens))


def test_family_join_and_meet():
    j = family_join(fam(["a1"]), fam(["a2"]))
    assert {m.labels for m in j} == {("a1",), ("a2",), ("a1", "a2")}
    f = fam(["a1"], ["a1", "a2"])
    assert family_join(f, SetFamily(S, ())).masks == sigma_close(f).masks
    assert family_join(f, f).masks == sigma_close(f).masks
    assert [m.labels for m in family_meet(f, fam(["a1"], ["a2"]))] == [("a1",)]
    assert family_meet(f, f).masks == f.masks
    assert len(family_meet(fam(["a1"]), fam(["a2"]))) == 0


def test_join_of_closed_families_matches_brute_closure():
    g = sigma_close(fam(["a1"], ["a3"]))
    h = sigma_close(fam(["a2"]))
    concat = SetFamily(S, g.members + h.members)
    assert family_join(g, h).masks == brute_sigma_close(concat).masks


def test_atomset_bits_bounds():
    with pytest.raises(ValueError):
        AtomSet(S, 1 << 3)
