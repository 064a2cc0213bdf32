import pytest
from hypothesis import given, settings, strategies as st

from charfield.errors import InputError
from charfield.groups import Family, GroupSpec
from charfield.weyl_b import (
    SeriesDescriptor,
    SignedPerm,
    generator,
    identity,
    length,
    lengths_by_bfs,
    relative_weyl,
    special_element,
)


def test_generator_examples():
    s2 = generator(2, 2)
    assert s2.images == (1, -2)
    s1 = generator(3, 1)
    assert s1.images == (2, 1, 3)
    for n in range(1, 5):
        for i in range(1, n + 1):
            s = generator(n, i)
            assert (s * s).is_identity()


def test_generator_range():
    with pytest.raises(InputError):
        generator(3, 4)
    with pytest.raises(InputError):
        generator(3, 0)


@st.composite
def signed_perms(draw, n=4):
    perm = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return SignedPerm([s * v for s, v in zip(signs, perm)])


@given(signed_perms(), signed_perms(), signed_perms())
@settings(max_examples=50)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == identity(4)
    assert a.inverse() * a == identity(4)


def test_special_elements():
    t1 = special_element(3, "t", 1)
    assert t1.images == (-1, 2, 3)
    u1 = special_element(3, "u", 1)
    assert u1.images == (-1, 2, -3)
    with pytest.raises(InputError):
        special_element(3, "u", 3)
    with pytest.raises(InputError):
        special_element(3, "t", 4)


def test_length_identity():
    for n in range(1, 5):
        assert length(identity(n)) == 0


def test_length_formulas():
    # reduced words: t_m uses 2(n-m)+1 letters, u_m uses 2(n-m)+2
    for n in range(2, 9):
        for m in range(1, n + 1):
            assert length(special_element(n, "t", m)) == 2 * (n - m) + 1
        for m in range(1, n):
            assert length(special_element(n, "u", m)) == 2 * (n - m) + 2


def test_length_parities():
    for n in range(2, 9):
        for m in range(1, n):
            assert length(special_element(n, "t", m)) % 2 == 1
            assert length(special_element(n, "u", m)) % 2 == 0


def test_length_vs_bfs_small():
    for n in (1, 2, 3, 4):
        table = lengths_by_bfs(n)
        assert len(table) == 2**n * _factorial(n)
        for w, d in table.items():
            assert length(w) == d


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_u1_length_six():
    assert length(special_element(3, "u", 1)) == 6


SAMPLE_DESCRIPTORS = [
    SeriesDescriptor(GroupSpec(Family.SP, 2, 3), True, 2, 1, 1),
    SeriesDescriptor(GroupSpec(Family.SP, 3, 3), True, 3, 2, 1),
    SeriesDescriptor(GroupSpec(Family.SP, 1, 3), True, 1, 0, 1),
    SeriesDescriptor(GroupSpec(Family.SP, 4, 3), False, 2, 1, 1, True),
    SeriesDescriptor(GroupSpec(Family.SO_EVEN, 3, 3, 1), True, 3, 1, 2),
    SeriesDescriptor(GroupSpec(Family.SO_EVEN, 3, 3, -1), True, 3, 2, 1),
    SeriesDescriptor(GroupSpec(Family.SO_EVEN, 2, 3, 1), True, 2, 0, 2),
    SeriesDescriptor(GroupSpec(Family.SO_EVEN, 4, 3, 1), False, 2, 1, 1, True),
    SeriesDescriptor(GroupSpec(Family.SO_EVEN, 4, 3, -1), False, 1, 0, 1, True),
    SeriesDescriptor(GroupSpec(Family.SO_ODD, 2, 3), True, 2, 1, 1),
    SeriesDescriptor(GroupSpec(Family.SO_ODD, 4, 3), False, 2, 2, 0, True),
]


def test_relative_weyl_table_rows():
    rel = relative_weyl(SAMPLE_DESCRIPTORS[0])
    assert rel.c_generator == generator(2, 2)
    assert rel.c_length_parity == "odd"
    assert rel.w_type == "B1 x B1"
    assert rel.r_type == "B1"

    rel = relative_weyl(SAMPLE_DESCRIPTORS[4])
    assert rel.c_generator == special_element(3, "u", 1)
    assert rel.c_length_parity == "even"
    assert rel.w_type == "B1 x B2"
    assert rel.r_type == "D2"

    rel = relative_weyl(SAMPLE_DESCRIPTORS[5])
    assert rel.w_type == "B2"  # the B''1 factor is trivial and dropped
    assert rel.r_type == "D2"
    assert rel.c_generator == special_element(3, "u", 1)

    rel = relative_weyl(SeriesDescriptor(GroupSpec(Family.SO_EVEN, 4, 3, -1), True, 4, 2, 2))
    assert rel.w_type == "B2 x B''2"
    assert rel.r_type == "D2 x B''2"

    rel = relative_weyl(SAMPLE_DESCRIPTORS[9])
    assert rel.c_order == 1
    assert rel.c_generator is None

    rel = relative_weyl(SAMPLE_DESCRIPTORS[3])
    assert rel.c_generator == special_element(4, "t", 2)
    assert rel.externally_sourced


def test_relative_weyl_parities():
    # orthogonal complements are even, symplectic ones odd: this is the
    # whole source of the field growth asymmetry
    for desc in SAMPLE_DESCRIPTORS:
        rel = relative_weyl(desc)
        if rel.c_order == 1:
            continue
        if desc.group.family is Family.SP:
            assert rel.c_length_parity == "odd"
        else:
            assert rel.c_length_parity == "even"
        w = rel.c_generator
        assert (w * w).is_identity()
        assert not w.is_identity()


def test_relative_weyl_errors():
    with pytest.raises(InputError):
        relative_weyl(SeriesDescriptor(GroupSpec(Family.SP, 2, 3), True, 2, 2, 0))
    with pytest.raises(InputError):
        relative_weyl(SeriesDescriptor(GroupSpec(Family.SO_EVEN, 2, 3, 1), True, 2, 2, 0))


def test_descriptor_invariants():
    with pytest.raises(InputError):
        SeriesDescriptor(GroupSpec(Family.SP, 2, 3), True, 2, 1, 2)
    with pytest.raises(InputError):
        SeriesDescriptor(GroupSpec(Family.SP, 2, 3), False, 1, 1, 0, True)
    with pytest.raises(InputError):
        SeriesDescriptor(GroupSpec(Family.SP, 4, 3), False, 2, 1, 1, False)
