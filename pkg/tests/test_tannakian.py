import pytest

import math
import random

from oracles import (
    is_coboundary_bruteforce,
    schur_multiplier_homology,
    schur_order_bruteforce,
    schur_p_part_bruteforce,
)
from ribboncat import errors
from ribboncat.catalog import deligne_product, group_hint, load_named
from ribboncat.exactnum import ONE
from ribboncat.tannakian import (
    CharacterTable,
    CocycleClass,
    FiniteGroup,
    GroupNeeded,
    cyclic_group,
    direct_product,
    h2_group,
    maximal_tannakian,
    named_group,
    permutation_group,
    projective_irrep_profile,
    recognize_group,
    tannakian_from_labels,
)

SMALL = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3"]
UP_TO_8 = SMALL + ["Z7", "Z8", "D4", "Q8"]
# (group, prime) pairs whose mod-p cocycle enumeration stays small
P_RANK = [("Z8", 2), ("D4", 2), ("Q8", 2), ("Z6", 2), ("Z6", 3), ("S3", 2), ("S3", 3), ("Z2xZ2", 2), ("Z9", 3)]


def test_group_axioms_are_checked():
    with pytest.raises(errors.StructureError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(errors.StructureError):
        FiniteGroup([[1, 0], [0, 1]], identity=0)


def test_named_groups():
    assert named_group("S3").order == 6 and not named_group("S3").is_abelian()
    assert named_group("D4").order == 8 and len(named_group("D4").conjugacy_classes()) == 5
    assert named_group("Q8").order == 8 and len(named_group("Q8").conjugacy_classes()) == 5
    assert direct_product(cyclic_group(2), cyclic_group(3)).is_abelian()
    assert permutation_group([(1, 0, 2)]).order == 2


def test_group_json_round_trip():
    G = named_group("D4")
    assert FiniteGroup.from_json(G.to_json()) == G


@pytest.mark.parametrize("name", SMALL)
def test_h2_matches_bruteforce_cocycle_count(name):
    G = named_group(name)
    assert h2_group(G).order == schur_order_bruteforce(G)


@pytest.mark.parametrize("name, p", P_RANK)
def test_h2_p_rank_matches_bruteforce(name, p):
    G = named_group(name)
    p_rank = sum(1 for q in h2_group(G).invariants if q % p == 0)
    assert p**p_rank == schur_p_part_bruteforce(G, p)


def _ratio(a, b):
    """Exponents and reduced modulus of a/b for two cocycles sharing a modulus."""
    n = a.group.order
    diff = [[(a.exponents[g][h] - b.exponents[g][h]) % a.modulus for h in range(n)] for g in range(n)]
    m = a.modulus // math.gcd(a.modulus, *(x for row in diff for x in row))
    return [[x * m // a.modulus for x in row] for row in diff], m


@pytest.mark.parametrize("name", ["Z2xZ2", "D4", "Z4", "S3"])
def test_distinct_classes_are_inequivalent(name):
    G = named_group(name)
    classes = h2_group(G).classes()
    for a in classes:
        for b in classes:
            exps, m = _ratio(a, b)
            assert is_coboundary_bruteforce(G, exps, m) == (a.class_id == b.class_id)


def test_coboundary_oracle_sees_twisted_representative():
    # a class times an explicit coboundary is still the same class
    G = named_group("D4")
    c = h2_group(G).cocycle(1)
    n, rng = G.order, random.Random(7)
    phi = [0] + [rng.randrange(c.modulus) for _ in range(n - 1)]
    twisted = [[(c.exponents[g][h] + phi[g] + phi[h] - phi[G.mul(g, h)]) % c.modulus for h in range(n)] for g in range(n)]
    exps, m = _ratio(CocycleClass(G, tuple(map(tuple, twisted)), c.modulus, 1), c)
    assert is_coboundary_bruteforce(G, exps, m)
    exps, m = _ratio(CocycleClass(G, tuple(map(tuple, twisted)), c.modulus, 1), h2_group(G).cocycle(0))
    assert not is_coboundary_bruteforce(G, exps, m)


@pytest.mark.parametrize("name", UP_TO_8)
def test_h2_matches_integral_homology(name):
    G = named_group(name)
    assert list(h2_group(G).invariants) == schur_multiplier_homology(G)


@pytest.mark.parametrize("n", range(1, 17))
def test_h2_cyclic_trivial(n):
    assert h2_group(cyclic_group(n)).is_trivial


def test_h2_larger_abelian():
    Z4 = cyclic_group(4)
    assert h2_group(direct_product(Z4, Z4)).invariants == (4,)
    Z2 = cyclic_group(2)
    assert h2_group(direct_product(direct_product(Z2, Z2), Z2)).invariants == (2, 2, 2)


def test_h2_bound():
    with pytest.raises(errors.ResourceLimitError):
        h2_group(cyclic_group(17))


@pytest.mark.parametrize("name", ["Z2xZ2", "D4", "Z6"])
def test_cocycle_representatives_are_normalized_cocycles(name):
    mult = h2_group(named_group(name))
    for c in mult.classes():
        assert c.is_cocycle()
        assert c.is_normalized()


def test_nontrivial_class_is_not_symmetric():
    # a class is trivial on an abelian group iff its commutator pairing is trivial
    G = named_group("Z2xZ2")
    c = h2_group(G).cocycle(1)
    assert any(c.commutator_phase(g, h) != ONE for g in range(4) for h in range(4))


def test_projective_profiles_z2z2():
    G = named_group("Z2xZ2")
    mult = h2_group(G)
    assert projective_irrep_profile(G, mult.cocycle(0)) == [1, 1, 1, 1]
    assert projective_irrep_profile(G, mult.cocycle(1)) == [2]


def test_projective_profiles_z4z4():
    Z4 = cyclic_group(4)
    G = direct_product(Z4, Z4)
    mult = h2_group(G)
    profiles = sorted(tuple(projective_irrep_profile(G, c)) for c in mult.classes())
    # the pairing of class k has radical of order 16 / (4/gcd(k,4))^2
    assert profiles == sorted([(1,) * 16, (2,) * 4, (4,), (4,)])


def test_maximal_tannakian_excludes_fermions():
    T = maximal_tannakian(deligne_product(load_named("rep_z2"), load_named("toric_code")))
    assert T.labels == ("(1,1)", "(eps,1)")
    from ribboncat.fusion import FusionRingData
    from ribboncat.ribbon import CategorySpec

    s = load_named("rep_z2")
    svec = CategorySpec(s.ring, [ONE, -ONE], [1, 1])
    T = maximal_tannakian(svec)
    assert T.labels == ("1",)
    assert T.fermions == ("eps",)


def test_pointed_group_recognition():
    spec = load_named("rep_z2z2")
    T = recognize_group(spec, maximal_tannakian(spec))
    assert T.status == "resolved"
    assert T.group.order == 4 and T.group.is_abelian()
    assert all(T.group.mul(g, g) == T.group.identity for g in range(4))


def test_rep_s3_group_recognition():
    spec = load_named("rep_s3")
    T = maximal_tannakian(spec)
    assert T.status == "needs-user-group"
    with pytest.raises(GroupNeeded):
        recognize_group(spec, T)
    G, table = group_hint("rep_s3")
    R = recognize_group(spec, T, G, table)
    assert R.label_to_irrep == {"1": 0, "sgn": 1, "std": 2}


def test_group_mismatch_for_abelian_group():
    spec = load_named("rep_s3")
    with pytest.raises(errors.GroupMismatchError):
        recognize_group(spec, maximal_tannakian(spec), cyclic_group(6))


def test_group_mismatch_for_wrong_character_table():
    spec = load_named("rep_d4")
    G, table = group_hint("rep_d4")
    # Q8 has the same character table as D4, so the fusion data cannot tell them apart
    R = recognize_group(spec, maximal_tannakian(spec), named_group("Q8"), table)
    assert R.group.order == 8
    with pytest.raises(errors.GroupMismatchError):
        recognize_group(spec, maximal_tannakian(spec), named_group("S3"), table)


def test_character_ring_mismatch_detected():
    spec = load_named("rep_s3")
    G, table = group_hint("rep_s3")
    with pytest.raises(errors.RibbonCatError):
        recognize_group(spec, maximal_tannakian(spec), G, table, {"1": 0, "sgn": 2, "std": 1})


def test_tannakian_from_labels_adds_unit():
    T = tannakian_from_labels(load_named("rep_z3"), ["w", "w2"])
    assert T.labels == ("1", "w", "w2")
