import numpy as np
import pytest

from ribboncat import errors
from ribboncat.catalog import deligne_product, group_hint, load_named
from ribboncat.condense import (
    condense,
    condense_general,
    condense_pointed,
    extended_hom,
    extended_hom_matrix,
    orbits_and_stabilizers,
    verify_condensation,
)
from ribboncat.exactnum import ONE, CycloNum
from ribboncat.ribbon import centre, is_modular, s_matrix
from ribboncat.tannakian import h2_group, named_group


def z2_ising():
    return deligne_product(load_named("rep_z2"), load_named("ising"))


def test_extended_hom_examples():
    G, table = group_hint("rep_s3")
    s3 = load_named("rep_s3")
    from ribboncat.tannakian import maximal_tannakian, recognize_group

    T = recognize_group(s3, maximal_tannakian(s3), G, table)
    assert extended_hom(s3, T, "std", "std") == 4
    d4 = load_named("rep_d4")
    assert extended_hom(d4, ["1", "a", "b", "ab"], "sigma", "sigma") == 4
    ising = load_named("ising")
    for x in ising.names:
        for y in ising.names:
            assert extended_hom(ising, ["1"], x, y) == int(x == y)


def test_extended_hom_matrix_rep_s3_is_rank_one():
    s3 = load_named("rep_s3")
    M = extended_hom_matrix(s3, ["1", "sgn", "std"])
    d = np.array([1, 1, 2])
    assert np.array_equal(M, np.outer(d, d))


def test_extended_hom_domain_error():
    with pytest.raises(errors.DomainError):
        extended_hom(load_named("rep_s3"), ["std"], "std", "std")


def test_orbits_z2_ising():
    rep = orbits_and_stabilizers(z2_ising(), ["(eps,1)"])
    assert [o.members for o in rep.orbits] == [
        ("(1,1)", "(eps,1)"),
        ("(1,psi)", "(eps,psi)"),
        ("(1,sigma)", "(eps,sigma)"),
    ]
    assert all(o.stabilizer == ("(1,1)",) for o in rep.orbits)


def test_orbits_rep_d4():
    rep = orbits_and_stabilizers(load_named("rep_d4"), ["a", "b", "ab"])
    assert [o.members for o in rep.orbits] == [("1", "a", "b", "ab"), ("sigma",)]
    assert rep.orbits[0].stabilizer == ("1",)
    assert rep.orbits[1].stabilizer == ("1", "a", "b", "ab") and rep.orbits[1].index == 1


def test_orbits_rep_z2z2_self():
    rep = orbits_and_stabilizers(load_named("rep_z2z2"), ["a", "b", "ab"])
    assert len(rep.orbits) == 1 and len(rep.orbits[0].members) == 4


def test_orbits_nonpointed_marks_stabilizer_not_applicable():
    rep = orbits_and_stabilizers(load_named("rep_s3"), ["sgn", "std"])
    assert rep.orbits[0].stabilizer is None


def test_z2_ising_round_trip_exact():
    ising = load_named("ising")
    res = condense_pointed(z2_ising(), ["(eps,1)"])
    c = res.condensed
    assert c.names == ("(1,1)", "(1,psi)", "(1,sigma)")
    assert np.array_equal(c.N, ising.N)
    assert c.twists == ising.twists and c.dims == ising.dims
    assert s_matrix(c).entries == s_matrix(ising).entries
    rep = verify_condensation(res)
    assert rep.ok and rep.condensed_modular


def test_rep_d4_nontrivial_cocycle():
    res = condense_pointed(load_named("rep_d4"), ["1", "a", "b", "ab"])
    assert res.condensed.rank == 2
    assert res.phi("sigma") == {"sigma": 2}
    assert res.condensed.dims == (ONE, ONE)
    orb = res.report.orbit_of("sigma")
    assert orb.cocycle_status == "inferred"
    mult = h2_group(orb.stabilizer_group)
    assert mult.invariants == (2,) and orb.cocycle.class_id != 0
    # condensed fusion is Rep(Z2)
    assert res.condensed.N[1, 1, 0] == 1 and res.condensed.N[1, 1, 1] == 0
    assert verify_condensation(res).ok


def test_cocycle_override_trivial_class_is_inconsistent():
    with pytest.raises(errors.InconsistencyError):
        condense_pointed(load_named("rep_d4"), ["a", "b", "ab"], {"sigma": 0})


def test_cocycle_override_matching_inference():
    res = condense_pointed(load_named("rep_d4"), ["a", "b", "ab"], {"sigma": 1})
    assert res.report.orbit_of("sigma").cocycle_status == "override"


def test_degeneracy_guard():
    with pytest.raises(errors.DegeneracyViolation) as exc:
        condense(load_named("toric_code"), ["1", "e"])
    assert exc.value.witness == ("e", "m", "f", -ONE)


def test_fermion_rejected():
    from ribboncat.ribbon import CategorySpec

    s = load_named("rep_z2")
    svec = CategorySpec(s.ring, [ONE, -ONE], [1, 1])
    with pytest.raises(errors.DomainError):
        condense(svec, ["eps"])


def test_identity_condensation():
    ising = load_named("ising")
    res = condense_pointed(ising, ["1"])
    assert np.array_equal(res.m, np.eye(3, dtype=int))
    res = condense_general(z2_ising(), ["(1,1)"])
    assert np.array_equal(res.m, np.eye(6, dtype=int))
    rep = verify_condensation(res)
    assert rep.ok
    assert set(rep.condensed_centre) == {l.name for l in centre(z2_ising())}


@pytest.mark.parametrize("name", ["rep_z2", "rep_z3", "rep_z2z2"])
@pytest.mark.parametrize("route", ["pointed", "general"])
def test_full_collapse_abelian(name, route):
    spec = load_named(name)
    res = (condense_pointed if route == "pointed" else condense_general)(spec, None)
    assert res.condensed.rank == 1
    assert verify_condensation(res).ok


def test_full_collapse_s3():
    G, table = group_hint("rep_s3")
    res = condense_general(load_named("rep_s3"), None, G, table)
    assert res.condensed.rank == 1
    assert res.m.ravel().tolist() == [1, 1, 2]
    assert verify_condensation(res).ok


def test_s3_without_group_needs_input():
    from ribboncat.tannakian import GroupNeeded

    with pytest.raises(GroupNeeded):
        condense_general(load_named("rep_s3"))


def test_s3_by_sign():
    res = condense_pointed(load_named("rep_s3"), ["sgn"])
    assert res.condensed.rank == 3
    assert res.phi("std") == {"std[0]": 1, "std[1]": 1}
    assert verify_condensation(res).ok


def test_partial_centre_leaves_nontrivial_centre():
    P = deligne_product(load_named("rep_z2z2"), load_named("ising"))
    res = condense(P, ["(a,1)"])
    rep = verify_condensation(res)
    assert rep.ok
    assert not rep.t_is_full_centre
    assert len(rep.condensed_centre) == 2
    assert rep.condensed_modular is False


def test_general_rejects_group_of_wrong_order():
    spec = load_named("rep_d4")
    G, table = group_hint("rep_d4")
    with pytest.raises(errors.GroupMismatchError):
        condense_general(spec, ["a"], G, table)


def test_general_zero_admissible_factorizations_is_ambiguity(monkeypatch):
    from ribboncat import kernels

    monkeypatch.setattr(kernels, "gram_factorizations", lambda M, order, limit: ([], False))
    with pytest.raises(errors.AmbiguityError) as exc:
        condense_general(load_named("rep_z2"))
    assert exc.value.count == 0


def test_result_json_shape():
    res = condense_pointed(load_named("rep_d4"), ["a", "b", "ab"])
    assert ["sigma", "sigma", 2] in res.phi_entries()
    js = res.report.to_json()
    assert js["orbits"][1]["cocycle_class_id"] == 1
    assert js["orbits"][1]["stabilizer_table"] == [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
