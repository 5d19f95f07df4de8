import random
from fractions import Fraction

import pytest

from cherednik_lab.coxeter import CParameter, CapabilityError, build_group
from cherednik_lab.exact import identity_matrix, mat_mul


GROUPS = {}


def group(type_, n=None, m=None):
    key = (type_, n, m)
    if key not in GROUPS:
        GROUPS[key] = build_group(type_, n=n, m=m)
    return GROUPS[key]


@pytest.mark.parametrize("type_,n,m,order,num_refl,h,degrees", [
    ("A", 3, None, 6, 3, 3, (2, 3)),
    ("A", 4, None, 24, 6, 4, (2, 3, 4)),
    ("B", 2, None, 8, 4, 4, (2, 4)),
    ("B", 3, None, 48, 9, 6, (2, 4, 6)),
    ("B", 4, None, 384, 16, 8, (2, 4, 6, 8)),
    ("D", 4, None, 192, 12, 6, (2, 4, 4, 6)),
    ("I2", None, 6, 12, 6, 6, (2, 6)),
])
def test_group_numerology(type_, n, m, order, num_refl, h, degrees):
    g = group(type_, n, m)
    assert g.order == order
    assert g.num_reflections == num_refl
    assert g.coxeter_number == h
    assert g.degrees == degrees
    assert 2 * g.num_reflections == h * g.ell
    prod = 1
    for d in g.degrees:
        prod *= d
    assert prod == order


def test_b2_reflection_classes():
    g = group("B", 2)
    assert sorted(len(c) for c in g.reflection_classes) == [2, 2]
    assert set(g.reflection_class_tags) == {"c1", "c2"}


def test_reflections_are_involutions_fixing_hyperplane():
    for key in (("A", 3, None), ("B", 2, None), ("I2", None, 6)):
        g = group(*key)
        for refl in g.reflections:
            assert g.multiply(refl.element, refl.element) == g.identity_index
            mat = g.elements[refl.element]
            image = [sum(Fraction(mat[i][j]) * refl.root[j] for j in range(g.ell))
                     for i in range(g.ell)]
            assert image == [-Fraction(x) for x in refl.root]
            pairing = sum(Fraction(a) * Fraction(b)
                          for a, b in zip(refl.coroot, refl.root))
            assert pairing == 2
            assert g.fix_dimension(refl.element) == g.ell - 1


def test_reflection_classes_conjugation_closed():
    g = group("B", 3)
    rng = random.Random(3)
    for refl in g.reflections:
        for _ in range(4):
            w = rng.randrange(g.order)
            wi = g.inverse_index(w)
            conj = g.multiply(g.multiply(w, refl.element), wi)
            pos = g.reflection_of_element[conj]
            assert g.reflections[pos].class_index == refl.class_index


def test_exterior_power_dims_and_edges():
    g = group("A", 4)
    assert g.exterior_power(0).dim == 1
    assert all(g.exterior_power(0).class_trace(ci) == 1
               for ci in range(len(g.classes)))
    top = g.exterior_power(g.ell)
    sgn = g.sign_rep()
    for ci in range(len(g.classes)):
        assert top.class_trace(ci) == sgn.class_trace(ci)
    for refl in g.reflections[:2]:
        assert top.trace(refl.element) == -1
    with pytest.raises(ValueError):
        g.exterior_power(g.ell + 1)


def test_exterior_trace_is_elementary_symmetric():
    g = group("B", 3)
    for ci in range(len(g.classes)):
        w = g.class_reps[ci]
        dfac = g.det_factor(w)  # det(1 - t w) = sum (-1)^k e_k t^k
        for i in range(g.ell + 1):
            e_i = (-1) ** i * dfac[i]
            assert g.exterior_power(i).trace(w) == e_i


def test_three_cycle_trace_on_reflection_rep():
    g = group("A", 3)
    for ci in range(len(g.classes)):
        if g.element_order(g.class_reps[ci]) == 3:
            assert g.reflection_rep().class_trace(ci) == -1


def test_homomorphism_property_all_reps():
    g = group("A", 4)
    for rep in [g.trivial_rep(), g.sign_rep(), g.exterior_power(1),
                g.exterior_power(2), g.partition_rep((2, 2)),
                g.partition_rep((2, 1, 1))]:
        assert rep.check_homomorphism()


def test_p_function_values():
    g = group("A", 3)
    assert g.p_function(g.trivial_rep()) == g.num_reflections
    assert g.p_function(g.sign_rep()) == -g.num_reflections
    for i in range(g.ell + 1):
        assert (g.p_function(g.exterior_power(i))
                == g.num_reflections - g.coxeter_number * i)
    # reflection rep of S_3: p = 0
    assert g.p_function(g.reflection_rep()) == 0


def test_p_integral_on_all_s4_irreducibles():
    g = group("A", 4)
    for rep in g.irreducible_reps():
        for rc in range(len(g.reflection_classes)):
            g.p_class(rc, rep)  # raises if non-integral


def test_kappa_values():
    g = group("A", 3)
    c = CParameter.constant(g, Fraction(1, 3))
    assert g.kappa(c, g.trivial_rep()) == 0
    c2 = CParameter.constant(g, Fraction(2, 3))
    ks = [g.kappa(c2, g.exterior_power(i)) for i in range(g.ell + 1)]
    assert all(ks[i] < ks[i + 1] for i in range(len(ks) - 1))


def test_kappa_b2_parameters():
    g = group("B", 2)
    cp = CParameter.of(g, c1=Fraction(1, 2), c2=Fraction(1))
    # kappa(triv) = 1 - (2 c1 + 2 c2)
    assert g.kappa(cp, g.trivial_rep()) == 1 - (2 * Fraction(1, 2) + 2)


def test_det_factor_identity_and_coxeter_cycle():
    g = group("A", 4)
    ident = g.identity_index
    assert list(g.det_factor(ident)) == [1, -3, 3, -1]
    assert g.fix_dimension(ident) == g.ell
    for ci in range(len(g.classes)):
        w = g.class_reps[ci]
        if g.element_order(w) == 4:  # 4-cycle in S_4
            assert list(g.det_factor(w)) == [1, 1, 1, 1]
            assert g.fix_dimension(w) == 0


def test_character_orthogonality_s4():
    g = group("A", 4)
    reps = g.irreducible_reps()
    for a in reps:
        for b in reps:
            s = sum(g.class_sizes[ci] * a.class_trace(ci) * b.class_trace(ci)
                    for ci in range(len(g.classes)))
            assert s == (g.order if a.name == b.name else 0)


def test_epsilon_character_b():
    g = group("B", 3)
    eps = g.epsilon_character([1, 1, -1], name="eps")
    vals = eps.reflection_class_values()
    tags = {g.reflection_class_tags[rc]: v for rc, v in vals.items()}
    assert tags == {"c1": 1, "c2": -1}
    with pytest.raises(ValueError):
        # swapping adjacent braid-linked generator signs is inconsistent
        group("A", 3).epsilon_character([1, -1])


def test_capability_errors():
    with pytest.raises(CapabilityError):
        build_group("I2", m=5)
    with pytest.raises(CapabilityError):
        build_group("A", n=9)
    with pytest.raises(CapabilityError):
        build_group("E", n=6)


def test_cparameter_twist():
    g = group("B", 2)
    cp = CParameter.of(g, c1=Fraction(1, 2), c2=Fraction(1))
    eps = g.epsilon_character([1, -1] if g.reflection_class_tags[0] == "c1"
                              else [-1, 1], name="eps")
    # generator order: two transposition-type then the sign flip; build from tags
    gen_values = []
    for gi in range(len(g.gens)):
        ei = g.gen_indices[gi]
        pos = g.reflection_of_element[ei]
        tag = g.reflection_class_tags[g.reflections[pos].class_index]
        gen_values.append(1 if tag == "c1" else -1)
    eps = g.epsilon_character(gen_values, name="eps")
    twisted = cp.twist(eps)
    tags = {g.reflection_class_tags[rc]: v for rc, v in twisted.by_class.items()}
    assert tags["c1"] == Fraction(1, 2)
    assert tags["c2"] == -1
