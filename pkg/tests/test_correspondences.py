import pytest

from mckaynum.chartable import (character_table, det_order, inner_product,
                                linear_characters, restrict,
                                trivial_character)
from mckaynum.correspondences import (clifford_down, clifford_up,
                                      conjugate_character, extends_to,
                                      gallagher_divide, gallagher_multiply,
                                      inertia_group, lies_over,
                                      linear_ibr_lifts,
                                      p_invariant_constituents,
                                      p_power_order_extension)
from mckaynum.errors import (NoExtension, NotAnExtension, NotLinear,
                             NotOverTheta)
from mckaynum.permgroup import core_p, core_pprime, sylow_subgroup


def test_conjugate_character_is_right_action(groups):
    S4 = groups["S4"]
    V4 = core_p(S4, 2)
    theta = linear_characters(character_table(V4))[1]
    g = S4.elements()[5]
    h = S4.elements()[17]
    lhs = conjugate_character(conjugate_character(theta, g), h)
    rhs = conjugate_character(theta, g * h)
    assert lhs == rhs
    # conjugating by an element of V4 itself fixes every linear character
    for n in V4.elements():
        assert conjugate_character(theta, n) == theta


def test_inertia_groups(groups):
    SL23 = groups["SL(2,3)"]
    Q8 = core_pprime(SL23, 3)
    assert Q8.order == 8
    tq = character_table(Q8)
    for theta in linear_characters(tq):
        I = inertia_group(SL23, Q8, theta)
        if theta == trivial_character(Q8):
            assert I.order == 24
        else:
            # the three nontrivial linears form one orbit of the C3 on top
            assert I.order == 8
    A4 = groups["A4"]
    V4 = core_p(A4, 2)
    orders = sorted(inertia_group(A4, V4, th).order
                    for th in linear_characters(character_table(V4)))
    assert orders == [4, 4, 4, 12]


def test_clifford_round_trip(groups):
    SL23 = groups["SL(2,3)"]
    Q8 = core_pprime(SL23, 3)
    theta = [th for th in linear_characters(character_table(Q8))
             if th != trivial_character(Q8)][0]
    # inertia group is Q8 itself, so induction is already irreducible
    chi = clifford_up(theta, SL23, theta)
    assert chi.degree == 3
    assert lies_over(chi, theta)
    back = clifford_down(chi, Q8, theta)
    assert back == theta
    with pytest.raises(NotOverTheta):
        clifford_down(trivial_character(SL23), Q8, theta)
    with pytest.raises(NotOverTheta):
        clifford_up(trivial_character(Q8), SL23, theta)


def test_clifford_inertia_equals_group(groups):
    SL23 = groups["SL(2,3)"]
    Q8 = core_pprime(SL23, 3)
    # a degree-2 character of SL(2,3) lies over the degree-2 of Q8,
    # whose inertia group is all of SL(2,3): down has to pick chi itself
    t = character_table(SL23)
    tq = character_table(Q8)
    theta = [th for th in tq.irreducibles if th.degree == 2][0]
    chi = [c for c in t.irreducibles if c.degree == 2][0]
    assert lies_over(chi, theta)
    assert clifford_down(chi, SL23, theta) == chi


def test_gallagher_round_trip_cyclic(groups):
    C6 = groups["C6"]
    C2 = sylow_subgroup(C6, 2)
    theta = [th for th in linear_characters(character_table(C2))
             if th != trivial_character(C2)][0]
    ok, gamma = extends_to(theta, C6)
    assert ok
    for beta in linear_characters(character_table(C6)):
        if det_order(beta) in (1, 3):
            # beta is inflated from C6/C2 = C3
            psi = gallagher_multiply(beta, gamma, C2, theta)
            assert restrict(psi, C2) == theta
            assert gallagher_divide(psi, gamma, C2, theta) == beta
    with pytest.raises(NotAnExtension):
        gallagher_multiply(trivial_character(C6), trivial_character(C6),
                           C2, theta)
    chi2 = [c for c in character_table(groups["S4"]).irreducibles
            if c.degree == 2][0]
    with pytest.raises(NotLinear):
        gallagher_divide(chi2, chi2, core_p(groups["S4"], 2))


def test_gallagher_nonabelian_block(groups):
    H = groups["Hess216"]
    N = core_p(H, 3)
    assert N.order == 9
    theta = [th for th in linear_characters(character_table(N))
             if th != trivial_character(N)][0]
    I = inertia_group(H, N, theta)
    assert I.order == 27
    ok, gamma = extends_to(theta, I)
    assert ok
    ti = character_table(I)
    ncls = I.conjugacy_classes()
    betas = [b for b in linear_characters(ti)
             if all(b.values[ncls.index_of(n)] == b.values[0]
                    for n in N.generators)]
    assert len(betas) == 3
    seen = []
    for beta in betas:
        psi = gallagher_multiply(beta, gamma, N, theta)
        assert restrict(psi, N) == theta
        assert gallagher_divide(psi, gamma, N, theta) == beta
        seen.append(psi)
    # distinct beta give distinct products
    assert all(not seen[i] == seen[j]
               for i in range(3) for j in range(i + 1, 3))


def test_extends_to(groups):
    SL23 = groups["SL(2,3)"]
    Q8 = core_pprime(SL23, 3)
    for theta in linear_characters(character_table(Q8)):
        ok, wit = extends_to(theta, SL23)
        if theta == trivial_character(Q8):
            assert ok and wit.degree == 1
        else:
            assert not ok and wit is None
    D8 = groups["D8"]
    from mckaynum.permgroup import parse_cycles
    V4 = D8.subgroup([parse_cycles("(1,3)(2,4)", 4), parse_cycles("(1,3)", 4)])
    assert V4.order == 4
    extendable = 0
    for theta in linear_characters(character_table(V4)):
        ok, wit = extends_to(theta, D8)
        if ok:
            extendable += 1
            assert restrict(wit, V4) == theta
    # exactly the two linears trivial on the rotation square extend
    assert extendable == 2


def test_p_power_order_extension(groups):
    C4 = sylow_subgroup(groups["Dic3"], 2)
    assert C4.order == 4 and C4.is_abelian()
    C2 = C4.subgroup([g for g in C4.elements() if g.order() == 2])
    theta = [th for th in linear_characters(character_table(C2))
             if th != trivial_character(C2)][0]
    gamma = p_power_order_extension(theta, C4, 2)
    assert restrict(gamma, C2) == theta
    assert det_order(gamma) == 4
    C6 = groups["C6"]
    C2b = sylow_subgroup(C6, 2)
    thetab = [th for th in linear_characters(character_table(C2b))
              if th != trivial_character(C2b)][0]
    gammab = p_power_order_extension(thetab, C6, 2)
    assert restrict(gammab, C2b) == thetab
    assert det_order(gammab) == 2
    SL23 = groups["SL(2,3)"]
    Q8 = core_pprime(SL23, 3)
    bad = [th for th in linear_characters(character_table(Q8))
           if th != trivial_character(Q8)][0]
    with pytest.raises(NoExtension):
        p_power_order_extension(bad, SL23, 2)
    with pytest.raises(NotLinear):
        two = [c for c in character_table(Q8).irreducibles if c.degree == 2][0]
        p_power_order_extension(two, SL23, 2)


def test_p_invariant_constituents(groups):
    A4 = groups["A4"]
    V4 = core_p(A4, 2)
    P = sylow_subgroup(A4, 2)
    chi3 = [c for c in character_table(A4).irreducibles if c.degree == 3][0]
    found = p_invariant_constituents(chi3, V4, P)
    assert len(found) == 3
    assert all(th.degree == 1 for th in found)
    S4 = groups["S4"]
    sgn = character_table(S4).irreducibles[1]
    V4s = core_p(S4, 2)
    Ps = sylow_subgroup(S4, 2)
    found_s = p_invariant_constituents(sgn, V4s, Ps)
    assert found_s == [trivial_character(V4s)]
    whole = p_invariant_constituents(sgn, S4, Ps)
    assert whole == [sgn]


def test_linear_ibr_lifts(groups):
    S4 = groups["S4"]
    assert len(linear_ibr_lifts(S4, 2)) == 1
    lifts3 = linear_ibr_lifts(S4, 3)
    assert len(lifts3) == 2
    assert lifts3[0] == trivial_character(S4)
    assert len(linear_ibr_lifts(groups["Q8"], 2)) == 1
    assert len(linear_ibr_lifts(groups["A4"], 2)) == 3
    assert len(linear_ibr_lifts(groups["A4"], 3)) == 1
    # lifts are honest linear characters restricting injectively to
    # p-regular classes; for C6 at p = 2 both odd-order linears survive
    assert len(linear_ibr_lifts(groups["C6"], 2)) == 3
    assert len(linear_ibr_lifts(groups["C6"], 3)) == 2
