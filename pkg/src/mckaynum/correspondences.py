"""Clifford-theoretic layer on top of exact character tables.

Inertia groups, the Clifford correspondence in both directions, Gallagher
multiplication and division by a linear extension, extension existence and
the p-power-order extension choice, P-invariant constituents, and the
ordinary lifts of linear Brauer characters.
"""

from .chartable import (Character, character_table, det_order, induce,
                        inner_product, linear_characters, restrict, tensor)
from .cyclotomic import Cyclotomic
from .errors import (GroupMismatch, NoExtension, NotAnExtension, NotLinear,
                     NotOverTheta, ensure)
from ._numbers import p_part
from .permgroup import (PermGroup, _group_from_elements, derived_subgroup,
                        normalizer, p_residual)


def conjugate_character(theta, g):
    """theta^g on the same normal subgroup, theta^g(n) = theta(g n g^-1).

    With this convention (theta^g)^h == theta^(g*h) for the left-to-right
    product, so checking invariance on generators suffices.
    """
    N = theta.group
    gi = ~g
    return Character(N, [theta.value(g * r * gi)
                         for r in N.conjugacy_classes().representatives])


def lies_over(chi, theta):
    """True iff theta is a constituent of chi restricted to theta's group."""
    return inner_product(restrict(chi, theta.group), theta) != 0


def inertia_group(G, N, theta):
    """The stabilizer G_theta of theta in Irr(N) under conjugation by G."""
    reps = N.conjugacy_classes().representatives
    vals = theta.values
    elems = []
    for g in G.elements():
        gi = ~g
        if all(theta.value(g * r * gi) == vals[j] for j, r in enumerate(reps)):
            elems.append(g)
    return _group_from_elements(G.degree, elems)


def clifford_up(psi, G, theta=None):
    """Induce psi from the inertia group to G.

    By Clifford correspondence the result is irreducible whenever psi lies
    over theta and psi.group is the full stabilizer of theta; irreducibility
    is asserted rather than trusted.
    """
    if theta is not None and not lies_over(psi, theta):
        raise NotOverTheta("induction source does not lie over theta")
    chi = induce(psi, G)
    ensure(inner_product(chi, chi) == 1, "clifford_up_irreducible",
           "induction from the inertia group was not irreducible")
    return chi


def clifford_down(chi, Gtheta, theta):
    """The Clifford correspondent of chi over theta.

    The unique constituent of chi restricted to Gtheta that lies over theta;
    uniqueness and the round trip back to chi are both asserted.
    """
    if not lies_over(chi, theta):
        raise NotOverTheta("character does not lie over theta")
    res = restrict(chi, Gtheta)
    found = [psi for psi in character_table(Gtheta).irreducibles
             if inner_product(res, psi) != 0 and lies_over(psi, theta)]
    ensure(len(found) == 1, "clifford_unique_constituent",
           f"expected one constituent over theta, found {len(found)}")
    psi = found[0]
    ensure(induce(psi, chi.group) == chi, "clifford_round_trip",
           "inducing the correspondent back did not recover the character")
    return psi


def gallagher_multiply(beta, gamma, N, theta=None):
    """beta*gamma for beta in Irr(G/N), inflated, and gamma extending theta."""
    gres = restrict(gamma, N)
    if theta is not None:
        if not gres == theta:
            raise NotAnExtension("gamma does not restrict to theta")
    else:
        ensure(inner_product(gres, gres) == 1, "gallagher_extension",
               "gamma does not restrict irreducibly")
    gcls = beta.group.conjugacy_classes()
    ensure(all(beta.values[gcls.index_of(n)] == beta.values[0]
               for n in N.generators), "gallagher_inflated",
           "left factor does not come from the quotient by N")
    out = tensor(beta, gamma)
    ensure(inner_product(out, out) == 1, "gallagher_irreducible",
           "Gallagher product failed to be irreducible")
    return out


def gallagher_divide(psi, gamma, N, theta=None):
    """psi times the conjugate of linear gamma; the output kills N.

    Inverse of gallagher_multiply for linear gamma, landing in Irr(G/N)
    viewed as characters of G with N in the kernel.
    """
    if not gamma.is_linear():
        raise NotLinear("Gallagher division needs a linear extension")
    if psi.group is not gamma.group:
        raise GroupMismatch("division across distinct groups")
    if theta is not None and not restrict(gamma, N) == theta:
        raise NotAnExtension("gamma does not restrict to theta")
    out = Character(psi.group, [a * b.conjugate()
                                for a, b in zip(psi.values, gamma.values)])
    gcls = psi.group.conjugacy_classes()
    ensure(all(out.values[gcls.index_of(n)] == out.values[0]
               for n in N.generators), "gallagher_kernel",
           "quotient by gamma does not kill N")
    return out


def extends_to(theta, U):
    """(True, least extension in canonical table order) or (False, None)."""
    N = theta.group
    d = theta.degree
    for chi in character_table(U).irreducibles:
        if chi.degree == d and restrict(chi, N) == theta:
            return True, chi
    return False, None


def _value_power(v, e):
    out = Cyclotomic.from_rational(1)
    base = v
    while e:
        if e & 1:
            out = out * base
        base = base * base
        e >>= 1
    return out


def p_power_order_extension(theta, U, p):
    """The linear extension of theta to U whose order is a power of p.

    Takes the least linear extension gamma0 and projects onto the p-part of
    the cyclic subgroup it generates inside the linear character group:
    gamma = gamma0^s with s = 0 mod m and s = 1 mod p^a, where
    o(gamma0) = p^a * m.  Since o(theta) is a p-power, gamma still
    restricts to theta.
    """
    if not theta.is_linear():
        raise NotLinear("p-power-order extension needs a linear character")
    ok, gamma0 = extends_to(theta, U)
    if not ok:
        raise NoExtension("character does not extend to the given overgroup")
    o = det_order(gamma0)
    a = p_part(o, p)
    m = o // a
    if m == 1:
        gamma = gamma0
    else:
        s = m * pow(m, -1, a)
        gamma = Character(U, [_value_power(v, s) for v in gamma0.values])
    ensure(restrict(gamma, theta.group) == theta, "p_part_extension_restricts",
           "p-part projection moved the restriction off theta")
    ensure(det_order(gamma) == a, "p_part_extension_order",
           "projected extension order is not the p-part")
    return gamma


def p_invariant_constituents(chi, L, P):
    """The P-invariant irreducible constituents of chi restricted to L.

    For chi of p'-degree the list is nonempty and any two members are
    N_G(P)-conjugate; both guarantees are asserted, so an empty or
    non-conjugate answer surfaces as an engine defect.
    """
    G = chi.group
    res = restrict(chi, L)
    pgens = P.generators
    found = []
    for th in character_table(L).irreducibles:
        if inner_product(res, th) == 0:
            continue
        if all(conjugate_character(th, g) == th for g in pgens):
            found.append(th)
    ensure(found, "p_invariant_exists", "no P-invariant constituent found")
    nel = normalizer(G, P).elements()
    for i in range(1, len(found)):
        ensure(any(conjugate_character(found[0], n) == found[i] for n in nel),
               "p_invariant_conjugate",
               "two P-invariant constituents are not normalizer-conjugate")
    return found


def linear_ibr_lifts(G, p):
    """Ordinary lifts of the linear Brauer characters of G.

    These are the linear chi with G' O^{p'}(G) inside ker(chi); their
    restrictions to p-regular classes are exactly the linear members of
    IBr(G) and determine the lift uniquely.  Injectivity on p-regular
    classes is asserted.
    """
    table = character_table(G)
    M = PermGroup(G.degree, derived_subgroup(G).generators
                  + p_residual(G, p).generators)
    gcls = G.conjugacy_classes()
    lifts = [ch for ch in linear_characters(table)
             if all(ch.values[gcls.index_of(x)] == ch.values[0]
                    for x in M.generators)]
    preg = [j for j, r in enumerate(gcls.representatives) if r.order() % p != 0]
    for i in range(len(lifts)):
        for j in range(i + 1, len(lifts)):
            ensure(any(not lifts[i].values[t] == lifts[j].values[t]
                       for t in preg), "brauer_lift_injective",
                   "two lifts agree on every p-regular class")
    return lifts
