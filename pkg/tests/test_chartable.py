import random
from fractions import Fraction

import pytest

from mckaynum.chartable import (Character, character_table, deflate,
                                det_order, determinant_character, induce,
                                inflate, inner_product, irr_pprime, kernel,
                                linear_characters, parse_table_exact,
                                render_table_exact, render_table_pretty,
                                restrict, restriction_bijection, tensor,
                                trivial_character)
from mckaynum.errors import GroupMismatch, GroupTooLarge, NotASubgroup
from mckaynum.permgroup import (PermGroup, parse_cycles, quotient_group,
                                sylow_subgroup)
from mckaynum.runner import orthogonality_checks

from oracles import burnside_degrees_numeric

S4_GOLDEN = """group.order = 24
group.exponent = 12
lifting.prime = 13
classes = 5
class.order = 1 2 2 3 4
class.size = 1 3 6 8 6
class.rep = () (1,2)(3,4) (3,4) (2,3,4) (1,2,3,4)
char = 1 ; 1 ; 1 ; 1 ; 1
char = 1 ; 1 ; -1 ; 1 ; -1
char = 2 ; 2 ; 0 ; -1 ; 0
char = 3 ; -1 ; 1 ; 0 ; -1
char = 3 ; -1 ; -1 ; 0 ; 1
"""


def test_degrees_match_numeric_burnside_oracle(groups):
    # brute-force floating-point degrees against the exact table
    for label, want in (("S4", [1, 1, 2, 3, 3]), ("A5", [1, 3, 3, 4, 5])):
        G = groups[label]
        assert burnside_degrees_numeric(G) == want
        t = character_table(G)
        assert sorted(ch.degree for ch in t.irreducibles) == want


def test_sum_of_squares_everywhere(groups):
    for G in groups.values():
        t = character_table(G)
        assert sum(ch.degree ** 2 for ch in t.irreducibles) == G.order


def test_orthogonality_everywhere(groups):
    for G in groups.values():
        rows_ok, cols_ok = orthogonality_checks(character_table(G))
        assert rows_ok and cols_ok


def test_canonical_order_puts_trivial_first(groups):
    for G in groups.values():
        t = character_table(G)
        assert t.irreducibles[0] == trivial_character(G)
        degs = [ch.degree for ch in t.irreducibles]
        assert degs == sorted(degs)


def test_s4_exact_dump_golden(groups):
    assert render_table_exact(character_table(groups["S4"])) == S4_GOLDEN


def test_exact_dump_parses_back(groups):
    t = character_table(groups["SL(2,3)"])
    parsed = parse_table_exact(render_table_exact(t))
    assert parsed["group.order"] == 24
    assert parsed["classes"] == 7
    assert len(parsed["rows"]) == 7
    assert parsed["class.size"] == tuple(t.classes.sizes)


def test_pretty_render_mentions_every_class(groups):
    out = render_table_pretty(character_table(groups["S3"]))
    assert "(2,3)" in out and "(1,2,3)" in out


def test_frobenius_reciprocity_random_triples(groups):
    """[theta^G, chi] == [theta, chi|_U] on 100 seeded random triples
    for every corpus group."""
    rng = random.Random(20260819)
    for label in sorted(groups):
        G = groups[label]
        table = character_table(G)
        elems = G.elements()
        cache = {}
        for _ in range(100):
            a, b = rng.choice(elems), rng.choice(elems)
            key = frozenset(G.subgroup([a, b]).element_set())
            U = cache.get(key)
            if U is None:
                U = G.subgroup([a, b])
                cache[key] = U
            tu = character_table(U)
            theta = rng.choice(tu.irreducibles)
            chi = rng.choice(table.irreducibles)
            assert (inner_product(induce(theta, G), chi)
                    == inner_product(theta, restrict(chi, U))), label


def test_induce_restrict_basics(groups):
    S4 = groups["S4"]
    A4 = S4.subgroup([parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)])
    ind = induce(trivial_character(A4), S4)
    assert ind.degree == 2
    back = restrict(ind, A4)
    assert inner_product(back, trivial_character(A4)) == 2
    with pytest.raises(NotASubgroup):
        restrict(trivial_character(S4), groups["S3"])


def test_tensor_and_linears(groups):
    S4 = groups["S4"]
    t = character_table(S4)
    sgn = t.irreducibles[1]
    assert tensor(sgn, sgn) == trivial_character(S4)
    assert len(linear_characters(t)) == 2
    for G in groups.values():
        tg = character_table(G)
        from mckaynum.permgroup import derived_subgroup
        assert len(linear_characters(tg)) == G.order // derived_subgroup(G).order


def test_irr_pprime_counts(groups):
    t = character_table(groups["S4"])
    assert [ch.degree for ch in irr_pprime(t, 2)] == [1, 1, 3, 3]
    assert [ch.degree for ch in irr_pprime(t, 3)] == [1, 1, 2]


def test_kernel_and_determinant(groups):
    S4 = groups["S4"]
    t = character_table(S4)
    sgn = t.irreducibles[1]
    ker = kernel(sgn)
    assert ker.order == 12
    assert parse_cycles("(1,2,3)", 4) in ker
    assert parse_cycles("(1,2)", 4) not in ker
    assert det_order(sgn) == 2
    assert det_order(trivial_character(S4)) == 1
    chi2 = t.irreducibles[2]
    assert determinant_character(chi2) == sgn
    assert det_order(chi2) == 2


def test_inflate_deflate_round_trip(groups):
    S4 = groups["S4"]
    V4 = S4.subgroup([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
    Q, pi = quotient_group(S4, V4)
    tq = character_table(Q)
    for chb in tq.irreducibles:
        lifted = inflate(chb, pi)
        assert lifted.degree == chb.degree
        assert deflate(lifted, pi) == chb
    with pytest.raises(GroupMismatch):
        inflate(trivial_character(S4), pi)


def test_restriction_bijection(groups):
    # S4 = V4 S3 with trivial intersection: restriction is a bijection
    # Irr(S4/V4) -> Irr(S3) preserving inner products
    S4 = groups["S4"]
    V4 = S4.subgroup([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
    H = S4.subgroup([parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)])
    pairs = restriction_bijection(S4, V4, H)
    assert len(pairs) == 3
    assert sorted(chi.degree for chi, _ in pairs) == [1, 1, 2]
    seen = []
    for chi, res in pairs:
        assert res.group is H
        assert chi.degree == res.degree
        assert inner_product(res, res) == 1
        seen.append(res)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            assert inner_product(seen[i], seen[j]) == 0


def test_character_equality_is_object_scoped(groups):
    S4 = groups["S4"]
    other = PermGroup(4, [parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)])
    assert trivial_character(S4) == trivial_character(S4)
    assert trivial_character(S4) != trivial_character(other)


def test_class_count_bound():
    C61 = PermGroup(61, [parse_cycles("(" + ",".join(str(i) for i in range(1, 62)) + ")", 61)])
    with pytest.raises(GroupTooLarge):
        character_table(C61)


def test_inner_product_orthonormality(groups):
    t = character_table(groups["F21"])
    k = len(t.irreducibles)
    for i in range(k):
        for j in range(k):
            assert inner_product(t.irreducibles[i], t.irreducibles[j]) == \
                Fraction(1 if i == j else 0)
