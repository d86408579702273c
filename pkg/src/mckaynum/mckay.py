"""Decomposition numbers for linear Brauer characters, the recursive
construction of the p'-character bijection onto the Sylow normalizer for
p-solvable groups, and the verifiers for the preservation theorem, the
orbit-counting corollary, and ingested counterexample records.
"""

from dataclasses import dataclass

from .chartable import (Character, character_table, deflate, inflate,
                        inner_product, irr_pprime, linear_characters,
                        restrict, trivial_character)
from .correspondences import (clifford_down, clifford_up, conjugate_character,
                              extends_to, gallagher_divide, gallagher_multiply,
                              inertia_group, lies_over, linear_ibr_lifts,
                              p_power_order_extension)
from .errors import (BadRecord, InconsistentDegrees, NotALift, NotPSolvable,
                     ensure)
from .permgroup import (PermGroup, centralizer_of_group, core_p, core_pprime,
                        derived_subgroup, hall_p_complement,
                        intersect_subgroups, is_p_solvable, is_subgroup,
                        normalizer, orbit_count, product_covers,
                        quotient_group, sylow_subgroup)


def decomposition_number_linear(chi, tau, G, p):
    """d_{chi,phi} for the linear Brauer character phi with ordinary lift tau.

    Computed as [chi_H, tau_H] on a Hall p-complement H; the projective
    indecomposable of a linear phi is (phi_H)^G, so this inner product is
    the decomposition number.  Independent of the choice of H.
    """
    if not is_p_solvable(G, p):
        raise NotPSolvable(f"group of order {G.order} is not {p}-solvable")
    lifts = linear_ibr_lifts(G, p)
    if not any(tau == t for t in lifts):
        raise NotALift("tau is not an ordinary lift of a linear Brauer character")
    H = hall_p_complement(G, p)
    q = inner_product(restrict(chi, H), restrict(tau, H))
    ensure(q.denominator == 1 and q >= 0, "decomposition_integral",
           f"[chi_H, tau_H] = {q} is not a nonnegative integer")
    return int(q)


@dataclass(frozen=True)
class McKayBijection:
    """A bijection Irr_p'(G) -> Irr_p'(N_G(P)) with its construction trace."""

    group: PermGroup
    prime: int
    sylow: PermGroup
    normalizer: PermGroup
    pairs: tuple
    trace: tuple


def build_bijection(G, p):
    """Run the recursive construction of the p'-character bijection.

    Base case: P normal, so N_G(P) = G and the map is the identity.
    O_p branch: split over Sylow-normalizer orbit representatives of the
    linear characters of O_p(G) that extend to P, descend through Clifford
    and Gallagher correspondences into the quotient by O_p(G), and recurse.
    O_{p'} branch: split over the linear characters of O_{p'}(G) extending
    to G, recurse once on the quotient, and pair the characters outside
    those blocks in canonical order.
    Every equality the construction relies on is asserted with a named
    anchor, so a failure pinpoints the violated step.
    """
    if not is_p_solvable(G, p):
        raise NotPSolvable(f"group of order {G.order} is not {p}-solvable")
    P = sylow_subgroup(G, p)
    ngp = normalizer(G, P)
    triples = _build(G, p, P, ngp)
    table = character_table(G)
    triples.sort(key=lambda t: table.index_of(t[0]))
    return McKayBijection(group=G, prime=p, sylow=P, normalizer=ngp,
                          pairs=tuple((c, m) for c, m, _ in triples),
                          trace=tuple(tr for _, _, tr in triples))


def _build(G, p, P, ngp):
    # returns [(chi, image, trace)] with images living on the ngp object
    table = character_table(G)
    source = irr_pprime(table, p)
    if ngp.order == G.order:
        tn = character_table(ngp)
        out = []
        for chi in source:
            vals = [chi.value(r) for r in ngp.conjugacy_classes().representatives]
            row = tn.irreducibles[tn.index_of(Character(ngp, vals))]
            out.append((chi, row, "base"))
    else:
        N = core_p(G, p)
        if N.order > 1:
            out = _branch_core_p(G, p, P, ngp, N, source, table)
        else:
            K = core_pprime(G, p)
            ensure(K.order > 1, "psolvable_radical",
                   "p-solvable group with trivial O_p and O_{p'}")
            out = _branch_core_pprime(G, p, P, ngp, K, source, table)
    target = irr_pprime(character_table(ngp), p)
    ensure(len(out) == len(source), "bijection_total",
           "some p'-character of G was not mapped")
    ensure(len(source) == len(target), "mckay_count",
           f"|Irr_p'(G)| = {len(source)} but the normalizer has {len(target)}")
    for i in range(len(out)):
        ensure(any(out[i][1] == t for t in target), "bijection_into",
               "an image is not a p'-character of the normalizer")
        for j in range(i + 1, len(out)):
            ensure(not out[i][1] == out[j][1], "bijection_injective",
                   "two characters share an image")
    return out


def _branch_core_p(G, p, P, ngp, N, source, table):
    H = hall_p_complement(G, p)
    nh = intersect_subgroups(H, ngp)
    tN = character_table(N)
    # linears of N extending to P are exactly the restrictions of Lin(P)
    cand = []
    for lam in linear_characters(character_table(P)):
        t = restrict(lam, N)
        if not any(t == c for c in cand):
            cand.append(t)
    nelems = ngp.elements()
    delta = []
    covered = [False] * len(cand)
    for i, th in enumerate(cand):
        if covered[i]:
            continue
        delta.append(th)
        for n in nelems:
            tc = conjugate_character(th, n)
            hit = next((j for j, c in enumerate(cand) if c == tc), None)
            ensure(hit is not None, "delta_orbit_closed",
                   "normalizer conjugate fell outside the extendable linears")
            covered[hit] = True
    target = irr_pprime(character_table(ngp), p)
    src_of = []
    for chi in source:
        hits = [k for k, th in enumerate(delta) if lies_over(chi, th)]
        ensure(len(hits) == 1, "block_partition_source",
               f"{len(hits)} blocks claim a p'-character of G")
        src_of.append(hits[0])
    for mu in target:
        hits = [k for k, th in enumerate(delta) if lies_over(mu, th)]
        ensure(len(hits) == 1, "block_partition_target",
               f"{len(hits)} blocks claim a p'-character of the normalizer")
    out = []
    for k, th in enumerate(delta):
        ti = tN.index_of(th)
        Gth0 = inertia_group(G, N, th)
        Gth = G if Gth0.order == G.order else Gth0
        ensure(is_subgroup(P, Gth), "sylow_in_inertia",
               "the Sylow subgroup does not stabilize theta")
        ok, _ = extends_to(th, Gth)
        ensure(ok, "theta_extends_inertia",
               "theta does not extend to its inertia group")
        gamma = p_power_order_extension(th, Gth, p)
        gi = character_table(Gth).index_of(gamma)
        ensure(product_covers(G, Gth, H), "inertia_hall_factorization",
               "G is not the product of the inertia group and the Hall complement")
        NGthP0 = normalizer(Gth, P)
        NGthP = ngp if NGthP0.order == ngp.order else NGthP0
        ensure(product_covers(ngp, NGthP, nh), "normalizer_factorization",
               "N_G(P) is not N_{G_theta}(P) N_H(P)")
        Ith = inertia_group(ngp, N, th)
        ensure(Ith.order == NGthP.order
               and all(x in Ith for x in NGthP.generators), "normalizer_inertia",
               "N_{G_theta}(P) is not the stabilizer of theta in N_G(P)")
        Q, pi = quotient_group(Gth, N)
        Pbar = PermGroup(Q.degree, tuple(pi.map(x) for x in P.generators))
        epi_n = pi.restrict(NGthP)
        nbar = epi_n.codomain
        NQ = normalizer(Q, Pbar)
        ensure(NQ.order == nbar.order
               and all(x in NQ for x in nbar.generators), "quotient_normalizer",
               "the image of N_{G_theta}(P) is not the normalizer of the image of P")
        sub = _build(Q, p, Pbar, nbar)
        gamma_n = restrict(gamma, NGthP)
        for idx, chi in enumerate(source):
            if src_of[idx] != k:
                continue
            psi = clifford_down(chi, Gth, th)
            beta = gallagher_divide(psi, gamma, N, th)
            beta_bar = deflate(beta, pi)
            img_bar = subtrace = None
            for b, im, tr in sub:
                if b == beta_bar:
                    img_bar, subtrace = im, tr
                    break
            ensure(img_bar is not None, "recursion_source_match",
                   "deflated character missing from the recursive bijection")
            lifted = inflate(img_bar, epi_n)
            prod = gallagher_multiply(lifted, gamma_n, N, th)
            image = clifford_up(prod, ngp, th)
            ensure(lies_over(image, th), "block_image",
                   "image left its theta block")
            out.append((chi, image,
                        f"Op theta=Irr(N)[{ti}] gamma=Irr(Gtheta)[{gi}]"
                        f" | {subtrace}"))
    return out


def _branch_core_pprime(G, p, P, ngp, K, source, table):
    tK = character_table(K)
    delta = []
    exts = []
    for th in linear_characters(tK):
        ok, wit = extends_to(th, G)
        if ok:
            delta.append(th)
            exts.append(wit)
    CKP = centralizer_of_group(K, P)
    NKP = intersect_subgroups(K, ngp)
    ensure(NKP.order == CKP.order and all(x in CKP for x in NKP.generators),
           "normalizer_centralizer", "N_K(P) differs from C_K(P)")
    rests = [restrict(th, CKP) for th in delta]
    for i in range(len(rests)):
        for j in range(i + 1, len(rests)):
            ensure(not rests[i] == rests[j], "delta_restriction_injective",
                   "two extendable linears agree on C_K(P)")
    Q, piK = quotient_group(G, K)
    Pbar = PermGroup(Q.degree, tuple(piK.map(x) for x in P.generators))
    M = PermGroup(G.degree, ngp.generators + K.generators)
    ensure(product_covers(M, K, ngp), "opprime_product",
           "N_G(P)K is smaller than the product order")
    epi_m = piK.restrict(M)
    mbar = epi_m.codomain
    NQ = normalizer(Q, Pbar)
    ensure(NQ.order == mbar.order and all(x in NQ for x in mbar.generators),
           "quotient_normalizer",
           "the image of N_G(P)K is not the normalizer of the image of P")
    sub = _build(Q, p, Pbar, mbar)
    target = irr_pprime(character_table(ngp), p)
    src_of = []
    for chi in source:
        hits = [k for k, th in enumerate(delta) if lies_over(chi, th)]
        ensure(len(hits) <= 1, "block_partition_source",
               "a character lies over two extendable linears")
        src_of.append(hits[0] if hits else None)
    tgt_of = []
    for mu in target:
        hits = [k for k, r in enumerate(rests) if lies_over(mu, r)]
        ensure(len(hits) <= 1, "block_partition_target",
               "a normalizer character lies over two restricted linears")
        tgt_of.append(hits[0] if hits else None)
    out = []
    for k, th in enumerate(delta):
        gamma = exts[k]
        ti = tK.index_of(th)
        gi = table.index_of(gamma)
        gamma_n = restrict(gamma, ngp)
        th_c = rests[k]
        for idx, chi in enumerate(source):
            if src_of[idx] != k:
                continue
            beta = gallagher_divide(chi, gamma, K, th)
            beta_bar = deflate(beta, piK)
            img_bar = subtrace = None
            for b, im, tr in sub:
                if b == beta_bar:
                    img_bar, subtrace = im, tr
                    break
            ensure(img_bar is not None, "recursion_source_match",
                   "deflated character missing from the recursive bijection")
            lifted = inflate(img_bar, epi_m)
            res = restrict(lifted, ngp)
            ensure(inner_product(res, res) == 1, "opprime_restriction_irreducible",
                   "restriction along N_G(P)K = K N_G(P) was not irreducible")
            image = gallagher_multiply(res, gamma_n, CKP, th_c)
            ensure(lies_over(image, th_c), "block_image",
                   "image left its theta block")
            out.append((chi, image,
                        f"Opp theta=Irr(K)[{ti}] gamma=Irr(G)[{gi}]"
                        f" | {subtrace}"))
    left_src = [chi for idx, chi in enumerate(source) if src_of[idx] is None]
    left_tgt = [mu for jdx, mu in enumerate(target) if tgt_of[jdx] is None]
    ensure(len(left_src) == len(left_tgt), "leftover_sizes",
           f"{len(left_src)} unmatched characters of G"
           f" vs {len(left_tgt)} of the normalizer")
    for chi, mu in zip(left_src, left_tgt):
        out.append((chi, mu, "Opp leftover canonical-order"))
    return out


def _agrees_on_p_regular(a, b, p):
    cls = a.group.conjugacy_classes()
    return all(a.values[j] == b.values[j]
               for j, r in enumerate(cls.representatives) if r.order() % p != 0)


def verify_theorem_a(G, p):
    """Check d_{chi,phi} == d_{f(chi),phi'} over all pairs.

    f is the constructed bijection, phi runs over the linear Brauer
    characters of G via their ordinary lifts, and phi' is the lift on the
    normalizer side matching tau on p-regular classes.
    """
    bij = build_bijection(G, p)
    ngp = bij.normalizer
    table = character_table(G)
    tn = character_table(ngp)
    lifts_g = linear_ibr_lifts(G, p)
    lifts_n = linear_ibr_lifts(ngp, p)
    H_n = hall_p_complement(ngp, p)
    checks = []
    allok = True
    for tau in lifts_g:
        res = restrict(tau, ngp)
        match = [t for t in lifts_n if _agrees_on_p_regular(t, res, p)]
        ensure(len(match) == 1, "brauer_restriction_unique",
               f"{len(match)} lifts agree with tau on p-regular classes")
        tau_n = match[0]
        ensure(restrict(tau_n, H_n) == restrict(res, H_n),
               "hall_restriction_consistent",
               "matched lift differs from tau on the Hall complement")
        ti = table.index_of(tau)
        for chi, img in bij.pairs:
            a = decomposition_number_linear(chi, tau, G, p)
            b = decomposition_number_linear(img, tau_n, ngp, p)
            eq = a == b
            allok = allok and eq
            checks.append({
                "chi": table.index_of(chi), "chi_degree": chi.degree,
                "image": tn.index_of(img), "tau": ti,
                "d_group": a, "d_normalizer": b, "equal": eq,
            })
    return {"group_order": G.order, "prime": p,
            "normalizer_order": ngp.order,
            "pairs": len(bij.pairs), "lifts": len(lifts_g),
            "checks": checks, "all_equal": allok}


def verify_corollary_b(G, p):
    """Check the d_{chi,1} column is 0/1-valued and count its ones.

    The count must equal the number of orbits of N_G(P) on P/P', and by
    the permutation-character argument also the number of orbits on the
    linear characters of P; both equalities are reported.
    """
    if not is_p_solvable(G, p):
        raise NotPSolvable(f"group of order {G.order} is not {p}-solvable")
    table = character_table(G)
    triv = linear_ibr_lifts(G, p)[0]
    ensure(triv == trivial_character(G), "trivial_lift_first",
           "canonical order did not put the trivial lift first")
    column = [decomposition_number_linear(chi, triv, G, p)
              for chi in irr_pprime(table, p)]
    binary = all(v in (0, 1) for v in column)
    ones = sum(1 for v in column if v == 1)
    P = sylow_subgroup(G, p)
    ngp = normalizer(G, P)
    QP, piP = quotient_group(P, derived_subgroup(P))
    orb_elems = orbit_count(ngp, QP.elements(),
                            lambda x, n: piP.map(piP.preimage(x).conj(n)))
    lam_dom = linear_characters(character_table(P))
    orb_chars = orbit_count(ngp, lam_dom, conjugate_character)
    return {"group_order": G.order, "prime": p, "column": column,
            "binary": binary, "ones": ones,
            "orbits_on_quotient": orb_elems,
            "orbits_on_linears": orb_chars,
            "count_matches": ones == orb_elems,
            "brauer_lemma_matches": orb_elems == orb_chars,
            "ok": binary and ones == orb_elems and orb_elems == orb_chars}


@dataclass(frozen=True)
class DecompositionRecord:
    """An ingested decomposition matrix: degrees plus nonnegative entries."""

    label: str
    prime: int
    ordinary: tuple
    brauer: tuple
    matrix: tuple
    provenance: str = "ingested"


def counterexample_check(record, mode, group=None):
    """Check an ingested decomposition matrix against one of three claims.

    no-equality: the d_{.,1} multiset over p'-degree rows differs from the
    computed multiset on the Sylow-normalizer side, so no bijection can
    preserve the column.  ge-exists: some bijection satisfies
    d_{chi,1} >= d_{f(chi),1} (dominance matching on sorted multisets).
    zero-exists: some p'-degree row has d_{chi,1} == 0; pure record scan,
    no group needed.
    """
    if mode not in ("no-equality", "ge-exists", "zero-exists"):
        raise ValueError(f"unknown mode {mode!r}")
    p = record.prime
    rows = len(record.ordinary)
    if len(record.matrix) != rows:
        raise BadRecord("matrix row count differs from ordinary degree count")
    for row in record.matrix:
        if len(row) != len(record.brauer):
            raise BadRecord("matrix width differs from Brauer degree count")
        if any((not isinstance(e, int)) or e < 0 for e in row):
            raise BadRecord("matrix entries must be nonnegative integers")
    if not record.brauer or record.brauer[0] != 1:
        raise BadRecord("first Brauer column must be the trivial character")
    for i in range(rows):
        total = sum(e * d for e, d in zip(record.matrix[i], record.brauer))
        if total != record.ordinary[i]:
            raise BadRecord(f"row {i} sums to {total},"
                            f" expected {record.ordinary[i]}")
    rec_col = [record.matrix[i][0] for i in range(rows)
               if record.ordinary[i] % p != 0]
    report = {"mode": mode, "label": record.label, "prime": p,
              "record_column": rec_col}
    if mode == "zero-exists":
        ok = any(v == 0 for v in rec_col)
        report.update(computed_column=None, ok=ok,
                      detail="a p'-degree row with d == 0 exists" if ok
                      else "every p'-degree row has d != 0")
        return report
    if group is None:
        raise BadRecord(f"mode {mode} needs a group for the normalizer side")
    table = character_table(group)
    if sorted(ch.degree for ch in table.irreducibles) != sorted(record.ordinary):
        raise InconsistentDegrees("record degrees disagree with the"
                                  " computed character table")
    P = sylow_subgroup(group, p)
    ngp = normalizer(group, P)
    ensure(is_p_solvable(ngp, p), "normalizer_p_solvable",
           "the Sylow normalizer must be p-solvable")
    triv = linear_ibr_lifts(ngp, p)[0]
    comp_col = [decomposition_number_linear(mu, triv, ngp, p)
                for mu in irr_pprime(character_table(ngp), p)]
    report["computed_column"] = comp_col
    if mode == "no-equality":
        ok = sorted(rec_col) != sorted(comp_col)
        detail = ("d-column multisets differ" if ok
                  else "d-column multisets coincide")
    else:
        a = sorted(rec_col, reverse=True)
        b = sorted(comp_col, reverse=True)
        ok = len(a) == len(b) and all(x >= y for x, y in zip(a, b))
        detail = ("dominance matching exists" if ok
                  else "no dominance matching exists")
    report.update(ok=ok, detail=detail)
    return report
