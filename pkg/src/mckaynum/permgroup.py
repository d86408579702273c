"""Finite permutation groups with deterministic structure algorithms.

Points are 0-based internally; all textual I/O (cycle notation, reports) is
1-based.  Composition is left-to-right: (p * q) applies p first, then q, so
(p * q)(i) == q(p(i)).  Conjugation x.conj(g) == ~g * x * g, giving the right
action (x^g)^h == x^(g*h).

Everything is exact and deterministic: groups carry a base and strong
generating set built by the classic Schreier-Sims procedure with a fixed
processing order, element enumeration is breadth-first closure (capped),
and every derived object (classes, subgroups, quotients) is produced in a
canonical order so repeated runs agree byte for byte.
"""

import os
from math import lcm

from ._numbers import is_prime, p_part
from .errors import (
    CycleOutOfRange,
    GroupTooLarge,
    MalformedPermutation,
    NotASubgroup,
    NotNormal,
    NotPSolvable,
    ensure,
)

_DEFAULT_CAP = 100000


def _enum_cap():
    # configurable so oversized inputs fail fast instead of thrashing
    return int(os.environ.get("MCKAYNUM_MAX_ELEMENTS", str(_DEFAULT_CAP)))


class Permutation:
    """A permutation of {0..n-1} stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                raise MalformedPermutation(f"image list {images!r} is not a bijection")
            seen[i] = True
        self.images = images

    @classmethod
    def _raw(cls, images):
        # fast path for products of already-validated permutations
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        a, b = self.images, other.images
        if len(a) != len(b):
            raise MalformedPermutation("degree mismatch in product")
        return Permutation._raw(tuple(b[x] for x in a))

    def __invert__(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, n):
        if n < 0:
            return (~self) ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, g):
        return ~g * self * g

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        return lcm(*(len(c) for c in self.cycles()))

    def cycles(self):
        """Nontrivial cycles as 0-based tuples, each starting at its least
        point, sorted by least point."""
        out = []
        done = [False] * len(self.images)
        for start in range(len(self.images)):
            if done[start] or self.images[start] == start:
                done[start] = True
                continue
            cyc = [start]
            done[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                done[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __le__(self, other):
        return self.images <= other.images

    def __repr__(self):
        return f"Permutation[{render_cycles(self)}]"


def parse_cycles(text, degree):
    """Parse 1-based cycle notation like "(1,2)(3,4,5)" into a Permutation.

    Cycles need not be disjoint; they multiply left to right.  "()" and the
    empty string denote the identity.
    """
    s = text.replace(" ", "")
    result = Permutation.identity(degree)
    if s in ("", "()"):
        return result
    pos = 0
    while pos < len(s):
        if s[pos] != "(":
            raise MalformedPermutation(f"expected '(' at position {pos} in {text!r}")
        end = s.find(")", pos)
        if end < 0:
            raise MalformedPermutation(f"unclosed cycle in {text!r}")
        body = s[pos + 1 : end]
        pos = end + 1
        if not body:
            continue
        points = []
        for tok in body.split(","):
            if not tok.isdigit():
                raise MalformedPermutation(f"bad point {tok!r} in {text!r}")
            pt = int(tok)
            if not 1 <= pt <= degree:
                raise CycleOutOfRange(f"point {pt} outside 1..{degree}")
            points.append(pt - 1)
        if len(set(points)) != len(points):
            raise MalformedPermutation(f"repeated point in cycle {body!r}")
        images = list(range(degree))
        for i, pt in enumerate(points):
            images[pt] = points[(i + 1) % len(points)]
        result = result * Permutation._raw(tuple(images))
    return result


def render_cycles(p):
    """Canonical 1-based cycle string; identity renders as "()"."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycs)


class ConjugacyClasses:
    """Conjugacy classes in canonical order: by element order, then class
    size, then lexicographically least member.  Identity class is first."""

    __slots__ = ("representatives", "sizes", "class_index")

    def __init__(self, representatives, sizes, class_index):
        self.representatives = tuple(representatives)
        self.sizes = tuple(sizes)
        self.class_index = class_index

    def __len__(self):
        return len(self.representatives)

    def index_of(self, g):
        return self.class_index[g]


class PermGroup:
    """Group generated by permutations of a fixed degree.

    Instances are immutable after construction; order, elements, classes and
    the character table are computed lazily and cached.  Identity of the
    Python object matters for caches, so derived subgroups are reused rather
    than rebuilt where possible.
    """

    def __init__(self, degree, generators=()):
        self.degree = degree
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise MalformedPermutation(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if not g.is_identity():
                gens.append(g)
        self.generators = tuple(gens)
        self._bsgs = None
        self._order = None
        self._elements = None
        self._elemset = None
        self._classes = None
        self._table = None
        self._cache = {}

    # ----- base and strong generating set -----

    def _ensure_bsgs(self):
        if self._bsgs is None:
            base, transversals = _schreier_sims(self.degree, self.generators)
            self._bsgs = (base, transversals)
            order = 1
            for t in transversals:
                order *= len(t)
            if self._order is None:
                self._order = order
            else:
                ensure(self._order == order, "bsgs_order",
                       f"bsgs order {order} != cached order {self._order}")
        return self._bsgs

    @property
    def order(self):
        if self._order is None:
            self._ensure_bsgs()
        return self._order

    def _sift(self, g):
        base, transversals = self._ensure_bsgs()
        h = g
        for i, b in enumerate(base):
            x = h.images[b]
            t = transversals[i]
            if x not in t:
                return h, i
            h = h * ~t[x]
        return h, len(base)

    def __contains__(self, g):
        if not isinstance(g, Permutation) or g.degree != self.degree:
            return False
        h, _ = self._sift(g)
        return h.is_identity()

    # ----- element enumeration -----

    def elements(self):
        """All elements, sorted by image tuple, via breadth-first closure.

        The closure count is checked against the bsgs order every time, so
        the two independent order computations cross-validate on every group
        the engine ever enumerates.
        """
        if self._elements is None:
            cap = _enum_cap()
            idp = Permutation.identity(self.degree)
            seen = {idp}
            frontier = [idp]
            while frontier:
                new = []
                for x in frontier:
                    for g in self.generators:
                        y = x * g
                        if y not in seen:
                            if len(seen) >= cap:
                                raise GroupTooLarge(
                                    f"more than {cap} elements (cap via "
                                    f"MCKAYNUM_MAX_ELEMENTS)")
                            seen.add(y)
                            new.append(y)
                frontier = new
            elems = tuple(sorted(seen))
            ensure(len(elems) == self.order, "bsgs_vs_closure",
                   f"closure found {len(elems)} elements, bsgs order {self.order}")
            self._elements = elems
            self._elemset = frozenset(elems)
        return self._elements

    def element_set(self):
        if self._elemset is None:
            self.elements()
        return self._elemset

    def is_trivial(self):
        return self.order == 1

    def is_abelian(self):
        gs = self.generators
        return all(a * b == b * a for a in gs for b in gs)

    def conjugacy_classes(self):
        if self._classes is None:
            elems = self.elements()
            assigned = set()
            raw = []
            for x in elems:
                if x in assigned:
                    continue
                # x is the lex-least member of its class since elems is sorted
                orbit = {x}
                stack = [x]
                while stack:
                    y = stack.pop()
                    for g in self.generators:
                        z = y.conj(g)
                        if z not in orbit:
                            orbit.add(z)
                            stack.append(z)
                assigned |= orbit
                raw.append((x.order(), len(orbit), x, orbit))
            raw.sort(key=lambda r: (r[0], r[1], r[2].images))
            reps = [r[2] for r in raw]
            sizes = [r[1] for r in raw]
            index = {}
            for i, r in enumerate(raw):
                for y in r[3]:
                    index[y] = i
            ensure(sum(sizes) == self.order, "class_sizes_sum",
                   f"class sizes {sizes} do not sum to {self.order}")
            self._classes = ConjugacyClasses(reps, sizes, index)
        return self._classes

    def subgroup(self, generators):
        return PermGroup(self.degree, generators)

    def conjugated(self, g):
        """The subgroup self^g of whatever group both live in."""
        return PermGroup(self.degree, tuple(x.conj(g) for x in self.generators))

    def __repr__(self):
        order = self._order if self._order is not None else "?"
        return f"<PermGroup degree {self.degree} order {order}>"


def _schreier_sims(degree, generators):
    """Deterministic Schreier-Sims: returns (base, transversals).

    Transversal i maps each point in the orbit of base[i] (under the level-i
    strong generators) to a permutation carrying base[i] to that point.
    Generators and orbit points are always processed in a fixed order.
    """
    idp = Permutation.identity(degree)
    gens = [g for g in generators if not g.is_identity()]
    base = []
    sgens = []
    transversals = []

    def least_moved(g):
        for x in range(degree):
            if g.images[x] != x:
                return x
        raise AssertionError("identity escaped filtering")

    def recompute(i):
        b = base[i]
        t = {b: idp}
        frontier = [b]
        while frontier:
            new = []
            for x in frontier:
                u = t[x]
                for s in sgens[i]:
                    y = s.images[x]
                    if y not in t:
                        t[y] = u * s
                        new.append(y)
            frontier = new
        transversals[i] = t

    for g in gens:
        if all(g.images[b] == b for b in base):
            base.append(least_moved(g))
    for i in range(len(base)):
        sgens.append([g for g in gens if all(g.images[b] == b for b in base[:i])])
        transversals.append(None)
        recompute(i)

    def sift_from(g, start):
        h = g
        for j in range(start, len(base)):
            x = h.images[base[j]]
            if x not in transversals[j]:
                return h, j
            h = h * ~transversals[j][x]
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        restart = False
        t = transversals[i]
        for x in sorted(t):
            u = t[x]
            for s in sgens[i]:
                y = s.images[x]
                schreier = u * s * ~t[y]
                if schreier.is_identity():
                    continue
                h, j = sift_from(schreier, i + 1)
                if h.is_identity():
                    continue
                # new strong generator fixing base[:j]
                if j == len(base):
                    base.append(least_moved(h))
                    sgens.append([])
                    transversals.append(None)
                for k in range(i + 1, j + 1):
                    sgens[k].append(h)
                    recompute(k)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return base, transversals


def build_bsgs(generators, degree):
    """Construct a group and force its base and strong generating set."""
    G = PermGroup(degree, generators)
    G._ensure_bsgs()
    return G


def trivial_group(degree):
    return PermGroup(degree, ())


def _closure_set(degree, gens):
    idp = Permutation.identity(degree)
    seen = {idp}
    frontier = [idp]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def _group_from_elements(degree, elems):
    """Build a group from a full element list using a greedy generating set.

    The input must be closed under the group operations; this is verified by
    the final closure size check.
    """
    target = sorted(set(elems))
    n = len(target)
    tset = set(target)
    gens = []
    cur = {Permutation.identity(degree)}
    for x in target:
        if x in cur:
            continue
        gens.append(x)
        cur = _closure_set(degree, gens)
        ensure(cur <= tset, "element_set_closed",
               "element list is not closed under multiplication")
        if len(cur) == n:
            break
    ensure(len(cur) == n, "element_set_closed",
           "element list is not closed under multiplication")
    G = PermGroup(degree, gens)
    G._elements = tuple(target)
    G._elemset = frozenset(tset)
    return G


def is_subgroup(U, G):
    return U.degree == G.degree and all(u in G for u in U.generators)


def intersect_subgroups(A, B):
    small, big = (A, B) if A.order <= B.order else (B, A)
    common = [x for x in small.elements() if x in big]
    return _group_from_elements(small.degree, common)


def product_covers(G, A, B):
    """True iff G == AB as sets, tested by the order formula."""
    inter = intersect_subgroups(A, B)
    return A.order * B.order == G.order * inter.order


def centralizer(G, x):
    """Centralizer of the element x in G."""
    if x not in G:
        raise NotASubgroup(f"{x!r} is not an element of the group")
    elems = [g for g in G.elements() if g * x == x * g]
    return _group_from_elements(G.degree, elems)


def centralizer_of_group(G, U):
    """Elements of G commuting with every element of U."""
    ugens = U.generators
    elems = [g for g in G.elements() if all(g * u == u * g for u in ugens)]
    return _group_from_elements(G.degree, elems)


def normalizer(G, U):
    """Normalizer of the subgroup U in G."""
    if not is_subgroup(U, G):
        raise NotASubgroup("normalizer argument is not a subgroup")
    uset = U.element_set()
    ugens = U.generators
    elems = [g for g in G.elements() if all(u.conj(g) in uset for u in ugens)]
    return _group_from_elements(G.degree, elems)


def normal_closure(G, seed):
    """Smallest normal subgroup of G containing the given permutations."""
    gens = tuple(s for s in seed if not s.is_identity())
    K = PermGroup(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for s in K.generators:
            for g in G.generators:
                c = s.conj(g)
                if c not in K:
                    K = PermGroup(G.degree, K.generators + (c,))
                    changed = True
    return K


def derived_subgroup(G):
    """Commutator subgroup, as the normal closure of generator commutators."""
    key = ("derived",)
    if key not in G._cache:
        comms = []
        for a in G.generators:
            for b in G.generators:
                comms.append(~a * ~b * a * b)
        G._cache[key] = normal_closure(G, comms)
    return G._cache[key]


def sylow_subgroup(G, p):
    """A Sylow p-subgroup, grown deterministically by normalizer ascent."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]
    target = p_part(G.order, p)
    if target == 1:
        Q = trivial_group(G.degree)
    else:
        seed = None
        for x in G.elements():
            o = x.order()
            if o % p == 0:
                seed = x ** (o // p_part(o, p))
                break
        Q = PermGroup(G.degree, (seed,))
        while Q.order < target:
            # N_G(Q) contains a p-element outside Q whenever Q is not Sylow
            N = normalizer(G, Q)
            grown = False
            qset = Q.element_set()
            for g in N.elements():
                o = g.order()
                if o > 1 and o == p_part(o, p) and g not in qset:
                    Q = PermGroup(G.degree, Q.generators + (g,))
                    grown = True
                    break
            ensure(grown, "sylow_ascent",
                   f"normalizer ascent stalled at order {Q.order} < {target}")
    G._cache[key] = Q
    return Q


def hall_p_complement(G, p):
    """The deterministic Hall p-complement of a p-solvable group.

    Ordered depth-first backtrack over the sorted p'-order elements; the
    first subgroup of the right order found is returned, which makes the
    generating sequence the lexicographically least increasing one.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("hall", p)
    if key in G._cache:
        return G._cache[key]
    if not is_p_solvable(G, p):
        raise NotPSolvable(f"group of order {G.order} is not {p}-solvable")
    target = G.order // p_part(G.order, p)
    if target == G.order:
        G._cache[key] = G
        return G
    if target == 1:
        H = trivial_group(G.degree)
        G._cache[key] = H
        return H
    cands = [x for x in G.elements() if x.order() > 1 and x.order() % p != 0]

    def extend(gens, cur, start):
        if len(cur) == target:
            return gens
        for idx in range(start, len(cands)):
            g = cands[idx]
            if g in cur:
                continue
            new = _closure_set(G.degree, gens + [g])
            if target % len(new) != 0:
                continue
            got = extend(gens + [g], new, idx + 1)
            if got is not None:
                return got
        return None

    got = extend([], {Permutation.identity(G.degree)}, 0)
    ensure(got is not None, "hall_exists",
           f"no Hall {p}-complement found in {p}-solvable group")
    H = PermGroup(G.degree, got)
    G._cache[key] = H
    return H


def core_p(G, p):
    """O_p(G): intersection of the conjugates of one Sylow p-subgroup."""
    key = ("core_p", p)
    if key in G._cache:
        return G._cache[key]
    P = sylow_subgroup(G, p)
    pel = P.elements()
    core = set(pel)
    for g in G.elements():
        if len(core) == 1:
            break
        core &= {x.conj(g) for x in pel}
    G._cache[key] = _group_from_elements(G.degree, core)
    return G._cache[key]


def core_pprime(G, p):
    """O_{p'}(G): intersection of the conjugates of one Hall p'-subgroup.

    Needs p-solvability (for the Hall subgroup to exist); callers on general
    groups get NotPSolvable.
    """
    key = ("core_pp", p)
    if key in G._cache:
        return G._cache[key]
    H = hall_p_complement(G, p)
    hel = H.elements()
    core = set(hel)
    for g in G.elements():
        if len(core) == 1:
            break
        core &= {x.conj(g) for x in hel}
    G._cache[key] = _group_from_elements(G.degree, core)
    return G._cache[key]


def p_residual(G, p):
    """O^{p'}(G): the subgroup generated by all p-elements, computed as the
    normal closure of a Sylow p-subgroup."""
    key = ("p_residual", p)
    if key not in G._cache:
        G._cache[key] = normal_closure(G, sylow_subgroup(G, p).generators)
    return G._cache[key]


def _o_pprime_by_closures(G, p):
    # O_{p'}(G) without Hall subgroups: an element lies in O_{p'} exactly
    # when its normal closure is a p'-group, and that test only needs class
    # representatives.
    seeds = []
    for x in G.conjugacy_classes().representatives:
        if x.is_identity():
            continue
        if normal_closure(G, (x,)).order % p != 0:
            seeds.append(x)
    return normal_closure(G, seeds)


def is_p_solvable(G, p):
    """True iff the ascending O_{p'}/O_p series reaches G."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("psolv", p)
    if key in G._cache:
        return G._cache[key]
    cur = G
    result = True
    while cur.order > 1:
        K = _o_pprime_by_closures(cur, p)
        if K.order > 1:
            cur = quotient_group(cur, K)[0]
            continue
        N = core_p(cur, p)
        if N.order > 1:
            cur = quotient_group(cur, N)[0]
            continue
        result = False
        break
    G._cache[key] = result
    return result


class Epimorphism:
    """Projection G -> G/N realized on right cosets of N.

    map(g) is the permutation of coset indices induced by right
    multiplication; preimage(q) returns the least element mapping to q.
    Coset 0 is N itself and coset representatives are the least elements of
    their cosets, so sections are canonical.
    """

    def __init__(self, domain, codomain, kernel, coset_of, reps, search=None):
        self.domain = domain
        self.codomain = codomain
        self.kernel = kernel
        self._coset_of = coset_of
        self._reps = reps
        self._search = search

    def map(self, g):
        reps = self._reps
        co = self._coset_of
        return Permutation._raw(tuple(co[r * g] for r in reps))

    def preimage(self, q):
        j = q.images[0]
        if self._search is None:
            return self._reps[j]
        for h in self._search.elements():
            if self._coset_of[h] == j:
                return h
        raise NotASubgroup("no preimage inside the restricted domain")

    def restrict(self, H):
        """The restriction H -> image(H), sharing the coset tables."""
        igens = tuple(self.map(h) for h in H.generators)
        img = PermGroup(self.codomain.degree, igens)
        ker = intersect_subgroups(H, self.kernel) if self.kernel.order > 1 \
            else trivial_group(H.degree)
        return Epimorphism(H, img, ker, self._coset_of, self._reps, search=H)


def quotient_group(G, N):
    """(G/N as the right-coset action, projection epimorphism).

    The quotient is cached on G keyed by the subgroup object N.
    """
    key = ("quotient", N)
    if key in G._cache:
        return G._cache[key]
    if not is_subgroup(N, G):
        raise NotASubgroup("quotient by a non-subgroup")
    for n in N.generators:
        for g in G.generators:
            if n.conj(g) not in N:
                raise NotNormal("quotient by a non-normal subgroup")
    nel = N.elements()
    coset_of = {}
    reps = []
    for x in G.elements():
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for n in nel:
            coset_of[n * x] = idx
    m = len(reps)
    qgens = tuple(
        Permutation._raw(tuple(coset_of[r * g] for r in reps)) for g in G.generators
    )
    Q = PermGroup(m, qgens)
    Q._order = G.order // N.order
    epi = Epimorphism(G, Q, N, coset_of, reps)
    G._cache[key] = (Q, epi)
    return Q, epi


def orbit_count(acting, domain, act):
    """Number of orbits of `acting` (a PermGroup or a list of elements) on
    `domain` under the action function act(x, g)."""
    gens = list(acting.generators) if isinstance(acting, PermGroup) else list(acting)
    dom = list(domain)

    def find(y):
        for j, d in enumerate(dom):
            if d == y:
                return j
        ensure(False, "orbit_domain_closed", "action left the domain")

    seen = [False] * len(dom)
    count = 0
    for i in range(len(dom)):
        if seen[i]:
            continue
        count += 1
        seen[i] = True
        stack = [i]
        while stack:
            k = stack.pop()
            for g in gens:
                j = find(act(dom[k], g))
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
    return count
