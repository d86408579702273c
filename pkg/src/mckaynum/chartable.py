"""Exact ordinary character tables and class-function calculus.

Tables are computed by the classic class-algebra method: the integer class
multiplication coefficients are assembled exhaustively, their matrices are
simultaneously diagonalized over a prime field F_l with l == 1 (mod exp(G))
and l^2 > 4|G| (least such prime, recorded on the table), and the resulting
central characters are lifted to exact cyclotomic values through the
discrete-log correspondence between roots of unity mod l and true roots of
unity.  Both orthogonality relations are then verified exactly before the
table is released, so a table object is self-certifying.

Characters are plain value vectors over the canonical class order; the same
representation carries general class functions, and irreducibility is a
checked property rather than a type.
"""

from fractions import Fraction
from math import lcm

from ._numbers import divisors, factorize, is_prime
from .cyclotomic import Cyclotomic, render_value, parse_value, root_of_unity
from .errors import (
    GroupMismatch,
    GroupTooLarge,
    KernelViolation,
    NotASubgroup,
    FactorizationViolation,
    ensure,
)
from .permgroup import PermGroup, _group_from_elements, is_subgroup, product_covers

MAX_CLASSES = 60


class Character:
    """A class function, one exact value per conjugacy class of its group."""

    __slots__ = ("group", "values")
    __hash__ = None

    def __init__(self, group, values):
        values = tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(v)
                       for v in values)
        ensure(len(values) == len(group.conjugacy_classes()), "value_count",
               "one value per conjugacy class required")
        self.group = group
        self.values = values

    @property
    def degree(self):
        d = self.values[0].as_integer()
        ensure(d is not None, "integral_degree",
               f"degree {self.values[0]!r} is not a rational integer")
        return d

    def value(self, g):
        return self.values[self.group.conjugacy_classes().index_of(g)]

    def is_linear(self):
        return self.degree == 1

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __repr__(self):
        vals = ", ".join(render_value(v) for v in self.values)
        return f"Character({vals})"


def trivial_character(G):
    k = len(G.conjugacy_classes())
    return Character(G, [1] * k)


class CharacterTable:
    """All irreducible characters of a group in canonical order.

    Ordering: degree ascending, then value vectors in descending
    coefficient order at the group exponent (this puts the trivial
    character first).
    """

    __slots__ = ("group", "classes", "irreducibles", "lifting_prime", "exponent")

    def __init__(self, group, classes, irreducibles, lifting_prime, exponent):
        self.group = group
        self.classes = classes
        self.irreducibles = tuple(irreducibles)
        self.lifting_prime = lifting_prime
        self.exponent = exponent

    def __len__(self):
        return len(self.irreducibles)

    def index_of(self, chi):
        for i, row in enumerate(self.irreducibles):
            if row == chi:
                return i
        raise GroupMismatch("character is not a row of this table")


# ----- linear algebra over F_l -----


def _rref(rows, l):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] % l:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], l - 2, l)
        rows[r] = [x * inv % l for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % l:
                f = rows[i][c]
                rows[i] = [(x - f * y) % l for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(rows, l, n):
    """Basis (RREF rows) of the right nullspace of the matrix."""
    red, pivots = _rref(rows, l)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in zip(red, pivots):
            v[c] = (-r[f]) % l
        basis.append(v)
    return basis


def _matvec(A, v, l):
    return [sum(a * x for a, x in zip(row, v)) % l for row in A]


# ----- table construction -----


def _class_matrices(G):
    cls = G.conjugacy_classes()
    k = len(cls)
    members = [[] for _ in range(k)]
    for g in G.elements():
        members[cls.class_index[g]].append(g)
    reps = cls.representatives
    mats = []
    for i in range(k):
        A = [[0] * k for _ in range(k)]
        for x in members[i]:
            xinv = ~x
            for l in range(k):
                A[cls.class_index[xinv * reps[l]]][l] += 1
        mats.append(A)
    return mats


def _least_lifting_prime(order, exponent):
    l = 2
    while True:
        if is_prime(l) and (l - 1) % exponent == 0 and l * l > 4 * order:
            return l
        l += 1


def _primitive_root(l):
    if l == 2:
        return 1
    qs = [q for q, _ in factorize(l - 1)]
    for w in range(2, l):
        if all(pow(w, (l - 1) // q, l) != 1 for q in qs):
            return w
    raise ArithmeticError(f"no primitive root mod {l}")


def _common_eigenvectors(mats, l, k):
    # simultaneous eigenbasis of commuting matrices over F_l, by repeated
    # eigenspace splitting; scans eigenvalues in ascending order so the
    # final list is deterministic
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    spaces[0], _ = _rref(spaces[0], l)
    for A in mats:
        if all(len(B) == 1 for B in spaces):
            break
        new = []
        for B in spaces:
            m = len(B)
            if m == 1:
                new.append(B)
                continue
            _, pivots = _rref(B, l)
            # restricted operator: columns are coordinates of A*b_r in basis B
            R = [[0] * m for _ in range(m)]
            for r in range(m):
                w = _matvec(A, B[r], l)
                coords = [w[p] for p in pivots]
                check = [0] * k
                for s in range(m):
                    for c in range(k):
                        check[c] = (check[c] + coords[s] * B[s][c]) % l
                ensure(check == [x % l for x in w], "dixon_invariant_subspace",
                       "class matrix does not preserve a split subspace")
                for s in range(m):
                    R[s][r] = coords[s]
            found = 0
            for lam in range(l):
                shifted = [[(R[i][j] - (lam if i == j else 0)) % l
                            for j in range(m)] for i in range(m)]
                nul = _nullspace(shifted, l, m)
                if not nul:
                    continue
                rows = []
                for u in nul:
                    rows.append([sum(u[s] * B[s][c] for s in range(m)) % l
                                 for c in range(k)])
                red, _ = _rref(rows, l)
                new.append(red)
                found += len(red)
                if found == m:
                    break
            ensure(found == m, "dixon_split",
                   "eigenspaces do not fill a split subspace")
        spaces = new
    ensure(all(len(B) == 1 for B in spaces), "dixon_separation",
           "class matrices failed to separate all central characters")
    out = []
    for B in spaces:
        v = B[0]
        ensure(v[0] % l != 0, "dixon_normalization",
               "central character vanishes on the identity class")
        inv = pow(v[0], l - 2, l)
        out.append([x * inv % l for x in v])
    return out


def character_table(G):
    """The exact character table of G, memoized on the group object."""
    if G._table is not None:
        return G._table
    cls = G.conjugacy_classes()
    k = len(cls)
    if k > MAX_CLASSES:
        raise GroupTooLarge(f"{k} classes exceeds the table bound {MAX_CLASSES}")
    order = G.order
    exponent = lcm(*(r.order() for r in cls.representatives))
    l = _least_lifting_prime(order, exponent)
    mats = _class_matrices(G)
    omegas = _common_eigenvectors(mats[1:], l, k) if k > 1 else [[1]]

    inv_class = [cls.class_index[~r] for r in cls.representatives]
    size_inv = [pow(s % l, l - 2, l) for s in cls.sizes]
    w = _primitive_root(l)

    chars = []
    for om in omegas:
        t = sum(om[j] * om[inv_class[j]] * size_inv[j] for j in range(k)) % l
        ensure(t != 0, "dixon_degree", "degree equation is singular")
        dsq = order * pow(t, l - 2, l) % l
        d = None
        x = 1
        while x * x <= order:
            if (x * x - dsq) % l == 0:
                d = x
                break
            x += 1
        ensure(d is not None, "dixon_degree",
               "no integer degree matches the degree equation")
        cvals = [d * om[j] * size_inv[j] % l for j in range(k)]
        values = []
        for j, rep in enumerate(cls.representatives):
            o = rep.order()
            if o == 1:
                values.append(Cyclotomic.from_rational(d))
                continue
            pcls = [cls.class_index[rep ** t2] for t2 in range(o)]
            z = pow(w, (l - 1) // o, l)
            oinv = pow(o, l - 2, l)
            coeffs = []
            for m in range(o):
                am = oinv * sum(cvals[pcls[t2]] * pow(z, -t2 * m, l)
                                for t2 in range(o)) % l
                ensure(am <= d, "dixon_lift",
                       f"eigenvalue multiplicity {am} exceeds degree {d}")
                coeffs.append(am)
            values.append(Cyclotomic(o, coeffs))
        chars.append(Character(G, values))

    ensure(sum(ch.degree ** 2 for ch in chars) == order, "degree_squares",
           "sum of squared degrees misses the group order")
    chars.sort(key=lambda ch: (
        ch.degree,
        tuple(tuple(-c for c in v.coeff_key(exponent)) for v in ch.values),
    ))

    table = CharacterTable(G, cls, chars, l, exponent)
    _verify_orthogonality(table)
    G._table = table
    return table


def _verify_orthogonality(table):
    chars = table.irreducibles
    k = len(chars)
    sizes = table.classes.sizes
    order = table.group.order
    for i in range(k):
        for j in range(i, k):
            ip = inner_product(chars[i], chars[j])
            want = 1 if i == j else 0
            ensure(ip == want, "row_orthogonality",
                   f"[chi_{i}, chi_{j}] = {ip} != {want}")
    inv_class = [table.classes.class_index[~r]
                 for r in table.classes.representatives]
    for a in range(k):
        for b in range(a, k):
            s = Cyclotomic.from_rational(0)
            for ch in chars:
                s = s + ch.values[a] * ch.values[inv_class[b]]
            want = Fraction(order, sizes[a]) if a == b else Fraction(0)
            ensure(s.as_rational() == want, "column_orthogonality",
                   f"column product at ({a},{b}) is {s!r}, wanted {want}")


# ----- class-function calculus -----


def inner_product(alpha, beta):
    """[alpha, beta] as an exact rational."""
    if alpha.group is not beta.group:
        raise GroupMismatch("inner product across distinct groups")
    cls = alpha.group.conjugacy_classes()
    s = Cyclotomic.from_rational(0)
    for j, size in enumerate(cls.sizes):
        s = s + alpha.values[j] * beta.values[j].conjugate() * size
    q = (s / alpha.group.order).as_rational()
    ensure(q is not None, "inner_product_rational",
           "inner product of class functions was irrational")
    return q


def restrict(chi, U):
    """chi restricted to the subgroup U."""
    G = chi.group
    if not is_subgroup(U, G):
        raise NotASubgroup("restriction target is not a subgroup")
    gcls = G.conjugacy_classes()
    vals = [chi.values[gcls.index_of(r)]
            for r in U.conjugacy_classes().representatives]
    return Character(U, vals)


def induce(theta, G):
    """theta induced from its group up to G, by the class-sum formula."""
    U = theta.group
    if not is_subgroup(U, G):
        raise NotASubgroup("induction source is not a subgroup")
    gcls = G.conjugacy_classes()
    ucls = U.conjugacy_classes()
    k = len(gcls)
    sums = [Cyclotomic.from_rational(0) for _ in range(k)]
    for i, urep in enumerate(ucls.representatives):
        j = gcls.index_of(urep)
        sums[j] = sums[j] + theta.values[i] * ucls.sizes[i]
    vals = []
    for j in range(k):
        cent = Fraction(G.order, gcls.sizes[j])
        vals.append(sums[j] * cent / U.order)
    return Character(G, vals)


def tensor(alpha, beta):
    if alpha.group is not beta.group:
        raise GroupMismatch("tensor across distinct groups")
    return Character(alpha.group,
                     [a * b for a, b in zip(alpha.values, beta.values)])


def inflate(chi_bar, epi):
    """Pull a character of the quotient back along the projection."""
    if chi_bar.group is not epi.codomain:
        raise GroupMismatch("inflation source must live on the epimorphism image")
    qcls = epi.codomain.conjugacy_classes()
    vals = [chi_bar.values[qcls.index_of(epi.map(r))]
            for r in epi.domain.conjugacy_classes().representatives]
    return Character(epi.domain, vals)


def deflate(chi, epi):
    """Push a character with the kernel inside its kernel down the projection."""
    if chi.group is not epi.domain:
        raise GroupMismatch("deflation source must live on the epimorphism domain")
    gcls = epi.domain.conjugacy_classes()
    for n in epi.kernel.generators:
        if not chi.values[gcls.index_of(n)] == chi.values[0]:
            raise KernelViolation("kernel of the projection is not in ker(chi)")
    vals = [chi.values[gcls.index_of(epi.preimage(r))]
            for r in epi.codomain.conjugacy_classes().representatives]
    return Character(epi.codomain, vals)


def irr_pprime(table, p):
    return tuple(ch for ch in table.irreducibles if ch.degree % p != 0)


def linear_characters(table):
    return tuple(ch for ch in table.irreducibles if ch.degree == 1)


def kernel(chi):
    """{g : chi(g) == chi(1)} as a subgroup."""
    G = chi.group
    cls = G.conjugacy_classes()
    keep = {j for j in range(len(cls)) if chi.values[j] == chi.values[0]}
    elems = [g for g in G.elements() if cls.class_index[g] in keep]
    return _group_from_elements(G.degree, elems)


def determinant_character(chi):
    """det of the underlying representation, via Newton's identities on the
    power sums chi(g^t); linear for genuine characters."""
    d = chi.degree
    G = chi.group
    cls = G.conjugacy_classes()
    one = Cyclotomic.from_rational(1)
    vals = []
    for rep in cls.representatives:
        p = [None] * (d + 1)
        for t in range(1, d + 1):
            p[t] = chi.values[cls.index_of(rep ** t)]
        e = [one] + [None] * d
        for m in range(1, d + 1):
            s = Cyclotomic.from_rational(0)
            for i in range(1, m + 1):
                term = e[m - i] * p[i]
                s = s + term if i % 2 == 1 else s - term
            e[m] = s / m
        vals.append(e[d])
    return Character(G, vals)


def _root_of_unity_order(v, bound):
    cur = v
    t = 1
    while t <= bound:
        if cur == 1:
            return t
        cur = cur * v
        t += 1
    ensure(False, "det_root_of_unity",
           f"value {v!r} is not a root of unity of order <= {bound}")


def det_order(chi):
    """Multiplicative order of the determinantal character o(chi)."""
    det = determinant_character(chi)
    bound = lcm(2, *(v.conductor for v in det.values))
    return lcm(*(_root_of_unity_order(v, bound) for v in det.values))


def restriction_bijection(G, N, H):
    """For G = NH: the restriction-to-H bijection on characters of G with N
    in the kernel.  Returns (chi, chi restricted to H) pairs and verifies
    irreducibility, kernel containment of M = N meet H, and injectivity.
    """
    if not product_covers(G, N, H):
        raise FactorizationViolation("G != NH for the restriction bijection")
    from .permgroup import intersect_subgroups
    M = intersect_subgroups(N, H)
    table = character_table(G)
    gcls = G.conjugacy_classes()
    nset = N.element_set()
    pairs = []
    for chi in table.irreducibles:
        if not all(chi.values[gcls.index_of(n)] == chi.values[0]
                   for n in N.generators):
            continue
        res = restrict(chi, H)
        ensure(inner_product(res, res) == 1, "restriction_irreducible",
               "restriction along G = NH failed to stay irreducible")
        hcls = H.conjugacy_classes()
        ensure(all(res.values[hcls.index_of(m)] == res.values[0]
                   for m in M.generators), "restriction_kernel",
               "restriction does not kill N meet H")
        pairs.append((chi, res))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            ensure(not pairs[i][1] == pairs[j][1], "restriction_injective",
                   "restriction along G = NH identified two characters")
    return tuple(pairs)


# ----- table rendering -----


def render_table_exact(table):
    """Line-oriented exact dump: header describing the classes, then one
    row per character with values joined by " ; "."""
    cls = table.classes
    lines = [
        f"group.order = {table.group.order}",
        f"group.exponent = {table.exponent}",
        f"lifting.prime = {table.lifting_prime}",
        f"classes = {len(cls)}",
        "class.order = " + " ".join(str(r.order()) for r in cls.representatives),
        "class.size = " + " ".join(str(s) for s in cls.sizes),
        "class.rep = " + " ".join(_rep_str(r) for r in cls.representatives),
    ]
    for ch in table.irreducibles:
        lines.append("char = " + " ; ".join(render_value(v) for v in ch.values))
    return "\n".join(lines) + "\n"


def _rep_str(r):
    from .permgroup import render_cycles
    return render_cycles(r)


def parse_table_exact(text):
    """Parse the exact dump back into a plain dict (not bound to a group)."""
    out = {"rows": []}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" = ")
        if key == "char":
            out["rows"].append(tuple(parse_value(v) for v in rest.split(" ; ")))
        elif key in ("group.order", "group.exponent", "lifting.prime", "classes"):
            out[key] = int(rest)
        elif key in ("class.order", "class.size"):
            out[key] = tuple(int(x) for x in rest.split())
        elif key == "class.rep":
            out[key] = tuple(rest.split())
    return out


def render_table_pretty(table):
    """Human-oriented aligned table."""
    cls = table.classes
    heads = [_rep_str(r) for r in cls.representatives]
    rows = [[render_value(v) for v in ch.values] for ch in table.irreducibles]
    names = [f"X.{i+1}" for i in range(len(rows))]
    widths = [max(len(heads[j]), max((len(r[j]) for r in rows), default=1))
              for j in range(len(heads))]
    name_w = max((len(n) for n in names), default=4)
    lines = ["  ".join([" " * name_w] + [heads[j].rjust(widths[j])
                                         for j in range(len(heads))])]
    lines.append("  ".join(["-" * name_w] + ["-" * widths[j]
                                             for j in range(len(heads))]))
    for n, r in zip(names, rows):
        lines.append("  ".join([n.ljust(name_w)] +
                               [r[j].rjust(widths[j]) for j in range(len(heads))]))
    return "\n".join(lines) + "\n"
