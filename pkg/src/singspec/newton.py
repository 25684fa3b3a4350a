"""Newton polyhedra of germs: supports, facets, compact faces, the
Newton order v(g), non-degeneracy testing, convenientization, and
semi-weighted-homogeneous structure.

Facets are found by exact dual enumeration: candidate normals come from
small subsets of the support combined with coordinate directions, which
is ample at the support sizes handled here (a few dozen points, n <= 6).
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DegenerateError, ResourceCapError
from .linalg import nullspace, rank, saturated_lattice_basis, solve
from .polycore import Fraction as _F  # noqa: F401  (re-export convenience)
from .polycore import Polynomial, partial_derivative


class LinearForm:
    """ell(nu) = sum_i coeffs[i] * nu_i - constant, with ell >= 0 on the
    region it bounds.  Normalized so constant is 0 or 1 where possible."""

    __slots__ = ("coeffs", "constant")

    def __init__(self, coeffs, constant):
        coeffs = tuple(Fraction(c) for c in coeffs)
        constant = Fraction(constant)
        if all(c == 0 for c in coeffs):
            raise ValueError("zero linear form")
        if constant != 0:
            scale = abs(constant)
            coeffs = tuple(c / scale for c in coeffs)
            constant = constant / scale
        else:
            denom = 1
            for c in coeffs:
                denom = denom * c.denominator // gcd(denom, c.denominator)
            ints = [int(c * denom) for c in coeffs]
            g = 0
            for v in ints:
                g = gcd(g, abs(v))
            coeffs = tuple(Fraction(v, g) for v in ints)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "constant", constant)

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    def evaluate(self, point):
        return sum(c * p for c, p in zip(self.coeffs, point)) - self.constant

    @property
    def positivity(self):
        if all(c > 0 for c in self.coeffs):
            return "strict"
        if all(c >= 0 for c in self.coeffs):
            return "weak"
        return "other"

    def __eq__(self, other):
        return (isinstance(other, LinearForm)
                and self.coeffs == other.coeffs
                and self.constant == other.constant)

    def __hash__(self):
        return hash((self.coeffs, self.constant))

    def __repr__(self):
        return "LinearForm(%s, %s)" % (self.coeffs, self.constant)


class Face:
    """A face of a Newton polyhedron: its support points, the coordinate
    directions of its recession cone, and the facets containing it."""

    __slots__ = ("points", "free_directions", "defining_facets", "dimension")

    def __init__(self, points, free_directions, defining_facets, dimension):
        object.__setattr__(self, "points", frozenset(points))
        object.__setattr__(self, "free_directions", frozenset(free_directions))
        object.__setattr__(self, "defining_facets", frozenset(defining_facets))
        object.__setattr__(self, "dimension", dimension)

    def __setattr__(self, name, value):
        raise AttributeError("Face is immutable")

    @property
    def compact(self):
        return not self.free_directions

    def __eq__(self, other):
        return (isinstance(other, Face) and self.points == other.points
                and self.free_directions == other.free_directions)

    def __hash__(self):
        return hash((self.points, self.free_directions))

    def __repr__(self):
        return "Face(dim=%d, points=%s, free=%s)" % (
            self.dimension, sorted(self.points), sorted(self.free_directions))


class NewtonPolyhedron:
    __slots__ = ("n", "support", "vertices", "facets", "convenient")

    def __init__(self, n, support, vertices, facets, convenient):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "support", frozenset(support))
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "convenient", convenient)

    def __setattr__(self, name, value):
        raise AttributeError("NewtonPolyhedron is immutable")

    def scaling_facets(self):
        return [f for f in self.facets if f.constant != 0]


def support(f):
    if f.is_zero():
        raise ValueError("zero polynomial has no support")
    return f.support()


def _face_dimension(points, free_directions, n):
    points = list(points)
    base = points[0]
    rows = [[p[i] - base[i] for i in range(n)] for p in points[1:]]
    for j in free_directions:
        row = [0] * n
        row[j] = 1
        rows.append(row)
    if not rows:
        return 0
    return rank(rows, n)


def _candidate_facets(points, n):
    """All facet forms of conv(points) + R_{>=0}^n."""
    points = sorted(points)
    found = {}
    coords = range(n)
    for zero_count in range(n):
        keep_count = n - zero_count
        for zeros in combinations(coords, zero_count):
            keep = [i for i in coords if i not in zeros]
            for subset in combinations(points, keep_count):
                base = subset[0]
                rows = [[p[i] - base[i] for i in keep] for p in subset[1:]]
                if rows:
                    kernel = nullspace(rows, keep_count)
                    if len(kernel) != 1:
                        continue
                    normal = kernel[0]
                else:
                    normal = [Fraction(1)]
                coeffs = [Fraction(0)] * n
                for i, c in zip(keep, normal):
                    coeffs[i] = c
                if any(c < 0 for c in coeffs):
                    if all(c <= 0 for c in coeffs):
                        coeffs = [-c for c in coeffs]
                    else:
                        continue
                if all(c == 0 for c in coeffs):
                    continue
                values = [sum(c * p[i] for i, c in enumerate(coeffs))
                          for p in points]
                c0 = min(values)
                tight = [p for p, v in zip(points, values) if v == c0]
                free = [i for i in coords if coeffs[i] == 0]
                if _face_dimension(tight, free, n) != n - 1:
                    continue
                form = LinearForm(coeffs, c0)
                found[(form.coeffs, form.constant)] = form
    return sorted(found.values(), key=lambda f: (f.coeffs, f.constant))


def is_convenient(supp, n):
    for i in range(n):
        if not any(all(p[j] == 0 for j in range(n) if j != i) for p in supp):
            return False
    return True


def newton_polyhedron(f):
    """Vertices and minimal facet set of the Newton polyhedron of f."""
    supp = support(f)
    n = f.n
    if any(sum(p) == 0 for p in supp):
        raise ValueError("polynomial has a constant term")
    facets = _candidate_facets(supp, n)
    vertices = set()
    for p in supp:
        normals = [fc.coeffs for fc in facets if fc.evaluate(p) == 0]
        if normals and rank(normals, n) == n:
            vertices.add(p)
    return NewtonPolyhedron(n, supp, vertices, facets,
                            is_convenient(supp, n))


def polytope_linear_forms(f):
    """Minimal facet forms of the convex hull of the support of f.

    For a hull of dimension < n the defining system contains opposite
    pairs of forms; both members are reported."""
    supp = sorted(support(f))
    n = f.n
    found = {}
    hull_dim = _face_dimension(supp, (), n)
    candidates = []
    for size in range(2, min(len(supp), n + 1) + 1):
        for subset in combinations(supp, size):
            base = subset[0]
            rows = [[p[i] - base[i] for i in range(n)] for p in subset[1:]]
            candidates.extend(nullspace(rows, n))
    for i in range(n):
        axis = [Fraction(0)] * n
        axis[i] = Fraction(1)
        candidates.append(axis)
    for normal in candidates:
        for sign in (1, -1):
            coeffs = [sign * c for c in normal]
            if all(c == 0 for c in coeffs):
                continue
            values = [sum(c * p[i] for i, c in enumerate(coeffs))
                      for p in supp]
            c0 = min(values)
            tight = [p for p, v in zip(supp, values) if v == c0]
            proper_facet = _face_dimension(tight, (), n) == hull_dim - 1 \
                and len(tight) != len(supp)
            hull_equality = len(tight) == len(supp) and hull_dim < n
            if not (proper_facet or hull_equality):
                continue
            form = LinearForm(coeffs, c0)
            found[(form.coeffs, form.constant)] = form
    return sorted(found.values(), key=lambda x: (x.coeffs, x.constant))


def strictly_positive_forms(forms):
    return sorted((f for f in forms if f.positivity == "strict"),
                  key=lambda x: (x.coeffs, x.constant))


def compact_faces(NP):
    """All compact faces of the polyhedron, dimensions 0 .. n-1."""
    n = NP.n
    supp = sorted(NP.support)
    whole = (frozenset(supp), frozenset(range(n)))
    seen = {whole}
    queue = [whole]
    faces = {}
    while queue:
        points, free = queue.pop()
        for idx, facet in enumerate(NP.facets):
            new_points = frozenset(p for p in points
                                   if facet.evaluate(p) == 0)
            if not new_points:
                continue
            new_free = frozenset(j for j in free if facet.coeffs[j] == 0)
            key = (new_points, new_free)
            if key == (points, free):
                continue
            if key not in seen:
                seen.add(key)
                queue.append(key)
    results = []
    for points, free in seen:
        if (points, free) == whole and len(NP.facets) > 0:
            # the whole polyhedron is not a proper face
            if free == frozenset(range(n)) and points == frozenset(supp):
                continue
        dim = _face_dimension(points, free, n)
        tight = frozenset(
            i for i, fc in enumerate(NP.facets)
            if all(fc.evaluate(p) == 0 for p in points)
            and all(fc.coeffs[j] == 0 for j in free))
        faces.setdefault((points, free), Face(points, free, tight, dim))
    results = [fc for fc in faces.values() if fc.compact and fc.dimension < n]
    results.sort(key=lambda fc: (fc.dimension, sorted(fc.points)))
    return results


def newton_order(NP, g):
    """v(g) = max {a : 1^n + Supp g inside a * Gamma_+}."""
    if g.is_zero():
        raise ValueError("zero polynomial has no Newton order")
    scaling = NP.scaling_facets()
    if not scaling:
        raise ValueError("polyhedron has no facet with nonzero constant")
    best = None
    for nu in g.support():
        shifted = tuple(v + 1 for v in nu)
        val = min(sum(c * s for c, s in zip(fc.coeffs, shifted))
                  for fc in scaling)
        if best is None or val < best:
            best = val
    return best


class FiltrationOrder:
    """Monomial order rule: weight kind ell_w(nu) = sum w_i (nu_i + 1),
    or Newton kind v(x^nu)."""

    __slots__ = ("kind", "weights", "polyhedron", "_cache")

    def __init__(self, kind, weights=None, polyhedron=None):
        if kind not in ("weight", "newton"):
            raise ValueError("unknown filtration kind %r" % kind)
        if kind == "weight" and weights is None:
            raise ValueError("weight kind needs weights")
        if kind == "newton" and polyhedron is None:
            raise ValueError("newton kind needs a polyhedron")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weights",
                           tuple(Fraction(w) for w in weights)
                           if weights is not None else None)
        object.__setattr__(self, "polyhedron", polyhedron)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("FiltrationOrder is immutable")

    @property
    def n(self):
        if self.kind == "weight":
            return len(self.weights)
        return self.polyhedron.n

    def monomial_order(self, nu):
        nu = tuple(nu)
        cached = self._cache.get(nu)
        if cached is not None:
            return cached
        if self.kind == "weight":
            val = sum(w * (v + 1) for w, v in zip(self.weights, nu))
        else:
            scaling = self.polyhedron.scaling_facets()
            if not scaling:
                raise ValueError("polyhedron has no scaling facet")
            shifted = tuple(v + 1 for v in nu)
            val = min(sum(c * s for c, s in zip(fc.coeffs, shifted))
                      for fc in scaling)
        self._cache[nu] = val
        return val


def weight_order(w):
    return FiltrationOrder("weight", weights=w)


def newton_filtration(NP):
    return FiltrationOrder("newton", polyhedron=NP)


def order_of(order, g):
    if g.is_zero():
        raise ValueError("zero polynomial has no order")
    return min(order.monomial_order(nu) for nu in g.support())


def gamma(order, g):
    """gamma_f(g) = max_i v(x_i g)."""
    if g.is_zero():
        raise ValueError("zero polynomial")
    n = g.n
    best = None
    for i in range(n):
        shift = [0] * n
        shift[i] = 1
        xi_g = Polynomial.monomial(n, shift) * g
        val = order_of(order, xi_g)
        if best is None or val > best:
            best = val
    return best


# ---------------------------------------------------------------------------
# non-degeneracy testing


def _degrevlex_key(expo):
    return (sum(expo), tuple(-e for e in reversed(expo)))


def _lead(poly_dict):
    return max(poly_dict, key=_degrevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mul_term(poly, expo, coeff):
    return {_add_exp(e, expo): c * coeff for e, c in poly.items()}


def _sub_poly(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, Fraction(0)) - c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def _normal_form(poly, basis):
    result = {}
    work = dict(poly)
    while work:
        lead = _lead(work)
        reduced = False
        for g in basis:
            glead = g[0]
            if _divides(glead, lead):
                gpoly = g[1]
                factor = work[lead] / gpoly[glead]
                work = _sub_poly(work, _mul_term(
                    gpoly, _sub_exp(lead, glead), factor))
                reduced = True
                break
        if not reduced:
            result[lead] = work.pop(lead)
    return result


def _buchberger_trivial(generators, cap):
    """Returns 'trivial', 'nontrivial', or 'unknown' for whether the
    ideal generated by the given polynomials is the unit ideal."""
    basis = []
    for g in generators:
        g = {e: c for e, c in g.items() if c != 0}
        if g:
            basis.append((_lead(g), g))
    if not basis:
        return "nontrivial"
    for lead, _ in basis:
        if sum(lead) == 0:
            return "trivial"
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    reductions = 0
    while pairs:
        i, j = pairs.pop()
        li, pi = basis[i]
        lj, pj = basis[j]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        if all(a + b == m for a, b, m in zip(li, lj, lcm)):
            continue  # coprime leads: s-polynomial reduces to zero
        s = _sub_poly(
            _mul_term(pi, _sub_exp(lcm, li), 1 / pi[li]),
            _mul_term(pj, _sub_exp(lcm, lj), 1 / pj[lj]))
        reductions += 1
        if reductions > cap:
            return "unknown"
        nf = _normal_form(s, basis)
        if nf:
            lead = _lead(nf)
            if sum(lead) == 0:
                return "trivial"
            basis.append((lead, nf))
            k = len(basis) - 1
            pairs.extend((k, m) for m in range(k))
    return "nontrivial"


class NondegeneracyVerdict:
    __slots__ = ("status", "face", "reason")

    def __init__(self, status, face=None, reason=None):
        self.status = status
        self.face = face
        self.reason = reason

    def __bool__(self):
        return self.status == "yes"

    def __repr__(self):
        return "NondegeneracyVerdict(%r, face=%r, reason=%r)" % (
            self.status, self.face, self.reason)


def _face_torus_system(f, face):
    """Logarithmic derivative system of the face part of f, rewritten in
    lattice coordinates of the face direction space."""
    n = f.n
    pts = sorted(face.points)
    base = pts[0]
    diffs = [[p[i] - base[i] for i in range(n)] for p in pts[1:]]
    basis = saturated_lattice_basis(diffs, n)
    d = len(basis)
    coords = {}
    for p in pts:
        target = [p[i] - base[i] for i in range(n)]
        sol = solve([[basis[k][i] for k in range(d)] for i in range(n)],
                    target)
        coords[p] = tuple(int(v) for v in sol)
    shift = tuple(min(coords[p][k] for p in pts) for k in range(d))
    systems = []
    for i in range(n):
        poly = {}
        for p in pts:
            c = f.terms[p] * p[i]
            if c == 0:
                continue
            e = tuple(coords[p][k] - shift[k] for k in range(d))
            poly[e] = poly.get(e, Fraction(0)) + c
        poly = {e: c for e, c in poly.items() if c != 0}
        if poly:
            systems.append(poly)
    return systems, d


def is_nondegenerate(f, reduction_cap=100000):
    """Decide non-degeneracy of the Newton boundary of f.

    For each compact face sigma the system {x_i d_i f_sigma = 0} must
    have no solution in the torus; faces of dimension 0 pass trivially,
    higher faces are re-parametrized to lattice coordinates and decided
    by an exact unit-ideal test with monomial saturation."""
    NP = newton_polyhedron(f)
    for face in compact_faces(NP):
        if face.dimension == 0:
            continue
        systems, d = _face_torus_system(f, face)
        if not systems:
            return NondegeneracyVerdict("no", face=face)
        # saturate by the torus: add t * y_1 ... y_d - 1
        lifted = [{e + (0,): c for e, c in poly.items()} for poly in systems]
        sat = {tuple([1] * d + [1]): Fraction(1),
               tuple([0] * (d + 1)): Fraction(-1)}
        lifted.append(sat)
        verdict = _buchberger_trivial(lifted, reduction_cap)
        if verdict == "nontrivial":
            return NondegeneracyVerdict("no", face=face)
        if verdict == "unknown":
            return NondegeneracyVerdict("unknown", face=face,
                                        reason="reduction cap exceeded")
    return NondegeneracyVerdict("yes")


# ---------------------------------------------------------------------------
# convenientization


def _new_faces_admissible(old_faces, new_faces, apex, n):
    """Every new compact face must be an old face, or conv(tau u {apex})
    with tau an old face (or empty) whose direction space misses e_apex."""
    axis = apex.index(max(apex))
    old_keys = {fc.points for fc in old_faces}
    old_list = [frozenset()] + [fc.points for fc in old_faces]
    for fc in new_faces:
        if fc.points in old_keys:
            continue
        if apex not in fc.points:
            return False
        tau = fc.points - {apex}
        if tau not in old_list:
            return False
        if tau:
            pts = sorted(tau)
            base = pts[0]
            diffs = [[p[i] - base[i] for i in range(n)] for p in pts[1:]]
            axis_row = [0] * n
            axis_row[axis] = 1
            if diffs and rank(diffs + [axis_row], n) == rank(diffs, n):
                return False
    return True


def convenientize(f, m):
    """Exponents a_i >= m and a builder c -> f + c * sum x_i^{a_i} making
    f convenient while preserving non-degeneracy."""
    if m < 1:
        raise ValueError("m must be at least 1")
    verdict = is_nondegenerate(f)
    if verdict.status != "yes":
        raise DegenerateError("input must have non-degenerate Newton "
                              "boundary (verdict %s)" % verdict.status)
    n = f.n
    current = f
    used = []
    missing = [i for i in range(n)
               if not any(all(p[j] == 0 for j in range(n) if j != i)
                          for p in current.support())]
    if not missing:
        return (), (lambda c: f)
    chosen = {}
    for i in missing:
        old_faces = compact_faces(newton_polyhedron(current))
        found = None
        for a in range(m, m + 65):
            if a in used:
                continue
            expo = [0] * n
            expo[i] = a
            apex = tuple(expo)
            candidate = current + Polynomial.monomial(n, expo)
            new_faces = compact_faces(newton_polyhedron(candidate))
            if not _new_faces_admissible(old_faces, new_faces, apex, n):
                continue
            if is_nondegenerate(candidate).status == "yes":
                found = a
                break
        if found is None:
            raise ResourceCapError(
                "no admissible exponent for axis %d in window [%d, %d]"
                % (i + 1, m, m + 64))
        used.append(found)
        chosen[i] = found
        current = candidate

    axes = sorted(chosen)
    exponents = tuple(chosen[i] for i in axes)

    def builder(c):
        g = f
        for i in axes:
            expo = [0] * n
            expo[i] = chosen[i]
            g = g + Polynomial.monomial(n, expo, c)
        return g

    return exponents, builder


# ---------------------------------------------------------------------------
# semi-weighted-homogeneous structure


class SwhStructure:
    __slots__ = ("f1", "f_gt1", "is_swh", "below_weight_one")

    def __init__(self, f1, f_gt1, is_swh, below_weight_one):
        self.f1 = f1
        self.f_gt1 = f_gt1
        self.is_swh = is_swh
        self.below_weight_one = below_weight_one


def swh_structure(f, w):
    """Split f = f1 + f_{>1} by weighted degree and decide whether f is
    semi-weighted-homogeneous for the weights w."""
    ws = tuple(Fraction(x) for x in w)
    if len(ws) != f.n:
        raise ValueError("weight count mismatch")
    one_terms = {}
    high_terms = {}
    below = []
    for expo, c in f.terms.items():
        wdeg = sum(wi * e for wi, e in zip(ws, expo))
        if wdeg == 1:
            one_terms[expo] = c
        elif wdeg > 1:
            high_terms[expo] = c
        else:
            below.append(expo)
    f1 = Polynomial(f.n, one_terms)
    f_gt1 = Polynomial(f.n, high_terms)
    if below or f1.is_zero():
        return SwhStructure(f1, f_gt1, False, sorted(below))
    from . import localalg
    try:
        localalg.milnor_algebra(f1)
    except Exception:
        return SwhStructure(f1, f_gt1, False, [])
    return SwhStructure(f1, f_gt1, True, [])
