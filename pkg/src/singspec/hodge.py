"""Hodge-ideal machinery: generator sets built from the operators
P(i, beta) = f d_i - beta f_i, the V_HI filtration on the Milnor and
Tjurina algebras, the Hodge-ideal spectrum and Tjurina subspectrum,
epsilon_f, and executable verdicts for the main statements about them.

All ideal spans are truncated; soundness of every pruning step rests on
two facts: the Jacobian span contains m^{N-2}, and the monomial
filtration level s satisfies TildeV^s = span of monomials of order >= s,
which is always contained in I_p(alpha Z) for alpha + p >= s.
"""

from bisect import bisect_left
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .errors import UnsupportedError
from .linalg import RowSpan
from .localalg import (MilnorAlgebra, TruncatedSpace, _tjurina_span,
                       filtered_quotient_dims, ideal_membership,
                       milnor_algebra, steenbrink_spectrum, tjurina_number)
from .newton import (gamma, is_nondegenerate, newton_filtration,
                     newton_polyhedron, order_of, swh_structure, weight_order)
from .polycore import (Polynomial, Spectrum, make_weights,
                       partial_derivative)


def condition_a_order(f, hint=None):
    """Monomial order filtration attached to f: weight kind when f is
    semi-weighted-homogeneous for the hint, else Newton kind when the
    Newton boundary is non-degenerate."""
    if hint is not None:
        w = make_weights(hint)
        if swh_structure(f, w).is_swh:
            return weight_order(w)
    verdict = is_nondegenerate(f)
    if verdict.status == "yes":
        return newton_filtration(newton_polyhedron(f))
    raise UnsupportedError(
        "need semi-weighted-homogeneous structure or a non-degenerate "
        "Newton boundary (verdict %s)" % verdict.status)


def filtration_monomials(order, beta, N):
    """Monomials of degree < N with order at least beta."""
    space = TruncatedSpace(order.n, N)
    return [m for m in space.monomials if order.monomial_order(m) >= beta]


def staircase_minimal(monomials):
    """Minimal elements of a monomial set under componentwise order."""
    mons = sorted(monomials, key=sum)
    minimal = []
    for m in mons:
        if not any(all(a <= b for a, b in zip(g, m)) for g in minimal):
            minimal.append(m)
    return minimal


def _drop_bounds(order):
    """d_i: maximal decrease of the order under d/dx_i."""
    if order.kind == "weight":
        return list(order.weights)
    scaling = order.polyhedron.scaling_facets()
    return [max(fc.coeffs[i] for fc in scaling) for i in range(order.n)]


def _wdeg(order, mu):
    """Degree part of the order: order(x^mu * g) >= wdeg(mu) + order(g)."""
    if order.kind == "weight":
        return sum(w * e for w, e in zip(order.weights, mu))
    scaling = order.polyhedron.scaling_facets()
    return min(sum(c * e for c, e in zip(fc.coeffs, mu)) for fc in scaling)


def _multiples_below(order, bound, n, max_deg, wcache=None):
    """All exponent vectors mu (including 0) with wdeg(mu) < bound."""
    if bound <= 0:
        return []
    if wcache is None:
        wcache = {}
    out = []
    seen = {(0,) * n}
    queue = [(0,) * n]
    while queue:
        mu = queue.pop()
        out.append(mu)
        if sum(mu) >= max_deg:
            continue
        for i in range(n):
            nxt = mu[:i] + (mu[i] + 1,) + mu[i + 1:]
            if nxt in seen:
                continue
            w = wcache.get(nxt)
            if w is None:
                w = _wdeg(order, nxt)
                wcache[nxt] = w
            if w < bound:
                seen.add(nxt)
                queue.append(nxt)
    return out


def _shift_vector(space, terms, mu):
    """Truncated column vector of x^mu * (term dict)."""
    vec = {}
    if not any(mu):
        for expo, c in terms.items():
            idx = space.index.get(expo)
            if idx is not None:
                vec[idx] = c
        return vec
    for expo, c in terms.items():
        idx = space.index.get(tuple(a + b for a, b in zip(expo, mu)))
        if idx is not None:
            vec[idx] = c
    return vec


def _dict_mul(a_terms, b_terms, N):
    out = {}
    for e1, c1 in a_terms.items():
        d1 = sum(e1)
        for e2, c2 in b_terms.items():
            if d1 + sum(e2) >= N:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e)
            v = c1 * c2 if v is None else v + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def _dict_deriv(terms, i):
    j = i - 1
    out = {}
    for e, c in terms.items():
        if e[j]:
            out[e[:j] + (e[j] - 1,) + e[j + 1:]] = c * e[j]
    return out


def _shifted_polynomial(n, terms, mu, N):
    """x^mu * (term dict) as a truncated Polynomial."""
    out = {}
    for expo, c in terms.items():
        e = tuple(a + b for a, b in zip(expo, mu))
        if sum(e) < N:
            out[e] = c
    return Polynomial(n, out)


def _monomials_by_order(space, order):
    return sorted(((order.monomial_order(m), m) for m in space.monomials),
                  key=lambda t: (t[0], t[1]))


def _op_chain(fd, partials, n, seq, beta0, m, N, cache):
    """Truncated composite P(seq[k-1], beta0+k-1) o ... o P(seq[0],
    beta0) applied to x^m, as a raw term dict, with prefix reuse.  fd
    and partials are the term dicts of f and its partial derivatives."""
    key = (beta0, seq, m)
    G = cache.get(key)
    if G is None:
        if len(seq) == 1:
            base = {m: Fraction(1)}
        else:
            base = _op_chain(fd, partials, n, seq[:-1], beta0, m, N, cache)
        i = seq[-1]
        beta = beta0 + len(seq) - 1
        G = _dict_mul(fd, _dict_deriv(base, i), N)
        for e, c in _dict_mul(partials[i - 1], base, N).items():
            v = G.get(e)
            v = -beta * c if v is None else v - beta * c
            if v:
                G[e] = v
            elif e in G:
                del G[e]
        cache[key] = G
    return G


def _pruned_generators(f, alpha, p, order, space, prune_level, by_order,
                       cache=None):
    """Operator-image generators of I_p(alpha Z): the k-fold composites
    start at parameter alpha + p - k, acting on monomials of order at
    least alpha + p - k (the level matching k derivatives applied to the
    twist by alpha + p - k).  Every element of order >= prune_level is
    omitted (those lie in the monomial level span).  Yields (term dict,
    mu) pairs standing for the truncated x^mu * G."""
    n = f.n
    drops = _drop_bounds(order)
    vals = [val for val, m in by_order]
    if cache is None:
        cache = {}
    fd = dict(f.terms)
    partials = [dict(partial_derivative(f, i).terms)
                for i in range(1, n + 1)]
    wcache = {}
    mult_cache = {}
    for k in range(1, p + 1):
        level = alpha + p - k
        for seq in product(range(1, n + 1), repeat=k):
            drop = sum(drops[i - 1] for i in seq)
            ceiling = prune_level - k + drop
            for idx in range(bisect_left(vals, level), len(vals)):
                val, m = by_order[idx]
                if val >= ceiling:
                    break
                G = _op_chain(fd, partials, n, seq, level, m, space.N,
                              cache)
                if not G:
                    continue
                vG = min(order.monomial_order(e) for e in G)
                if vG >= prune_level:
                    continue
                key = (prune_level - vG, space.N - min(sum(e) for e in G))
                mus = mult_cache.get(key)
                if mus is None:
                    mus = _multiples_below(order, key[0], n, key[1], wcache)
                    mult_cache[key] = mus
                for mu in mus:
                    yield G, mu


class HodgeIdealGenSet:
    __slots__ = ("alpha", "p", "generators", "N")

    def __init__(self, alpha, p, generators, N):
        self.alpha = Fraction(alpha)
        self.p = int(p)
        self.generators = list(generators)
        self.N = int(N)


def _pspan_space(f, alpha, p, order, ma):
    """Truncated space fat enough that its top degrees lie inside the
    monomial filtration at level alpha + p."""
    N = ma.N
    while True:
        space = TruncatedSpace(f.n, N) if N != ma.N else ma.space
        top = min(order.monomial_order(m) for m in space.monomials
                  if sum(m) == N - 1)
        if top >= alpha + p:
            return space
        N += 4
        if N > 4 * ma.N + 40:
            raise UnsupportedError("cannot reach filtration level %s "
                                   "within truncation bounds" % (alpha + p))


def hodge_ideal_generators(f, alpha, p, ma=None, hint=None):
    """Deterministic truncated generator list for I_p(alpha Z)."""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    if p < 0:
        raise ValueError("p must be non-negative")
    if ma is None:
        ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    space = _pspan_space(f, alpha, p, order, ma)
    by_order = _monomials_by_order(space, order)
    gens = [Polynomial.monomial(f.n, m) for val, m in by_order
            if val >= alpha + p]
    for G, mu in _pruned_generators(f, alpha, p, order, space,
                                    alpha + p, by_order):
        gens.append(_shifted_polynomial(f.n, G, mu, space.N))
    return HodgeIdealGenSet(alpha, p, gens, space.N)


def _ideal_pspan(f, alpha, p, order, modulo, ma):
    """Truncated row span of I_p(alpha Z), optionally plus the Jacobian
    ideal (and f).  Returns (space, span)."""
    space = _pspan_space(f, alpha, p, order, ma)
    span = RowSpan()
    if modulo in ("jacobian", "jacobian_and_f"):
        if space is ma.space:
            base = _tjurina_span(f) if modulo == "jacobian_and_f" else ma.span
            span = base.copy()
        else:
            from .localalg import _insert_multiples
            for i in range(1, f.n + 1):
                _insert_multiples(span, space, partial_derivative(f, i))
            if modulo == "jacobian_and_f":
                _insert_multiples(span, space, f)
    elif modulo != "nothing":
        raise ValueError("unknown modulo mode %r" % modulo)
    by_order = _monomials_by_order(space, order)
    level = alpha + p
    for val, m in by_order:
        if val >= level:
            span.insert({space.index[m]: Fraction(1)})
    for G, mu in _pruned_generators(f, alpha, p, order, space, level,
                                    by_order):
        span.insert(_shift_vector(space, G, mu))
    return space, span


def hodge_ideal_member(f, alpha, p, g, ma=None, modulo="nothing", hint=None):
    """Exact truncated membership of g in I_p(alpha Z) (plus the chosen
    ideal)."""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    if g.is_zero():
        return True
    if ma is None:
        ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    space, span = _ideal_pspan(f, alpha, p, order, modulo, ma)
    return span.contains(space.to_vector(g))


class VHIFiltration:
    """Subspace dimensions of V_HI on the Milnor or Tjurina algebra at
    the candidate jump levels (sorted ascending)."""

    __slots__ = ("jumps", "subspace_dims", "mode")

    def __init__(self, jumps, subspace_dims, mode):
        self.jumps = list(jumps)
        self.subspace_dims = list(subspace_dims)
        self.mode = mode

    def dimension_at(self, beta):
        best = 0
        for b, d in zip(self.jumps, self.subspace_dims):
            if b >= beta:
                best = max(best, d)
        return best

    def graded_dims(self):
        out = {}
        prev = 0
        for b, d in sorted(zip(self.jumps, self.subspace_dims),
                           reverse=True):
            if d > prev:
                out[b] = d - prev
                prev = d
        return out


def _candidate_alphas(space, order):
    vals = set()
    for m in space.monomials:
        v = order.monomial_order(m)
        r = v - floor(v)
        if r == 0:
            r = Fraction(1)
        vals.add(Fraction(r))
    vals.add(Fraction(1))
    return sorted(vals)


def v_hi_filtration(f, mode="mod_jacobian", hint=None, p_max=None):
    """Dimensions of V_HI^beta = sum of I_p(alpha Z) over alpha + p >=
    beta, modulo the Jacobian ideal (mode mod_jacobian) or the Tjurina
    ideal (mode mod_jacobian_and_f), at every candidate jump."""
    if mode not in ("mod_jacobian", "mod_jacobian_and_f"):
        raise ValueError("unknown mode %r" % mode)
    ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    if p_max is None:
        p_max = f.n + 1
    space = ma.space
    base = _tjurina_span(f) if mode == "mod_jacobian_and_f" else ma.span
    span = base.copy()
    base_rank = base.rank()
    target = space.dimension - base_rank
    by_order = _monomials_by_order(space, order)
    desc = list(reversed(by_order))
    alphas = _candidate_alphas(space, order)
    stages = sorted({a + p for a in alphas for p in range(p_max + 1)},
                    reverse=True)
    frontier = 0
    jumps = []
    dims = []
    cache = {}
    for s in stages:
        while frontier < len(desc) and desc[frontier][0] >= s:
            span.insert({space.index[desc[frontier][1]]: Fraction(1)})
            frontier += 1
        for p in range(p_max + 1):
            a = s - p
            if not 0 < a <= 1:
                continue
            for G, mu in _pruned_generators(f, a, p, order, space, s,
                                            by_order, cache):
                span.insert(_shift_vector(space, G, mu))
        d = span.rank() - base_rank
        jumps.append(s)
        dims.append(d)
        if d == target:
            break
    jumps.reverse()
    dims.reverse()
    return VHIFiltration(jumps, dims, mode)


def pmax_probe(f, mode="mod_jacobian", hint=None, p_max=None):
    """True if raising the p cutoff by one leaves every V_HI dimension
    unchanged; the cutoff at n+1 is a working hypothesis, not a theorem."""
    if p_max is None:
        p_max = f.n + 1
    lo = v_hi_filtration(f, mode, hint, p_max=p_max)
    hi = v_hi_filtration(f, mode, hint, p_max=p_max + 1)
    levels = set(lo.jumps) | set(hi.jumps)
    return all(lo.dimension_at(b) == hi.dimension_at(b) for b in levels)


def hodge_ideal_spectrum(f, hint=None, p_max=None):
    """Exponent multiset of the V_HI filtration on the Milnor algebra."""
    ma = milnor_algebra(f)
    vhi = v_hi_filtration(f, "mod_jacobian", hint, p_max)
    entries = vhi.graded_dims()
    sp = Spectrum(f.n, entries)
    if sp.total() != ma.mu:
        raise AssertionError("Hodge ideal spectrum totals %d, expected "
                             "mu = %d" % (sp.total(), ma.mu))
    return sp


def tjurina_subspectrum(f, hint=None, p_max=None):
    """Exponent multiset of V_HI on the Tjurina algebra."""
    tau = tjurina_number(f)
    vhi = v_hi_filtration(f, "mod_jacobian_and_f", hint, p_max)
    entries = vhi.graded_dims()
    sp = Spectrum(f.n, entries)
    if sp.total() != tau:
        raise AssertionError("Tjurina subspectrum totals %d, expected "
                             "tau = %d" % (sp.total(), tau))
    return sp


def _spectrum_difference(big, small):
    """Multiset difference; raises if small is not a sub-multiset."""
    out = {}
    for a, m in big.sorted_items():
        d = m - small.multiplicity(a)
        if d < 0:
            raise AssertionError("not a sub-multiset at exponent %s" % a)
        if d:
            out[a] = d
    for a, m in small.sorted_items():
        if big.multiplicity(a) < m:
            raise AssertionError("not a sub-multiset at exponent %s" % a)
    return out


def epsilon_f(f, hint=None):
    """(gamma_f, epsilon_f = gamma_f + 1 - max spectral exponent).

    gamma_f is taken from the quotient-filtration definition; for f in
    m^3 the order-based definition is computed too and compared."""
    ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    sp = steenbrink_spectrum(f, hint)
    span2 = ma.span.copy()
    for m in ma.space.monomials:
        if sum(m) >= 2:
            span2.insert({ma.space.index[m]: Fraction(1)})
    candidates = [Polynomial.constant(f.n, 1)]
    for i in range(f.n):
        expo = [0] * f.n
        expo[i] = 1
        candidates.append(Polynomial.monomial(f.n, expo))
    outside = [g for g in candidates
               if not span2.contains(ma.space.to_vector(g))]
    gamma_quot = max(order_of(order, g) for g in outside)
    if f.order() >= 3:
        gamma_ord = gamma(order, Polynomial.constant(f.n, 1))
        if gamma_ord != gamma_quot:
            raise AssertionError(
                "gamma definitions disagree: order-based %s, "
                "quotient-based %s" % (gamma_ord, gamma_quot))
    eps = gamma_quot + 1 - sp.max_exponent()
    return gamma_quot, eps


def theorem1_check(f, hint=None):
    """Checks the spectral-shift statement for singularities whose
    f-multiples span exactly the top graded piece and tau = mu - 1."""
    ma = milnor_algebra(f)
    report = {"mu": ma.mu}
    if f.order() < 3:
        report["applicable"] = False
        report["reason"] = "f is not in the cube of the maximal ideal"
        return report
    tau = tjurina_number(f)
    report["tau"] = tau
    order = condition_a_order(f, hint)
    sp = steenbrink_spectrum(f, hint)
    alpha_max = sp.max_exponent()
    report["alpha_max"] = alpha_max
    span_v = ma.span.copy()
    top_dim = 0
    for m in ma.space.monomials:
        if order.monomial_order(m) >= alpha_max:
            if span_v.insert({ma.space.index[m]: Fraction(1)}):
                top_dim += 1
    f_in_top = span_v.contains(ma.space.to_vector(f))
    f_nonzero = not ma.span.contains(ma.space.to_vector(f))
    hyp = (tau == ma.mu - 1 and top_dim == 1 and f_in_top and f_nonzero)
    report["hypothesis_f_spans_top"] = hyp
    if not hyp:
        report["applicable"] = False
        report["reason"] = "hypothesis fails (tau=%d, mu=%d, top dim=%d, " \
            "f in top: %s)" % (tau, ma.mu, top_dim, f_in_top)
        return report
    report["applicable"] = True
    gamma_f, eps = epsilon_f(f, hint)
    report["gamma_f"] = gamma_f
    report["epsilon_f"] = eps
    hi = hodge_ideal_spectrum(f, hint)
    shift = hi.max_exponent() - alpha_max
    report["hi_alpha_max"] = hi.max_exponent()
    report["shift"] = shift
    report["shift_equals_max_eps_0"] = (shift == max(eps, 0))
    report["top_formula"] = (hi.max_exponent() == max(gamma_f + 1, alpha_max))
    report["holds"] = report["shift_equals_max_eps_0"] \
        and report["top_formula"]
    return report


def theorem2_check(f, hint=None):
    """All extra Hodge-ideal exponents (beyond the Tjurina subspectrum)
    must exceed the maximal spectral exponent."""
    ma = milnor_algebra(f)
    tau = tjurina_number(f)
    report = {"mu": ma.mu, "tau": tau}
    if f.order() < 3:
        report["applicable"] = False
        report["reason"] = "f is not in the cube of the maximal ideal"
        return report
    if ma.mu == tau:
        report["applicable"] = False
        report["reason"] = "mu equals tau"
        return report
    gamma_f, eps = epsilon_f(f, hint)
    report["epsilon_f"] = eps
    if eps <= 0:
        report["applicable"] = False
        report["reason"] = "epsilon_f is not positive"
        return report
    report["applicable"] = True
    sp = steenbrink_spectrum(f, hint)
    hi = hodge_ideal_spectrum(f, hint)
    tj = tjurina_subspectrum(f, hint)
    extra = _spectrum_difference(hi, tj)
    report["extra_exponents"] = sorted(extra)
    report["alpha_max"] = sp.max_exponent()
    report["holds"] = all(a > sp.max_exponent() for a in extra)
    return report


def theorem3_witness(f, hint=None, degree_cap=None):
    """Monomial g with f*g outside the Jacobian ideal and
    gamma_f(g) + 1 above the maximal spectral exponent; returns
    (witness or None, searched degree cap)."""
    ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    sp = steenbrink_spectrum(f, hint)
    alpha_max = sp.max_exponent()
    if degree_cap is None:
        degree_cap = max(ma.N - 3 - f.degree(), 0)
    for m in ma.space.monomials:
        if sum(m) > degree_cap:
            continue
        g = Polynomial.monomial(f.n, m)
        gamma_g = gamma(order, g)
        if gamma_g + 1 <= alpha_max:
            continue
        if not ideal_membership(f, f * g, False):
            hi = hodge_ideal_spectrum(f, hint)
            if not hi.max_exponent() > alpha_max:
                raise AssertionError(
                    "witness found but the Hodge-ideal spectrum does not "
                    "exceed the spectral maximum")
            return g, degree_cap
    return None, degree_cap


def prop1_check(f, hint=None):
    """Double-point statement: f mod the Jacobian ideal lies in V_HI at
    level alpha_1 + 2, via the operator membership chain."""
    report = {}
    if f.is_zero() or f.order() != 2:
        report["applicable"] = False
        report["reason"] = "f is not a double point"
        return report
    ma = milnor_algebra(f)
    tau = tjurina_number(f)
    report["mu"] = ma.mu
    report["tau"] = tau
    if ma.mu == tau:
        report["applicable"] = False
        report["reason"] = "mu equals tau"
        return report
    pair = None
    for i in range(1, f.n + 1):
        for j in range(1, f.n + 1):
            second = partial_derivative(partial_derivative(f, i), j)
            if second.coefficient((0,) * f.n) != 0:
                pair = (i, j)
                break
        if pair:
            break
    report["invertible_second_derivative"] = pair
    if pair is None:
        report["applicable"] = False
        report["reason"] = "no invertible second derivative"
        return report
    report["applicable"] = True
    sp = steenbrink_spectrum(f, hint)
    alpha1 = sp.min_exponent()
    report["alpha_1"] = alpha1
    p = int(ceil(alpha1)) - 1
    a = alpha1 - p
    i, j = pair
    fj = partial_derivative(f, j)
    chain = {
        "one_in_I_p": hodge_ideal_member(
            f, a, p, Polynomial.constant(f.n, 1), ma, "nothing", hint),
        "fj_in_I_p1": hodge_ideal_member(f, a, p + 1, fj, ma, "nothing",
                                         hint),
        "f_dfj_in_I_p2_mod_jac": hodge_ideal_member(
            f, a, p + 2, f * partial_derivative(fj, i), ma, "jacobian",
            hint),
        "f_in_I_p2_mod_jac": hodge_ideal_member(f, a, p + 2, f, ma,
                                                "jacobian", hint),
    }
    report.update(chain)
    report["holds"] = all(chain.values())
    report["spectra_differ_criterion"] = alpha1 > Fraction(f.n, 2) - 1
    return report


def prop2_witness(f, hint=None, degree_cap=None):
    """For f = h + x_n^2 with h in the first n-1 variables: searches a
    polynomial g in those variables with f*g outside the Jacobian ideal
    and v(g) + 2 above the maximal spectral exponent; verifies the
    membership chain on success."""
    n = f.n
    xn_terms = {m: c for m, c in f.terms.items() if m[n - 1] != 0}
    square = (0,) * (n - 1) + (2,)
    if set(xn_terms) != {square}:
        return None, "shape not matched: need x_n appearing only as x_n^2"
    ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    sp = steenbrink_spectrum(f, hint)
    alpha_max = sp.max_exponent()
    if degree_cap is None:
        degree_cap = max(ma.N - 3 - f.degree(), 0)
    for m in ma.space.monomials:
        if m[n - 1] != 0 or sum(m) > degree_cap:
            continue
        g = Polynomial.monomial(n, m)
        vg = order_of(order, g)
        if vg + 2 <= alpha_max:
            continue
        if ideal_membership(f, f * g, False):
            continue
        p = int(ceil(vg)) - 1
        a = vg - p
        two_xn = Polynomial.monomial(n, (0,) * (n - 1) + (1,), 2)
        chain_ok = (
            hodge_ideal_member(f, a, p, g, ma, "nothing", hint)
            and hodge_ideal_member(f, a, p + 1, g * two_xn, ma, "nothing",
                                   hint)
            and hodge_ideal_member(f, a, p + 2, f * g * Fraction(2), ma,
                                   "jacobian", hint))
        hi = hodge_ideal_spectrum(f, hint)
        if not hi.max_exponent() > alpha_max:
            raise AssertionError("witness found but the Hodge-ideal "
                                 "spectrum maximum does not exceed the "
                                 "spectral maximum")
        if not chain_ok:
            raise AssertionError("witness found but the membership chain "
                                 "failed")
        return g, "witness found"
    return None, "no witness up to degree %d" % degree_cap


def monotonicity_scan(f, hint=None, p=2):
    """Violations of weak decrease of I_p(alpha Z) mod the Jacobian
    ideal: for consecutive scan points alpha < alpha', reports
    (alpha, alpha', g) with g in I_p(alpha' Z) but not in I_p(alpha Z).

    Scan points are the order-filtration jump values inside (0, 1] plus
    the midpoints between consecutive jumps."""
    ma = milnor_algebra(f)
    order = condition_a_order(f, hint)
    space = ma.space
    fd = filtered_quotient_dims(f, order, False)
    cum = []
    running = 0
    for b, d in sorted(fd.jumps.items(), reverse=True):
        running += d
        cum.append((b, running))

    def v_dim(beta):
        best = 0
        for b, d in cum:
            if b >= beta:
                best = d
            else:
                break
        return best

    by_order = _monomials_by_order(space, order)
    jump_vals = sorted({val for val, m in by_order if 0 < val <= 1}
                       | {Fraction(1)})
    points = []
    for i, a in enumerate(jump_vals):
        if i > 0:
            points.append((jump_vals[i - 1] + a) / 2)
        points.append(a)
    points.sort(reverse=True)

    # normal forms over the Milnor basis, read off the reduced rows
    pivots = ma.span.pivot_columns()
    nf_cache = {}

    def nf(idx):
        vec = nf_cache.get(idx)
        if vec is None:
            row = ma.span.rows.get(idx)
            if row is None:
                vec = {idx: Fraction(1)}
            else:
                vec = {c: -v for c, v in row.items() if c != idx}
            nf_cache[idx] = vec
        return vec

    ws = RowSpan()  # span of monomial classes of order >= current level
    desc = list(reversed(by_order))
    frontier = 0

    def advance(level):
        nonlocal frontier
        want = v_dim(level)
        while frontier < len(desc) and desc[frontier][0] >= level:
            if ws.rank() < want:
                ws.insert(dict(nf(space.index[desc[frontier][1]])))
            frontier += 1

    def survivors(a):
        """((G, mu), residue vector) pairs for the part of I_p(a Z) not
        inside TildeV^{a+p} + (Jacobian); terms already at level a+p are
        dropped before reduction, which is sound modulo that span."""
        out = []
        level = a + p
        for G, mu in _pruned_generators(f, a, p, order, space, level,
                                        by_order):
            vec = {}
            for expo, c in G.items():
                shifted = tuple(e + m for e, m in zip(expo, mu))
                idx = space.index.get(shifted)
                if idx is None or order.monomial_order(shifted) >= level:
                    continue
                for col, v in nf(idx).items():
                    nv = vec.get(col, Fraction(0)) + c * v
                    if nv:
                        vec[col] = nv
                    elif col in vec:
                        del vec[col]
            res = ws.reduce(vec)
            if res:
                out.append(((G, mu), res))
        return out

    violations = []
    prev = None  # (alpha', survivors at alpha')
    for a in points:
        advance(a + p)
        span_a = RowSpan()
        cur = survivors(a)
        for gen, res in cur:
            span_a.insert(ws.reduce(res))
        if prev is not None:
            a_hi, sur_hi = prev
            for (G, mu), res in sur_hi:
                res2 = ws.reduce(res)
                if res2 and not span_a.contains(res2):
                    violations.append(
                        (a, a_hi, _shifted_polynomial(f.n, G, mu, space.N)))
                    break
        prev = (a, cur)
    violations.sort()
    return violations
