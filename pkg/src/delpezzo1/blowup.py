"""Exact log-resolution engine for weighted plane curve germs.

The input is a finite list of branches (f_i, w_i): bivariate squarefree
polynomials over Q with positive integer weights, all vanishing at the
origin.  The engine blows up every point at which the total transform of
sum w_i f_i fails to be simple normal crossing, tracking for each
exceptional divisor E its discrepancy k_E over the smooth surface and the
order m_E of the total transform.  The log canonical threshold is then

    lct = min( min_i 1/w_i , min_E (k_E + 1)/m_E ).

Polynomials are stored as dicts {(deg_x, deg_y): coefficient} with
coefficients in a sympy domain K (Q, or an algebraic number field when an
infinitely-near point has irrational coordinates).  Points on one
exceptional line are enumerated as Galois orbits: each irreducible factor
of the restriction of the transform to the line is one cluster, blown up
once on behalf of all its conjugate points, which carry identical (k, m)
data.  A field extension is introduced only when a cluster of degree >= 2
genuinely needs deeper resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import sympy
from sympy import QQ, Poly
from sympy.polys.domains import Domain

from .errors import DepthExceededError, InvalidGermError

DEPTH_CAP = 64

_v = sympy.Symbol("_v")
_z = sympy.Symbol("_z")
_T = sympy.Symbol("_T")

# a polynomial is a dict {(a, b): coeff} with coeff a nonzero element of K
PolyDict = dict

Weighted = tuple  # (PolyDict, int weight)
Exceptional = tuple  # (PolyDict, int k, int m)


@dataclass
class BlowupNode:
    """One blowup in the resolution tree.

    k is the discrepancy of the new exceptional divisor, m the order of the
    total transform along it; children are the blowups performed at points
    of this divisor.  A node stands for a whole Galois orbit of centers:
    conjugate points share identical (k, m) data and are blown up once.
    """

    k: int
    m: int
    children: list["BlowupNode"] = field(default_factory=list)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.k + 1, self.m)

    def walk(self) -> Iterable["BlowupNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


def _mult(d: PolyDict) -> int:
    """Multiplicity at the origin: minimal total degree of a monomial."""
    return min(a + b for a, b in d)


def _strict1(d: PolyDict, mu: int) -> PolyDict:
    """Strict transform in the chart x = u, y = u v: substitute and divide by u^mu.

    x^a y^b maps to u^(a+b) v^b, so the key map (a, b) -> (a+b-mu, b) is
    injective and no coefficients merge.
    """
    return {(a + b - mu, b): c for (a, b), c in d.items()}


def _strict2(d: PolyDict, mu: int) -> PolyDict:
    """Strict transform in the chart x = u v, y = v: substitute and divide by v^mu."""
    return {(a, a + b - mu): c for (a, b), c in d.items()}


def _restrict1(d: PolyDict) -> dict[int, Any]:
    """Restriction to the exceptional line u = 0, as a univariate dict in v."""
    return {b: c for (a, b), c in d.items() if a == 0}


def _lowest_form(d: PolyDict, mu: int) -> list:
    """Coefficients [c_0..c_mu] of the tangent cone sum c_b x^(mu-b) y^b."""
    row = [None] * (mu + 1)
    for (a, b), c in d.items():
        if a + b == mu:
            row[b] = c
    return row


def _form_product(forms: list[list], K: Domain) -> list:
    """Convolution product of binary forms given by coefficient lists."""
    acc = [K.one]
    for f in forms:
        f = [c if c is not None else K.zero for c in f]
        out = [K.zero] * (len(acc) + len(f) - 1)
        for i, ci in enumerate(acc):
            if not ci:
                continue
            for j, cj in enumerate(f):
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        acc = out
    return acc


def _shift_y(d: PolyDict, theta: Any, K: Domain) -> PolyDict:
    """Substitute y -> y + theta, exactly, over K."""
    if not theta:
        return dict(d)
    max_b = max(b for _, b in d)
    powers = [K.one]
    for _ in range(max_b):
        powers.append(powers[-1] * theta)
    binom = {}
    out: PolyDict = {}
    for (a, b), c in d.items():
        for j in range(b + 1):
            key = (a, j)
            cb = binom.get((b, j))
            if cb is None:
                cb = K.convert(math.comb(b, j))
                binom[(b, j)] = cb
            term = c * cb * powers[b - j]
            if key in out:
                out[key] = out[key] + term
            else:
                out[key] = term
    return {k: c for k, c in out.items() if c}


def _factor_on_line(ud: dict[int, Any], K: Domain) -> list[tuple[Poly, int]]:
    """Monic irreducible factors (with multiplicity) of a univariate dict over K."""
    if not ud or max(ud) == 0:
        return []
    p = Poly.from_dict({(b,): c for b, c in ud.items()}, _v, domain=K)
    _, factors = p.factor_list()
    return [(f.monic(), e) for f, e in factors if f.degree() >= 1]


def _linear_root(p: Poly, K: Domain) -> Any:
    coeffs = p.as_dict(native=True)
    c0 = coeffs.get((0,), K.zero)
    return -c0  # p is monic: v + c0


def _extend_qq(p: Poly) -> tuple[Any, Domain, Callable[[Any], Any]]:
    """Field extension for an irreducible cluster over Q."""
    theta_expr = sympy.CRootOf(p.as_expr(), 0)
    K2 = QQ.algebraic_field(theta_expr)
    theta = K2.from_sympy(theta_expr)
    return theta, K2, lambda c: K2.convert(c, QQ)


def _extend_tower(p: Poly, K: Domain) -> tuple[Any, Domain, Callable[[Any], Any]]:
    """Field extension for an irreducible cluster over an algebraic field K.

    A root of p is located inside a primitive-element tower Q(gamma, theta)
    by factoring the norm of p down to Q and testing candidate roots
    exactly.
    """
    gamma_expr = K.ext.as_expr()
    # lift p to Q[z, T], z standing for gamma
    lifted = sympy.Integer(0)
    p_items = list(p.as_dict(native=True).items())
    for (i,), c in p_items:
        rep = list(reversed(c.to_list()))
        c_z = sum(sympy.Rational(r.numerator, r.denominator) * _z**j for j, r in enumerate(rep))
        lifted += c_z * _T**i
    minpoly_z = sympy.minimal_polynomial(gamma_expr, _z)
    norm = sympy.resultant(minpoly_z, lifted, _z)
    _, factors = sympy.factor_list(norm, _T)
    for g, _e in sorted(factors, key=lambda fe: (sympy.degree(fe[0], _T), str(fe[0]))):
        deg = sympy.degree(g, _T)
        if deg < 1:
            continue
        for j in range(deg):
            theta_expr = sympy.CRootOf(g, j) if deg > 1 else sympy.roots(g, _T).popitem()[0]
            # cheap numeric screen before the (possibly expensive) exact
            # tower construction; exactness is re-established below
            approx = lifted.subs({_z: gamma_expr, _T: theta_expr}).evalf(40, chop=True)
            if approx != 0 and abs(complex(approx)) > 1e-25:
                continue
            try:
                K2 = QQ.algebraic_field(gamma_expr, theta_expr)
                theta = K2.from_sympy(theta_expr)
                conv = lambda c, _K2=K2: _K2.from_sympy(K.to_sympy(c))
                value = K2.zero
                for (i,), c in p_items:
                    value = value + conv(c) * theta**i
                if not value:
                    return theta, K2, conv
            except (sympy.polys.polyerrors.CoercionFailed, NotImplementedError):
                continue
    raise InvalidGermError("could not realize an infinitely-near point in a number field")


def _cluster_point(p: Poly, K: Domain) -> tuple[Any, Domain, Callable[[Any], Any]]:
    if p.degree() == 1:
        return _linear_root(p, K), K, lambda c: c
    if K == QQ:
        return _extend_qq(p)
    return _extend_tower(p, K)


def _is_snc(polys: list[PolyDict], K: Domain) -> bool:
    """Is the union of the given branches simple normal crossing at the origin?

    True when the total multiplicity is at most 1, or equals 2 with the
    product of tangent cones a squarefree binary quadratic (two distinct
    directions: two smooth transverse branches).
    """
    mults = [_mult(d) for d in polys]
    mu = sum(mults)
    if mu <= 1:
        return True
    if mu == 2:
        q = _form_product([_lowest_form(d, m) for d, m in zip(polys, mults)], K)
        disc = q[1] * q[1] - K.convert(4) * q[0] * q[2]
        return bool(disc)
    return False


def _resolve(
    curves: list[Weighted],
    excs: list[Exceptional],
    K: Domain,
    depth: int,
) -> BlowupNode | None:
    """Blow up the origin if needed; return the node, or None when already SNC.

    Every entry of `curves` and `excs` passes through the origin.
    """
    if _is_snc([d for d, _ in curves] + [d for d, _, _ in excs], K):
        return None
    if depth >= DEPTH_CAP:
        raise DepthExceededError(f"blowup tree exceeded depth {DEPTH_CAP}")

    k_new = 1 + sum(k for _, k, _ in excs)
    m_new = sum(w * _mult(d) for d, w in curves) + sum(m for _, _, m in excs)
    node = BlowupNode(k_new, m_new)

    # chart x = u, y = u v: the exceptional line is u = 0, points are v-values
    s_curves = [(_strict1(d, _mult(d)), w) for d, w in curves]
    s_excs = [(_strict1(d, _mult(d)), k, m) for d, k, m in excs]
    objects = [d for d, _ in s_curves] + [d for d, _, _ in s_excs]
    factorizations = [dict(_factor_on_line(_restrict1(d), K)) for d in objects]

    clusters: dict[Poly, list[tuple[int, int]]] = {}
    for idx, fac in enumerate(factorizations):
        for p, e in fac.items():
            clusters.setdefault(p, []).append((idx, e))

    for p in sorted(clusters, key=lambda q: (q.degree(), str(q.as_expr()))):
        through = clusters[p]
        if len(through) == 1 and through[0][1] == 1:
            # one branch crossing the exceptional line simply: the branch is
            # smooth and transverse there, the point is SNC; skip without
            # extending the coefficient field
            continue
        theta, K2, conv = _cluster_point(p, K)

        def moved(d: PolyDict) -> PolyDict:
            if K2 is not K:
                d = {key: conv(c) for key, c in d.items()}
            return _shift_y(d, theta, K2)

        idx_set = {i for i, _ in through}
        sub_curves = [
            (moved(d), w) for i, (d, w) in enumerate(s_curves) if i in idx_set
        ]
        sub_excs = [
            (moved(d), k, m)
            for i, (d, k, m) in enumerate(s_excs, start=len(s_curves))
            if i in idx_set
        ]
        sub_excs.append(({(1, 0): K2.one}, k_new, m_new))
        child = _resolve(sub_curves, sub_excs, K2, depth + 1)
        if child is not None:
            node.children.append(child)

    # chart x = u v, y = v: only the direction [0:1] is new; an object passes
    # through its origin iff x divides its tangent cone
    c2_curves = []
    for d, w in curves:
        t = _strict2(d, _mult(d))
        if (0, 0) not in t:
            c2_curves.append((t, w))
    c2_excs = []
    for d, k, m in excs:
        t = _strict2(d, _mult(d))
        if (0, 0) not in t:
            c2_excs.append((t, k, m))
    if c2_curves or c2_excs:
        c2_excs.append(({(0, 1): K.one}, k_new, m_new))
        child = _resolve(c2_curves, c2_excs, K, depth + 1)
        if child is not None:
            node.children.append(child)

    return node


def _validated(branches: Sequence[tuple[PolyDict, int]]) -> list[Weighted]:
    if not branches:
        raise InvalidGermError("at least one branch is required")
    cleaned = []
    for d, w in branches:
        d = {k: c for k, c in d.items() if c}
        if not d:
            raise InvalidGermError("zero polynomial is not a branch")
        if (0, 0) in d:
            raise InvalidGermError("branch does not vanish at the origin")
        if not (isinstance(w, int) and w >= 1):
            raise InvalidGermError("weights must be positive integers")
        cleaned.append((d, w))
    return cleaned


def blowup_tree(branches: Sequence[tuple[PolyDict, int]]) -> list[BlowupNode]:
    """Resolution tree of the weighted union of branches at the origin.

    Returns the root-level nodes (empty when the union is already SNC).
    Branch dicts use rational (sympy QQ) coefficients.
    """
    cleaned = _validated(branches)
    root = _resolve(cleaned, [], QQ, 0)
    return [] if root is None else [root]


def lct_of_branches(branches: Sequence[tuple[PolyDict, int]]) -> Fraction:
    """Log canonical threshold of sum w_i f_i at the origin."""
    cleaned = _validated(branches)
    best = min(Fraction(1, w) for _, w in cleaned)
    for root in blowup_tree(cleaned):
        for node in root.walk():
            best = min(best, node.ratio)
    return best
