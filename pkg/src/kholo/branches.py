"""Discriminant loci and numeric fiber counting.

For an annihilator P(z, t) the discriminant D(z) cuts out the locus over
which the t-fibers degenerate; away from it, the number of distinct roots of
the specialization P(z0, t) is constant and the projection behaves like a
finite covering.  Root counting is the only floating-point code in the
toolkit: an Aberth-Ehrlich simultaneous iteration with deterministic seeding,
cross-checkable against an exact gcd square-freeness test.
"""

import cmath
from dataclasses import dataclass

from kholo.errors import (
    IncompleteAssignment,
    LeadingCoefficientVanishes,
    NonConvergence,
    PointOnLocus,
    ZeroDegree,
)
from kholo.eliminate import sylvester_resultant
from kholo.polynomials import SparsePoly, exact_divide, univariate_coefficients
from kholo.rationals import GQ_ZERO, as_gaussian

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 200


@dataclass
class FiberSample:
    point: tuple
    on_locus: bool
    fiber_count: int


@dataclass
class BranchReport:
    """Fiber counts along a sample path, plus the discriminant that guards it.

    ``covering_degree`` is set exactly when every off-locus sample agrees."""

    p: SparsePoly
    discriminant: SparsePoly
    samples: list
    covering_degree: int | None


def discriminant(p, name):
    """disc(p) = (-1)^(d(d-1)/2) * Res(p, dp/dt) / lc(p), exactly.

    The leading coefficient always divides the resultant in the polynomial
    ring; a failed division signals an internal convention bug and surfaces
    as InexactDivision.
    """
    d = p.degree_in(name)
    if d < 1:
        raise ZeroDegree(f"discriminant needs positive degree in {name!r}")
    res = sylvester_resultant(p, p.partial(name), name)
    lead = univariate_coefficients(p, name)[d]
    quot = exact_divide(res, lead)
    if (d * (d - 1) // 2) % 2:
        quot = -quot
    return quot


def _as_point(space, z0):
    """Accept a mapping or a coordinate sequence for the space's variables."""
    if isinstance(z0, dict):
        return {name: as_gaussian(v) for name, v in z0.items()}
    values = tuple(z0) if isinstance(z0, (tuple, list)) else (z0,)
    if len(values) != len(space.names):
        raise IncompleteAssignment(
            f"point of arity {len(values)} for space {space}")
    return {name: as_gaussian(v) for name, v in zip(space.names, values)}


def locus_membership(d, z0):
    """Exact membership test: D(z0) = 0."""
    return not d.eval(_as_point(d.space, z0))


# -- numeric root finding -----------------------------------------------------

def _to_complex(c):
    return float(c.re) + 1j * float(c.im)


def evaluate_complex(p, point):
    """Floating-point value of p at a complex assignment {name: complex}."""
    total = 0j
    for exps, coeff in p._terms.items():
        term = _to_complex(coeff)
        for k, e in enumerate(exps):
            if e:
                term *= point[p.space.names[k]] ** e
        total += term
    return total


def aberth_roots(coeffs, max_iter=DEFAULT_MAX_ITER):
    """All complex roots of sum(coeffs[k] * t^k) by Aberth-Ehrlich iteration.

    Deterministic: starts on a Cauchy-bound circle with fixed angular offset
    and a mild per-index radius perturbation.  Raises NonConvergence when the
    correction steps have not settled within the iteration cap.
    """
    coeffs = [complex(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    if d == 1:
        return [-monic[0]]
    deriv = [k * monic[k] for k in range(1, d + 1)]
    radius = 1.0 + max(abs(c) for c in monic[:-1])

    roots = [radius * (1.0 + 0.05 * k / d)
             * cmath.exp(2j * cmath.pi * (k + 0.37) / d)
             for k in range(d)]

    def horner(cs, x):
        acc = 0j
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    scale = max(1.0, radius)
    for _ in range(max_iter):
        shift = 0.0
        for k in range(d):
            zk = roots[k]
            pv = horner(monic, zk)
            if pv == 0:
                continue
            pd = horner(deriv, zk)
            if pd == 0:
                roots[k] = zk * (1 + 1e-6) + 1e-9
                shift = float("inf")
                continue
            ratio = pv / pd
            acc = 0j
            for j in range(d):
                if j != k:
                    diff = zk - roots[j]
                    if diff == 0:
                        diff = 1e-12
                    acc += 1.0 / diff
            denom = 1.0 - ratio * acc
            if denom == 0:
                delta = ratio
            else:
                delta = ratio / denom
            roots[k] = zk - delta
            shift = max(shift, abs(delta) / scale)
        if shift < 1e-13:
            return roots
    raise NonConvergence(f"root iteration did not settle in {max_iter} steps")


def _cluster_count(points, tol):
    # single linkage: count connected components of the tol-proximity graph
    m = len(points)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(m):
        for b in range(a + 1, m):
            if abs(points[a] - points[b]) < tol:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    return len({find(a) for a in range(m)})


def _specialize(p, z0, name):
    """Exact coefficients of P(z0, t) as a univariate list in t."""
    coeffs = univariate_coefficients(p, name)
    base = p.space.drop(name)
    point = _as_point(base, z0)
    return [c.eval(point) if not c.is_zero() else GQ_ZERO for c in coeffs]


def fiber_count(p, z0, tol=DEFAULT_TOL, name="t", max_iter=DEFAULT_MAX_ITER):
    """Number of distinct complex roots of the specialization P(z0, t).

    The leading-coefficient precondition is checked exactly; the roots are
    found in floating point and clustered at distance tol.
    """
    exact = _specialize(p, z0, name)
    if not exact or not exact[-1]:
        raise LeadingCoefficientVanishes(f"leading t-coefficient dies at {z0}")
    roots = aberth_roots([_to_complex(c) for c in exact], max_iter=max_iter)
    return _cluster_count(roots, tol)


def distinct_root_count_exact(p, z0, name="t"):
    """Exact distinct-root count of P(z0, t): deg - deg(gcd(P, dP/dt)).

    Independent of the numeric route: uses the Euclidean algorithm over Q(i)
    on the exact specialization.
    """
    exact = _specialize(p, z0, name)
    if not exact or not exact[-1]:
        raise LeadingCoefficientVanishes(f"leading t-coefficient dies at {z0}")
    d = len(exact) - 1
    deriv = [exact[k] * k for k in range(1, d + 1)]
    g = _univariate_gcd(exact, deriv)
    return d - (len(g) - 1)


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _univariate_gcd(a, b):
    """Monic gcd of two univariate coefficient lists over Q(i)."""
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _poly_mod(a, b):
    """Remainder of univariate division over the field Q(i)."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        factor = a[-1] / lead
        shift = len(a) - 1 - db
        for k in range(db + 1):
            a[shift + k] = a[shift + k] - factor * b[k]
        a.pop()
        _trim(a)
    return a


# -- covering checks ----------------------------------------------------------

def covering_check(p, path, tol=DEFAULT_TOL, name="t", max_iter=DEFAULT_MAX_ITER):
    """Fiber counts along user-supplied sample points off the discriminant locus.

    Every point is first checked exactly against the locus (PointOnLocus names
    the offender); the covering degree is recorded iff all counts agree.
    """
    disc = discriminant(p, name)
    base = p.space.drop(name)
    samples = []
    for z0 in path:
        point = _as_point(base, z0)
        if locus_membership(disc, point):
            raise PointOnLocus(f"sample {z0} lies on the discriminant locus")
        count = fiber_count(p, point, tol=tol, name=name, max_iter=max_iter)
        key = tuple(point[nm] for nm in base.names)
        samples.append(FiberSample(point=key, on_locus=False, fiber_count=count))
    counts = {s.fiber_count for s in samples}
    degree = counts.pop() if len(counts) == 1 else None
    return BranchReport(p=p, discriminant=disc, samples=samples,
                        covering_degree=degree)
