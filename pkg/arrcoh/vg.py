"""
The Varchenko-Gel'fand ring of a central real hyperplane arrangement, that is ``H^0`` of the complement seen as the
ring of integer valued functions on the chambers.

Chambers are found by refining sign vectors one hyperplane at a time; each partial sign vector is kept only when
the open cone it describes is non-empty, which is decided exactly by Fourier-Motzkin elimination over the
rationals. The Heaviside classes ``w_i^+`` and ``w_i^-`` are the indicator functions of the two sides of ``H_i``.
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import logging
from fractions import Fraction
from itertools import combinations

from .exactlin import RationalVector, RationalEchelon, PreconditionException
from .matroid import as_index_set
from .model import Check


def _normalized(coeffs, rhs):
    # scale so that the first non-zero coefficient is +1 or -1
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        return tuple(coeffs), rhs
    scale = abs(lead)
    return tuple(c / scale for c in coeffs), rhs / scale


def _eliminate(system, k):
    """ Removes variable ``k`` from a system of ``coeffs . x >= rhs`` constraints. """
    lower, upper, rest = [], [], set()
    for coeffs, rhs in system:
        if coeffs[k] > 0:
            lower.append((coeffs, rhs))
        elif coeffs[k] < 0:
            upper.append((coeffs, rhs))
        else:
            rest.add((coeffs, rhs))
    for lc, lr in lower:
        for uc, ur in upper:
            p, q = lc[k], -uc[k]
            coeffs = tuple(q * x + p * y for x, y in zip(lc, uc))
            rest.add(_normalized(coeffs, q * lr + p * ur))
    return sorted(rest)


def feasible_point(constraints, dim):
    """
    Finds a rational point satisfying every constraint ``coeffs . x >= rhs`` by Fourier-Motzkin elimination.

    Variables are eliminated from the last to the first; the point is then rebuilt from the first variable on,
    taking the midpoint of the admissible interval, its finite end when the interval is a half line, or zero when
    the variable is unconstrained.

    :param constraints: The constraints as ``(coeffs, rhs)`` pairs
    :type constraints: list of (tuple of Fraction, Fraction)
    :param dim: The number of variables
    :type dim: int
    :return: a :class:`arrcoh.exactlin.RationalVector` or ``None`` when the system is infeasible
    """
    levels = [sorted(set(_normalized(tuple(Fraction(c) for c in coeffs), Fraction(rhs))
                         for coeffs, rhs in constraints))]
    for k in reversed(range(dim)):
        levels.append(_eliminate(levels[-1], k))
    if any(rhs > 0 for coeffs, rhs in levels[-1]):
        return None
    point = [Fraction(0)] * dim
    for k in range(dim):
        # levels[dim - k - 1] only involves the variables 0..k
        lo, hi = None, None
        for coeffs, rhs in levels[dim - k - 1]:
            if not coeffs[k]:
                continue
            bound = (rhs - sum(c * x for c, x in zip(coeffs[:k], point[:k]))) / coeffs[k]
            if coeffs[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                return None
            point[k] = (lo + hi) / 2
        elif lo is not None:
            point[k] = lo
        elif hi is not None:
            point[k] = hi
    return RationalVector(point)


class Chamber(object):
    """
    A connected component of the complement of a real arrangement.

    **Required parameters to the constructor:**

    :param signs: The side of every hyperplane, ``+1`` or ``-1``, in ground set order
    :type signs: tuple of int
    :param witness: A rational point strictly inside the chamber
    :type witness: :class:`arrcoh.exactlin.RationalVector`
    """

    def __init__(self, signs, witness):
        self.signs = tuple(signs)
        self.witness = witness

    def __eq__(self, other):
        if not isinstance(other, Chamber):
            return False
        return self.signs == other.signs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.signs)

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __repr__(self):
        return "Chamber(%s, %s)" % (self, self.witness)


class ChamberFunction(object):
    """ An integer valued function on a fixed list of chambers. """

    def __init__(self, values):
        self.values = tuple(values)

    @classmethod
    def constant(cls, size, c=1):
        return cls([c] * size)

    def _check(self, other):
        if len(other.values) != len(self.values):
            raise ValueError("Chamber functions over different chamber lists")
        return other

    def __add__(self, other):
        return ChamberFunction(x + y for x, y in zip(self.values, self._check(other).values))

    def __sub__(self, other):
        return ChamberFunction(x - y for x, y in zip(self.values, self._check(other).values))

    def __mul__(self, other):
        return ChamberFunction(x * y for x, y in zip(self.values, self._check(other).values))

    def __neg__(self):
        return ChamberFunction(-x for x in self.values)

    def scale(self, c):
        return ChamberFunction(c * x for x in self.values)

    def is_zero(self):
        return not any(self.values)

    def support(self):
        return [k for k, x in enumerate(self.values) if x]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, ChamberFunction):
            return False
        return self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "ChamberFunction(%s)" % list(self.values)


class VarchenkoGelfandRing(object):
    """
    The chamber functions of a central real arrangement and its Heaviside classes.

    **Required parameters to the constructor:**

    :param arrangement: A central arrangement with ``a = 0`` and ``b = 1``
    :type arrangement: :class:`arrcoh.arrangement.AbelianArrangement`
    """

    def __init__(self, arrangement):
        if arrangement.a != 0 or arrangement.b != 1:
            raise PreconditionException("Need a real arrangement (a, b) = (0, 1), got: (%s, %s)" %
                                        (arrangement.a, arrangement.b))
        if not arrangement.is_central_arrangement():
            raise PreconditionException("Need a central arrangement")
        self.arrangement = arrangement
        points = arrangement.component_points(arrangement.ground_set)
        self.center = points[0].real[0] if points else RationalVector.zeros(arrangement.rank)
        self._chambers = None

    @property
    def chambers(self):
        if self._chambers is None:
            self._chambers = self.enumerate_chambers()
        return self._chambers

    def _constraint(self, i, sign):
        # sign * chi_i . (x - center) >= 1, a normalization of the strict inequality for a cone
        chi = self.arrangement.characters.column(i)
        return tuple(sign * c for c in chi), 1 + sign * self.center.dot(chi)

    def enumerate_chambers(self):
        """
        All chambers of the arrangement, sorted by sign vector with ``+`` before ``-``.

        :return: list of :class:`arrcoh.vg.Chamber`
        """
        arr = self.arrangement
        partial = [((), [], RationalVector(self.center))]
        for i in arr.ground_set:
            refined = []
            for signs, constraints, _ in partial:
                for sign in (1, -1):
                    extended = constraints + [self._constraint(i, sign)]
                    witness = feasible_point(extended, arr.rank)
                    if witness is not None:
                        refined.append((signs + (sign,), extended, witness))
            logging.debug("Refined sign vectors through hyperplane %s: %s cones", i, len(refined))
            partial = refined
        return [Chamber(signs, witness) for signs, _, witness in partial]

    def heaviside_monomial(self, positive, negative):
        """
        The product of ``w_i^+`` over ``positive`` and ``w_i^-`` over ``negative``, i.e. the indicator function of
        the chambers on the positive side of the first and the negative side of the second family.

        :return: a :class:`arrcoh.vg.ChamberFunction`
        """
        positive, negative = as_index_set(positive), as_index_set(negative)
        if set(positive) & set(negative):
            raise PreconditionException("Heaviside monomial needs disjoint index sets, got: %s and %s" %
                                        (positive, negative))
        return ChamberFunction(int(all(c.signs[i] > 0 for i in positive) and all(c.signs[i] < 0 for i in negative))
                               for c in self.chambers)

    def w_plus(self, i):
        return self.heaviside_monomial((i,), ())

    def w_minus(self, i):
        return self.heaviside_monomial((), (i,))

    def relation_rel(self, circuit):
        """
        The chamber function of the relation obtained by summing the circuit relations over all subsets of one
        side of an oriented circuit:
        ``sum_{0 != K c C-} (-1)^|K| w+_{C-K} - sum_{0 != K c C+} (-1)^|K| w+_{C-K}``.
        """
        total = ChamberFunction.constant(len(self.chambers), 0)
        for side, sign in ((circuit.negative, 1), (circuit.positive, -1)):
            for k in range(1, len(side) + 1):
                for K in combinations(side, k):
                    rest = tuple(i for i in circuit.support if i not in K)
                    total = total + self.heaviside_monomial(rest, ()).scale(sign * (-1) ** k)
        return total

    def span_dimension(self):
        """ Dimension of the span of the square-free ``w^+`` monomials inside the functions on chambers. """
        n, size = len(self.arrangement), len(self.chambers)
        echelon = RationalEchelon()
        for k in range(n + 1):
            for S in combinations(range(n), k):
                f = self.heaviside_monomial(S, ())
                echelon.add(dict((j, x) for j, x in enumerate(f.values) if x))
                if echelon.rank == size:
                    return size
        return echelon.rank

    def zaslavsky_count(self):
        """ ``(-1)^r chi(-1)``, the number of chambers predicted by the characteristic polynomial. """
        chi = self.arrangement.characteristic_polynomial()
        return (-1) ** self.arrangement.rank * int(chi.eval(-1))

    def _witness(self, f):
        return "non-zero on chamber %s" % self.chambers[f.support()[0]]

    def verify_presentation(self):
        """
        Evaluates every generator of the presentation ideal as a chamber function and checks surjectivity of the
        square-free monomials.

        :return: a :class:`arrcoh.vg.PresentationReport`
        """
        chambers = self.chambers
        one = ChamberFunction.constant(len(chambers))
        checks = []
        failed = []
        for i in self.arrangement.ground_set:
            f = self.w_minus(i) - (one - self.w_plus(i))
            if not f.is_zero():
                failed.append("w-_%s = 1 - w+_%s: %s" % (i, i, self._witness(f)))
        checks.append(Check.of("vg.complement", not failed, "; ".join(failed)))
        failed = []
        for i in self.arrangement.ground_set:
            f = self.w_plus(i) * self.w_minus(i)
            if not f.is_zero():
                failed.append("w+_%s w-_%s: %s" % (i, i, self._witness(f)))
        checks.append(Check.of("vg.idempotent", not failed, "; ".join(failed)))
        failed_circuit, failed_rel = [], []
        for C in self.arrangement.matroid.circuits():
            for oriented in (C, C.opposite()):
                f = self.heaviside_monomial(oriented.positive, oriented.negative)
                if not f.is_zero():
                    failed_circuit.append("circuit %s: %s" % (oriented, self._witness(f)))
                f = self.relation_rel(oriented)
                if not f.is_zero():
                    failed_rel.append("circuit %s: %s" % (oriented, self._witness(f)))
        checks.append(Check.of("vg.circuit", not failed_circuit, "; ".join(failed_circuit)))
        checks.append(Check.of("vg.rel", not failed_rel, "; ".join(failed_rel)))
        dimension = self.span_dimension()
        checks.append(Check.of("vg.span", dimension == len(chambers),
                               "span dimension %s, %s chambers" % (dimension, len(chambers))))
        zaslavsky = self.zaslavsky_count()
        checks.append(Check.of("vg.zaslavsky", zaslavsky == len(chambers),
                               "(-1)^r chi(-1) = %s, %s chambers" % (zaslavsky, len(chambers))))
        return PresentationReport(len(chambers), dimension, zaslavsky, checks)


class PresentationReport(object):
    """ Chamber count, monomial span dimension, Zaslavsky count and the individual checks. """

    def __init__(self, chamber_count, span_dimension, zaslavsky_count, checks):
        self.chamber_count = chamber_count
        self.span_dimension = span_dimension
        self.zaslavsky_count = zaslavsky_count
        self.checks = list(checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def enumerate_chambers(arrangement):
    """ The chambers of a central real arrangement, see :meth:`VarchenkoGelfandRing.enumerate_chambers`. """
    return VarchenkoGelfandRing(arrangement).chambers


def verify_vg_presentation(arrangement):
    """ See :meth:`VarchenkoGelfandRing.verify_presentation`. """
    return VarchenkoGelfandRing(arrangement).verify_presentation()
