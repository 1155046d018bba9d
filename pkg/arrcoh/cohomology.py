"""
The presented cohomology ring of the complement of an abelian arrangement.

The ring ``R`` is the free module over the exterior algebra ``H*(G^r)`` on the classes ``omega_{W,A}``, one for every
independent set ``A`` and every connected component ``W`` of the intersection over ``A``. A basis of ``R`` consists of
the symbols ``omega_{W,A} x_S`` where ``x_S`` is a square-free monomial in the degree one generators ``x_k^j``
(``k`` a lattice coordinate, ``j`` a torus coordinate, ordered ``k`` major). The cohomology is the quotient of ``R``
by the kernel relations of every ``omega_{W,A}`` and one circuit relation per central set of nullity one and
component of its intersection. Everything is computed over the rationals; the Betti numbers are the dimensions of
the graded pieces of the quotient.

>>> from arrcoh.cohomology import CohomologyRing
>>> from arrcoh.cli import builtin_arrangement
>>> CohomologyRing(builtin_arrangement("cu")).betti_numbers().values
(1, 5, 6)
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import logging
from collections import namedtuple
from fractions import Fraction
from itertools import combinations

from six import iteritems
from sympy import Poly, expand

from .exactlin import IntegerMatrix, RationalEchelon, PreconditionException, InconsistencyException
from .matroid import as_index_set, shuffle_sign
from .arrangement import AbelianArrangement, t


RingBasisSymbol = namedtuple("RingBasisSymbol", ["layer", "independent", "monomial"])


class RingElement(object):
    """
    A finite rational combination of :class:`RingBasisSymbol`. Zero coefficients are never stored.
    """

    def __init__(self, terms=None):
        self.terms = {}
        for s, c in iteritems(terms or {}):
            c = Fraction(c)
            if c:
                self.terms[s] = c

    @classmethod
    def symbol(cls, s):
        return cls({s: 1})

    def __add__(self, other):
        terms = dict(self.terms)
        for s, c in iteritems(other.terms):
            terms[s] = terms.get(s, 0) + c
        return RingElement(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return RingElement(dict((s, c * v) for s, v in iteritems(self.terms)))

    def is_zero(self):
        return not self.terms

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, s):
        return self.terms.get(s, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return False
        return self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        return "RingElement(%s)" % dict(self.terms)


class BettiTable(object):
    """ The ranks ``b_0, b_1, ...`` of the graded pieces of the cohomology. """

    def __init__(self, values):
        self.values = tuple(int(v) for v in values)
        if any(v < 0 for v in self.values):
            raise InconsistencyException("Negative Betti number in %s" % (self.values,))

    def trimmed(self):
        """ The table without trailing zeros. """
        values = list(self.values)
        while values and not values[-1]:
            values.pop()
        return BettiTable(values)

    def __getitem__(self, k):
        return self.values[k] if 0 <= k < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self.trimmed().values == other.trimmed().values
        if isinstance(other, (list, tuple)):
            return self == BettiTable(other)
        return False

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.trimmed().values)

    def __str__(self):
        return "(%s)" % ", ".join(str(v) for v in self.values)

    def __repr__(self):
        return "BettiTable%s" % self


class CohomologyRing(object):
    """
    The ring ``R`` of an arrangement together with its relations.

    **Required parameters to the constructor:**

    :param arrangement: The arrangement, with ``b >= 1``
    :type arrangement: :class:`arrcoh.arrangement.AbelianArrangement`

    **Optional parameters to the constructor:**

    :param pivot: Chooses the element ``i_K`` of a non-empty subset ``K`` of a circuit in the ``b = 1`` circuit
        relation; defaults to the smallest element
    :type pivot: callable
    """

    def __init__(self, arrangement, pivot=min):
        if not isinstance(arrangement, AbelianArrangement):
            raise TypeError("Need an AbelianArrangement object, got: %s" % type(arrangement))
        if arrangement.b < 1:
            raise PreconditionException("Cohomology ring needs b >= 1, got b = %s" % arrangement.b)
        self.arrangement = arrangement
        self.matroid = arrangement.matroid
        self.poset = arrangement.layer_poset()
        self.pivot = pivot
        self.a, self.b, self.d = arrangement.a, arrangement.b, arrangement.d
        self.generator_count = arrangement.rank * arrangement.a
        self._products = {}
        self._symbols = {}
        self._spans = {}
        self._multiplier_lists = {}
        self._base = None
        self.generators = []
        for k in range(min(arrangement.rank, arrangement.size) + 1):
            for A in combinations(arrangement.ground_set, k):
                if self.matroid.is_independent(A):
                    for W in arrangement.intersection_components(A):
                        self.generators.append((W, A))
        logging.debug("Ring of %s has %s omega generators and %s exterior generators", arrangement,
                      len(self.generators), self.generator_count)

    # Basis symbols

    def degree(self, s):
        return len(s.independent) * self.d + len(s.monomial)

    def element_degree(self, u):
        """ The degree of a homogeneous element, ``None`` for zero. """
        degrees = set(self.degree(s) for s in u.terms)
        if len(degrees) > 1:
            raise PreconditionException("Element is not homogeneous, degrees %s" % sorted(degrees))
        return degrees.pop() if degrees else None

    def symbols(self, k):
        """ The basis symbols of degree ``k``, in a fixed order. """
        if k not in self._symbols:
            found = []
            for W, A in self.generators:
                e = k - len(A) * self.d
                if 0 <= e <= self.generator_count:
                    for S in combinations(range(self.generator_count), e):
                        found.append(RingBasisSymbol(W.ident, A, S))
            self._symbols[k] = found
        return list(self._symbols[k])

    def generator_index(self, k, j):
        """ Position of ``x_k^j`` (``k`` a 0-based lattice coordinate, ``j`` a 1-based torus coordinate). """
        return k * self.a + (j - 1)

    def unit(self):
        return RingElement.symbol(RingBasisSymbol(self.poset.bottom.ident, (), ()))

    def omega(self, W, A):
        """
        The class ``omega_{W,A}``.

        :param W: A connected component of the intersection over ``A``
        :type W: :class:`arrcoh.arrangement.Layer`
        :param A: An independent set contained in the support of ``W``
        :type A: tuple of int
        """
        A = as_index_set(A)
        if not self.matroid.is_independent(A):
            raise PreconditionException("Set %s is dependent" % (A,))
        W = self.poset.find(W)
        if W is None or not set(A) <= set(W.support) or W.rank != len(A):
            raise PreconditionException("Layer is not a component of the intersection over %s" % (A,))
        return RingElement.symbol(RingBasisSymbol(W.ident, A, ()))

    def omega_of(self, A):
        """ ``omega_{W,A}`` for a set ``A`` whose intersection is connected. """
        A = as_index_set(A)
        components = self.arrangement.intersection_components(A)
        if len(components) != 1:
            raise PreconditionException("Intersection over %s has %s components" % (A, len(components)))
        return self.omega(components[0], A)

    # Products

    def _symbol_product(self, s, s2):
        key = (s, s2)
        if key in self._products:
            return self._products[key]
        result = {}
        A, A2 = s.independent, s2.independent
        S, S2 = s.monomial, s2.monomial
        union = as_index_set(A + A2)
        if not set(A) & set(A2) and not set(S) & set(S2) and self.matroid.is_independent(union):
            sign = (-1) ** (len(S) * self.d * len(A2))
            sign *= shuffle_sign(A, A2) ** self.d * shuffle_sign(S, S2)
            monomial = as_index_set(S + S2)
            W, W2 = self.poset[s.layer], self.poset[s2.layer]
            if not A2:
                targets = [W]
            elif not A:
                targets = [W2]
            else:
                targets = [L for L in self.arrangement.intersection_components(union)
                           if self.poset.leq(W, L) and self.poset.leq(W2, L)]
            for L in targets:
                result[RingBasisSymbol(L.ident, union, monomial)] = sign
        self._products[key] = result
        return result

    def multiply(self, u, v):
        """
        The product of two ring elements. On basis symbols the exterior parts multiply with Koszul signs, moving
        ``x_S`` past ``omega_{W',A'}`` costs ``(-1)^(|S| d |A'|)``, and ``omega_{W,A} omega_{W',A'}`` vanishes when
        ``A`` and ``A'`` meet or their union is dependent; otherwise it is ``(-1)^(d l(A,A'))`` times the sum of
        ``omega_{L, A u A'}`` over the components ``L`` of ``W cap W'``.

        :return: a :class:`arrcoh.cohomology.RingElement`
        """
        terms = {}
        for s, c in iteritems(u.terms):
            for s2, c2 in iteritems(v.terms):
                for p, sign in iteritems(self._symbol_product(s, s2)):
                    terms[p] = terms.get(p, 0) + sign * c * c2
        return RingElement(terms)

    def product(self, *elements):
        result = self.unit()
        for u in elements:
            result = self.multiply(result, u)
        return result

    # Classes from the torus

    def psi_class(self, i, j):
        """
        The class ``psi_i^j = sum_k (chi_i)_k x_k^j`` pulled back along the ``j``-th circle coordinate of ``chi_i``.

        :param i: A ground set element
        :type i: int
        :param j: A torus coordinate, ``1 <= j <= a``
        :type j: int
        """
        if not 1 <= j <= self.a:
            raise ValueError("Torus coordinate %s out of range 1..%s" % (j, self.a))
        bottom = self.poset.bottom.ident
        chi = self.matroid.character(i)
        return RingElement(dict((RingBasisSymbol(bottom, (), (self.generator_index(k, j),)), c)
                                for k, c in enumerate(chi) if c))

    def psi(self, i):
        """ ``psi_i = psi_i^1 ... psi_i^a``, the unit when ``a = 0``. """
        return self.product(*[self.psi_class(i, j) for j in range(1, self.a + 1)])

    def psi_set(self, B):
        """ ``psi_B``, the product of ``psi_i`` over ``B`` in ground set order. """
        return self.product(*[self.psi(i) for i in as_index_set(B)])

    def eta(self, W, A, B):
        """ ``eta_{W,A,B} = (-1)^(d l(A,B)) omega_{W,A} psi_B``. """
        A, B = as_index_set(A), as_index_set(B)
        return self.multiply(self.omega(W, A), self.psi_set(B)).scale(shuffle_sign(A, B) ** self.d)

    def eta_bar(self, W, A, B):
        """
        The orientation average
        ``sum_{D c A} (-1)^|D| 2^|A-D| m(A-D)/m(A) eta_{W(A-D), A-D, B u D}`` where ``W(A-D)`` is the component of
        the intersection over ``A - D`` containing ``W``.
        """
        A, B = as_index_set(A), as_index_set(B)
        if set(A) & set(B):
            raise PreconditionException("Sets %s and %s are not disjoint" % (A, B))
        if not self.matroid.is_independent(A):
            raise PreconditionException("Set %s is dependent" % (A,))
        total = RingElement()
        mA = self.matroid.multiplicity(A)
        for k in range(len(A) + 1):
            for D in combinations(A, k):
                rest = tuple(i for i in A if i not in D)
                coefficient = Fraction((-1) ** k * 2 ** len(rest) * self.matroid.multiplicity(rest), mA)
                Wd = self.arrangement.layer_above(W, rest)
                total = total + self.eta(Wd, rest, B + D).scale(coefficient)
        return total

    # Relations

    def relation_prod1(self, W, A, full=False):
        """
        The kernel relations of ``omega_{W,A}``: the products ``omega_{W,A} psi_i^j`` for ``i`` in ``A`` and all
        torus coordinates ``j``. These span the degree one part of the kernel of ``H*(G^r) -> H*(W)``; with ``full``
        every product with a further exterior monomial is listed too.

        :return: list of :class:`arrcoh.cohomology.RingElement`
        """
        A = as_index_set(A)
        if not self.matroid.is_independent(A):
            raise PreconditionException("Set %s is dependent" % (A,))
        omega = self.omega(W, A)
        relations = []
        for i in A:
            for j in range(1, self.a + 1):
                relations.append(self.multiply(omega, self.psi_class(i, j)))
        if full:
            bottom = self.poset.bottom.ident
            monomials = [RingElement.symbol(RingBasisSymbol(bottom, (), S))
                         for e in range(1, self.generator_count + 1)
                         for S in combinations(range(self.generator_count), e)]
            relations += [self.multiply(r, x) for r in relations for x in monomials]
        return [r for r in relations if not r.is_zero()]

    def relation_circuit(self, X, Y, pivot=None, opposite=False):
        """
        The circuit relation of a central set ``X`` of nullity one at a component ``Y`` of its intersection.

        For ``b = 1`` it is
        ``sum_{0 != K c C-} (-1)^|K| c_{i_K}^d (m(X-K)/m(X-i_K))^a eta_{W, X-K, K-i_K}`` minus the same sum over
        ``C+``, where ``W`` is the component over ``X - K`` containing ``Y``. The signs ``c_i`` are
        taken against ``X``. For ``b > 1`` it is
        ``sum_{i in C} (-1)^|X_<i| omega_{Y, X-i}`` when ``d`` is odd and
        ``sum_{C-} omega_{Y, X-i} - sum_{C+} omega_{Y, X-i}`` when ``d`` is even.

        :param pivot: Overrides the choice of ``i_K``
        :type pivot: callable
        :param opposite: Use the circuit with the opposite orientation
        :type opposite: bool
        :return: a :class:`arrcoh.cohomology.RingElement`
        """
        X = as_index_set(X)
        if self.a + self.b < 2:
            raise PreconditionException("Circuit relations need a + b >= 2")
        if not self.arrangement.is_central(X):
            raise PreconditionException("Set %s is not central" % (X,))
        C = self.matroid.unique_circuit(X)
        if Y not in self.arrangement.intersection_components(X):
            raise PreconditionException("Layer %s is not a component of the intersection over %s" % (Y, X))
        if opposite:
            C = C.opposite()
        pivot = pivot or self.pivot
        total = RingElement()
        if self.b == 1:
            signs = self.matroid.circuit_signs(C, X)
            for side, outer in ((C.negative, 1), (C.positive, -1)):
                for k in range(1, len(side) + 1):
                    for K in combinations(side, k):
                        i_K = pivot(K)
                        rest = tuple(i for i in X if i not in K)
                        ratio = Fraction(self.matroid.multiplicity(rest),
                                         self.matroid.multiplicity(tuple(i for i in X if i != i_K))) ** self.a
                        coefficient = outer * (-1) ** k * signs[i_K] ** self.d * ratio
                        W = self.arrangement.layer_above(Y, rest)
                        total = total + self.eta(W, rest, [i for i in K if i != i_K]).scale(coefficient)
        else:
            for i in C.support:
                rest = tuple(x for x in X if x != i)
                if self.d % 2:
                    coefficient = (-1) ** X.index(i)
                else:
                    coefficient = 1 if i in C.negative else -1
                total = total + self.omega(self.arrangement.layer_above(Y, rest), rest).scale(coefficient)
        return total

    def base_relations(self, pivot=None, opposite=None):
        """
        All kernel and circuit relations as ``(degree, element)`` pairs.

        :param pivot: Overrides the choice of ``i_K`` in the circuit relations
        :param opposite: Optional predicate on signed circuits selecting those to use with the opposite orientation
        """
        if pivot is None and opposite is None and self._base is not None:
            return list(self._base)
        relations = []
        for W, A in self.generators:
            if A:
                relations.extend(self.relation_prod1(W, A))
        if self.a + self.b >= 2:
            for X, C in self.matroid.nullity_one_sets(central_filter=self.arrangement.is_central):
                flip = opposite is not None and opposite(C)
                for Y in self.arrangement.intersection_components(X):
                    relations.append(self.relation_circuit(X, Y, pivot=pivot, opposite=flip))
        relations = [(self.element_degree(r), r) for r in relations if not r.is_zero()]
        if pivot is None and opposite is None:
            self._base = relations
        return list(relations)

    def _vector(self, u, index):
        return dict((index[s], c) for s, c in iteritems(u.terms))

    def _multipliers(self, e, layers):
        key = (e, layers)
        if key in self._multiplier_lists:
            return self._multiplier_lists[key]
        if layers == 1:
            found = [RingElement.symbol(s) for s in self.symbols(e)]
        else:
            found = []
            for f in range(e + 1):
                for s in self.symbols(f):
                    for u in self._multipliers(e - f, layers - 1):
                        p = self.multiply(RingElement.symbol(s), u)
                        if not p.is_zero():
                            found.append(p)
        self._multiplier_lists[key] = found
        return found

    def relation_span(self, k, layers=1, pivot=None, opposite=None):
        """
        The degree ``k`` part of the relation ideal: every base relation multiplied by every basis symbol of the
        complementary degree, row reduced. With ``layers = 2`` the relations are multiplied by products of two
        basis symbols.

        :return: a :class:`arrcoh.exactlin.RationalEchelon` over the positions of :meth:`symbols`
        """
        if layers < 1: raise ValueError("Need at least one multiplication layer, got: %s" % layers)
        default = pivot is None and opposite is None
        if default and (k, layers) in self._spans:
            return self._spans[(k, layers)]
        symbols = self.symbols(k)
        index = dict((s, n) for n, s in enumerate(symbols))
        echelon = RationalEchelon()
        for degree, relation in self.base_relations(pivot=pivot, opposite=opposite):
            if degree > k or echelon.rank == len(symbols):
                continue
            for m in self._multipliers(k - degree, layers):
                p = self.multiply(m, relation)
                if not p.is_zero() and echelon.add(self._vector(p, index)) and echelon.rank == len(symbols):
                    break
        logging.debug("Relation span in degree %s: rank %s of %s", k, echelon.rank, len(symbols))
        if default:
            self._spans[(k, layers)] = echelon
        return echelon

    def in_span(self, u, **kwargs):
        """ Whether a homogeneous element lies in the relation ideal. """
        if u.is_zero():
            return True
        k = self.element_degree(u)
        index = dict((s, n) for n, s in enumerate(self.symbols(k)))
        return self._vector(u, index) in self.relation_span(k, **kwargs)

    def top_degree(self):
        return max(self.arrangement.rank * (self.a + self.b) - 1, 0)

    def betti_numbers(self, max_degree=None):
        """
        The ranks of the graded pieces of the quotient, up to ``r(a+b) - 1`` or ``max_degree``.

        :return: a :class:`arrcoh.cohomology.BettiTable`
        """
        if self.a + self.b < 2:
            raise PreconditionException("Betti numbers need a + b >= 2, got (%s, %s)" % (self.a, self.b))
        top = self.top_degree() if max_degree is None else max_degree
        values = []
        for k in range(top + 1):
            values.append(len(self.symbols(k)) - self.relation_span(k).rank)
        logging.debug("Betti numbers of %s: %s", self.arrangement, values)
        return BettiTable(values)

    def span_is_stable(self, k):
        """ Whether one more multiplication layer leaves the degree ``k`` relation span unchanged. """
        return self.relation_span(k).rank == self.relation_span(k, layers=2).rank

    def span_matches(self, k, **kwargs):
        """ Whether the relation span built with other circuit choices equals the default one in degree ``k``. """
        default, other = self.relation_span(k), self.relation_span(k, **kwargs)
        return default.rank == other.rank and all(row in default for row in other.rows())

    def omega_circuit_vanishes(self, C):
        """ Whether the product of the ``omega_i`` over a circuit reduces to zero modulo the relations. """
        support = C.support if hasattr(C, "support") else as_index_set(C)
        product = self.product(*[self.omega_of((i,)) for i in support])
        return self.in_span(product)

    def betti_deletion_restriction(self, i):
        """ Whether ``b_k = b'_k + b''_(k-d)`` for the deletion and restriction at ``i``. """
        arr = self.arrangement
        B = self.betti_numbers()
        B1 = CohomologyRing(arr.deletion(i), pivot=self.pivot).betti_numbers()
        B2 = CohomologyRing(arr.restriction(i), pivot=self.pivot).betti_numbers()
        return all(B[k] == B1[k] + B2[k - self.d] for k in range(len(B)))

    def cddmp_relation(self, X, Y, weight=None):
        """
        The orientation averaged circuit relation of a toric arrangement at a central set ``X`` of nullity one:
        ``sum_{i in C} sum_{B c C-i, |B| even} (-1)^(|A_<i| + |B n C-|) m(A)/m(X-i) eta_bar_{W(A), A, B}`` with
        ``A = X - (B u i)`` and ``W(A)`` the component over ``A`` containing ``Y``.

        :param weight: Optional extra factor for each summand, called as ``weight(i, B)``
        :type weight: callable
        :return: a :class:`arrcoh.cohomology.RingElement`
        """
        if (self.a, self.b) != (1, 1):
            raise PreconditionException("Needs a toric arrangement (a, b) = (1, 1), got (%s, %s)" % (self.a, self.b))
        X = as_index_set(X)
        if not self.arrangement.is_central(X):
            raise PreconditionException("Set %s is not central" % (X,))
        C = self.matroid.unique_circuit(X)
        if Y not in self.arrangement.intersection_components(X):
            raise PreconditionException("Layer %s is not a component of the intersection over %s" % (Y, X))
        total = RingElement()
        for i in C.support:
            others = [j for j in C.support if j != i]
            mXi = self.matroid.multiplicity(tuple(x for x in X if x != i))
            for k in range(0, len(others) + 1, 2):
                for B in combinations(others, k):
                    A = tuple(x for x in X if x != i and x not in B)
                    sign = (-1) ** (sum(1 for x in A if x < i) + sum(1 for j in B if j in C.negative))
                    coefficient = Fraction(sign * self.matroid.multiplicity(A), mXi)
                    if weight is not None:
                        coefficient *= weight(i, B)
                    total = total + self.eta_bar(self.arrangement.layer_above(Y, A), A, B).scale(coefficient)
        return total

    def cddmp_check(self, X, Y, weight=None):
        """ Whether the orientation averaged circuit relation at ``X`` and ``Y`` lies in the relation ideal. """
        return self.in_span(self.cddmp_relation(X, Y, weight=weight))

    def describe(self, u):
        """ A readable rendering such as ``+1 w[12,23|L4] -1 w[13|L2] x1.1``. """
        labels = self.arrangement.labels
        parts = []
        for s in u:
            c = u[s]
            text = "%s%s" % ("+" if c > 0 else "-", abs(c))
            if s.independent:
                text += " w[%s|L%s]" % (",".join(labels[i] for i in s.independent), s.layer)
            if s.monomial:
                text += " " + "*".join("x%s.%s" % (g // self.a + 1, g % self.a + 1) for g in s.monomial)
            parts.append(text)
        return " ".join(parts) if parts else "0"


def braid_arrangement(n, a=1, b=1, essential=False):
    """
    The arrangement of the diagonals ``x_i = x_j`` whose complement is the ordered configuration space of ``n``
    points in ``G``. The characters ``e_i - e_j`` (``i < j``, lexicographic) live in ``Z^n``; with ``essential``
    they are written in the basis ``e_k - e_(k+1)`` of their span, of rank ``n - 1``.

    :return: the :class:`arrcoh.arrangement.AbelianArrangement`
    """
    if n < 2: raise ValueError("Need at least two points, got: %s" % n)
    pairs = list(combinations(range(n), 2))
    if essential:
        columns = [[int(i <= k < j) for k in range(n - 1)] for i, j in pairs]
        rank = n - 1
    else:
        columns = [[int(k == i) - int(k == j) for k in range(n)] for i, j in pairs]
        rank = n
    labels = ["%s%s" % (i + 1, j + 1) for i, j in pairs]
    return AbelianArrangement(IntegerMatrix.from_columns(columns, rank), a=a, b=b, labels=labels)


def expected_braid_betti(n, a, b):
    """ The coefficients of ``prod_{k=1}^{n-1} ((1+t)^a + k t^d)``. """
    d = a + b - 1
    expr = 1
    for k in range(1, n):
        expr *= (1 + t) ** a + k * t ** d
    return BettiTable(Poly(expand(expr), t).all_coeffs()[::-1])


def arnold_relation_check(n, a=1, b=1):
    """
    Checks the Arnold relations of the essential braid arrangement: for every triple ``i < j < k`` the element
    ``w_ij w_jk - w_ij w_ik - (-1)^d w_jk w_ik + [b = 1] psi_ij w_ik`` and the triple product ``w_ij w_jk w_ik`` lie
    in the relation ideal, and the Betti numbers are those of ``prod_{k<n} ((1+t)^a + k t^d)``.
    """
    if n < 3: raise ValueError("Need at least three points, got: %s" % n)
    arr = braid_arrangement(n, a=a, b=b, essential=True)
    ring = CohomologyRing(arr)
    position = dict((pair, p) for p, pair in enumerate(combinations(range(n), 2)))
    for i, j, k in combinations(range(n), 3):
        w_ij, w_jk, w_ik = [ring.omega_of((position[p],)) for p in ((i, j), (j, k), (i, k))]
        element = ring.multiply(w_ij, w_jk) - ring.multiply(w_ij, w_ik) - \
            ring.multiply(w_jk, w_ik).scale((-1) ** ring.d)
        if b == 1:
            element = element + ring.multiply(ring.psi(position[(i, j)]), w_ik)
        if not ring.in_span(element):
            logging.info("Arnold relation fails on %s%s%s", i + 1, j + 1, k + 1)
            return False
        if not ring.in_span(ring.product(w_ij, w_jk, w_ik)):
            logging.info("Triple product does not vanish on %s%s%s", i + 1, j + 1, k + 1)
            return False
    return ring.betti_numbers() == expected_braid_betti(n, a, b)
