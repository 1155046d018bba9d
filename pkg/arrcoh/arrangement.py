"""
Abelian arrangements in ``G^r`` with ``G = R^b x (S^1)^a``: centrality, connected components of intersections,
the poset of layers with its Mobius function, the characteristic and Poincare polynomials, and deletion and
restriction.

A point of ``Hom(Z^r, G)`` is stored as one rational vector in ``Q^r`` per real coordinate and one vector in
``(Q/Z)^r`` per torus coordinate; the character ``chi`` evaluates to the dot products with those vectors.
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import logging
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from functools import reduce

from six import iteritems
from sympy import Symbol, Poly, cancel, fraction, expand

from .exactlin import IntegerMatrix, RationalVector, InputException, PreconditionException, \
    InconsistencyException, smith_normal_form, integer_kernel_basis, rational_solve
from .matroid import ArithmeticOrientedMatroid, as_index_set

t = Symbol("t")


class LayerPoint(object):
    """
    A rational point of ``Hom(Z^r, G)``: ``real`` holds ``b`` vectors of ``Q^r`` and ``torus`` holds ``a`` vectors of
    ``(Q/Z)^r`` whose entries are kept in ``[0, 1)``.
    """

    def __init__(self, real, torus):
        self.real = tuple(real)
        self.torus = tuple(y.mod_one() for y in torus)

    def __eq__(self, other):
        if not isinstance(other, LayerPoint):
            return False
        return self.real == other.real and self.torus == other.torus

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.real, self.torus))

    def __str__(self):
        return "x=%s y=%s" % ([str(x) for x in self.real], [str(y) for y in self.torus])

    def __repr__(self):
        return "LayerPoint(%s)" % self


class Layer(object):
    """
    A connected component of an intersection of subvarieties.

    Two layers are equal when they have the same support and their sample points differ by an element of the
    identity component of the support's intersection; that is captured by ``invariants``, the pairings of the
    torus part of the sample point with a basis of the saturated lattice of the support, modulo one.

    **Required parameters to the constructor:**

    :param support: All subvarieties containing the layer
    :type support: tuple of int
    :param rank: Rank of the support
    :type rank: int
    :param point: A sample point
    :type point: :class:`arrcoh.arrangement.LayerPoint`
    :param invariants: The component invariants described above
    :type invariants: tuple
    """

    def __init__(self, support, rank, point, invariants, ident=None):
        self.support = tuple(support)
        self.rank = rank
        self.point = point
        self.invariants = tuple(invariants)
        self.ident = ident

    @property
    def key(self):
        return (self.support, self.invariants)

    def __eq__(self, other):
        if not isinstance(other, Layer):
            return False
        return self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        label = "L%s" % self.ident if self.ident is not None else "L"
        return "%s%s" % (label, list(self.support))

    def __repr__(self):
        return "Layer(%s, rank=%s, %s)" % (list(self.support), self.rank, self.point)


class LayerPoset(object):
    """
    The layers of an arrangement ordered by reverse inclusion, indexed by ``ident`` (``0`` is the ambient space).
    Layers are sorted by rank, then support, then invariants.
    """

    def __init__(self, layers, below):
        self.layers = list(layers)
        self._below = below
        self._index = dict((W.key, W) for W in self.layers)
        self._mobius = {}
        for W in self.layers:
            if W.ident == 0:
                self._mobius[0] = 1
            else:
                self._mobius[W.ident] = -sum(self._mobius[V] for V in below[W.ident] if V != W.ident)

    @property
    def bottom(self):
        return self.layers[0]

    def __len__(self):
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    def __getitem__(self, ident):
        return self.layers[ident]

    def find(self, layer):
        """ Return the poset's own copy of an equal layer, or ``None``. """
        return self._index.get(layer.key)

    def of_rank(self, k):
        return [W for W in self.layers if W.rank == k]

    def below(self, W):
        """ Idents of the layers ``V <= W``, i.e. containing ``W``, including ``W`` itself. """
        return tuple(self._below[W.ident])

    def leq(self, V, W):
        return V.ident in self._below[W.ident]

    def mobius(self, W):
        """ The Mobius value ``mu(bottom, W)``. """
        return self._mobius[W.ident]


class AbelianArrangement(object):
    """
    An arrangement ``{H_i = chi_i^{-1}(g_i)}`` in ``Hom(Z^r, G)`` with ``G = R^b x (S^1)^a``.

    **Required parameters to the constructor:**

    :param characters: The primitive characters as the columns of an ``r x n`` matrix
    :type characters: :class:`arrcoh.exactlin.IntegerMatrix`

    **Optional parameters to the constructor:**

    :param a: The number of circle factors of ``G``
    :type a: int
    :param b: The number of real factors of ``G``
    :type b: int
    :param real_translations: Per subvariety, the real part of ``g_i`` (``b`` rationals); zero when omitted
    :type real_translations: list of :class:`arrcoh.exactlin.RationalVector`
    :param torus_translations: Per subvariety, the torus part of ``g_i`` (``a`` rationals taken modulo one); zero
        when omitted
    :type torus_translations: list of :class:`arrcoh.exactlin.RationalVector`
    :param labels: Display names of the subvarieties, defaults to ``1..n``
    :type labels: list of str
    """

    def __init__(self, characters, a=1, b=1, real_translations=None, torus_translations=None, labels=None):
        if not isinstance(characters, IntegerMatrix):
            raise TypeError("Need an IntegerMatrix object, got: %s" % type(characters))
        if a < 0 or b < 0: raise ValueError("Parameters a and b need to be non-negative, got: %s, %s" % (a, b))
        n = characters.cols
        self.characters = characters
        self.a = a
        self.b = b
        self.matroid = ArithmeticOrientedMatroid(characters)
        self.real_translations = self._translations(real_translations, n, b, "real")
        self.torus_translations = [v.mod_one() for v in self._translations(torus_translations, n, a, "torus")]
        self.labels = list(labels) if labels is not None else [str(i + 1) for i in range(n)]
        if len(self.labels) != n:
            raise InputException("Need %s labels, got: %s" % (n, len(self.labels)))
        self._poset = None
        self._central = {}
        self._components = {}

    @staticmethod
    def _translations(values, n, width, kind):
        if values is None:
            return [RationalVector.zeros(width) for _ in range(n)]
        if len(values) != n:
            raise InputException("Need %s %s translations, got: %s" % (n, kind, len(values)))
        result = []
        for i, v in enumerate(values):
            v = v if isinstance(v, RationalVector) else RationalVector(v)
            if len(v) != width:
                raise InputException("Hypersurface %s: %s translation needs %s entries, got: %s" % (i, kind, width,
                                                                                                   len(v)))
            result.append(v)
        return result

    @property
    def rank(self):
        return self.characters.rows

    @property
    def size(self):
        return self.characters.cols

    @property
    def d(self):
        return self.a + self.b - 1

    @property
    def ground_set(self):
        return tuple(range(self.size))

    def __len__(self):
        return self.size

    def with_parameters(self, a, b):
        """ The arrangement with the same characters for other parameters; translations broadcast their first entry. """
        def widen(values, width):
            return [RationalVector([v[0] if len(v) else 0] * width) for v in values]
        return AbelianArrangement(self.characters, a=a, b=b,
                                  real_translations=widen(self.real_translations, b),
                                  torus_translations=widen(self.torus_translations, a),
                                  labels=self.labels)

    # Points and equations

    def _rows(self, A):
        return self.characters.select_columns(A).transpose()

    def satisfies(self, point, i):
        """ Whether ``point`` lies on ``H_i``. """
        chi = self.characters.column(i)
        for x, u in zip(point.real, self.real_translations[i]):
            if x.dot(chi) != u:
                return False
        for y, v in zip(point.torus, self.torus_translations[i]):
            if (y.dot(chi) - v).denominator != 1:
                return False
        return True

    def invariants(self, point, S):
        """ Pairings of the torus part of ``point`` with the saturated lattice of ``S``, modulo one. """
        S = as_index_set(S)
        if not S:
            return ()
        basis = self.matroid.saturation(S).columns()
        values = []
        for y in point.torus:
            values.append(tuple(RationalVector([y.dot(s) for s in basis]).mod_one()))
        return tuple(values)

    def closure(self, point, A):
        """ All ``i`` whose subvariety contains the component of ``cap_{A} H_i`` through ``point``. """
        A = as_index_set(A)
        rk = self.matroid.rank(A)
        return tuple(i for i in self.ground_set
                     if i in A or (self.matroid.rank(A + (i,)) == rk and self.satisfies(point, i)))

    def layer_at(self, point, A):
        """ The layer that is the component of ``cap_{A} H_i`` through ``point``. """
        S = self.closure(point, A)
        return Layer(S, self.matroid.rank(S), point, self.invariants(point, S))

    def contains(self, W, point):
        """ Whether ``point`` lies on the layer ``W``. """
        return all(self.satisfies(point, i) for i in W.support) and \
            self.invariants(point, W.support) == W.invariants

    # Centrality and components

    def is_central(self, A):
        """
        Whether ``cap_{i in A} H_i`` is non-empty. Every vector ``n`` of an integral basis of the relations among the
        characters of ``A`` has to pair to zero with the real translations and to an integer with the torus ones.
        """
        A = as_index_set(A)
        if A not in self._central:
            central = True
            if A and not self.matroid.is_independent(A):
                kernel = integer_kernel_basis(self.matroid.columns(A))
                for n in kernel.columns():
                    for l in range(self.b):
                        if sum(c * self.real_translations[i][l] for c, i in zip(n, A)) != 0:
                            central = False
                    for j in range(self.a):
                        if sum(c * self.torus_translations[i][j] for c, i in zip(n, A)).denominator != 1:
                            central = False
            self._central[A] = central
        return self._central[A]

    def _torus_solutions(self, A, rhs):
        # all y in (Q/Z)^r with chi_i . y = rhs_i mod 1, one per component
        N = self._rows(A)
        snf = smith_normal_form(N)
        w = snf.left.apply(list(rhs))
        if any(Fraction(w[i]).denominator != 1 for i in range(snf.rank, N.rows)):
            return []
        choices = [[(w[i] + k) / snf.diagonal[i] for k in range(snf.diagonal[i])] for i in range(snf.rank)]
        solutions = []
        for z in product(*choices):
            z = list(z) + [Fraction(0)] * (self.rank - snf.rank)
            solutions.append(RationalVector(snf.right.apply(z)).mod_one())
        return solutions

    def component_points(self, A):
        """ One sample point per connected component of ``cap_{i in A} H_i``, empty when not central. """
        A = as_index_set(A)
        if A in self._components:
            return list(self._components[A])
        points = []
        if self.is_central(A):
            N = self._rows(A)
            real = []
            for l in range(self.b):
                x = rational_solve(N, [self.real_translations[i][l] for i in A])
                if x is None:
                    raise InconsistencyException("Central set %s has no real solution" % (A,))
                real.append(x)
            per_coordinate = [self._torus_solutions(A, [self.torus_translations[i][j] for i in A])
                              for j in range(self.a)]
            for torus in product(*per_coordinate):
                points.append(LayerPoint(real, torus))
        self._components[A] = points
        return list(points)

    def intersection_components(self, A):
        """
        The connected components of ``cap_{i in A} H_i`` as layers. There are ``m(A)^a`` of them when ``A`` is
        central and none otherwise.

        :return: list of :class:`arrcoh.arrangement.Layer`
        """
        A = as_index_set(A)
        layers = [self.layer_at(p, A) for p in self.component_points(A)]
        if self._poset is not None:
            layers = [self._poset.find(W) for W in layers]
        return layers

    def same_component(self, p, q, A):
        """ Whether two points of ``cap_{i in A} H_i`` lie on the same connected component. """
        A = as_index_set(A)
        for point in (p, q):
            if not all(self.satisfies(point, i) for i in A):
                raise PreconditionException("Point %s does not lie on all of %s" % (point, A))
        return self.invariants(p, A) == self.invariants(q, A)

    # Poset of layers

    def layer_poset(self):
        """
        Builds the poset of layers. Every layer is a component of an intersection over an independent set, so only
        independent sets are visited; components are deduplicated through their invariants.

        :return: the :class:`arrcoh.arrangement.LayerPoset`
        """
        if self._poset is not None:
            return self._poset
        found = {}
        for k in range(0, min(self.rank, self.size) + 1):
            for A in combinations(self.ground_set, k):
                if not self.matroid.is_independent(A):
                    continue
                for p in self.component_points(A):
                    W = self.layer_at(p, A)
                    found.setdefault(W.key, W)
        layers = sorted(found.values(), key=lambda W: (W.rank, W.support, W.invariants))
        for ident, W in enumerate(layers):
            W.ident = ident
        below = {}
        for W in layers:
            below[W.ident] = frozenset(V.ident for V in layers
                                       if V.rank <= W.rank and set(V.support) <= set(W.support)
                                       and self.contains(V, W.point))
        logging.debug("Poset of layers has %s elements over %s subvarieties", len(layers), self.size)
        self._poset = LayerPoset(layers, below)
        return self._poset

    def layer_counts(self):
        """ Number of layers of each rank. """
        poset = self.layer_poset()
        return [len(poset.of_rank(k)) for k in range(max(W.rank for W in poset) + 1)]

    def layer_above(self, Y, A):
        """ The component of ``cap_{i in A} H_i`` containing the layer ``Y``. """
        A = as_index_set(A)
        if not set(A) <= set(Y.support):
            raise PreconditionException("Set %s is not contained in the support %s" % (A, Y.support))
        poset = self.layer_poset()
        W = poset.find(self.layer_at(Y.point, A))
        if W is None:
            raise InconsistencyException("Layer above %s for %s is missing from the poset" % (Y, A))
        return W

    def is_central_arrangement(self):
        return self.is_central(self.ground_set)

    def is_unimodular_arrangement(self):
        """ Whether every non-empty intersection is connected. """
        if self.a == 0:
            return True
        return all(self.matroid.multiplicity(A) == 1 for k in range(1, self.size + 1)
                   for A in combinations(self.ground_set, k) if self.is_central(A))

    # Polynomials

    def characteristic_polynomial(self):
        """ ``sum_W mu(W) t^(r - rk W)`` as an integer :class:`sympy.Poly` in ``t``. """
        poset = self.layer_poset()
        expr = sum(poset.mobius(W) * t ** (self.rank - W.rank) for W in poset)
        return Poly(expr, t, domain="ZZ")

    def poincare_polynomial(self):
        """
        The Poincare polynomial ``(-t^d)^r chi(-(1+t)^a / t^d)`` of the complement.

        :return: an integer :class:`sympy.Poly` in ``t``
        """
        if self.b < 1:
            raise PreconditionException("Poincare polynomial needs b >= 1, got b = %s" % self.b)
        d = self.d
        chi = self.characteristic_polynomial().as_expr()
        expr = cancel((-t ** d) ** self.rank * chi.subs(t, -(1 + t) ** self.a / t ** d))
        num, den = fraction(expr)
        if Poly(den, t).degree() != 0:
            raise InconsistencyException("Poincare substitution is not a polynomial: %s" % expr)
        P = Poly(expand(num / den), t, domain="ZZ")
        coeffs = P.all_coeffs()[::-1]
        if any(c < 0 for c in coeffs):
            raise InconsistencyException("Poincare polynomial has negative coefficients: %s" % P)
        if d > 0 and coeffs[0] != 1:
            raise InconsistencyException("Poincare polynomial has constant term %s" % coeffs[0])
        return P

    # Deletion and restriction

    def _check_index(self, i):
        if not isinstance(i, int) or i < 0 or i >= self.size:
            raise ValueError("Bad index %s for an arrangement of size %s" % (i, self.size))

    def deletion(self, i):
        """ The arrangement without subvariety ``i``. """
        self._check_index(i)
        keep = [j for j in self.ground_set if j != i]
        return AbelianArrangement(IntegerMatrix.from_columns([self.characters.column(j) for j in keep], self.rank),
                                  a=self.a, b=self.b,
                                  real_translations=[self.real_translations[j] for j in keep],
                                  torus_translations=[self.torus_translations[j] for j in keep],
                                  labels=[self.labels[j] for j in keep])

    def restriction(self, i):
        """
        The arrangement induced on ``H_i``, identified with ``G^(r-1)`` through a splitting ``Z^r = Z chi_i + L'``.
        Every connected component of ``K cap H_i`` becomes one subvariety; equal components are kept once, in order
        of their parent and then of their component representative.
        """
        self._check_index(i)
        snf = smith_normal_form(IntegerMatrix.from_columns([self.characters.column(i)], self.rank))
        gi_real, gi_torus = self.real_translations[i], self.torus_translations[i]
        chars, reals, tori, labels, seen = [], [], [], [], set()
        for k in self.ground_set:
            if k == i:
                continue
            c = snf.left.apply(self.characters.column(k))
            c0, rest = c[0], list(c[1:])
            g = reduce(gcd, rest, 0)
            if g == 0:
                logging.debug("Subvariety %s is parallel to %s and drops out of the restriction", k, i)
                continue
            chi = [e // g for e in rest]
            h_real = [(u - c0 * v) / g for u, v in zip(self.real_translations[k], gi_real)]
            h_torus = [self.torus_translations[k][j] - c0 * gi_torus[j] for j in range(self.a)]
            for offsets in product(range(g), repeat=self.a):
                torus = [(h + o) / g for h, o in zip(h_torus, offsets)]
                ch, re, to = chi, h_real, torus
                if next(e for e in ch if e) < 0:
                    ch, re, to = [-e for e in ch], [-x for x in re], [-x for x in to]
                re, to = RationalVector(re), RationalVector(to).mod_one()
                key = (tuple(ch), re, to)
                if key in seen:
                    continue
                seen.add(key)
                chars.append(ch)
                reals.append(re)
                tori.append(to)
                labels.append(self.labels[k] if g == 1 or not offsets else
                              "%s/%s" % (self.labels[k], "".join(map(str, offsets))))
        return AbelianArrangement(IntegerMatrix.from_columns(chars, self.rank - 1), a=self.a, b=self.b,
                                  real_translations=reals, torus_translations=tori, labels=labels)

    def deletion_restriction_holds(self, i):
        """ Whether ``P = P' + t^d P''`` for the deletion and restriction at ``i``. """
        P = self.poincare_polynomial()
        rhs = self.deletion(i).poincare_polynomial() + Poly(t ** self.d, t) * self.restriction(i).poincare_polynomial()
        return P == rhs

    def __str__(self):
        return "AbelianArrangement(r=%s, n=%s, a=%s, b=%s)" % (self.rank, self.size, self.a, self.b)

    def __repr__(self):
        return str(self)
