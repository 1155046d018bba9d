"""
Matroid, arithmetic matroid and oriented matroid data of a family of integer characters, together with the sign
calculus (shuffle signs, basis signs, circuit signs) and the separating cover degree.

Ground set elements are the column indices ``0..n-1`` of the character matrix and subsets are passed around as
sorted tuples.
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import logging
from itertools import combinations
from math import gcd
from functools import reduce

from six import iteritems

from .exactlin import IntegerMatrix, PreconditionException, InputException, rank_over_z, torsion_order, \
    saturation_basis, integer_kernel_basis, det_sign, rational_solve


def as_index_set(A):
    """ Normalize any iterable of ground set elements to a sorted tuple without repetitions. """
    return tuple(sorted(set(A)))


def shuffle_sign(A, B):
    """
    Sign of the permutation that takes ``A u B``, listed in ground set order, to the concatenation of ``A`` and
    ``B`` (each in ground set order).

    >>> shuffle_sign((0, 2), (1,))
    -1
    """
    A, B = as_index_set(A), as_index_set(B)
    if set(A) & set(B):
        raise PreconditionException("Shuffle sign needs disjoint sets, got: %s and %s" % (A, B))
    inversions = sum(1 for a in A for b in B if a > b)
    return -1 if inversions % 2 else 1


class SignedCircuit(object):
    """
    An oriented circuit: a minimally dependent support split into a positive and a negative part by the signs of
    its primitive integer relation.

    **Required parameters to the constructor:**

    :param relation: The relation coefficients, keyed by ground set element, all non-zero
    :type relation: dict of int:int
    """

    def __init__(self, relation):
        if not relation: raise ValueError("Need a non-empty relation")
        self.relation = dict((i, n) for i, n in iteritems(relation) if n)
        self.support = as_index_set(self.relation)
        self.positive = tuple(i for i in self.support if self.relation[i] > 0)
        self.negative = tuple(i for i in self.support if self.relation[i] < 0)

    def opposite(self):
        """ The circuit with the opposite orientation. """
        return SignedCircuit(dict((i, -n) for i, n in iteritems(self.relation)))

    def __len__(self):
        return len(self.support)

    def __eq__(self, other):
        if not isinstance(other, SignedCircuit):
            return False
        return self.relation == other.relation

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.relation.items())))

    def __str__(self):
        return "%s|%s" % (list(self.positive), list(self.negative))

    def __repr__(self):
        return "SignedCircuit(%s)" % self


class ArithmeticOrientedMatroid(object):
    """
    The arithmetic oriented matroid of a list of primitive characters.

    Rank, multiplicity and saturation bases are memoized per subset; the memo tables only ever receive the same
    value for a key, so concurrent readers are fine.

    **Required parameters to the constructor:**

    :param characters: The characters as the columns of an ``r x n`` matrix
    :type characters: :class:`arrcoh.exactlin.IntegerMatrix`
    """

    def __init__(self, characters):
        if not isinstance(characters, IntegerMatrix):
            raise TypeError("Need an IntegerMatrix object, got: %s" % type(characters))
        for i, col in enumerate(characters.columns()):
            if reduce(gcd, col, 0) != 1:
                raise InputException("Character %s is not primitive: %s" % (i, list(col)))
        self.characters = characters
        self.lattice_rank = characters.rows
        self.size = characters.cols
        self._rank = {}
        self._mult = {}
        self._saturation = {}
        self._circuits = None

    @property
    def ground_set(self):
        return tuple(range(self.size))

    def _check(self, A):
        A = as_index_set(A)
        if A and (A[0] < 0 or A[-1] >= self.size):
            raise ValueError("Index set %s is not contained in the ground set of size %s" % (A, self.size))
        return A

    def columns(self, A):
        return self.characters.select_columns(self._check(A))

    def character(self, i):
        return self.characters.column(i)

    def rank(self, A):
        """ Rank of the lattice spanned by the characters indexed by ``A``. """
        A = self._check(A)
        if A not in self._rank:
            self._rank[A] = rank_over_z(self.columns(A)) if A else 0
        return self._rank[A]

    def multiplicity(self, A):
        """ Order of the torsion of ``Z^r`` modulo the characters indexed by ``A``. """
        A = self._check(A)
        if A not in self._mult:
            self._mult[A] = torsion_order(self.lattice_rank, self.columns(A)) if A else 1
        return self._mult[A]

    def is_unimodular(self, A):
        return self.multiplicity(A) == 1

    def is_independent(self, A):
        A = self._check(A)
        return self.rank(A) == len(A)

    def nullity(self, A):
        A = self._check(A)
        return len(A) - self.rank(A)

    def saturation(self, A):
        """ Hermite basis of the saturation of the span of the characters indexed by ``A``. """
        A = self._check(A)
        if A not in self._saturation:
            self._saturation[A] = saturation_basis(self.lattice_rank, self.columns(A))
        return self._saturation[A]

    def _relation(self, A):
        kernel = integer_kernel_basis(self.columns(A))
        if kernel.cols != 1:
            raise PreconditionException("Set %s has nullity %s, expected 1" % (A, kernel.cols))
        n = kernel.column(0)
        first = next(x for x in n if x)
        if first < 0:
            n = tuple(-x for x in n)
        return SignedCircuit(dict((i, x) for i, x in zip(A, n) if x))

    def circuits(self):
        """
        All signed circuits, by increasing support size and lexicographically within a size. The first element of
        every support lies in the positive part.

        :return: the list of :class:`arrcoh.matroid.SignedCircuit`
        """
        if self._circuits is None:
            found = []
            for k in range(1, self.size + 1):
                for A in combinations(range(self.size), k):
                    if self.rank(A) != k - 1:
                        continue
                    if all(self.rank(A[:j] + A[j + 1:]) == k - 1 for j in range(k)):
                        found.append(self._relation(A))
            logging.debug("Found %s circuits over %s elements", len(found), self.size)
            self._circuits = found
        return list(self._circuits)

    def unique_circuit(self, A):
        """ The unique circuit contained in a set of nullity one. """
        A = self._check(A)
        if self.nullity(A) != 1:
            raise PreconditionException("Set %s has nullity %s, expected 1" % (A, self.nullity(A)))
        return self._relation(A)

    def nullity_one_sets(self, central_filter=None):
        """
        All sets of nullity one paired with their unique circuit, by increasing size and lexicographically.

        :param central_filter: Optional predicate on index sets, typically the centrality test of an arrangement
        :type central_filter: callable
        :return: list of ``(X, circuit)`` pairs
        """
        result = []
        for k in range(2, self.size + 1):
            for X in combinations(range(self.size), k):
                if self.rank(X) != k - 1:
                    continue
                if central_filter is not None and not central_filter(X):
                    continue
                result.append((X, self.unique_circuit(X)))
        return result

    def _coordinates(self, basis, A):
        coords = []
        for i in A:
            x = rational_solve(basis, self.character(i))
            if x is None or not x.is_integral():
                raise PreconditionException("Character %s does not lie in the saturated lattice" % i)
            coords.append([int(e) for e in x])
        return IntegerMatrix.from_columns(coords, basis.cols)

    def basis_sign(self, B):
        """
        Sign of the basis ``B`` in ground set order, measured in the Hermite basis of the saturation of the span
        of all characters. With full rank characters this is the sign of the plain determinant.
        """
        B = self._check(B)
        if not self.is_independent(B) or len(B) != self.rank(self.ground_set):
            raise PreconditionException("Set %s is not a basis" % (B,))
        return det_sign(self._coordinates(self.saturation(self.ground_set), B))

    def circuit_signs(self, C, X=None):
        """
        The signs ``c_i`` of a circuit: for each element ``i`` of the support, the sign of the determinant of the
        characters of ``X`` minus ``i`` in ground set order, measured in the Hermite basis of the saturation of the
        span of ``X``.

        :param C: A circuit, either as a :class:`arrcoh.matroid.SignedCircuit` or by its support
        :param X: A set of nullity one containing the circuit, defaults to the support itself
        :type X: tuple
        :return: dict mapping support elements to +1 or -1
        """
        support = C.support if isinstance(C, SignedCircuit) else self._check(C)
        k = len(support)
        if self.rank(support) != k - 1 or any(self.rank(support[:j] + support[j + 1:]) != k - 1 for j in range(k)):
            raise PreconditionException("Set %s is not a circuit" % (support,))
        X = support if X is None else self._check(X)
        if not set(support) <= set(X) or self.nullity(X) != 1:
            raise PreconditionException("Set %s is not a nullity one set containing %s" % (X, support))
        basis = self.saturation(X)
        signs = {}
        for i in support:
            signs[i] = det_sign(self._coordinates(basis, tuple(x for x in X if x != i)))
        return signs

    def separating_cover_degree(self, X, a):
        """ Degree of the separating cover of a nullity one set ``X`` for ``a`` torus factors. """
        X = self._check(X)
        C = self.unique_circuit(X).support
        n = self.rank(C)
        degree = self.multiplicity(C) ** a * self.multiplicity(X) ** (a * (self.lattice_rank - 1))
        for i in C:
            degree *= self.multiplicity(tuple(j for j in C if j != i)) ** (a * (n - 1))
        return degree

    def axiom_violations(self, max_size=None):
        """
        Checks the rank axioms (R1)-(R3), the arithmetic axioms (AM1)-(AM5) and the circuit axioms (C0)-(C3)
        over all subsets with at most ``max_size`` elements.

        :return: list of human readable violations, empty when every axiom holds
        """
        n = self.size
        max_size = n if max_size is None else min(max_size, n)
        subsets = [A for k in range(max_size + 1) for A in combinations(range(n), k)]
        problems = []
        full = self.ground_set

        def co(S):
            return tuple(i for i in full if i not in S)

        for A in subsets:
            if self.rank(A) > len(A):
                problems.append("R1 fails on %s" % (A,))
            for i in range(n):
                if i in A:
                    continue
                Ai = as_index_set(A + (i,))
                if self.rank(Ai) < self.rank(A):
                    problems.append("R2 fails on %s + %s" % (A, i))
                if self.rank(Ai) == self.rank(A):
                    if self.multiplicity(A) % self.multiplicity(Ai):
                        problems.append("AM1 fails on %s + %s" % (A, i))
                elif self.multiplicity(Ai) % self.multiplicity(A):
                    problems.append("AM2 fails on %s + %s" % (A, i))
        subset_set = set(subsets)
        for A in subsets:
            for B in subsets:
                if len(A) > len(B):
                    continue
                union = as_index_set(A + B)
                inter = as_index_set(set(A) & set(B))
                if union in subset_set and self.rank(A) + self.rank(B) < self.rank(inter) + self.rank(union):
                    problems.append("R3 fails on %s, %s" % (A, B))
                if not set(A) <= set(B):
                    continue
                extra = [i for i in B if i not in A]
                between = [as_index_set(A + S) for k in range(len(extra) + 1) for S in combinations(extra, k)]
                if self.rank(A) == self.rank(B):
                    total = sum((-1) ** (len(C) - len(A)) * self.multiplicity(C) for C in between)
                    if total < 0:
                        problems.append("AM4 fails on %s, %s" % (A, B))
                if len(A) + self.rank(co(A)) == len(B) + self.rank(co(B)):
                    total = sum((-1) ** (len(C) - len(A)) * self.multiplicity(co(C)) for C in between)
                    if total < 0:
                        problems.append("AM5 fails on %s, %s" % (A, B))
                problems.extend(self._am3_violations(A, B, extra, between))
        problems.extend(self._circuit_axiom_violations())
        return problems

    def _am3_violations(self, A, B, extra, between):
        problems = []
        rA = self.rank(A)
        # F is the set of elements raising the rank; the decomposition must be free on F and dependent on T
        F = tuple(i for i in extra if self.rank(as_index_set(A + (i,))) == rA + 1)
        T = tuple(i for i in extra if i not in F)
        if all(self.rank(C) == rA + len(set(C) & set(F)) for C in between):
            lhs = self.multiplicity(A) * self.multiplicity(B)
            rhs = self.multiplicity(as_index_set(A + F)) * self.multiplicity(as_index_set(A + T))
            if lhs != rhs:
                problems.append("AM3 fails on %s, %s" % (A, B))
        return problems

    def _circuit_axiom_violations(self):
        problems = []
        signed = set()
        for C in self.circuits():
            signed.add(tuple(sorted(C.relation.items())))
        oriented = [dict(c) for c in signed]
        pairs = [(frozenset(i for i in c if c[i] > 0), frozenset(i for i in c if c[i] < 0)) for c in oriented]
        pairs += [(m, p) for (p, m) in pairs]
        pair_set = set(pairs)
        for (p, m) in pairs:
            if not p and not m:
                problems.append("C0 fails")
            if (m, p) not in pair_set:
                problems.append("C1 fails on %s|%s" % (sorted(p), sorted(m)))
        for (p, m) in pairs:
            for (q, w) in pairs:
                if (p | m) <= (q | w) and (p, m) != (q, w) and (p, m) != (w, q):
                    problems.append("C2 fails on %s|%s" % (sorted(p), sorted(m)))
                if (p, m) == (w, q):
                    continue
                for i in p & w:
                    if not any(bp <= (p | q) - {i} and bm <= (m | w) - {i} for (bp, bm) in pairs):
                        problems.append("C3 fails on %s|%s, %s|%s at %s" % (sorted(p), sorted(m), sorted(q),
                                                                          sorted(w), i))
        return problems
