"""
Exact integer and rational linear algebra used by the rest of the package: Smith and Hermite normal forms,
lattice saturation, integer kernels, determinant signs, rational solving and an incremental rational echelon.

Everything here works on Python integers, :class:`fractions.Fraction` and sympy matrices over ``ZZ``, so nothing
ever overflows or rounds.

>>> from arrcoh.exactlin import IntegerMatrix, smith_normal_form, torsion_order
>>> smith_normal_form(IntegerMatrix([[0, 2], [1, 1], [0, 0]])).diagonal
(1, 2)
>>> torsion_order(3, IntegerMatrix([[0, 2], [1, 1], [0, 0]]))
2
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import logging
from fractions import Fraction
from functools import lru_cache

from six import string_types, iteritems
from sympy import Matrix, ZZ, sign
from sympy.matrices.normalforms import smith_normal_decomp, hermite_normal_form


class ArrangementException(Exception):
    """
    An exception type that is thrown for errors raised by the arrangement machinery.
    """
    pass


class InputException(ArrangementException):
    """
    An exception type that is thrown when an arrangement document or a builtin example is malformed.
    """
    pass


class PreconditionException(ArrangementException):
    """
    An exception type that is thrown when an operation is invoked outside of its precondition,
    e.g. asking for the unique circuit of a set whose nullity is not one.
    """
    pass


class InconsistencyException(ArrangementException):
    """
    An exception type that is thrown when an internal invariant fails, e.g. a Poincare substitution that does not
    produce a polynomial.
    """
    pass


class IntegerMatrix(object):
    """
    An immutable matrix of arbitrary precision integers.

    **Required parameters to the constructor:**

    :param rows: The entries, one sequence per row
    :type rows: list of list of int

    **Optional parameters to the constructor:**

    :param cols: The column count; only needed when there are no rows to infer it from
    :type cols: int
    """

    def __init__(self, rows, cols=None):
        entries = tuple(tuple(int(e) for e in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("All rows need to have %s entries" % cols)
        self._entries = entries
        self._cols = cols

    @classmethod
    def from_columns(cls, columns, rows):
        """
        Builds a matrix out of column vectors, ``rows`` gives the ambient dimension so that zero columns are allowed.
        """
        columns = [tuple(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("All columns need to have %s entries" % rows)
        return cls([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @property
    def rows(self):
        return len(self._entries)

    @property
    def cols(self):
        return self._cols

    @property
    def entries(self):
        return self._entries

    def column(self, j):
        return tuple(row[j] for row in self._entries)

    def columns(self):
        return [self.column(j) for j in range(self._cols)]

    def select_columns(self, indices):
        """ Return the matrix formed by the given columns, in the given order. """
        return IntegerMatrix.from_columns([self.column(j) for j in indices], self.rows)

    def transpose(self):
        return IntegerMatrix([self.column(j) for j in range(self._cols)], cols=self.rows)

    def apply(self, vector):
        """ Return the product of this matrix with a column vector of integers or rationals. """
        if len(vector) != self._cols:
            raise ValueError("Need a vector of length %s, got: %s" % (self._cols, len(vector)))
        return tuple(sum(e * v for e, v in zip(row, vector)) for row in self._entries)

    def __mul__(self, other):
        if not isinstance(other, IntegerMatrix): raise TypeError("Need an IntegerMatrix, got: %s" % type(other))
        if self._cols != other.rows:
            raise ValueError("Shape mismatch: %sx%s times %sx%s" % (self.rows, self._cols, other.rows, other.cols))
        other_cols = other.columns()
        return IntegerMatrix([[sum(a * b for a, b in zip(row, col)) for col in other_cols] for row in self._entries],
                             cols=other.cols)

    def to_list(self):
        return [list(row) for row in self._entries]

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return False
        return self._entries == other._entries and self._cols == other._cols

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._entries, self._cols))

    def __str__(self):
        return str(self.to_list())

    def __repr__(self):
        return "IntegerMatrix(%s)" % self


class RationalVector(object):
    """
    An immutable vector of exact rationals. Entries may be given as ints, :class:`fractions.Fraction` or strings
    of the form ``"p/q"``; they are kept in lowest terms with a positive denominator.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        self._entries = tuple(Fraction(e.strip()) if isinstance(e, string_types) else Fraction(e) for e in entries)

    @classmethod
    def zeros(cls, n):
        return cls([0] * n)

    @property
    def entries(self):
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __add__(self, other):
        return RationalVector(a + b for a, b in zip(self, self._check(other)))

    def __sub__(self, other):
        return RationalVector(a - b for a, b in zip(self, self._check(other)))

    def __neg__(self):
        return RationalVector(-a for a in self)

    def scale(self, c):
        return RationalVector(c * a for a in self)

    def dot(self, other):
        return sum((a * b for a, b in zip(self, self._check(other))), Fraction(0))

    def mod_one(self):
        """ Reduce every entry into ``[0, 1)``. """
        return RationalVector(a - (a.numerator // a.denominator) for a in self)

    def is_zero(self):
        return not any(self._entries)

    def is_integral(self):
        return all(a.denominator == 1 for a in self)

    def _check(self, other):
        if len(other) != len(self):
            raise ValueError("Length mismatch: %s vs %s" % (len(self), len(other)))
        return other

    def to_strings(self):
        return [str(a) for a in self._entries]

    def __eq__(self, other):
        if not isinstance(other, RationalVector):
            return False
        return self._entries == other._entries

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._entries)

    def __str__(self):
        return "(%s)" % ", ".join(str(a) for a in self._entries)

    def __repr__(self):
        return "RationalVector%s" % self


class SmithDecomposition(object):
    """
    Result of :func:`smith_normal_form`. ``left * M * right`` is the matrix with ``diagonal`` on its main diagonal
    and zeros elsewhere. ``left_inverse`` is kept along since saturation needs it.
    """

    def __init__(self, diagonal, left, right, left_inverse):
        self.diagonal = tuple(diagonal)
        self.left = left
        self.right = right
        self.left_inverse = left_inverse

    @property
    def rank(self):
        return len(self.diagonal)

    def diagonal_matrix(self):
        rows, cols = self.left.rows, self.right.rows
        return IntegerMatrix([[self.diagonal[i] if i == j and i < len(self.diagonal) else 0 for j in range(cols)]
                              for i in range(rows)], cols=cols)

    def __repr__(self):
        return "SmithDecomposition(diagonal=%s)" % (self.diagonal,)


def _to_sympy(M):
    return Matrix(M.rows, M.cols, [e for row in M.entries for e in row])


def _from_sympy(S):
    return IntegerMatrix([[int(S[i, j]) for j in range(S.cols)] for i in range(S.rows)], cols=S.cols)


@lru_cache(maxsize=8192)
def smith_normal_form(M):
    """
    Computes the Smith normal form of an integer matrix together with unimodular transforms, using
    :func:`sympy.matrices.normalforms.smith_normal_decomp` over ``ZZ``. The inverse of the left transform is its
    exact inverse, which is integral since the transform is unimodular.

    :param M: The matrix to decompose
    :type M: :class:`arrcoh.exactlin.IntegerMatrix`
    :return: the :class:`arrcoh.exactlin.SmithDecomposition` with ``left * M * right == diag``
    """
    if not isinstance(M, IntegerMatrix): raise TypeError("Need an IntegerMatrix object, got: %s" % type(M))
    if M.rows == 0 or M.cols == 0:
        I = IntegerMatrix.identity(M.rows)
        return SmithDecomposition((), I, IntegerMatrix.identity(M.cols), I)
    D, L, R = smith_normal_decomp(_to_sympy(M), domain=ZZ)
    diagonal = tuple(abs(int(D[k, k])) for k in range(min(D.shape)) if D[k, k])
    logging.debug("Smith form of %sx%s matrix: %s", M.rows, M.cols, diagonal)
    if any(D[k, k] for k in range(len(diagonal), min(D.shape))):
        raise InconsistencyException("Zero invariant factor ahead of a non-zero one in %s" % (D,))
    for k in range(1, len(diagonal)):
        if diagonal[k] % diagonal[k - 1]:
            raise InconsistencyException("Divisibility chain broken in Smith form: %s" % (diagonal,))
    # a negative invariant factor is absorbed into its row of the left transform
    for k in range(len(diagonal)):
        if D[k, k] < 0:
            L[k, :] = -L[k, :]
    return SmithDecomposition(diagonal, _from_sympy(L), _from_sympy(R), _from_sympy(L.inv()))


def rank_over_z(M):
    """ Rank of the lattice spanned by the columns of ``M``. """
    return smith_normal_form(M).rank


def torsion_order(ambient_rank, generators):
    """
    Order of the torsion subgroup of ``Z^ambient_rank`` modulo the lattice spanned by the columns of ``generators``.

    :param ambient_rank: The rank of the ambient lattice
    :type ambient_rank: int
    :param generators: The generators as columns
    :type generators: :class:`arrcoh.exactlin.IntegerMatrix`
    :return: the torsion order, a positive integer
    """
    if generators.rows != ambient_rank:
        raise ValueError("Generators live in Z^%s, expected Z^%s" % (generators.rows, ambient_rank))
    order = 1
    for d in smith_normal_form(generators).diagonal:
        order *= d
    return order


def hermite_column_form(B):
    """
    Column-style Hermite normal form of a matrix with linearly independent columns, computed by
    :func:`sympy.matrices.normalforms.hermite_normal_form`. Two matrices spanning the same lattice have the same
    form.
    """
    if B.cols == 0:
        return B
    H = hermite_normal_form(_to_sympy(B))
    if H.cols != B.cols:
        raise PreconditionException("Columns are not linearly independent")
    return _from_sympy(H)


def saturation_basis(ambient_rank, generators):
    """
    A Z-basis of the saturation of the lattice spanned by the columns of ``generators``, i.e. of its rational span
    intersected with ``Z^ambient_rank``. The basis is returned as the columns of a matrix in column Hermite form.
    """
    if generators.rows != ambient_rank:
        raise ValueError("Generators live in Z^%s, expected Z^%s" % (generators.rows, ambient_rank))
    snf = smith_normal_form(generators)
    basis = snf.left_inverse.select_columns(range(snf.rank))
    return hermite_column_form(basis)


def integer_kernel_basis(M):
    """ A Z-basis of ``{n integral : M n = 0}`` as the columns of a matrix in column Hermite form. """
    snf = smith_normal_form(M)
    kernel = snf.right.select_columns(range(snf.rank, M.cols))
    return hermite_column_form(kernel)


def det_sign(M):
    """ Sign of the determinant of a square matrix: -1, 0 or +1. """
    if M.rows != M.cols:
        raise ValueError("Need a square matrix, got %sx%s" % (M.rows, M.cols))
    if M.rows == 0:
        return 1
    return int(sign(Matrix(M.to_list()).det(method="bareiss")))


def rational_solve(M, v):
    """
    Finds some rational solution of ``M x = v``.

    :return: a :class:`arrcoh.exactlin.RationalVector` or ``None`` when the system has no solution
    """
    if len(v) != M.rows:
        raise ValueError("Right hand side needs %s entries, got: %s" % (M.rows, len(v)))
    snf = smith_normal_form(M)
    y = snf.left.apply([Fraction(e) for e in v])
    if any(y[i] for i in range(snf.rank, M.rows)):
        return None
    z = [y[i] / snf.diagonal[i] for i in range(snf.rank)] + [Fraction(0)] * (M.cols - snf.rank)
    return RationalVector(snf.right.apply(z))


class RationalEchelon(object):
    """
    An incrementally built row echelon basis of sparse rational vectors. Vectors are dictionaries mapping a
    column key to a coefficient; keys only need to be mutually comparable. Each stored row is normalized to have
    coefficient one at its pivot, the smallest key in it.
    """

    def __init__(self):
        self._rows = {}

    @property
    def rank(self):
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def reduce(self, vector):
        """ Return the remainder of ``vector`` after eliminating every pivot column. """
        vec = dict((k, Fraction(v)) for k, v in iteritems(vector) if v)
        rows = self._rows
        while True:
            hits = [k for k in vec if k in rows]
            if not hits:
                return vec
            k = min(hits)
            c = vec[k]
            for kk, vv in iteritems(rows[k]):
                val = vec.get(kk, 0) - c * vv
                if val:
                    vec[kk] = val
                else:
                    vec.pop(kk, None)

    def add(self, vector):
        """ Insert a vector, return ``True`` when it increased the rank. """
        rem = self.reduce(vector)
        if not rem:
            return False
        pivot = min(rem)
        c = rem[pivot]
        self._rows[pivot] = dict((k, v / c) for k, v in iteritems(rem))
        return True

    def __contains__(self, vector):
        return not self.reduce(vector)

    def rows(self):
        return [dict(self._rows[k]) for k in sorted(self._rows)]
