#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import unittest
from itertools import combinations

from arrcoh.exactlin import IntegerMatrix, InputException, PreconditionException
from arrcoh.matroid import *

from test_data import *


class TestSigns(unittest.TestCase):

    def testShuffleSign(self):
        self.assertEqual(shuffle_sign((0, 2), (1,)), -1)
        self.assertEqual(shuffle_sign((0, 1), (2,)), 1)
        self.assertEqual(shuffle_sign((), (1, 2)), 1)
        self.assertEqual(shuffle_sign((2, 3), (0, 1)), 1)

    def testShuffleOverlap(self):
        self.assertRaises(PreconditionException, lambda: shuffle_sign((0, 1), (1,)))

    def testSignedCircuit(self):
        C = SignedCircuit({0: 1, 1: 1, 2: -1})
        self.assertEqual(C.support, (0, 1, 2))
        self.assertEqual(C.positive, (0, 1))
        self.assertEqual(C.negative, (2,))
        self.assertEqual(C.opposite().positive, (2,))
        self.assertEqual(C.opposite().opposite(), C)
        self.assertRaises(ValueError, lambda: SignedCircuit({}))


class TestCU(unittest.TestCase):

    def setUp(self):
        self.M = ArithmeticOrientedMatroid(IntegerMatrix(cu_rows))

    def testRanks(self):
        self.assertEqual(self.M.rank(()), 0)
        self.assertEqual(self.M.rank((0, 2)), 2)
        self.assertEqual(self.M.rank((0, 1, 2)), 2)
        self.assertTrue(self.M.is_independent((1, 2)))
        self.assertEqual(self.M.nullity((0, 1, 2)), 1)

    def testUnimodular(self):
        for k in range(4):
            for A in combinations(range(3), k):
                self.assertEqual(self.M.multiplicity(A), 1)

    def testCircuits(self):
        circuits = self.M.circuits()
        self.assertEqual(len(circuits), 1)
        C = circuits[0]
        self.assertEqual((C.positive, C.negative), ((0, 1), (2,)))
        self.assertEqual(self.M.unique_circuit((0, 1, 2)), C)

    def testCircuitSigns(self):
        self.assertEqual(self.M.circuit_signs((0, 1, 2)), {0: -1, 1: 1, 2: 1})
        self.assertRaises(PreconditionException, lambda: self.M.circuit_signs((0, 1)))

    def testBasisSign(self):
        self.assertEqual(self.M.basis_sign((0, 1)), 1)
        self.assertEqual(self.M.basis_sign((1, 2)), -1)
        self.assertRaises(PreconditionException, lambda: self.M.basis_sign((0,)))

    def testUniqueCircuitPrecondition(self):
        self.assertRaises(PreconditionException, lambda: self.M.unique_circuit((0, 1)))

    def testBadIndex(self):
        self.assertRaises(ValueError, lambda: self.M.rank((0, 3)))

    def testAxioms(self):
        self.assertEqual(self.M.axiom_violations(), [])


class TestInterleavedCircuit(unittest.TestCase):

    def setUp(self):
        self.M = ArithmeticOrientedMatroid(IntegerMatrix(braid4_rows))

    def testUniqueCircuit(self):
        C = self.M.unique_circuit(braid4_interleaved_X)
        self.assertEqual(C.support, braid4_interleaved_circuit)

    def testSignsAgainstCircuit(self):
        self.assertEqual(self.M.circuit_signs(braid4_interleaved_circuit), {0: 1, 1: 1, 3: 1})

    def testSignsAgainstEnclosingSet(self):
        # 14 between 13 and 23 flips the signs of 12 and 13 only
        signs = self.M.circuit_signs(braid4_interleaved_circuit, braid4_interleaved_X)
        self.assertEqual(signs, {0: -1, 1: -1, 3: 1})
        C = self.M.unique_circuit(braid4_interleaved_X)
        self.assertEqual(self.M.circuit_signs(C, braid4_interleaved_X), signs)

    def testEnclosingSetPreconditions(self):
        self.assertRaises(PreconditionException,
                          lambda: self.M.circuit_signs(braid4_interleaved_circuit, (0, 1, 2, 3, 4)))
        self.assertRaises(PreconditionException, lambda: self.M.circuit_signs(braid4_interleaved_circuit, (0, 1, 2)))


class TestNCNU(unittest.TestCase):

    def setUp(self):
        self.M = ArithmeticOrientedMatroid(IntegerMatrix(ncnu_rows))

    def testMultiplicities(self):
        self.assertEqual(self.M.multiplicity((1, 2)), 2)
        self.assertEqual(self.M.multiplicity((0, 1, 2, 3)), 2)
        self.assertEqual(self.M.multiplicity((2, 3)), 1)
        self.assertEqual(self.M.multiplicity((3,)), 1)

    def testCircuit(self):
        circuits = self.M.circuits()
        self.assertEqual([C.support for C in circuits], [(0, 1, 2)])
        self.assertEqual(circuits[0].relation, {0: 2, 1: 1, 2: -1})

    def testNullityOneSets(self):
        self.assertEqual([X for X, _ in self.M.nullity_one_sets()], [(0, 1, 2), (0, 1, 2, 3)])
        only_small = self.M.nullity_one_sets(central_filter=lambda X: len(X) < 4)
        self.assertEqual([X for X, _ in only_small], [(0, 1, 2)])

    def testSeparatingCoverDegree(self):
        self.assertEqual(self.M.separating_cover_degree((0, 1, 2, 3), 1), 8)

    def testAxioms(self):
        self.assertEqual(self.M.axiom_violations(), [])


class TestAxiomSuite(unittest.TestCase):

    def testBraidAndBoolean(self):
        for rows in ([[1, 0, 1, 0, 1, 1], [0, 1, 1, 0, 0, 1], [0, 0, 0, 1, 1, 1]],
                     [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                     [[1, 0, 1, 1, 2, 1], [0, 1, 1, -1, 1, 2]]):
            M = ArithmeticOrientedMatroid(IntegerMatrix(rows))
            self.assertEqual(M.axiom_violations(), [], rows)

    def testNonPrimitive(self):
        self.assertRaises(InputException, lambda: ArithmeticOrientedMatroid(IntegerMatrix(non_primitive_rows)))

    def testTypeCheck(self):
        self.assertRaises(TypeError, lambda: ArithmeticOrientedMatroid(cu_rows))


if __name__ == "__main__":
    unittest.main()
