#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import json
import unittest
from fractions import Fraction

from arrcoh.exactlin import RationalVector, InputException
from arrcoh.model import *
from arrcoh.cli import builtin_document, builtin_arrangement

from test_data import *


def canonical(D):
    return ArrangementDocument.from_arrangement(ArrangementDocument.from_dict(D).to_arrangement())


class TestArrangementDocument(unittest.TestCase):

    def testFromDict(self):
        arr = ArrangementDocument.from_dict(cu_D).to_arrangement()
        self.assertEqual((arr.rank, arr.size, arr.a, arr.b), (2, 3, 1, 1))
        self.assertEqual(arr.characters.column(2), (1, 1))

    def testMissingFields(self):
        self.assertIsNone(ArrangementDocument.from_dict({"hypersurfaces": []}))
        self.assertIsNone(Hypersurface.from_dict({"u": ["1"]}))
        self.assertRaises(InputException, lambda: ArrangementDocument(rank=1, hypersurfaces=[{"u": ["1"]}]))

    def testTranslationsReduced(self):
        arr = ArrangementDocument.from_dict(shifted_D).to_arrangement()
        self.assertEqual(arr.real_translations[0], RationalVector(["1/2"]))
        self.assertEqual(arr.torus_translations[0], RationalVector(["1/4"]))

    def testBroadcast(self):
        doc = ArrangementDocument.from_dict(ncu_D)
        arr = doc.to_arrangement(ab=(2, 1))
        self.assertEqual(arr.torus_translations[3], RationalVector(["1/2", "1/2"]))
        arr = doc.to_arrangement(ab=(1, 2))
        self.assertEqual(arr.real_translations[4], RationalVector([-1, -1]))
        self.assertEqual(arr.real_translations[0], RationalVector([0, 0]))

    def testBadDocuments(self):
        for D in (bad_rank_D, bad_rational_D, non_primitive_D):
            self.assertRaises(InputException, lambda: ArrangementDocument.from_dict(D).to_arrangement())

    def testBadEntries(self):
        for h in ({"chi": "10"}, {"chi": ["x"]}, {"chi": [1], "u": "1/2"}, {"chi": [1], "u": ["1", "2", "3"]}):
            doc = ArrangementDocument(rank=1, hypersurfaces=[h])
            self.assertRaises(InputException, lambda: doc.to_arrangement())
        self.assertRaises(InputException, lambda: ArrangementDocument(rank=-1, hypersurfaces=[]).to_arrangement())
        self.assertRaises(InputException, lambda: ArrangementDocument(rank="two", hypersurfaces=[]).to_arrangement())

    def testLabelsKept(self):
        doc = ArrangementDocument.from_arrangement(builtin_arrangement("ncu"))
        self.assertEqual(doc.labels, ["1", "2", "3", "2'", "3'"])
        self.assertEqual(doc.to_arrangement().labels, doc.labels)

    def testFingerprint(self):
        same = {"rank": 1, "a": 1, "b": 1, "hypersurfaces": [{"chi": [1], "u": ["1/2"], "v": ["1/4"]}]}
        self.assertEqual(canonical(shifted_D).fingerprint(), canonical(same).fingerprint())
        self.assertNotEqual(canonical(shifted_D).fingerprint(), canonical(cu_D).fingerprint())
        self.assertEqual(len(canonical(cu_D).fingerprint()), 64)


class TestJson(unittest.TestCase):

    def testBuiltinsRoundTrip(self):
        for name in builtin_names:
            doc = builtin_document(name)
            decoded = json.loads(json.dumps(doc, cls=JsonEncoder), cls=JsonDecoder)
            self.assertTrue(isinstance(decoded, ArrangementDocument), name)
            self.assertEqual(decoded, doc)
            self.assertEqual(decoded.to_arrangement().characters, builtin_arrangement(name).characters)

    def testDecodeInput(self):
        doc = json.loads(json.dumps(ncu_D), cls=JsonDecoder)
        self.assertTrue(isinstance(doc, ArrangementDocument))
        self.assertTrue(all(isinstance(h, Hypersurface) for h in doc.hypersurfaces))
        self.assertEqual(doc.to_arrangement().size, 5)

    def testEncodeRationals(self):
        text = json.dumps({"x": Fraction(1, 2), "y": RationalVector(["2/4", 3])}, cls=JsonEncoder, sort_keys=True)
        self.assertEqual(json.loads(text), {"x": "1/2", "y": ["1/2", "3"]})

    def testReportRoundTrip(self):
        report = Report("betti", "abc", result={"betti": [1, 5, 6]},
                        checks=[Check.of("betti.poincare", True), Check.of("deletion.restriction", False, "fails")])
        decoded = json.loads(json.dumps(report, cls=JsonEncoder), cls=JsonDecoder)
        self.assertEqual(decoded, report)
        self.assertFalse(decoded.passed)
        self.assertEqual([c.status for c in decoded.checks], [PASS, FAIL])


class TestChecks(unittest.TestCase):

    def testOf(self):
        self.assertTrue(Check.of("a", True).passed)
        self.assertEqual(Check.of("a", False, "witness").detail, "witness")

    def testBadStatus(self):
        self.assertRaises(ValueError, lambda: Check("a", "MAYBE"))

    def testEmptyReportPasses(self):
        self.assertTrue(Report("layers", "abc").passed)


if __name__ == "__main__":
    unittest.main()
