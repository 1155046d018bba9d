#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import os
import json
import shutil
import tempfile
import unittest

from six import StringIO

from arrcoh.exactlin import RationalVector, InputException, PreconditionException
from arrcoh.model import ArrangementDocument
from arrcoh.cli import *

from test_data import *

try:
    import mock      # Python 2
except ImportError:  # Python 3
    from unittest import mock


def invoke(*argv):
    with mock.patch("sys.stdout", new_callable=StringIO) as out, mock.patch("sys.stderr", new_callable=StringIO) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def invoke_machine(*argv):
    code, out, _ = invoke(*(argv + ("--format", "machine")))
    return code, json.loads(out)


class TestBuiltins(unittest.TestCase):

    def testNames(self):
        for name in builtin_names:
            self.assertTrue(isinstance(builtin_document(name), ArrangementDocument), name)

    def testShapes(self):
        self.assertEqual(builtin_arrangement("ncnu").characters.to_list(), ncnu_rows)
        self.assertEqual(builtin_arrangement("braid:4").rank, 3)
        self.assertEqual(builtin_arrangement("conf:3").rank, 3)
        self.assertEqual(builtin_arrangement("boolean:3").size, 3)

    def testShiftedNCNU(self):
        arr = builtin_arrangement("ncnu")
        self.assertEqual(arr.real_translations[3], RationalVector(["1/2"]))
        self.assertEqual(arr.torus_translations[3], RationalVector(["1/2"]))
        self.assertTrue(arr.is_central_arrangement())
        self.assertEqual(len(arr.intersection_components((0, 1, 2, 3))), 2)

    def testUnknown(self):
        self.assertRaises(InputException, lambda: builtin_document("nope"))
        self.assertRaises(InputException, lambda: builtin_document("braid:x"))
        self.assertRaises(InputException, lambda: builtin_document("braid:1"))
        self.assertRaises(ValueError, lambda: builtin_document(""))

    def testParseInput(self):
        self.assertEqual(parse_input(cu_D).size, 3)
        self.assertEqual(parse_input(cu_D, ab=(0, 2)).b, 2)
        self.assertRaises(InputException, lambda: parse_input({"rank": 2}))
        self.assertRaises(InputException, lambda: parse_input([cu_D]))


class TestJobSpec(unittest.TestCase):

    def testValidation(self):
        self.assertRaises(ValueError, lambda: JobSpec("nope", example="cu"))
        self.assertRaises(ValueError, lambda: JobSpec(BETTI))
        self.assertRaises(ValueError, lambda: JobSpec(BETTI, input_path="x.json", example="cu"))
        self.assertRaises(ValueError, lambda: JobSpec(BETTI, example="cu", output_format="xml"))

    def testParameters(self):
        self.assertEqual(JobSpec(VG, example="cu").ab, REAL_PARAMETERS)
        self.assertIsNone(JobSpec(BETTI, example="cu").ab)
        self.assertRaises(PreconditionException, lambda: JobSpec(VG, example="cu", ab=(1, 1)))
        self.assertRaises(PreconditionException, lambda: JobSpec(BETTI, example="cu", ab=(0, 1)))
        self.assertRaises(PreconditionException, lambda: JobSpec(VERIFY, example="cu", ab=(2, 0)))

    def testRun(self):
        report = run(JobSpec(CIRCUITS, example="cu"))
        self.assertEqual(report.result["circuits"], [{"positive": ["1", "2"], "negative": ["3"]}])
        expected = ArrangementDocument.from_arrangement(builtin_arrangement("cu")).fingerprint()
        self.assertEqual(report.input_fingerprint, expected)
        self.assertTrue(report.passed)


class TestCommands(unittest.TestCase):

    def testPoincare(self):
        code, result = invoke_machine("poincare", "--example", "ncu")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["coefficients"], [1, 7, 12])
        code, result = invoke_machine("poincare", "--example", "ncu", "--ab", "2,1")
        self.assertEqual(result["result"]["coefficients"], list(ncu_betti[(2, 1)]))

    def testCharpoly(self):
        code, result = invoke_machine("charpoly", "--example", "ncnu")
        self.assertEqual(result["result"]["coefficients"], ncnu_charpoly)

    def testLayers(self):
        code, result = invoke_machine("layers", "--example", "cu")
        self.assertEqual(result["result"]["counts"], [1, 3, 1])
        self.assertTrue(result["result"]["central"])
        self.assertTrue(result["result"]["unimodular"])
        code, result = invoke_machine("layers", "--example", "ncnu")
        self.assertEqual((result["result"]["central"], result["result"]["unimodular"]), (True, False))

    def testPoincareSweep(self):
        code, result = invoke_machine("poincare", "--example", "ncnu")
        sweep = dict((tuple(row["ab"]), row["coefficients"]) for row in result["result"]["sweep"])
        self.assertEqual(sorted(sweep), sorted(SWEEP_PARAMETERS))
        for ab, expected in ncnu_betti.items():
            self.assertEqual(sweep[ab], list(expected))

    def testMultiplicities(self):
        code, result = invoke_machine("multiplicities", "--example", "ncnu")
        self.assertEqual(code, 0)
        rows = dict((tuple(row["set"]), row["multiplicity"]) for row in result["result"]["multiplicities"])
        self.assertEqual(rows[("2", "3")], 2)
        self.assertEqual([c["name"] for c in result["checks"]], ["matroid.axioms"])

    def testBetti(self):
        code, result = invoke_machine("betti", "--example", "cu")
        self.assertEqual(result["result"]["betti"], list(cu_betti[(1, 1)]))
        code, result = invoke_machine("betti", "--example", "ncu", "--max-degree", "1")
        self.assertEqual(result["result"]["betti"], [1, 7])

    def testRelations(self):
        code, result = invoke_machine("relations", "--example", "cu")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["count"], len(result["result"]["relations"]))
        self.assertTrue(result["result"]["count"] > 0)

    def testVerify(self):
        code, out, _ = invoke("verify", "--example", "cu", "--ab", "1,1")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("verify "))
        for name in ("betti.poincare", "deletion.restriction", "circuit.pivot", "circuit.orientation"):
            self.assertIn("PASS %s" % name, out)

    def testVerifyMachine(self):
        code, result = invoke_machine("verify", "--example", "ncu")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["betti"], result["result"]["poincare"])
        self.assertTrue(all(c["status"] == "PASS" for c in result["checks"]))

    def testVerifyTrimmed(self):
        code, result = invoke_machine("verify", "--example", "cu", "--ab", "1,1")
        self.assertEqual(result["result"]["betti"], [1, 5, 6])
        code, out, _ = invoke("betti", "--example", "cu")
        self.assertIn("betti: [1, 5, 6]\n", out + "\n")

    def testVerifyInterleavedCircuits(self):
        code, result = invoke_machine("verify", "--example", "braid:4")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["betti"], list(braid_betti[(4, 1, 1)]))
        self.assertTrue(all(c["status"] == "PASS" for c in result["checks"]))

    def testVg(self):
        code, result = invoke_machine("vg", "--example", "cu")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["chambers"], cu_chamber_count)

    def testCddmp(self):
        code, result = invoke_machine("cddmp", "--example", "ncnu")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["sets"], len(result["checks"]))

    def testArnold(self):
        code, result = invoke_machine("arnold", "--example", "braid:3")
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["expected_betti"], [1, 5, 6])


class TestErrors(unittest.TestCase):

    def testBadExample(self):
        code, out, err = invoke("betti", "--example", "nope")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("Unknown example", err)

    def testBadParameters(self):
        self.assertEqual(invoke("vg", "--example", "cu", "--ab", "1,1")[0], 2)
        self.assertEqual(invoke("betti", "--example", "cu", "--ab", "0,1")[0], 2)
        self.assertEqual(invoke("vg", "--example", "ncu")[0], 2)

    def testArnoldNeedsBraid(self):
        self.assertEqual(invoke("arnold", "--example", "cu")[0], 2)

    def testMissingFile(self):
        self.assertEqual(invoke("charpoly", "--input", "/nonexistent/arrangement.json")[0], 2)

    def testUsage(self):
        with mock.patch("sys.stderr", new_callable=StringIO):
            self.assertRaises(SystemExit, lambda: main(["betti"]))
            self.assertRaises(SystemExit, lambda: main(["betti", "--example", "cu", "--ab", "1"]))
            self.assertRaises(SystemExit, lambda: main(["nope", "--example", "cu"]))


class TestInputFiles(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def testDocument(self):
        path = self.write("cu.json", json.dumps(cu_D))
        code, result = invoke_machine("charpoly", "--input", path)
        self.assertEqual(code, 0)
        self.assertEqual(result["result"]["coefficients"], cu_charpoly)

    def testMalformed(self):
        self.assertEqual(invoke("charpoly", "--input", self.write("bad.json", "{"))[0], 2)
        self.assertEqual(invoke("charpoly", "--input", self.write("list.json", "[1, 2]"))[0], 2)
        self.assertEqual(invoke("charpoly", "--input", self.write("rank.json", json.dumps(bad_rank_D)))[0], 2)


if __name__ == "__main__":
    unittest.main()
