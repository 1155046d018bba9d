"""
Command line front end.

::

    arrcoh <command> (--input PATH | --example NAME[:PARAM]) [--ab A,B] [--format text|machine] [--max-degree K] [-v]

The builtin examples are ``cu``, ``ncu``, ``ncnu``, ``braid:N`` (essential braid arrangement of rank ``N - 1``),
``conf:N`` (the rank ``N`` arrangement whose complement is the configuration space of ``N`` points) and
``boolean:N`` (the coordinate arrangement). The exit code is 0 when every check passes, 1 when a check fails and 2
on errors.
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import sys
import json
import logging
import argparse
from itertools import combinations

from six import string_types

from .exactlin import ArrangementException, InputException, PreconditionException
from .model import ArrangementDocument, Hypersurface, Check, Report, JsonEncoder, JsonDecoder
from .cohomology import CohomologyRing, braid_arrangement, arnold_relation_check, expected_braid_betti
from .vg import verify_vg_presentation

CIRCUITS = "circuits"
MULTIPLICITIES = "multiplicities"
LAYERS = "layers"
CHARPOLY = "charpoly"
POINCARE = "poincare"
BETTI = "betti"
RELATIONS = "relations"
VERIFY = "verify"
VG = "vg"
CDDMP = "cddmp"
ARNOLD = "arnold"
COMMANDS = (CIRCUITS, MULTIPLICITIES, LAYERS, CHARPOLY, POINCARE, BETTI, RELATIONS, VERIFY, VG, CDDMP, ARNOLD)
RING_COMMANDS = (BETTI, RELATIONS, VERIFY, CDDMP, ARNOLD)

FORMAT_TEXT = "text"
FORMAT_MACHINE = "machine"

#: Parameters used for ``vg``; every other command defaults to the document's own parameters
REAL_PARAMETERS = (0, 1)

#: Parameters listed by ``poincare`` next to the requested ones
SWEEP_PARAMETERS = ((1, 1), (2, 1), (1, 2), (0, 2))


def _document(columns, rank, a=1, b=1, translations=None, labels=None):
    translations = translations or {}
    hypersurfaces = []
    for i, chi in enumerate(columns):
        u, v = translations.get(i, ([], []))
        hypersurfaces.append(Hypersurface(chi=list(chi), u=list(u), v=list(v)))
    doc = ArrangementDocument(rank=rank, hypersurfaces=hypersurfaces, a=a, b=b)
    if labels is not None:
        doc.labels = list(labels)
    return doc


def builtin_document(name):
    """
    The document of a builtin example.

    :param name: ``cu``, ``ncu``, ``ncnu``, ``braid:N``, ``conf:N`` or ``boolean:N``
    :type name: str
    :return: the :class:`arrcoh.model.ArrangementDocument`
    """
    if not name or not isinstance(name, string_types): raise ValueError("Need an example name, got: %r" % name)
    base, _, param = name.partition(":")
    if base == "cu":
        return _document([[1, 0], [0, 1], [1, 1]], 2)
    if base == "ncu":
        shifted = (["-1"], ["1/2"])
        return _document([[1, 0], [0, 1], [1, 1], [0, 1], [1, 1]], 2, translations={3: shifted, 4: shifted},
                         labels=["1", "2", "3", "2'", "3'"])
    if base == "ncnu":
        return _document([[1, 0, 0], [0, 1, 0], [2, 1, 0], [1, 0, 2]], 3, translations={3: (["1/2"], ["1/2"])})
    if base in ("braid", "conf", "boolean"):
        try:
            n = int(param)
        except ValueError:
            raise InputException("Example %s needs an integer parameter, got: %r" % (base, param))
        if n < 1 or (base != "boolean" and n < 2):
            raise InputException("Example %s needs a larger parameter, got: %s" % (base, n))
        if base == "boolean":
            return _document([[int(i == j) for j in range(n)] for i in range(n)], n)
        return ArrangementDocument.from_arrangement(braid_arrangement(n, essential=(base == "braid")))
    raise InputException("Unknown example: %s" % name)


def builtin_arrangement(name, a=1, b=1):
    """ The builtin example ``name`` for the parameters ``(a, b)``. """
    return parse_input(builtin_document(name), ab=(a, b))


def parse_input(document, ab=None):
    """
    Validates an arrangement document and builds the arrangement.

    :param document: The document, either decoded or as a plain dict
    :type document: :class:`arrcoh.model.ArrangementDocument` or dict
    :param ab: Optional ``(a, b)`` overriding the document's parameters
    :type ab: tuple of int
    :return: the :class:`arrcoh.arrangement.AbelianArrangement`
    """
    if isinstance(document, dict):
        decoded = ArrangementDocument.from_dict(document)
        if decoded is None:
            raise InputException("Document needs 'rank' and 'hypersurfaces' fields")
        document = decoded
    if not isinstance(document, ArrangementDocument):
        raise InputException("Not an arrangement document: %r" % (document,))
    return document.to_arrangement(ab=ab)


class JobSpec(object):
    """
    One command line invocation.

    **Required parameters to the constructor:**

    :param command: One of :data:`COMMANDS`
    :type command: str

    **Optional parameters to the constructor:**

    :param input_path: Path of a JSON arrangement document
    :type input_path: str
    :param example: Name of a builtin example
    :type example: str
    :param ab: The parameters ``(a, b)``, taken from the document when omitted
    :type ab: tuple of int
    :param output_format: ``text`` or ``machine``
    :type output_format: str
    :param max_degree: Highest degree for Betti numbers
    :type max_degree: int
    """

    def __init__(self, command, input_path=None, example=None, ab=None, output_format=FORMAT_TEXT,
                 max_degree=None):
        if command not in COMMANDS: raise ValueError("Unknown command: %s" % command)
        if (input_path is None) == (example is None):
            raise ValueError("Need exactly one of an input path and an example")
        if output_format not in (FORMAT_TEXT, FORMAT_MACHINE): raise ValueError("Unknown format: %s" % output_format)
        if command == VG and ab is None:
            ab = REAL_PARAMETERS
        if ab is not None:
            a, b = ab
            if command == VG and (a, b) != REAL_PARAMETERS:
                raise PreconditionException("Command vg needs (a, b) = (0, 1), got (%s, %s)" % (a, b))
            if command in RING_COMMANDS and (b < 1 or a + b < 2):
                raise PreconditionException("Command %s needs b >= 1 and a + b >= 2, got (%s, %s)" % (command, a, b))
        self.command = command
        self.input_path = input_path
        self.example = example
        self.ab = ab
        self.output_format = output_format
        self.max_degree = max_degree

    def document(self):
        if self.example is not None:
            return builtin_document(self.example)
        with open(self.input_path) as f:
            try:
                document = json.load(f, cls=JsonDecoder)
            except ValueError as ex:
                raise InputException("Cannot read %s: %s" % (self.input_path, ex))
        if not isinstance(document, ArrangementDocument):
            raise InputException("%s does not hold an arrangement document" % self.input_path)
        return document


def _labels(arr, A):
    return [arr.labels[i] for i in A]


def _ring(arr):
    if arr.b < 1 or arr.a + arr.b < 2:
        raise PreconditionException("Command needs b >= 1 and a + b >= 2, got (%s, %s)" % (arr.a, arr.b))
    return CohomologyRing(arr)


def _poincare_list(arr):
    return [int(c) for c in arr.poincare_polynomial().all_coeffs()[::-1]]


def _circuits(job, arr):
    found = [{"positive": _labels(arr, C.positive), "negative": _labels(arr, C.negative)}
             for C in arr.matroid.circuits()]
    return {"circuits": found}, []


def _multiplicities(job, arr):
    rows = []
    for k in range(1, arr.size + 1):
        for A in combinations(arr.ground_set, k):
            rows.append({"set": _labels(arr, A), "rank": arr.matroid.rank(A), "multiplicity": arr.matroid.multiplicity(A),
                         "central": arr.is_central(A)})
    violations = arr.matroid.axiom_violations()
    return {"multiplicities": rows}, [Check.of("matroid.axioms", not violations, "; ".join(violations))]


def _layers(job, arr):
    poset = arr.layer_poset()
    layers = [{"id": W.ident, "support": _labels(arr, W.support), "rank": W.rank, "mobius": poset.mobius(W),
               "below": sorted(poset.below(W))} for W in poset]
    return {"layers": layers, "counts": arr.layer_counts(), "central": arr.is_central_arrangement(),
            "unimodular": arr.is_unimodular_arrangement()}, []


def _charpoly(job, arr):
    chi = arr.characteristic_polynomial()
    return {"charpoly": str(chi.as_expr()), "coefficients": [int(c) for c in chi.all_coeffs()]}, []


def _poincare(job, arr):
    P = arr.poincare_polynomial()
    sweep = [{"ab": [a, b], "coefficients": _poincare_list(arr.with_parameters(a, b))} for a, b in SWEEP_PARAMETERS]
    return {"poincare": str(P.as_expr()), "coefficients": _poincare_list(arr), "sweep": sweep}, []


def _betti(job, arr):
    betti = _ring(arr).betti_numbers(max_degree=job.max_degree)
    return {"betti": list(betti.trimmed().values)}, []


def _relations(job, arr):
    ring = _ring(arr)
    relations = [{"degree": degree, "relation": ring.describe(r)} for degree, r in ring.base_relations()]
    return {"relations": relations, "count": len(relations)}, []


def _verify(job, arr):
    ring = _ring(arr)
    checks = []
    betti = ring.betti_numbers(max_degree=job.max_degree)
    poincare = _poincare_list(arr)
    expected = poincare[:len(betti)] if job.max_degree is not None else poincare
    checks.append(Check.of("betti.poincare", betti == expected, "betti %s, poincare %s" % (betti, poincare)))
    failed = [arr.labels[i] for i in arr.ground_set if not arr.deletion_restriction_holds(i)]
    checks.append(Check.of("deletion.restriction", not failed, "fails at %s" % failed if failed else ""))
    degrees = range(len(betti))
    pivot_ok = all(ring.span_matches(k, pivot=max) for k in degrees)
    checks.append(Check.of("circuit.pivot", pivot_ok, "" if pivot_ok else "span depends on the choice of i_K"))
    sign_ok = all(ring.span_matches(k, opposite=lambda C: True) for k in degrees)
    checks.append(Check.of("circuit.orientation", sign_ok, "" if sign_ok else "span depends on circuit orientation"))
    return {"betti": list(betti.trimmed().values), "poincare": poincare}, checks


def _vg(job, arr):
    report = verify_vg_presentation(arr)
    result = {"chambers": report.chamber_count, "span_dimension": report.span_dimension,
              "zaslavsky": report.zaslavsky_count}
    return result, report.checks


def _cddmp(job, arr):
    ring = _ring(arr)
    checks = []
    for X, _ in arr.matroid.nullity_one_sets(central_filter=arr.is_central):
        for Y in arr.intersection_components(X):
            checks.append(Check.of("cddmp.%s.L%s" % ("".join(_labels(arr, X)), Y.ident), ring.cddmp_check(X, Y)))
    return {"sets": len(checks)}, checks


def _arnold(job, arr):
    name = job.example or ""
    if not name.startswith("braid:"):
        raise PreconditionException("Command arnold needs --example braid:N")
    n = int(name.partition(":")[2])
    ok = arnold_relation_check(n, a=arr.a, b=arr.b)
    expected = expected_braid_betti(n, arr.a, arr.b)
    return {"n": n, "expected_betti": list(expected.values)}, [Check.of("arnold", ok)]


_RUNNERS = {CIRCUITS: _circuits, MULTIPLICITIES: _multiplicities, LAYERS: _layers, CHARPOLY: _charpoly,
            POINCARE: _poincare, BETTI: _betti, RELATIONS: _relations, VERIFY: _verify, VG: _vg, CDDMP: _cddmp,
            ARNOLD: _arnold}


def run(job):
    """
    Executes a job.

    :param job: The job to run
    :type job: :class:`arrcoh.cli.JobSpec`
    :return: the :class:`arrcoh.model.Report`
    """
    arr = parse_input(job.document(), ab=job.ab)
    fingerprint = ArrangementDocument.from_arrangement(arr).fingerprint()
    logging.info("Running %s on %s", job.command, arr)
    result, checks = _RUNNERS[job.command](job, arr)
    return Report(job.command, fingerprint, result=result, checks=checks)


def format_report(report, output_format=FORMAT_TEXT):
    if output_format == FORMAT_MACHINE:
        return json.dumps(report, cls=JsonEncoder, sort_keys=True)
    lines = ["%s %s" % (report.command, report.input_fingerprint[:12])]
    for key in sorted(report.result):
        lines.append("%s: %s" % (key, json.dumps(report.result[key], cls=JsonEncoder, sort_keys=True)))
    for check in report.checks:
        lines.append("%s %s%s" % (check.status, check.name, " (%s)" % check.detail if check.detail else ""))
    return "\n".join(lines)


def _parameters(text):
    try:
        a, b = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("expected A,B, got: %s" % text)
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("parameters need to be non-negative, got: %s" % text)
    return a, b


def build_parser():
    parser = argparse.ArgumentParser(prog="arrcoh", description="Cohomology of abelian arrangements.")
    parser.add_argument("command", choices=COMMANDS)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", dest="input_path", help="path of a JSON arrangement document")
    source.add_argument("--example", help="builtin example: cu, ncu, ncnu, braid:N, conf:N, boolean:N")
    parser.add_argument("--ab", type=_parameters, help="the parameters a,b of G = R^b x (S^1)^a")
    parser.add_argument("--format", dest="output_format", choices=(FORMAT_TEXT, FORMAT_MACHINE), default=FORMAT_TEXT)
    parser.add_argument("--max-degree", type=int, help="highest degree for Betti numbers")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig()
    logging.root.setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING)
    try:
        job = JobSpec(args.command, input_path=args.input_path, example=args.example, ab=args.ab,
                      output_format=args.output_format, max_degree=args.max_degree)
        report = run(job)
    except (ArrangementException, IOError, ValueError) as ex:
        sys.stderr.write("arrcoh: error: %s\n" % ex)
        return 2
    sys.stdout.write(format_report(report, job.output_format) + "\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
