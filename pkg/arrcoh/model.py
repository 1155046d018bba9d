"""
Module containing the JSON encodable documents: the arrangement input schema, check records and run reports.

An arrangement document looks like::

    {"rank": 2, "a": 1, "b": 1,
     "hypersurfaces": [{"chi": [1, 0]}, {"chi": [0, 1]}, {"chi": [1, 1], "u": ["-1"], "v": ["1/2"]}]}
"""

#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

import json
import hashlib
from fractions import Fraction

from six import string_types, iteritems

from .exactlin import IntegerMatrix, RationalVector, InputException
from .arrangement import AbelianArrangement

PASS = "PASS"
FAIL = "FAIL"


class BaseEncodable(object):

    def __init__(self, **kwargs):
        for k, v in iteritems(kwargs):
            setattr(self, k, v)

    def to_dict(self):
        D = dict((k, v) for k, v in iteritems(self.__dict__) if not k.startswith("_"))
        return D

    @classmethod
    def from_dict(cls, D):
        for f in cls.id_fields:
            if f not in D:
                return None
        else:
            return cls(**D)

    def __str__(self):
        return str(self.to_dict())

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return False
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other


def _rationals(values, width, what):
    if values is None:
        values = []
    if isinstance(values, string_types) or not isinstance(values, (list, tuple)):
        raise InputException("%s: need a list of rationals, got: %r" % (what, values))
    if len(values) == 1 and width != 1:
        values = list(values) * width
    elif not values:
        values = [0] * width
    if len(values) != width:
        raise InputException("%s: need %s rationals, got: %s" % (what, width, len(values)))
    try:
        return RationalVector(values)
    except (ValueError, TypeError, ZeroDivisionError) as ex:
        raise InputException("%s: malformed rational in %r (%s)" % (what, values, ex))


class Hypersurface(BaseEncodable):
    """
    Represents one subvariety ``chi^{-1}(u, v)`` of an arrangement document.

    **Required parameters to the constructor:**

    :param chi: The character as a list of integers
    :type chi: list of int

    **Optional parameters to the constructor:**

    :param u: The real translation as rationals written ``"p/q"``; one entry is broadcast, none means zero
    :type u: list of str
    :param v: The torus translation, same conventions, taken modulo one
    :type v: list of str
    """

    id_fields = ("chi",)

    def __init__(self, chi, u=None, v=None, **kwargs):
        super(Hypersurface, self).__init__(chi=chi, u=[] if u is None else u, v=[] if v is None else v, **kwargs)


class ArrangementDocument(BaseEncodable):
    """
    Represents an arrangement as read from or written to a document.

    **Required parameters to the constructor:**

    :param rank: The rank ``r`` of the character lattice
    :type rank: int
    :param hypersurfaces: The subvarieties in ground set order
    :type hypersurfaces: list of :class:`arrcoh.model.Hypersurface` or dict

    **Optional parameters to the constructor:**

    :param a: The number of circle factors
    :type a: int
    :param b: The number of real factors
    :type b: int
    :param labels: Display names of the subvarieties
    :type labels: list of str
    """

    id_fields = ("rank", "hypersurfaces")

    def __init__(self, rank, hypersurfaces, a=1, b=1, **kwargs):
        hypersurfaces = [h if isinstance(h, Hypersurface) else Hypersurface.from_dict(h) for h in hypersurfaces]
        if any(h is None for h in hypersurfaces):
            raise InputException("Every hypersurface needs a 'chi' field")
        super(ArrangementDocument, self).__init__(rank=rank, hypersurfaces=hypersurfaces, a=a, b=b, **kwargs)

    def to_dict(self):
        D = super(ArrangementDocument, self).to_dict()
        D["hypersurfaces"] = [h.to_dict() for h in self.hypersurfaces]
        return D

    @classmethod
    def from_arrangement(cls, arrangement):
        """ The canonical document of an arrangement: translations in lowest terms, torus parts in ``[0, 1)``. """
        hypersurfaces = []
        for i in arrangement.ground_set:
            hypersurfaces.append(Hypersurface(chi=list(arrangement.characters.column(i)),
                                              u=arrangement.real_translations[i].to_strings(),
                                              v=arrangement.torus_translations[i].to_strings()))
        return cls(rank=arrangement.rank, hypersurfaces=hypersurfaces, a=arrangement.a, b=arrangement.b,
                   labels=list(arrangement.labels))

    def to_arrangement(self, ab=None):
        """
        Validates the document and builds the arrangement.

        :param ab: Optional ``(a, b)`` overriding the parameters stored in the document
        :type ab: tuple of int
        :return: the :class:`arrcoh.arrangement.AbelianArrangement`
        """
        a, b = ab if ab is not None else (self.a, self.b)
        try:
            r, a, b = int(self.rank), int(a), int(b)
        except (ValueError, TypeError):
            raise InputException("Rank and parameters need to be integers, got: %r, %r, %r" % (self.rank, a, b))
        if r < 0 or a < 0 or b < 0:
            raise InputException("Rank and parameters need to be non-negative, got: %s, %s, %s" % (r, a, b))
        chars, reals, tori = [], [], []
        for i, h in enumerate(self.hypersurfaces):
            if not isinstance(h.chi, (list, tuple)):
                raise InputException("Hypersurface %s: character needs to be a list, got: %r" % (i, h.chi))
            if len(h.chi) != r:
                raise InputException("Hypersurface %s: character has %s entries, rank is %s" % (i, len(h.chi), r))
            try:
                chars.append([int(e) for e in h.chi])
            except (ValueError, TypeError):
                raise InputException("Hypersurface %s: character entries need to be integers: %r" % (i, h.chi))
            reals.append(_rationals(h.u, b, "Hypersurface %s, u" % i))
            tori.append(_rationals(h.v, a, "Hypersurface %s, v" % i))
        labels = getattr(self, "labels", None)
        return AbelianArrangement(IntegerMatrix.from_columns(chars, r), a=a, b=b, real_translations=reals,
                                  torus_translations=tori, labels=labels)

    def fingerprint(self):
        """ SHA-256 of the canonical JSON form. """
        text = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), cls=JsonEncoder)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


class Check(BaseEncodable):
    """
    Represents the outcome of one verification.

    **Required parameters to the constructor:**

    :param name: The name of the check
    :type name: str
    :param status: ``PASS`` or ``FAIL``
    :type status: str

    **Optional parameters to the constructor:**

    :param detail: A human readable explanation, e.g. the witness of a failure
    :type detail: str
    """

    id_fields = ("name", "status")

    def __init__(self, name, status, detail="", **kwargs):
        if status not in (PASS, FAIL): raise ValueError("Unknown status: %s" % status)
        super(Check, self).__init__(name=name, status=status, detail=detail, **kwargs)

    @classmethod
    def of(cls, name, ok, detail=""):
        return cls(name, PASS if ok else FAIL, detail)

    @property
    def passed(self):
        return self.status == PASS


class Report(BaseEncodable):
    """
    Represents the outcome of one command run.

    **Required parameters to the constructor:**

    :param command: The command that was run
    :type command: str
    :param input_fingerprint: The fingerprint of the input document
    :type input_fingerprint: str

    **Optional parameters to the constructor:**

    :param result: The computed values
    :type result: dict
    :param checks: The checks performed
    :type checks: list of :class:`arrcoh.model.Check`
    """

    id_fields = ("command", "input_fingerprint")

    def __init__(self, command, input_fingerprint, result=None, checks=None, **kwargs):
        super(Report, self).__init__(command=command, input_fingerprint=input_fingerprint, result=result or {},
                                     checks=list(checks or []), **kwargs)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        D = super(Report, self).to_dict()
        D["checks"] = [c.to_dict() for c in self.checks]
        return D


class JsonEncoder(json.JSONEncoder):
    def default(self, obj):
        return self.to_json(obj)

    def to_json(self, obj):
        if isinstance(obj, BaseEncodable):
            return obj.to_dict()
        if isinstance(obj, Fraction):
            return str(obj)
        if isinstance(obj, RationalVector):
            return obj.to_strings()

        return json.JSONEncoder.default(self, obj)


class JsonDecoder(json.JSONDecoder):
    def __init__(self, *args, **kwargs):
        kwargs['object_hook'] = self.from_json
        super(JsonDecoder, self).__init__(*args, **kwargs)

    def from_json(self, jsonObj):
        if not jsonObj or not isinstance(jsonObj, dict):
            return jsonObj
        for cls in (Report, Check, ArrangementDocument, Hypersurface):
            obj = cls.from_dict(jsonObj)
            if obj:
                return obj
        else:
            return jsonObj
