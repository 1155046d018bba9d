#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

from .exactlin import ArrangementException, InputException, PreconditionException, InconsistencyException, \
    IntegerMatrix, RationalVector, RationalEchelon, smith_normal_form, torsion_order, saturation_basis, \
    integer_kernel_basis, det_sign, rational_solve
from .matroid import ArithmeticOrientedMatroid, SignedCircuit, shuffle_sign
from .arrangement import AbelianArrangement, Layer, LayerPoset, LayerPoint
from .vg import VarchenkoGelfandRing, Chamber, ChamberFunction, enumerate_chambers, verify_vg_presentation
from .cohomology import CohomologyRing, RingBasisSymbol, RingElement, BettiTable, braid_arrangement, \
    arnold_relation_check
from .model import ArrangementDocument, Hypersurface, Check, Report, JsonEncoder, JsonDecoder
from .cli import builtin_arrangement, builtin_document, parse_input, JobSpec, run
