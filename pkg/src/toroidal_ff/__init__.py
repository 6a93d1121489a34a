"""Unramified L-functions, Hecke eigenvalues and toroidal Eisenstein series
for curves over small finite fields."""

from .characters import QuasiCharacter, UnramifiedCharacter, evaluate
from .curves import CurveModel, Place, count_points, enumerate_places, hyperelliptic_curve, rational_curve
from .errors import (ContractViolation, InvariantViolation, PoleError, PrecisionError, ResourceLimitError,
                     TheoremViolation, ToroidalError)
from .function_field import FunctionField
from .gf import FiniteField, get_field
from .lfun import LPolynomial, cover_zeta, l_polynomial, zero_pairs, zeros
from .picard import ClassGroupTable, class_group
from .spec_io import load_spec, loads_spec, parse_spec
from .toroidal import toroidal_certificates, toroidal_dimension, twist_witness

__version__ = "0.1.0"
