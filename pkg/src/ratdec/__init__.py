"""Rational-interpolation list decoding of GRS and binary Goppa codes."""

from .decoding import Candidate, ChosenParams, DecodeOutput
from .errors import InternalCheckError, ParameterError
from .galois import Field, FieldElem
from .goppa import GoppaCode, goppa_params, goppa_syndrome, wu_decode_goppa
from .grs import GrsCode, encode, grs_params, syndrome, wu_decode
from .keyeq import GrobnerPair, PairPoly, TermOrder, solve_key_equation
from .polyring import NEG_INF, Poly, ea_full, lagrange, mod_inverse, mod_sqrt_char2
from .ratinterp import (
    HomogPoly,
    InterpPoint,
    RatParams,
    build_basis,
    check_multiplicity,
    choose_params,
    feasible,
    find_linear_factors,
    interpolate,
    naive_interpolate,
    normalize_points,
    row_reduce,
)

__all__ = [
    "Candidate",
    "ChosenParams",
    "DecodeOutput",
    "Field",
    "FieldElem",
    "GoppaCode",
    "GrobnerPair",
    "GrsCode",
    "HomogPoly",
    "InterpPoint",
    "InternalCheckError",
    "NEG_INF",
    "PairPoly",
    "ParameterError",
    "Poly",
    "RatParams",
    "TermOrder",
    "build_basis",
    "check_multiplicity",
    "choose_params",
    "ea_full",
    "encode",
    "feasible",
    "find_linear_factors",
    "goppa_params",
    "goppa_syndrome",
    "grs_params",
    "interpolate",
    "lagrange",
    "mod_inverse",
    "mod_sqrt_char2",
    "naive_interpolate",
    "normalize_points",
    "row_reduce",
    "solve_key_equation",
    "syndrome",
    "wu_decode",
    "wu_decode_goppa",
]
